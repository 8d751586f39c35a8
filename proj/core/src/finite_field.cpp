#include "rootcount/finite_field.hpp"

#include "rootcount/numtheory.hpp"

#include <sstream>
#include <stdexcept>

namespace rootcount {

namespace {

constexpr std::int64_t kMaxFieldSize = 1024;

}  // namespace

FiniteField FiniteField::prime(std::int64_t p) {
  FiniteField f;
  f.size_ = p;
  f.p_ = p;
  f.subfield_ = p;
  const auto n = static_cast<std::size_t>(p);
  f.add_.resize(n * n);
  f.mul_.resize(n * n);
  for (std::int64_t a = 0; a < p; ++a) {
    for (std::int64_t b = 0; b < p; ++b) {
      f.add_[f.idx(a, b)] = static_cast<FieldElement>((a + b) % p);
      f.mul_[f.idx(a, b)] = static_cast<FieldElement>((a * b) % p);
    }
  }
  f.finish();
  return f;
}

bool FiniteField::build_extension(const FiniteField& base, const std::vector<FieldElement>& modulus,
                                  FiniteField& out) {
  const std::size_t k = modulus.size();
  const std::int64_t b = base.size_;
  std::int64_t size = 1;
  for (std::size_t i = 0; i < k; ++i) size *= b;
  if (size > kMaxFieldSize) throw std::invalid_argument("field too large for table arithmetic");

  const auto digits = [&](std::int64_t v) {
    std::vector<FieldElement> d(k);
    for (std::size_t i = 0; i < k; ++i) {
      d[i] = static_cast<FieldElement>(v % b);
      v /= b;
    }
    return d;
  };
  const auto encode = [&](const std::vector<FieldElement>& d) {
    std::int64_t v = 0;
    for (std::size_t i = k; i-- > 0;) v = v * b + d[i];
    return static_cast<FieldElement>(v);
  };

  out = FiniteField();
  out.size_ = size;
  out.p_ = base.p_;
  out.subfield_ = size;
  out.modulus_ = modulus;
  const auto n = static_cast<std::size_t>(size);
  out.add_.resize(n * n);
  out.mul_.resize(n * n);
  for (std::int64_t x = 0; x < size; ++x) {
    const auto dx = digits(x);
    for (std::int64_t y = 0; y < size; ++y) {
      const auto dy = digits(y);
      std::vector<FieldElement> sum(k);
      for (std::size_t i = 0; i < k; ++i) sum[i] = base.add(dx[i], dy[i]);
      out.add_[out.idx(x, y)] = encode(sum);

      // Schoolbook product, then reduce by t^k = -(c_0 + ... + c_{k-1} t^{k-1}).
      std::vector<FieldElement> prod(2 * k - 1, 0);
      for (std::size_t i = 0; i < k; ++i) {
        for (std::size_t j = 0; j < k; ++j) {
          prod[i + j] = base.add(prod[i + j], base.mul(dx[i], dy[j]));
        }
      }
      for (std::size_t deg = 2 * k - 1; deg-- > k;) {
        const FieldElement lead = prod[deg];
        if (lead == 0) continue;
        prod[deg] = 0;
        for (std::size_t i = 0; i < k; ++i) {
          prod[deg - k + i] = base.sub(prod[deg - k + i], base.mul(lead, modulus[i]));
        }
      }
      prod.resize(k);
      out.mul_[out.idx(x, y)] = encode(prod);
    }
  }
  // The quotient ring is a field iff every nonzero element is invertible.
  for (std::int64_t x = 1; x < size; ++x) {
    bool unit = false;
    for (std::int64_t y = 1; y < size && !unit; ++y) unit = out.mul_[out.idx(x, y)] == 1;
    if (!unit) return false;
  }
  out.finish();
  return true;
}

void FiniteField::finish() {
  const auto n = static_cast<std::size_t>(size_);
  neg_.assign(n, 0);
  inv_.assign(n, 0);
  conj_.assign(n, 0);
  for (std::int64_t a = 0; a < size_; ++a) {
    for (std::int64_t b = 0; b < size_; ++b) {
      if (add_[idx(a, b)] == 0) neg_[a] = static_cast<FieldElement>(b);
      if (a != 0 && mul_[idx(a, b)] == 1) inv_[a] = static_cast<FieldElement>(b);
    }
  }
  for (std::int64_t a = 0; a < size_; ++a) {
    conj_[a] = pow(static_cast<FieldElement>(a), static_cast<std::uint64_t>(subfield_));
  }
}

FieldElement FiniteField::inv(FieldElement a) const {
  if (a == 0) throw std::domain_error("inverse of zero");
  return inv_[a];
}

FieldElement FiniteField::pow(FieldElement a, std::uint64_t e) const {
  FieldElement result = 1;
  while (e > 0) {
    if (e & 1) result = mul(result, a);
    a = mul(a, a);
    e >>= 1;
  }
  return result;
}

bool FiniteField::is_square(FieldElement a) const {
  for (std::int64_t x = 0; x < size_; ++x) {
    if (mul(static_cast<FieldElement>(x), static_cast<FieldElement>(x)) == a) return true;
  }
  return false;
}

FieldElement FiniteField::smallest_nonsquare() const {
  for (std::int64_t a = 1; a < size_; ++a) {
    if (!is_square(static_cast<FieldElement>(a))) return static_cast<FieldElement>(a);
  }
  throw std::domain_error("every element is a square (characteristic 2)");
}

FiniteField FiniteField::of_order(std::int64_t q) {
  const auto p = prime_power_base(q);
  if (!p) throw std::invalid_argument("field order " + std::to_string(q) + " is not a prime power");
  if (q > kMaxFieldSize) throw std::invalid_argument("field too large for table arithmetic");
  FiniteField fp = prime(*p);
  if (q == *p) return fp;

  std::size_t k = 0;
  for (std::int64_t v = q; v > 1; v /= *p) ++k;
  std::int64_t candidates = 1;
  for (std::size_t i = 0; i < k; ++i) candidates *= *p;
  for (std::int64_t c = 0; c < candidates; ++c) {
    std::vector<FieldElement> modulus(k);
    std::int64_t v = c;
    for (std::size_t i = 0; i < k; ++i) {
      modulus[i] = static_cast<FieldElement>(v % *p);
      v /= *p;
    }
    FiniteField out;
    if (build_extension(fp, modulus, out)) return out;
  }
  throw std::logic_error("no irreducible polynomial found");
}

FiniteField FiniteField::quadratic_extension() const {
  for (std::int64_t a = 0; a < size_; ++a) {
    FiniteField out;
    if (build_extension(*this, {static_cast<FieldElement>(a), 1}, out)) {
      out.subfield_ = size_;
      out.finish();
      return out;
    }
  }
  throw std::logic_error("no irreducible t^2 + t + a");
}

std::string FiniteField::describe() const {
  std::ostringstream os;
  os << "F_" << size_;
  if (subfield_ != size_) os << " over F_" << subfield_;
  return os.str();
}

}  // namespace rootcount
