#include "rootcount/qseries.hpp"

#include <string>
#include <utility>

namespace rootcount {

namespace {

void require_same_trunc(const Series& a, const Series& b) {
  if (a.trunc() != b.trunc()) {
    throw std::invalid_argument("series truncation mismatch: " + std::to_string(a.trunc()) +
                                " vs " + std::to_string(b.trunc()));
  }
}

Integer power(const Integer& base, std::size_t exp) {
  Integer out;
  mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exp);
  return out;
}

}  // namespace

Series::Series(std::size_t trunc) : coeffs_(trunc + 1, Rational(0)) {}

Series::Series(std::size_t trunc, std::initializer_list<Rational> coeffs)
    : Series(trunc, std::vector<Rational>(coeffs)) {}

Series::Series(std::size_t trunc, std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) {
  coeffs_.resize(trunc + 1, Rational(0));
  for (Rational& c : coeffs_) c.canonicalize();
}

Series Series::one(std::size_t trunc) {
  Series s(trunc);
  s.coeffs_[0] = 1;
  return s;
}

Series& Series::operator+=(const Series& other) {
  require_same_trunc(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] += other.coeffs_[i];
  return *this;
}

Series& Series::operator-=(const Series& other) {
  require_same_trunc(*this, other);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) coeffs_[i] -= other.coeffs_[i];
  return *this;
}

Series operator*(const Series& a, const Series& b) {
  require_same_trunc(a, b);
  const std::size_t n = a.trunc();
  Series out(n);
  for (std::size_t i = 0; i <= n; ++i) {
    if (sgn(a.coeffs_[i]) == 0) continue;
    for (std::size_t j = 0; i + j <= n; ++j) {
      if (sgn(b.coeffs_[j]) == 0) continue;
      out.coeffs_[i + j] += a.coeffs_[i] * b.coeffs_[j];
    }
  }
  return out;
}

Series& Series::operator*=(const Series& other) { return *this = *this * other; }

Series geometric_series(std::size_t period, std::size_t trunc) {
  if (period == 0) throw std::invalid_argument("geometric_series: period must be positive");
  Series s(trunc);
  for (std::size_t n = 0; n <= trunc; n += period) s[n] = 1;
  return s;
}

Series series_mul(const Series& a, const Series& b) { return a * b; }

Series series_pow(const Series& a, std::size_t k) {
  Series result = Series::one(a.trunc());
  Series base = a;
  while (k > 0) {
    if (k & 1) result *= base;
    k >>= 1;
    if (k > 0) base *= base;
  }
  return result;
}

Integer group_order(GroupFamily family, std::size_t n, const Integer& b) {
  if (n == 0) return 1;
  if (b < 2) throw std::invalid_argument("group_order: base must be at least 2");

  Integer order = 1;
  switch (family) {
    case GroupFamily::GL: {
      const Integer bn = power(b, n);
      for (std::size_t i = 0; i < n; ++i) order *= bn - power(b, i);
      return order;
    }
    case GroupFamily::U: {
      order = power(b, n * (n - 1) / 2);
      for (std::size_t i = 1; i <= n; ++i) {
        order *= (i % 2 == 0) ? Integer(power(b, i) - 1) : Integer(power(b, i) + 1);
      }
      return order;
    }
    case GroupFamily::Sp: {
      if (n % 2 != 0) throw std::invalid_argument("group_order: symplectic dimension must be even");
      const std::size_t k = n / 2;
      order = power(b, k * k);
      for (std::size_t i = 1; i <= k; ++i) order *= power(b, 2 * i) - 1;
      return order;
    }
    case GroupFamily::OrthoPlus:
    case GroupFamily::OrthoMinus: {
      if (n % 2 != 0) {
        throw std::invalid_argument("group_order: O+ / O- need even dimension");
      }
      const std::size_t k = n / 2;
      order = 2 * power(b, k * (k - 1));
      order *= family == GroupFamily::OrthoPlus ? Integer(power(b, k) - 1) : Integer(power(b, k) + 1);
      for (std::size_t i = 1; i < k; ++i) order *= power(b, 2 * i) - 1;
      return order;
    }
    case GroupFamily::OrthoOdd: {
      if (n % 2 == 0) {
        throw std::invalid_argument("group_order: even-dimensional orthogonal group needs a sign");
      }
      const std::size_t k = n / 2;
      order = 2 * power(b, k * k);
      for (std::size_t i = 1; i <= k; ++i) order *= power(b, 2 * i) - 1;
      return order;
    }
    case GroupFamily::OrthoSum:
      break;
  }
  throw std::invalid_argument("group_order: o-sum has no single group order");
}

Integer group_order(GroupFamily family, std::size_t n, std::int64_t base) {
  return group_order(family, n, Integer(static_cast<long>(base)));
}

}  // namespace rootcount
