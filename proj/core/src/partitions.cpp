#include "rootcount/partitions.hpp"

#include "rootcount/qseries.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <sstream>

namespace rootcount {

namespace {

Rational rational_power(const Integer& base, long exp) {
  Integer mag;
  mpz_pow_ui(mag.get_mpz_t(), base.get_mpz_t(), static_cast<unsigned long>(exp < 0 ? -exp : exp));
  if (exp >= 0) return Rational(mag);
  Rational r(Integer(1), mag);
  r.canonicalize();
  return r;
}

bool signed_parity(SignedKind kind, int part) {
  return kind == SignedKind::Symplectic ? part % 2 == 0 : part % 2 == 1;
}

}  // namespace

int Partition::size() const { return std::accumulate(parts.begin(), parts.end(), 0); }

int Partition::multiplicity(int i) const {
  return static_cast<int>(std::count(parts.begin(), parts.end(), i));
}

Partition Partition::conjugate() const {
  Partition out;
  for (int col = 1; col <= largest(); ++col) {
    int rows = 0;
    for (int part : parts) {
      if (part >= col) ++rows;
    }
    out.parts.push_back(rows);
  }
  return out;
}

std::string Partition::to_string() const {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < parts.size(); ++i) {
    if (i) os << ',';
    os << parts[i];
  }
  os << ')';
  return os.str();
}

bool SignedPartition::valid() const {
  if (!std::is_sorted(parts.parts.rbegin(), parts.parts.rend())) return false;
  std::map<int, int> mult;
  for (int part : parts.parts) {
    if (part <= 0) return false;
    ++mult[part];
  }
  for (const auto& [part, m] : mult) {
    if (signed_parity(kind, part)) {
      const auto it = signs.find(part);
      if (it == signs.end() || (it->second != 1 && it->second != -1)) return false;
    } else if (m % 2 != 0) {
      return false;
    }
  }
  for (const auto& [part, sign] : signs) {
    if (!mult.contains(part) || !signed_parity(kind, part)) return false;
  }
  return true;
}

std::string SignedPartition::to_string() const {
  std::ostringstream os;
  os << parts.to_string();
  if (!signs.empty()) {
    os << '[';
    bool first = true;
    for (auto it = signs.rbegin(); it != signs.rend(); ++it) {
      if (!first) os << ',';
      first = false;
      os << it->first << (it->second > 0 ? '+' : '-');
    }
    os << ']';
  }
  return os.str();
}

std::vector<Partition> gen_partitions(int n, std::optional<int> max_part, std::optional<int> max_len) {
  std::vector<Partition> out;
  if (n < 0) return out;
  const int part_cap = max_part.value_or(n);
  const int len_cap = max_len.value_or(n);
  Partition current;

  std::function<void(int, int)> rec = [&](int remaining, int cap) {
    if (remaining == 0) {
      out.push_back(current);
      return;
    }
    if (current.length() >= len_cap) return;
    for (int part = std::min(remaining, cap); part >= 1; --part) {
      current.parts.push_back(part);
      rec(remaining - part, part);
      current.parts.pop_back();
    }
  };
  rec(n, part_cap);
  return out;
}

std::vector<SignedPartition> gen_signed(SignedKind kind, int n, std::optional<int> max_part) {
  std::vector<SignedPartition> out;
  for (Partition& lambda : gen_partitions(n, max_part)) {
    std::vector<int> keys;  // distinct signed part sizes, descending
    bool ok = true;
    for (int part = lambda.largest(); part >= 1; --part) {
      const int m = lambda.multiplicity(part);
      if (m == 0) continue;
      if (signed_parity(kind, part)) {
        keys.push_back(part);
      } else if (m % 2 != 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    // Binary counter over the keys, '+' before '-', leading key most significant.
    const std::size_t combos = std::size_t{1} << keys.size();
    for (std::size_t mask = 0; mask < combos; ++mask) {
      SignedPartition sp{kind, lambda, {}};
      for (std::size_t k = 0; k < keys.size(); ++k) {
        const bool minus = (mask >> (keys.size() - 1 - k)) & 1;
        sp.signs[keys[k]] = minus ? -1 : 1;
      }
      out.push_back(std::move(sp));
    }
  }
  return out;
}

Rational c_gl(const Partition& lambda, const Integer& base) {
  if (abs(base) < 2) throw std::invalid_argument("c_gl: |base| must be at least 2");
  long exponent = 0;
  for (int col : lambda.conjugate().parts) exponent += static_cast<long>(col) * col;
  Rational result = rational_power(base, exponent);
  for (int part = 1; part <= lambda.largest(); ++part) {
    const int m = lambda.multiplicity(part);
    for (int j = 1; j <= m; ++j) result *= Rational(1) - rational_power(base, -j);
  }
  result.canonicalize();
  return result;
}

Rational c_gl(const Partition& lambda, std::int64_t base) {
  return c_gl(lambda, Integer(static_cast<long>(base)));
}

Integer c_unitary(const Partition& lambda, const Integer& Q) {
  Rational c = c_gl(lambda, Integer(-Q));
  if (lambda.size() % 2 != 0) c = -c;
  if (c.get_den() != 1 || c <= 0) {
    throw std::logic_error("c_unitary: non-integral centralizer for " + lambda.to_string());
  }
  return c.get_num();
}

Integer c_signed(SignedKind kind, const SignedPartition& lambda, std::int64_t q) {
  if (lambda.kind != kind || !lambda.valid()) {
    throw std::invalid_argument("c_signed: invalid signed partition " + lambda.to_string());
  }
  const Integer Q(static_cast<long>(q));
  std::map<int, int> mult;
  for (int part : lambda.parts.parts) ++mult[part];

  // Twice Wall's exponent, plus the half powers carried by the A factors.
  long twice_exponent = 0;
  for (auto a = mult.begin(); a != mult.end(); ++a) {
    for (auto b = std::next(a); b != mult.end(); ++b) {
      twice_exponent += 2L * a->first * a->second * b->second;
    }
    twice_exponent += static_cast<long>(a->first - 1) * a->second * a->second;
  }

  Integer product = 1;
  for (const auto& [part, m] : mult) {
    const bool odd_part = part % 2 == 1;
    if (kind == SignedKind::Symplectic) {
      if (odd_part) {
        product *= group_order(GroupFamily::Sp, static_cast<std::size_t>(m), Q);
      } else {
        twice_exponent += m;
        product *= (m % 2 == 1) ? group_order(GroupFamily::OrthoOdd, m, Q)
                   : lambda.signs.at(part) > 0 ? group_order(GroupFamily::OrthoPlus, m, Q)
                                               : group_order(GroupFamily::OrthoMinus, m, Q);
      }
    } else {
      if (odd_part) {
        product *= (m % 2 == 1) ? group_order(GroupFamily::OrthoOdd, m, Q)
                   : lambda.signs.at(part) > 0 ? group_order(GroupFamily::OrthoPlus, m, Q)
                                               : group_order(GroupFamily::OrthoMinus, m, Q);
      } else {
        twice_exponent -= m;
        product *= group_order(GroupFamily::Sp, static_cast<std::size_t>(m), Q);
      }
    }
  }
  if (twice_exponent % 2 != 0) {
    throw std::logic_error("c_signed: half-integral power of q for " + lambda.to_string());
  }
  Rational value = rational_power(Q, twice_exponent / 2) * Rational(product);
  value.canonicalize();
  if (value.get_den() != 1 || value <= 0) {
    throw std::logic_error("c_signed: non-integral centralizer for " + lambda.to_string());
  }
  return value.get_num();
}

int orthogonal_form_sign(const SignedPartition& lambda) {
  if (lambda.kind != SignedKind::Orthogonal || !lambda.valid()) {
    throw std::invalid_argument("orthogonal_form_sign: invalid signed partition " +
                                lambda.to_string());
  }
  int sign = 1;
  for (const auto& [part, s] : lambda.signs) {
    if (lambda.parts.multiplicity(part) % 2 != 0) return 0;
    sign *= s;
  }
  return sign;
}

}  // namespace rootcount
