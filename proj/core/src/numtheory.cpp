#include "rootcount/numtheory.hpp"

#include <numeric>
#include <string>

namespace rootcount {

namespace {

template <class... Ts>
struct overloaded : Ts... {
  using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::int64_t mul_mod(std::int64_t a, std::int64_t b, std::int64_t mod) {
  return static_cast<std::int64_t>(static_cast<__int128>(a) * b % mod);
}

}  // namespace

std::int64_t RootProblem::unipotent_bound() const { return ipow(p, r); }

std::int64_t smallest_prime_factor(std::int64_t n) {
  if (n < 2) throw std::invalid_argument("smallest_prime_factor: n < 2");
  if (n % 2 == 0) return 2;
  for (std::int64_t f = 3; f * f <= n; f += 2) {
    if (n % f == 0) return f;
  }
  return n;
}

bool is_prime(std::int64_t n) { return n >= 2 && smallest_prime_factor(n) == n; }

std::optional<std::int64_t> prime_power_base(std::int64_t q) {
  if (q < 2) return std::nullopt;
  const std::int64_t p = smallest_prime_factor(q);
  while (q % p == 0) q /= p;
  if (q != 1) return std::nullopt;
  return p;
}

std::int64_t euler_phi(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("euler_phi: n < 1");
  std::int64_t result = n;
  for (std::int64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      while (n % f == 0) n /= f;
      result -= result / f;
    }
  }
  if (n > 1) result -= result / n;
  return result;
}

std::vector<std::int64_t> divisors(std::int64_t n) {
  if (n < 1) throw std::invalid_argument("divisors: n < 1");
  std::vector<std::int64_t> low, high;
  for (std::int64_t f = 1; f * f <= n; ++f) {
    if (n % f == 0) {
      low.push_back(f);
      if (f != n / f) high.push_back(n / f);
    }
  }
  low.insert(low.end(), high.rbegin(), high.rend());
  return low;
}

std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod) {
  if (mod == 1) return 0;
  std::int64_t result = 1;
  base %= mod;
  if (base < 0) base += mod;
  while (exp > 0) {
    if (exp & 1) result = mul_mod(result, base, mod);
    base = mul_mod(base, base, mod);
    exp >>= 1;
  }
  return result;
}

std::int64_t ipow(std::int64_t base, int exp) {
  std::int64_t result = 1;
  for (int i = 0; i < exp; ++i) result *= base;
  return result;
}

RootProblem split_root_problem(std::int64_t M, std::int64_t q) {
  if (M < 1) throw std::invalid_argument("M must be at least 1");
  const auto p = prime_power_base(q);
  if (!p) throw std::invalid_argument("q = " + std::to_string(q) + " is not a prime power");
  if (*p == 2) throw std::invalid_argument("q must be odd (characteristic 2 is not supported)");
  RootProblem rp;
  rp.M = M;
  rp.q = q;
  rp.p = *p;
  rp.t = M;
  while (rp.t % rp.p == 0) {
    rp.t /= rp.p;
    ++rp.r;
  }
  return rp;
}

std::int64_t mult_order(std::int64_t q, std::int64_t d) {
  if (d < 1) throw std::invalid_argument("mult_order: d < 1");
  if (std::gcd(q, d) != 1) {
    throw std::invalid_argument("mult_order: gcd(q, d) != 1 (d = " + std::to_string(d) + ")");
  }
  if (d == 1) return 1;
  const std::int64_t base = q % d;
  std::int64_t acc = base;
  std::int64_t e = 1;
  while (acc != 1) {
    acc = mul_mod(acc, base, d);
    ++e;
  }
  return e;
}

std::optional<std::int64_t> min_negation_exponent(std::int64_t q, std::int64_t d) {
  if (d <= 2) return 1;
  const std::int64_t e = mult_order(q, d);
  const std::int64_t base = q % d;
  std::int64_t acc = base;
  for (std::int64_t s = 1; s <= e; ++s) {
    if (acc == d - 1) return s;
    acc = mul_mod(acc, base, d);
  }
  return std::nullopt;
}

std::int64_t DivisorClass::degree() const {
  return std::visit(overloaded{
                        [](const kind::Linear&) -> std::int64_t { return 1; },
                        [this](const kind::SelfDual&) { return e; },
                        [](const kind::SelfConjugate& k) { return k.s; },
                        [](const kind::Paired& k) { return k.deg; },
                    },
                    kind);
}

std::int64_t DivisorClass::block_dim(GroupFamily family) const {
  if (const auto* paired = std::get_if<kind::Paired>(&kind)) {
    return family == GroupFamily::GL ? paired->deg : 2 * paired->deg;
  }
  return degree();
}

Integer DivisorClass::centralizer_base(GroupFamily family, std::int64_t q) const {
  Integer base;
  const auto power = [&](std::int64_t exp) {
    mpz_ui_pow_ui(base.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(exp));
    return base;
  };
  return std::visit(overloaded{
                        [&](const kind::Linear&) { return power(1); },
                        [&](const kind::SelfDual& k) { return power(k.m); },
                        [&](const kind::SelfConjugate& k) { return power(k.s); },
                        [&](const kind::Paired& k) {
                          return power(family == GroupFamily::U ? 2 * k.deg : k.deg);
                        },
                    },
                    kind);
}

std::string DivisorClass::kind_name() const {
  return std::visit(overloaded{
                        [](const kind::Linear&) { return std::string("linear"); },
                        [](const kind::SelfDual&) { return std::string("self-dual"); },
                        [](const kind::SelfConjugate&) { return std::string("self-conjugate"); },
                        [](const kind::Paired&) { return std::string("paired"); },
                    },
                    kind);
}

std::vector<DivisorClass> classify_divisors(std::int64_t t, std::int64_t q, GroupFamily family) {
  if (t < 1) throw std::invalid_argument("classify_divisors: t < 1");
  if (std::gcd(t, q) != 1) throw std::invalid_argument("classify_divisors: gcd(t, q) != 1");

  std::vector<DivisorClass> out;
  for (const std::int64_t d : divisors(t)) {
    DivisorClass dc;
    dc.d = d;
    dc.e = mult_order(q, d);
    dc.phi = euler_phi(d);
    if (d <= 2) {
      dc.kind = kind::Linear{d == 1 ? 1 : -1};
      dc.factor_count = 1;
    } else if (family == GroupFamily::GL) {
      dc.kind = kind::Paired{dc.e};
      dc.factor_count = dc.phi / dc.e;
    } else if (family == GroupFamily::U) {
      const auto s = min_negation_exponent(q, d);
      if (s && *s % 2 == 1) {
        dc.kind = kind::SelfConjugate{*s};
        dc.factor_count = dc.phi / *s;
      } else {
        const std::int64_t deg = mult_order(pow_mod(q, 2, d), d);
        dc.kind = kind::Paired{deg};
        dc.factor_count = dc.phi / (2 * deg);
      }
    } else {
      const auto s = min_negation_exponent(q, d);
      if (s) {
        dc.kind = kind::SelfDual{*s};
        dc.factor_count = dc.phi / dc.e;
      } else {
        dc.kind = kind::Paired{dc.e};
        dc.factor_count = dc.phi / (2 * dc.e);
      }
    }
    out.push_back(dc);
  }
  return out;
}

}  // namespace rootcount
