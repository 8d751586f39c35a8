#include "rootcount/genfun.hpp"

#include <string>

namespace rootcount {

namespace {

Integer factorial(std::int64_t n) {
  Integer out;
  mpz_fac_ui(out.get_mpz_t(), static_cast<unsigned long>(n));
  return out;
}

/// Coefficient of z^k in (sum_j z^j / order(j))^copies, expanded over
/// partitions of k into at most `copies` parts, each partition weighted by
/// the number of ways to spread its parts over the identical factors.
template <class Order>
Rational power_coefficient(std::int64_t k, std::int64_t copies, Order order) {
  Rational total = 0;
  for (const Partition& lambda : gen_partitions(static_cast<int>(k), std::nullopt,
                                                static_cast<int>(copies))) {
    Integer arrangements = factorial(copies) / factorial(copies - lambda.length());
    Rational term(arrangements);
    for (int part = 1; part <= lambda.largest(); ++part) {
      term /= Rational(factorial(lambda.multiplicity(part)));
    }
    for (int part : lambda.parts) term /= Rational(order(part));
    total += term;
  }
  total.canonicalize();
  return total;
}

}  // namespace

Rational closed_form_prime_case(GroupFamily family, std::int64_t n, std::int64_t q, std::int64_t M) {
  if (family != GroupFamily::GL && family != GroupFamily::Sp) {
    throw std::invalid_argument("closed_form_prime_case: family must be gl or sp");
  }
  if (n < 0) throw std::invalid_argument("closed_form_prime_case: negative dimension");
  if (M == 2 || !is_prime(M)) {
    throw std::invalid_argument("closed_form_prime_case: M = " + std::to_string(M) +
                                " is not an odd prime");
  }
  const RootProblem rp = split_root_problem(M, q);
  if (rp.r != 0 || (q + 1) % M != 0) {
    throw std::invalid_argument("closed_form_prime_case: requires q = -1 (mod M)");
  }
  // x^M - 1 = (x - 1) Q_M(x), and Q_M splits into (M-1)/2 quadratics.
  const std::int64_t copies = (M - 1) / 2;
  const Integer Q(static_cast<long>(q));
  const Integer Q2 = Q * Q;

  Rational total = 0;
  if (family == GroupFamily::GL) {
    for (std::int64_t j = n % 2; j <= n; j += 2) {
      const Rational head(Integer(1), group_order(GroupFamily::GL, static_cast<std::size_t>(j), Q));
      total += head * power_coefficient((n - j) / 2, copies, [&](int k) {
                 return group_order(GroupFamily::GL, static_cast<std::size_t>(k), Q2);
               });
    }
  } else {
    if (n % 2 != 0) throw std::invalid_argument("closed_form_prime_case: odd symplectic dimension");
    // The quadratic factors are self-reciprocal; their centralizers are U_k(q).
    for (std::int64_t j = 0; 2 * j <= n; ++j) {
      const Rational head(Integer(1),
                          group_order(GroupFamily::Sp, static_cast<std::size_t>(2 * j), Q));
      total += head * power_coefficient(n / 2 - j, copies, [&](int k) {
                 return group_order(GroupFamily::U, static_cast<std::size_t>(k), Q);
               });
    }
  }
  total.canonicalize();
  return total;
}

}  // namespace rootcount
