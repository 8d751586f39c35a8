#pragma once

#include "rootcount/types.hpp"

#include <cstdint>
#include <optional>
#include <variant>
#include <vector>

namespace rootcount {

/// M = t * p^r with p the characteristic of F_q and gcd(t, p) = 1.
struct RootProblem {
  std::int64_t M = 1;
  std::int64_t q = 3;
  std::int64_t p = 3;
  std::int64_t t = 1;
  int r = 0;

  /// p^r, the largest admissible Jordan block size of the unipotent part.
  std::int64_t unipotent_bound() const;
};

RootProblem split_root_problem(std::int64_t M, std::int64_t q);

/// Smallest prime factor of n >= 2.
std::int64_t smallest_prime_factor(std::int64_t n);
bool is_prime(std::int64_t n);
/// Returns p when q = p^k for a prime p, nothing otherwise.
std::optional<std::int64_t> prime_power_base(std::int64_t q);

std::int64_t euler_phi(std::int64_t n);
std::vector<std::int64_t> divisors(std::int64_t n);
std::int64_t pow_mod(std::int64_t base, std::int64_t exp, std::int64_t mod);
std::int64_t ipow(std::int64_t base, int exp);

/// Multiplicative order of q modulo d. Throws std::invalid_argument when
/// gcd(q, d) != 1.
std::int64_t mult_order(std::int64_t q, std::int64_t d);

/// Minimal s >= 1 with q^s = -1 (mod d); 1 for d in {1, 2}.
std::optional<std::int64_t> min_negation_exponent(std::int64_t q, std::int64_t d);

namespace kind {
/// Eigenvalue +1 (d = 1) or -1 (d = 2).
struct Linear {
  int sign = 1;
};
/// Self-reciprocal irreducible factors of degree 2m (symplectic/orthogonal).
struct SelfDual {
  std::int64_t m = 1;
};
/// Self-conjugate irreducible factors over F_{q^2} of odd degree s (unitary).
struct SelfConjugate {
  std::int64_t s = 1;
};
/// Factors of degree deg; for GL these are plain factors, otherwise the
/// factor is grouped with its dual/conjugate partner.
struct Paired {
  std::int64_t deg = 1;
};
}  // namespace kind

using DivisorKind =
    std::variant<kind::Linear, kind::SelfDual, kind::SelfConjugate, kind::Paired>;

struct DivisorClass {
  std::int64_t d = 1;
  std::int64_t e = 1;    // order of q mod d
  std::int64_t phi = 1;  // Euler totient of d
  DivisorKind kind;
  std::int64_t factor_count = 1;

  /// Degree of one irreducible factor (over F_{q^2} for the unitary family).
  std::int64_t degree() const;
  /// Dimension of the block contributed per unit of the partition size.
  std::int64_t block_dim(GroupFamily family) const;
  /// Field size whose GL or U order gives the semisimple centralizer of one
  /// block (q for the eigenvalue +-1 slots).
  Integer centralizer_base(GroupFamily family, std::int64_t q) const;
  std::string kind_name() const;
};

/// One entry per divisor of t in increasing order. family selects the
/// duality used for classification (GL, U, or Sp/O-like).
std::vector<DivisorClass> classify_divisors(std::int64_t t, std::int64_t q,
                                            GroupFamily family);

}  // namespace rootcount
