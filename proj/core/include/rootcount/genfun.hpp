#pragma once

#include "rootcount/numtheory.hpp"
#include "rootcount/partitions.hpp"
#include "rootcount/qseries.hpp"
#include "rootcount/types.hpp"

#include <cstddef>
#include <cstdint>
#include <variant>
#include <vector>

namespace rootcount {

/// Largest truncation order accepted by the series builders.
inline constexpr std::size_t kMaxSeriesDim = 48;
/// Largest dimension accepted by the class-data enumeration.
inline constexpr std::int64_t kMaxEnumerationDim = 8;

/// Proportion of M-th roots of identity, graded by matrix dimension.
///
/// GL and U: coefficient n is a_n / |G_n|. Sp: coefficient 2k is
/// a_k / |Sp_2k| and odd coefficients vanish. OrthoSum: coefficient n is
/// a+_n/|O+_n| + a-_n/|O-_n| for even n and 2 a_n / |O_n| for odd n.
///
/// With semisimple_only the series counts only semisimple roots and is
/// assembled from group orders alone; otherwise every irreducible factor of
/// x^t - 1 contributes a sum over partitions with parts at most p^r.
Series gf_root_proportion(GroupFamily family, std::int64_t q, std::int64_t M, std::size_t N,
                          bool semisimple_only = false);

/// Number of semisimple conjugacy classes that are M-th roots (GL, Sp, U).
/// Requires gcd(M, q) = 1.
Series gf_root_classes(GroupFamily family, std::int64_t q, std::int64_t M, std::size_t N);

/// Coefficient 2k is b+_k - b-_k, the difference of semisimple root
/// proportions in O+_{2k} and O-_{2k}. Requires gcd(M, q) = 1.
Series gf_ortho_diff_ss(std::int64_t q, std::int64_t M, std::size_t N);

/// Coefficient n is a+_n/|O+_n| - a-_n/|O-_n| for even n (zero for odd n):
/// the full counterpart of gf_ortho_diff_ss, valid for any M. Together with
/// the OrthoSum series it separates the two orthogonal forms.
Series gf_ortho_diff(std::int64_t q, std::int64_t M, std::size_t N);

/// prod_{t=1}^{s} 1/(1 - z^t): partitions with parts not exceeding s.
Series gf_unipotent_bounded(int s, std::size_t N);

struct ClassBlock {
  std::size_t divisor_index = 0;  // into classify_divisors(t, q, family)
  std::int64_t copy = 0;          // which of the identical factors
  std::int64_t unit_dim = 1;      // dimension per unit of |shape|
  std::variant<Partition, SignedPartition> shape;
  Integer centralizer;
};

struct ClassDatum {
  std::vector<ClassBlock> blocks;
  Integer centralizer;
  std::int64_t dimension = 0;
  int form_sign = 1;  // OrthoSum only: Witt type of the form, 0 when paired off
};

/// Every class datum of an M-th root in dimension n, with its centralizer
/// order. For OrthoSum the data cover both forms; sum(1/centralizer) then
/// equals the OrthoSum coefficient rather than a proportion of one group.
std::vector<ClassDatum> enumerate_root_classes(GroupFamily family, std::int64_t q, std::int64_t M,
                                               std::int64_t n);

/// Proportion of M-th roots in GL_n(q) or Sp_n(q) for an odd prime M with
/// q = -1 (mod M), by direct coefficient extraction (n is the dimension).
Rational closed_form_prime_case(GroupFamily family, std::int64_t n, std::int64_t q, std::int64_t M);

}  // namespace rootcount
