#pragma once

#include "rootcount/finite_field.hpp"
#include "rootcount/types.hpp"

#include <cstdint>
#include <memory>
#include <vector>

namespace rootcount {

/// Default ceiling on candidate matrices an exhaustive enumeration may visit.
inline constexpr std::uint64_t kDefaultCandidateBudget = 100'000'000;

struct OracleConfig {
  std::uint64_t budget = kDefaultCandidateBudget;
  unsigned jobs = 1;

  /// Default config with ROOTCOUNT_BUDGET applied when set.
  static OracleConfig from_env();
};

/// Square matrix over F_q (base) or F_{q^2} (quadratic), row-major.
struct MatrixElement {
  int dim = 0;
  std::vector<FieldElement> entries;

  FieldElement at(int i, int j) const { return entries[static_cast<std::size_t>(i * dim + j)]; }
  FieldElement& at(int i, int j) { return entries[static_cast<std::size_t>(i * dim + j)]; }
  friend bool operator==(const MatrixElement&, const MatrixElement&) = default;
};

MatrixElement identity_matrix(int dim);
MatrixElement matrix_mul(const FiniteField& field, const MatrixElement& a, const MatrixElement& b);
MatrixElement matrix_pow(const FiniteField& field, const MatrixElement& a, std::uint64_t e);
/// Determinant by Gaussian elimination.
FieldElement determinant(const FiniteField& field, const MatrixElement& a);

/// The invariant form a family preserves, fixed entry for entry:
/// alternating ((0, P), (-P, 0)); symmetric J+ = ((0, P), (P, 0)),
/// J- = diag-block (P', 1, -delta, P') and J0 = (P, alpha = 1, P) with P the
/// reversal matrix; Hermitian P over F_{q^2}. GL has no form.
struct FormSpec {
  GroupFamily family = GroupFamily::GL;
  int dim = 0;
  MatrixElement J;
};

FormSpec form_spec(GroupFamily family, int dim, const FiniteField& field);

class MatrixGroup {
 public:
  GroupFamily family() const { return family_; }
  int dim() const { return dim_; }
  std::int64_t q() const { return q_; }
  /// Field the entries live in (F_{q^2} for U).
  const FiniteField& field() const { return *field_; }
  const std::vector<MatrixElement>& elements() const { return elements_; }
  std::uint64_t order() const { return elements_.size(); }

 private:
  friend MatrixGroup enumerate_group(GroupFamily, int, std::int64_t, const OracleConfig&);
  GroupFamily family_ = GroupFamily::GL;
  int dim_ = 0;
  std::int64_t q_ = 0;
  std::shared_ptr<const FiniteField> field_;
  std::vector<MatrixElement> elements_;
};

/// Every element of the group, found by scanning all dim x dim matrices and
/// keeping those that preserve the form. Throws Infeasible when
/// q^{dim^2 k} exceeds the budget (k = 2 for U).
MatrixGroup enumerate_group(GroupFamily family, int dim, std::int64_t q,
                            const OracleConfig& config = {});

std::uint64_t count_mth_roots(const MatrixGroup& group, std::int64_t M);
std::uint64_t count_mth_roots(GroupFamily family, int dim, std::int64_t q, std::int64_t M,
                              const OracleConfig& config = {});

/// M-th roots split by element order: coprime to p (semisimple, including
/// the identity), a nontrivial power of p (unipotent), or neither (mixed).
struct SplitCount {
  std::uint64_t semisimple = 0;
  std::uint64_t unipotent = 0;
  std::uint64_t mixed = 0;

  std::uint64_t total() const { return semisimple + unipotent + mixed; }
  friend bool operator==(const SplitCount&, const SplitCount&) = default;
};

SplitCount count_split_roots(const MatrixGroup& group, std::int64_t M);
SplitCount count_split_roots(GroupFamily family, int dim, std::int64_t q, std::int64_t M,
                             const OracleConfig& config = {});

/// Minimal k >= 1 with x^k = Id, found by stripping prime factors from an
/// exponent that annihilates x (typically the group order).
std::uint64_t element_order(const FiniteField& field, const MatrixElement& x,
                            std::uint64_t annihilator);

/// Number of elements whose order is a power of the characteristic,
/// identity included.
std::uint64_t unipotent_census(const MatrixGroup& group);

}  // namespace rootcount
