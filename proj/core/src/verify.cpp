#include "rootcount/verify.hpp"

#include "rootcount/genfun.hpp"
#include "rootcount/partitions.hpp"
#include "rootcount/qseries.hpp"

#include <functional>
#include <ostream>
#include <string>

namespace rootcount {

namespace {

Rational oracle_value(GroupFamily family, std::int64_t q, std::int64_t M, std::int64_t dim,
                      const OracleConfig& config) {
  const int d = static_cast<int>(dim);
  if (family != GroupFamily::OrthoSum) {
    return Rational(Integer(std::to_string(count_mth_roots(family, d, q, M, config))));
  }
  const auto proportion = [&](GroupFamily f) {
    const MatrixGroup g = enumerate_group(f, d, q, config);
    Rational r(Integer(std::to_string(count_mth_roots(g, M))),
               Integer(std::to_string(g.order())));
    r.canonicalize();
    return r;
  };
  if (dim % 2 == 1) return 2 * proportion(GroupFamily::OrthoOdd);
  return proportion(GroupFamily::OrthoPlus) + proportion(GroupFamily::OrthoMinus);
}

}  // namespace

DimensionCheck verify_dimension(GroupFamily family, std::int64_t q, std::int64_t M,
                                std::int64_t dim, const OracleConfig& config) {
  if (dim < 1) throw std::invalid_argument("verify: dimension must be positive");
  if ((family == GroupFamily::Sp || family == GroupFamily::OrthoPlus ||
       family == GroupFamily::OrthoMinus) &&
      dim % 2 != 0) {
    throw std::invalid_argument("verify: " + std::string(to_string(family)) +
                                " needs even dimension");
  }
  if (family == GroupFamily::OrthoOdd && dim % 2 == 0) {
    throw std::invalid_argument("verify: o-odd needs odd dimension");
  }
  DimensionCheck check{family, q, M, dim, 0, 0, std::nullopt};
  const auto n = static_cast<std::size_t>(dim);

  if (is_orthogonal(family)) {
    const Rational sum = gf_root_proportion(GroupFamily::OrthoSum, q, M, n)[n];
    const Rational diff = gf_ortho_diff(q, M, n)[n];
    Rational class_sum = 0;
    Rational class_diff = 0;
    for (const ClassDatum& datum : enumerate_root_classes(GroupFamily::OrthoSum, q, M, dim)) {
      class_sum += Rational(Integer(1), datum.centralizer);
      class_diff += Rational(Integer(datum.form_sign), datum.centralizer);
    }
    if (family == GroupFamily::OrthoSum) {
      check.genfun = sum;
      check.classes = class_sum;
    } else {
      // a+ / |O+| = (sum + diff) / 2 and a- / |O-| = (sum - diff) / 2.
      const int sign = family == GroupFamily::OrthoMinus ? -1 : 1;
      const Rational half_order(group_order(family, n, q), Integer(2));
      check.genfun = (sum + sign * diff) * half_order;
      check.classes = (class_sum + sign * class_diff) * half_order;
    }
  } else {
    const Integer order = group_order(family, n, q);
    check.genfun = gf_root_proportion(family, q, M, n)[n] * Rational(order);
    for (const ClassDatum& datum : enumerate_root_classes(family, q, M, dim)) {
      check.classes += Rational(order / datum.centralizer);
    }
  }
  check.genfun.canonicalize();
  check.classes.canonicalize();
  try {
    check.oracle = oracle_value(family, q, M, dim, config);
  } catch (const Infeasible&) {
    check.oracle.reset();
  }
  return check;
}

std::vector<DimensionCheck> verify_range(GroupFamily family, std::int64_t q, std::int64_t M,
                                         std::int64_t max_dim, const OracleConfig& config) {
  std::vector<DimensionCheck> out;
  for (std::int64_t dim = 1; dim <= max_dim; ++dim) {
    if ((family == GroupFamily::Sp || family == GroupFamily::OrthoPlus ||
         family == GroupFamily::OrthoMinus) &&
        dim % 2 != 0) {
      continue;
    }
    if (family == GroupFamily::OrthoOdd && dim % 2 == 0) continue;
    out.push_back(verify_dimension(family, q, M, dim, config));
  }
  return out;
}

bool run_selftest(std::ostream& out, const OracleConfig& config) {
  bool all = true;
  const auto report = [&](const std::string& name, bool ok) {
    out << (ok ? "PASS  " : "FAIL  ") << name << '\n';
    all = all && ok;
  };

  // Unipotent class sums reproduce the Steinberg count q^{dim^2 - rank}.
  for (std::int64_t q : {3, 5}) {
    for (int n = 1; n <= 5; ++n) {
      const Integer order = group_order(GroupFamily::GL, static_cast<std::size_t>(n), q);
      Rational total = 0;
      for (const Partition& lambda : gen_partitions(n)) total += Rational(order) / c_gl(lambda, q);
      Integer expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(q),
                    static_cast<unsigned long>(n * (n - 1)));
      report("steinberg gl n=" + std::to_string(n) + " q=" + std::to_string(q),
             total == Rational(expected));
    }
    for (int k = 1; k <= 3; ++k) {
      const Integer order = group_order(GroupFamily::Sp, static_cast<std::size_t>(2 * k), q);
      Integer total = 0;
      for (const SignedPartition& lambda : gen_signed(SignedKind::Symplectic, 2 * k)) {
        total += order / c_signed(SignedKind::Symplectic, lambda, q);
      }
      Integer expected;
      mpz_ui_pow_ui(expected.get_mpz_t(), static_cast<unsigned long>(q),
                    static_cast<unsigned long>(2 * k * k));
      report("steinberg sp dim=" + std::to_string(2 * k) + " q=" + std::to_string(q),
             total == expected);
    }
  }

  // Series algebra.
  for (std::size_t t = 1; t <= 10; ++t) {
    Series inverse = Series::one(12);
    inverse[t] = -1;
    report("geometric(" + std::to_string(t) + ") * (1 - z^t) = 1",
           geometric_series(t, 12) * inverse == Series::one(12));
  }
  {
    const Series a = gf_root_proportion(GroupFamily::GL, 3, 4, 6);
    const Series b = gf_root_proportion(GroupFamily::U, 3, 8, 6);
    report("series product commutes", a * b == b * a);
  }

  // Saturation at the group exponent.
  report("saturation gl dim=2 q=3 M=24", gf_root_proportion(GroupFamily::GL, 3, 24, 2)[2] == 1);
  report("saturation u dim=2 q=3 M=24", gf_root_proportion(GroupFamily::U, 3, 24, 2)[2] == 1);
  report("saturation sp dim=2 q=3 M=12", gf_root_proportion(GroupFamily::Sp, 3, 12, 2)[2] == 1);

  // Golden grid: generating function = class data = brute force.
  struct GridRow {
    GroupFamily family;
    std::int64_t q;
    std::vector<std::int64_t> dims;
    std::vector<std::int64_t> Ms;
  };
  const std::vector<GridRow> grid = {
      {GroupFamily::GL, 3, {1, 2, 3}, {1, 2, 3, 4, 6, 8, 12, 24}},
      {GroupFamily::Sp, 3, {2}, {2, 3, 4, 6, 7, 12}},
      {GroupFamily::Sp, 5, {2}, {2, 3, 4, 6, 7, 12}},
      {GroupFamily::Sp, 13, {2}, {2, 3, 4, 6, 7, 12}},
      {GroupFamily::U, 3, {1, 2}, {2, 3, 4, 8, 24}},
      {GroupFamily::OrthoSum, 3, {2}, {1, 2, 3, 4, 6}},
      {GroupFamily::OrthoPlus, 3, {2}, {1, 2, 3, 4, 6}},
      {GroupFamily::OrthoMinus, 3, {2}, {1, 2, 3, 4, 6}},
      {GroupFamily::OrthoOdd, 3, {3}, {2, 3, 4, 6}},
  };
  for (const GridRow& row : grid) {
    for (std::int64_t dim : row.dims) {
      for (std::int64_t M : row.Ms) {
        const DimensionCheck c = verify_dimension(row.family, row.q, M, dim, config);
        report("grid " + std::string(to_string(row.family)) + " dim=" + std::to_string(dim) +
                   " q=" + std::to_string(row.q) + " M=" + std::to_string(M),
               c.pass());
      }
    }
  }
  return all;
}

}  // namespace rootcount
