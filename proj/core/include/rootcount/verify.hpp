#pragma once

#include "rootcount/oracle.hpp"
#include "rootcount/types.hpp"

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <vector>

namespace rootcount {

/// Three independent routes to the M-th root data of one dimension. Values
/// are element counts, except for o-sum where they are the combined
/// proportion a+/|O+| + a-/|O-| (or 2a/|O| in odd dimension). Counts for a
/// single orthogonal group come from the sum and difference series.
struct DimensionCheck {
  GroupFamily family = GroupFamily::GL;
  std::int64_t q = 0;
  std::int64_t M = 0;
  std::int64_t dim = 0;
  Rational genfun;
  Rational classes;
  std::optional<Rational> oracle;  // empty when enumeration is infeasible

  bool pass() const { return genfun == classes && oracle && *oracle == genfun; }
  bool skipped() const { return !oracle.has_value(); }
};

DimensionCheck verify_dimension(GroupFamily family, std::int64_t q, std::int64_t M,
                                std::int64_t dim, const OracleConfig& config = {});

/// Checks every dimension 1..max_dim the family supports.
std::vector<DimensionCheck> verify_range(GroupFamily family, std::int64_t q, std::int64_t M,
                                         std::int64_t max_dim, const OracleConfig& config = {});

/// Property suites plus the golden verification grid; one line per check.
/// Returns true when every check passes.
bool run_selftest(std::ostream& out, const OracleConfig& config = {});

}  // namespace rootcount
