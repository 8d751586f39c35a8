#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace rootcount {

using Integer = mpz_class;
using Rational = mpq_class;

/// Classical group families. OrthoSum is the combined O+ / O- (or doubled
/// odd-dimensional) series; the three split orthogonal families exist only
/// on the oracle side and for group orders.
enum class GroupFamily { GL, U, Sp, OrthoSum, OrthoPlus, OrthoMinus, OrthoOdd };

std::string_view to_string(GroupFamily family);

/// Accepts the CLI spellings: gl, u, sp, o-sum, o+, o-, o-odd.
GroupFamily parse_family(std::string_view name);

bool is_orthogonal(GroupFamily family);

/// Raised when an exhaustive computation would exceed its configured size.
class Infeasible : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

std::string to_decimal(const Integer& value);
/// Reduced "num/den"; integers still carry "/1".
std::string to_fraction(const Rational& value);
Rational parse_fraction(std::string_view text);

}  // namespace rootcount
