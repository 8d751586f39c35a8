#pragma once

#include "rootcount/types.hpp"

#include <cstddef>
#include <initializer_list>
#include <vector>

namespace rootcount {

/// Truncated power series in z with exact rational coefficients, indices
/// 0..trunc. The index is always the matrix dimension.
class Series {
 public:
  /// Zero series truncated at order n.
  explicit Series(std::size_t trunc = 0);
  Series(std::size_t trunc, std::initializer_list<Rational> coeffs);
  Series(std::size_t trunc, std::vector<Rational> coeffs);

  /// Multiplicative identity 1 + 0z + ... at the given truncation.
  static Series one(std::size_t trunc);

  std::size_t trunc() const { return coeffs_.size() - 1; }
  const Rational& operator[](std::size_t n) const { return coeffs_.at(n); }
  Rational& operator[](std::size_t n) { return coeffs_.at(n); }
  const std::vector<Rational>& coeffs() const { return coeffs_; }

  Series& operator+=(const Series& other);
  Series& operator-=(const Series& other);
  Series& operator*=(const Series& other);

  friend Series operator+(Series a, const Series& b) { return a += b; }
  friend Series operator-(Series a, const Series& b) { return a -= b; }
  friend Series operator*(const Series& a, const Series& b);
  friend bool operator==(const Series& a, const Series& b) { return a.coeffs_ == b.coeffs_; }

 private:
  std::vector<Rational> coeffs_;
};

/// 1 / (1 - z^period) truncated at trunc.
Series geometric_series(std::size_t period, std::size_t trunc);

Series series_mul(const Series& a, const Series& b);
Series series_pow(const Series& a, std::size_t k);

/// |G| of the named family acting on an n-dimensional space over F_base.
/// For U the entries live in the quadratic extension of F_base.
Integer group_order(GroupFamily family, std::size_t n, const Integer& base);
Integer group_order(GroupFamily family, std::size_t n, std::int64_t base);

}  // namespace rootcount
