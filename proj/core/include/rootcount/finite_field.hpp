#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace rootcount {

using FieldElement = std::uint16_t;

/// Finite field with precomputed operation tables. Elements are encoded as
/// integers in [0, size): for an extension of a field with b elements by a
/// monic polynomial of degree k, a_0 + a_1 t + ... is encoded as
/// a_0 + a_1 b + ... (each a_i an encoded element of the base).
class FiniteField {
 public:
  /// F_q for an odd or even prime power q. Prime powers p^k with k > 1 use
  /// the first monic irreducible of degree k in encoding order.
  static FiniteField of_order(std::int64_t q);

  /// F_{q^2} = F_q[t] / (t^2 + t + a) for the smallest a making it
  /// irreducible.
  FiniteField quadratic_extension() const;

  std::int64_t size() const { return size_; }
  std::int64_t characteristic() const { return p_; }
  /// Size of the subfield fixed by conjugation (set for quadratic
  /// extensions; equals size() otherwise).
  std::int64_t subfield_size() const { return subfield_; }
  /// Defining polynomial coefficients c_0..c_{k-1} over the base (empty
  /// for prime fields).
  const std::vector<FieldElement>& modulus() const { return modulus_; }

  FieldElement zero() const { return 0; }
  FieldElement one() const { return 1; }
  FieldElement add(FieldElement a, FieldElement b) const { return add_[idx(a, b)]; }
  FieldElement mul(FieldElement a, FieldElement b) const { return mul_[idx(a, b)]; }
  FieldElement neg(FieldElement a) const { return neg_[a]; }
  FieldElement sub(FieldElement a, FieldElement b) const { return add(a, neg(b)); }
  FieldElement inv(FieldElement a) const;
  FieldElement pow(FieldElement a, std::uint64_t e) const;
  /// a -> a^{subfield_size()}: the involution fixing the subfield of a
  /// quadratic extension.
  FieldElement conj(FieldElement a) const { return conj_[a]; }
  bool is_square(FieldElement a) const;
  /// Smallest encoded element that is not a square.
  FieldElement smallest_nonsquare() const;

  std::string describe() const;

 private:
  FiniteField() = default;
  static FiniteField prime(std::int64_t p);
  static bool build_extension(const FiniteField& base, const std::vector<FieldElement>& modulus,
                              FiniteField& out);
  std::size_t idx(FieldElement a, FieldElement b) const {
    return static_cast<std::size_t>(a) * static_cast<std::size_t>(size_) + b;
  }
  void finish();

  std::int64_t size_ = 0;
  std::int64_t p_ = 0;
  std::int64_t subfield_ = 0;
  std::vector<FieldElement> modulus_;
  std::vector<FieldElement> add_, mul_, neg_, inv_, conj_;
};

}  // namespace rootcount
