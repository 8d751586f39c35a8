#pragma once

#include "rootcount/types.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace rootcount {

/// Integer partition with parts in weakly decreasing order.
struct Partition {
  std::vector<int> parts;

  int size() const;
  int largest() const { return parts.empty() ? 0 : parts.front(); }
  int length() const { return static_cast<int>(parts.size()); }
  /// Number of parts equal to i.
  int multiplicity(int i) const;
  Partition conjugate() const;
  std::string to_string() const;

  friend bool operator==(const Partition&, const Partition&) = default;
};

enum class SignedKind { Symplectic, Orthogonal };

/// Partition decorated with one sign per distinct part size of the signed
/// parity: even sizes for the symplectic kind, odd sizes for the orthogonal.
struct SignedPartition {
  SignedKind kind = SignedKind::Symplectic;
  Partition parts;
  std::map<int, int> signs;

  bool valid() const;
  std::string to_string() const;

  friend bool operator==(const SignedPartition&, const SignedPartition&) = default;
};

/// All partitions of n in lexicographically descending order.
std::vector<Partition> gen_partitions(int n, std::optional<int> max_part = std::nullopt,
                                      std::optional<int> max_len = std::nullopt);

std::vector<SignedPartition> gen_signed(SignedKind kind, int n,
                                        std::optional<int> max_part = std::nullopt);

/// b^{sum (lambda'_i)^2} * prod_i prod_{j=1}^{m_i} (1 - b^{-j}).
/// For b = q this is the GL_n(q) centralizer of the unipotent class lambda;
/// negative b gives the unitary specialization up to the sign (-1)^{|lambda|}.
Rational c_gl(const Partition& lambda, const Integer& base);
Rational c_gl(const Partition& lambda, std::int64_t base);

/// Order of the centralizer of a unipotent class of shape lambda in the
/// unitary group over F_{Q^2}: (-1)^{|lambda|} c_gl(lambda, -Q).
Integer c_unitary(const Partition& lambda, const Integer& Q);

/// Wall's centralizer order B(u -+ 1) of a unipotent class with signed
/// partition data in Sp or O over F_q. Always a positive integer.
Integer c_signed(SignedKind kind, const SignedPartition& lambda, std::int64_t q);

/// Witt type (+1 or -1) of the quadratic space carrying an orthogonal
/// unipotent class, or 0 when some odd part has odd multiplicity: such
/// classes pair off across the two forms with equal centralizers.
int orthogonal_form_sign(const SignedPartition& lambda);

}  // namespace rootcount
