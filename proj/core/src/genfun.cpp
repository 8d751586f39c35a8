#include "rootcount/genfun.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <string>

namespace rootcount {

namespace {

enum class SlotShape { Plain, Unitary, SymplecticSigned, OrthogonalSigned };

/// One irreducible factor (or dual/conjugate pair) of x^t - 1, i.e. one
/// independent factor of the cycle index.
struct Slot {
  std::size_t divisor_index = 0;
  std::int64_t copy = 0;
  std::int64_t unit_dim = 1;
  SlotShape shape = SlotShape::Plain;
  Integer base;
};

struct BlockOption {
  std::variant<Partition, SignedPartition> shape;
  Integer centralizer;
};

void require_series_family(GroupFamily family) {
  switch (family) {
    case GroupFamily::GL:
    case GroupFamily::U:
    case GroupFamily::Sp:
    case GroupFamily::OrthoSum:
      return;
    default:
      throw std::invalid_argument(std::string("family ") + std::string(to_string(family)) +
                                  " has no generating function of its own; use o-sum");
  }
}

void require_trunc(std::size_t N) {
  if (N > kMaxSeriesDim) {
    throw Infeasible("series truncation " + std::to_string(N) + " exceeds the bound " +
                     std::to_string(kMaxSeriesDim));
  }
}

void require_coprime(const RootProblem& rp, const char* what) {
  if (rp.r != 0) {
    throw std::invalid_argument(std::string(what) + " requires gcd(M, q) = 1");
  }
}

SlotShape slot_shape(const DivisorClass& dc, GroupFamily family) {
  if (family == GroupFamily::GL || std::holds_alternative<kind::Paired>(dc.kind)) {
    return SlotShape::Plain;
  }
  if (std::holds_alternative<kind::Linear>(dc.kind)) {
    if (family == GroupFamily::Sp) return SlotShape::SymplecticSigned;
    if (family == GroupFamily::OrthoSum) return SlotShape::OrthogonalSigned;
  }
  return SlotShape::Unitary;
}

Slot make_slot(const DivisorClass& dc, std::size_t index, std::int64_t copy, GroupFamily family,
               std::int64_t q) {
  return Slot{index, copy, dc.block_dim(family), slot_shape(dc, family),
              dc.centralizer_base(family, q)};
}

std::vector<Slot> build_slots(const std::vector<DivisorClass>& classes, GroupFamily family,
                              std::int64_t q) {
  std::vector<Slot> slots;
  for (std::size_t i = 0; i < classes.size(); ++i) {
    for (std::int64_t c = 0; c < classes[i].factor_count; ++c) {
      slots.push_back(make_slot(classes[i], i, c, family, q));
    }
  }
  return slots;
}

Integer integral(const Rational& value, const std::string& what) {
  if (value.get_den() != 1 || value <= 0) {
    throw std::logic_error("non-integral centralizer for " + what);
  }
  return value.get_num();
}

/// All unipotent shapes of size k admissible in the slot, with centralizers.
std::vector<BlockOption> block_options(const Slot& slot, int k, int bound, std::int64_t q) {
  std::vector<BlockOption> out;
  switch (slot.shape) {
    case SlotShape::Plain:
      for (Partition& lambda : gen_partitions(k, bound)) {
        Integer c = integral(c_gl(lambda, slot.base), lambda.to_string());
        out.push_back({std::move(lambda), std::move(c)});
      }
      break;
    case SlotShape::Unitary:
      for (Partition& lambda : gen_partitions(k, bound)) {
        Integer c = c_unitary(lambda, slot.base);
        out.push_back({std::move(lambda), std::move(c)});
      }
      break;
    case SlotShape::SymplecticSigned:
    case SlotShape::OrthogonalSigned: {
      const SignedKind kind = slot.shape == SlotShape::SymplecticSigned ? SignedKind::Symplectic
                                                                        : SignedKind::Orthogonal;
      for (SignedPartition& lambda : gen_signed(kind, k, bound)) {
        Integer c = c_signed(kind, lambda, q);
        out.push_back({std::move(lambda), std::move(c)});
      }
      break;
    }
  }
  return out;
}

int clamp_bound(const RootProblem& rp, std::size_t N) {
  // p^r may exceed any block size that fits in N.
  Integer bound;
  mpz_ui_pow_ui(bound.get_mpz_t(), static_cast<unsigned long>(rp.p), static_cast<unsigned long>(rp.r));
  if (bound > static_cast<long>(N)) return static_cast<int>(std::max<std::size_t>(N, 1));
  return static_cast<int>(bound.get_si());
}

/// Witt type of the orthogonal component a block occupies: paired blocks
/// are hyperbolic, k self-dual blocks carry (-1)^k, and +-1 eigenspaces
/// follow their signed partition.
int form_sign(const Slot& slot, const BlockOption& opt, std::int64_t k) {
  switch (slot.shape) {
    case SlotShape::Unitary:
      return k % 2 == 0 ? 1 : -1;
    case SlotShape::OrthogonalSigned:
      return orthogonal_form_sign(std::get<SignedPartition>(opt.shape));
    default:
      return 1;
  }
}

/// Cycle-index factor of one slot: sum over admissible shapes of
/// z^{unit * |shape|} / centralizer, each term weighted by its form sign
/// when by_form is set.
Series full_factor(const Slot& slot, int bound, std::int64_t q, std::size_t N,
                   bool by_form = false) {
  Series s = Series::one(N);
  for (std::size_t k = 1; k * slot.unit_dim <= N; ++k) {
    Rational coeff = 0;
    for (const BlockOption& opt : block_options(slot, static_cast<int>(k), bound, q)) {
      const int weight = by_form ? form_sign(slot, opt, static_cast<std::int64_t>(k)) : 1;
      coeff += Rational(Integer(weight), opt.centralizer);
    }
    coeff.canonicalize();
    s[k * slot.unit_dim] = coeff;
  }
  return s;
}

Rational inverse(const Integer& value) {
  Rational r(Integer(1), value);
  r.canonicalize();
  return r;
}

/// Semisimple factor of one slot, built from whole-group orders: a block
/// of k identical eigenvalue blocks centralizes like GL_k, U_k, Sp or O.
Series semisimple_factor(const Slot& slot, std::size_t N, bool alternate_sign) {
  Series s = Series::one(N);
  const Integer& b = slot.base;
  for (std::size_t k = 1; k * slot.unit_dim <= N; ++k) {
    const std::size_t dim = k * slot.unit_dim;
    switch (slot.shape) {
      case SlotShape::Plain:
        s[dim] = inverse(group_order(GroupFamily::GL, k, b));
        break;
      case SlotShape::Unitary:
        s[dim] = inverse(group_order(GroupFamily::U, k, b));
        if (alternate_sign && k % 2 == 1) s[dim] = -s[dim];
        break;
      case SlotShape::SymplecticSigned:
        if (k % 2 == 0) s[dim] = inverse(group_order(GroupFamily::Sp, k, b));
        break;
      case SlotShape::OrthogonalSigned:
        if (k % 2 == 1) {
          // Odd-dimensional eigenspaces contribute equally to both forms.
          if (!alternate_sign) s[dim] = 2 * inverse(group_order(GroupFamily::OrthoOdd, k, b));
        } else if (alternate_sign) {
          s[dim] = inverse(group_order(GroupFamily::OrthoPlus, k, b)) -
                   inverse(group_order(GroupFamily::OrthoMinus, k, b));
        } else {
          s[dim] = inverse(group_order(GroupFamily::OrthoPlus, k, b)) +
                   inverse(group_order(GroupFamily::OrthoMinus, k, b));
        }
        break;
    }
  }
  return s;
}

GroupFamily classification_family(GroupFamily family) {
  return family == GroupFamily::OrthoSum ? GroupFamily::Sp : family;
}

}  // namespace

Series gf_root_proportion(GroupFamily family, std::int64_t q, std::int64_t M, std::size_t N,
                          bool semisimple_only) {
  require_series_family(family);
  require_trunc(N);
  const RootProblem rp = split_root_problem(M, q);
  const auto classes = classify_divisors(rp.t, q, classification_family(family));
  const int bound = clamp_bound(rp, N);

  Series result = Series::one(N);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const Slot slot = make_slot(classes[i], i, 0, family, q);
    const Series factor =
        semisimple_only ? semisimple_factor(slot, N, false) : full_factor(slot, bound, q, N);
    result *= series_pow(factor, static_cast<std::size_t>(classes[i].factor_count));
  }
  return result;
}

Series gf_root_classes(GroupFamily family, std::int64_t q, std::int64_t M, std::size_t N) {
  if (family != GroupFamily::GL && family != GroupFamily::Sp && family != GroupFamily::U) {
    throw std::invalid_argument("gf_root_classes: family must be gl, sp or u");
  }
  require_trunc(N);
  const RootProblem rp = split_root_problem(M, q);
  require_coprime(rp, "gf_root_classes");

  Series result = Series::one(N);
  for (const DivisorClass& dc : classify_divisors(rp.t, q, family)) {
    std::size_t period = static_cast<std::size_t>(dc.block_dim(family));
    // A semisimple +-1 eigenspace of a symplectic element has even dimension.
    if (family == GroupFamily::Sp && std::holds_alternative<kind::Linear>(dc.kind)) period = 2;
    result *= series_pow(geometric_series(period, N), static_cast<std::size_t>(dc.factor_count));
  }
  return result;
}

Series gf_ortho_diff_ss(std::int64_t q, std::int64_t M, std::size_t N) {
  require_trunc(N);
  const RootProblem rp = split_root_problem(M, q);
  require_coprime(rp, "gf_ortho_diff_ss");

  Series result = Series::one(N);
  const auto classes = classify_divisors(rp.t, q, GroupFamily::Sp);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const Slot slot = make_slot(classes[i], i, 0, GroupFamily::OrthoSum, q);
    const Series factor = semisimple_factor(slot, N, true);
    result *= series_pow(factor, static_cast<std::size_t>(classes[i].factor_count));
  }
  return result;
}

Series gf_ortho_diff(std::int64_t q, std::int64_t M, std::size_t N) {
  require_trunc(N);
  const RootProblem rp = split_root_problem(M, q);
  const int bound = clamp_bound(rp, N);

  Series result = Series::one(N);
  const auto classes = classify_divisors(rp.t, q, GroupFamily::Sp);
  for (std::size_t i = 0; i < classes.size(); ++i) {
    const Slot slot = make_slot(classes[i], i, 0, GroupFamily::OrthoSum, q);
    const Series factor = full_factor(slot, bound, q, N, true);
    result *= series_pow(factor, static_cast<std::size_t>(classes[i].factor_count));
  }
  return result;
}

Series gf_unipotent_bounded(int s, std::size_t N) {
  if (s < 1) throw std::invalid_argument("gf_unipotent_bounded: s must be positive");
  Series result = Series::one(N);
  for (int part = 1; part <= s; ++part) {
    result *= geometric_series(static_cast<std::size_t>(part), N);
  }
  return result;
}

std::vector<ClassDatum> enumerate_root_classes(GroupFamily family, std::int64_t q, std::int64_t M,
                                               std::int64_t n) {
  if (family != GroupFamily::GL && family != GroupFamily::Sp && family != GroupFamily::U &&
      family != GroupFamily::OrthoSum) {
    throw std::invalid_argument("enumerate_root_classes: family must be gl, sp, u or o-sum");
  }
  if (n < 0 || n > kMaxEnumerationDim) {
    throw Infeasible("class enumeration dimension " + std::to_string(n) + " exceeds the bound " +
                     std::to_string(kMaxEnumerationDim));
  }
  const RootProblem rp = split_root_problem(M, q);
  const auto classes = classify_divisors(rp.t, q, classification_family(family));
  const auto slots = build_slots(classes, family, q);
  const int bound = clamp_bound(rp, static_cast<std::size_t>(std::max<std::int64_t>(n, 1)));

  std::vector<ClassDatum> out;
  ClassDatum current;
  current.centralizer = 1;
  std::function<void(std::size_t, std::int64_t)> rec = [&](std::size_t index,
                                                           std::int64_t remaining) {
    if (index == slots.size()) {
      if (remaining == 0) {
        current.dimension = n;
        out.push_back(current);
      }
      return;
    }
    const Slot& slot = slots[index];
    rec(index + 1, remaining);
    for (std::int64_t k = 1; k * slot.unit_dim <= remaining; ++k) {
      for (BlockOption& opt : block_options(slot, static_cast<int>(k), bound, q)) {
        const Integer saved = current.centralizer;
        const int saved_sign = current.form_sign;
        if (family == GroupFamily::OrthoSum) current.form_sign *= form_sign(slot, opt, k);
        current.centralizer *= opt.centralizer;
        current.blocks.push_back(ClassBlock{slot.divisor_index, slot.copy, slot.unit_dim,
                                            std::move(opt.shape), std::move(opt.centralizer)});
        rec(index + 1, remaining - k * slot.unit_dim);
        current.blocks.pop_back();
        current.centralizer = saved;
        current.form_sign = saved_sign;
      }
    }
  };
  rec(0, n);
  return out;
}

}  // namespace rootcount
