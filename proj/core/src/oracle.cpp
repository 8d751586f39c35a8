#include "rootcount/oracle.hpp"

#include "rootcount/numtheory.hpp"

#include <algorithm>
#include <cstdlib>
#include <string>
#include <thread>

namespace rootcount {

OracleConfig OracleConfig::from_env() {
  OracleConfig config;
  if (const char* raw = std::getenv("ROOTCOUNT_BUDGET"); raw != nullptr && *raw != '\0') {
    char* end = nullptr;
    const unsigned long long value = std::strtoull(raw, &end, 10);
    if (end == raw || *end != '\0' || value == 0) {
      throw std::invalid_argument(std::string("ROOTCOUNT_BUDGET is not a positive integer: ") + raw);
    }
    config.budget = value;
  }
  return config;
}

MatrixElement identity_matrix(int dim) {
  MatrixElement id{dim, std::vector<FieldElement>(static_cast<std::size_t>(dim * dim), 0)};
  for (int i = 0; i < dim; ++i) id.at(i, i) = 1;
  return id;
}

MatrixElement matrix_mul(const FiniteField& f, const MatrixElement& a, const MatrixElement& b) {
  const int n = a.dim;
  MatrixElement c{n, std::vector<FieldElement>(a.entries.size(), 0)};
  for (int i = 0; i < n; ++i) {
    for (int k = 0; k < n; ++k) {
      const FieldElement aik = a.at(i, k);
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c.at(i, j) = f.add(c.at(i, j), f.mul(aik, b.at(k, j)));
    }
  }
  return c;
}

MatrixElement matrix_pow(const FiniteField& f, const MatrixElement& a, std::uint64_t e) {
  MatrixElement result = identity_matrix(a.dim);
  MatrixElement base = a;
  while (e > 0) {
    if (e & 1) result = matrix_mul(f, result, base);
    e >>= 1;
    if (e > 0) base = matrix_mul(f, base, base);
  }
  return result;
}

FieldElement determinant(const FiniteField& f, const MatrixElement& a) {
  MatrixElement m = a;
  const int n = m.dim;
  FieldElement det = 1;
  for (int col = 0; col < n; ++col) {
    int pivot = col;
    while (pivot < n && m.at(pivot, col) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != col) {
      for (int j = 0; j < n; ++j) std::swap(m.at(pivot, j), m.at(col, j));
      det = f.neg(det);
    }
    const FieldElement p = m.at(col, col);
    det = f.mul(det, p);
    const FieldElement pinv = f.inv(p);
    for (int i = col + 1; i < n; ++i) {
      const FieldElement factor = f.mul(m.at(i, col), pinv);
      if (factor == 0) continue;
      for (int j = col; j < n; ++j) m.at(i, j) = f.sub(m.at(i, j), f.mul(factor, m.at(col, j)));
    }
  }
  return det;
}

FormSpec form_spec(GroupFamily family, int dim, const FiniteField& field) {
  FormSpec spec{family, dim, MatrixElement{dim, std::vector<FieldElement>(
                                                    static_cast<std::size_t>(dim * dim), 0)}};
  MatrixElement& J = spec.J;
  const auto reversal = [&] {
    for (int i = 0; i < dim; ++i) J.at(i, dim - 1 - i) = 1;
  };
  switch (family) {
    case GroupFamily::GL:
      return spec;
    case GroupFamily::U:
      reversal();
      return spec;
    case GroupFamily::Sp:
      if (dim % 2 != 0 || dim == 0) throw std::invalid_argument("symplectic dimension must be even");
      for (int i = 0; i < dim / 2; ++i) {
        J.at(i, dim - 1 - i) = 1;
        J.at(dim - 1 - i, i) = field.neg(1);
      }
      return spec;
    case GroupFamily::OrthoPlus:
      if (dim % 2 != 0 || dim == 0) throw std::invalid_argument("O+ dimension must be even");
      reversal();
      return spec;
    case GroupFamily::OrthoMinus: {
      if (dim % 2 != 0 || dim == 0) throw std::invalid_argument("O- dimension must be even");
      const int n = dim / 2;
      reversal();
      J.at(n - 1, n) = 0;
      J.at(n, n - 1) = 0;
      J.at(n - 1, n - 1) = 1;
      J.at(n, n) = field.neg(field.smallest_nonsquare());
      return spec;
    }
    case GroupFamily::OrthoOdd:
      if (dim % 2 != 1) throw std::invalid_argument("odd orthogonal dimension must be odd");
      reversal();
      return spec;  // middle entry alpha = 1
    case GroupFamily::OrthoSum:
      break;
  }
  throw std::invalid_argument("o-sum is not a single matrix group");
}

namespace {

/// All vectors of F^dim, encoded by index with coordinate 0 least significant.
std::vector<std::vector<FieldElement>> all_vectors(const FiniteField& f, int dim) {
  std::size_t count = 1;
  for (int i = 0; i < dim; ++i) count *= static_cast<std::size_t>(f.size());
  std::vector<std::vector<FieldElement>> out(count, std::vector<FieldElement>(dim));
  for (std::size_t v = 0; v < count; ++v) {
    std::size_t x = v;
    for (int i = 0; i < dim; ++i) {
      out[v][i] = static_cast<FieldElement>(x % static_cast<std::size_t>(f.size()));
      x /= static_cast<std::size_t>(f.size());
    }
  }
  return out;
}

}  // namespace

MatrixGroup enumerate_group(GroupFamily family, int dim, std::int64_t q, const OracleConfig& config) {
  if (family == GroupFamily::OrthoSum) throw std::invalid_argument("o-sum is not a single group");
  if (dim < 1) throw std::invalid_argument("dimension must be positive");
  const RootProblem rp = split_root_problem(1, q);  // rejects even and non-prime-power q
  (void)rp;

  auto base = std::make_shared<FiniteField>(FiniteField::of_order(q));
  std::shared_ptr<const FiniteField> field =
      family == GroupFamily::U ? std::make_shared<FiniteField>(base->quadratic_extension()) : base;
  const FiniteField& f = *field;

  // Feasibility guard on the raw candidate count |F|^{dim^2}.
  Integer candidates;
  mpz_ui_pow_ui(candidates.get_mpz_t(), static_cast<unsigned long>(f.size()),
                static_cast<unsigned long>(dim * dim));
  if (candidates > Integer(std::to_string(config.budget))) {
    throw Infeasible("enumerating " + std::string(to_string(family)) + " in dimension " +
                     std::to_string(dim) + " over " + f.describe() + " needs " +
                     to_decimal(candidates) + " candidates (budget " +
                     std::to_string(config.budget) + "); use the generating functions instead");
  }

  const FormSpec form = form_spec(family, dim, f);
  const auto vectors = all_vectors(f, dim);
  const std::size_t V = vectors.size();

  // Pairwise form values. Sp/O constrain columns (c_i^T J c_j); U
  // constrains rows (r_i P conj(r_j)^T).
  const bool hermitian = family == GroupFamily::U;
  const bool has_form = family != GroupFamily::GL;
  std::vector<FieldElement> pair;
  if (has_form) {
    std::vector<std::vector<FieldElement>> image(V, std::vector<FieldElement>(dim, 0));
    for (std::size_t v = 0; v < V; ++v) {
      for (int k = 0; k < dim; ++k) {
        FieldElement acc = 0;
        for (int l = 0; l < dim; ++l) {
          const FieldElement x = hermitian ? f.conj(vectors[v][l]) : vectors[v][l];
          acc = f.add(acc, f.mul(form.J.at(k, l), x));
        }
        image[v][k] = acc;
      }
    }
    pair.resize(V * V);
    for (std::size_t a = 0; a < V; ++a) {
      for (std::size_t b = 0; b < V; ++b) {
        FieldElement acc = 0;
        for (int k = 0; k < dim; ++k) acc = f.add(acc, f.mul(vectors[a][k], image[b][k]));
        pair[a * V + b] = acc;
      }
    }
  }

  const auto to_matrix = [&](const std::vector<std::size_t>& chosen) {
    MatrixElement m{dim, std::vector<FieldElement>(static_cast<std::size_t>(dim * dim))};
    for (int j = 0; j < dim; ++j) {
      for (int k = 0; k < dim; ++k) {
        if (hermitian || !has_form) {
          m.at(j, k) = vectors[chosen[j]][k];
        } else {
          m.at(k, j) = vectors[chosen[j]][k];
        }
      }
    }
    return m;
  };

  // Odometer over the dim vectors with a prefix check after each one.
  std::vector<std::vector<MatrixElement>> buckets(V);
  const auto scan_first = [&](std::size_t first) {
    std::vector<std::size_t> chosen(static_cast<std::size_t>(dim), 0);
    chosen[0] = first;
    const auto prefix_ok = [&](int j) {
      if (!has_form) return true;
      const std::size_t vj = chosen[j];
      for (int i = 0; i <= j; ++i) {
        const std::size_t vi = chosen[i];
        if (pair[vi * V + vj] != form.J.at(i, j)) return false;
        if (pair[vj * V + vi] != form.J.at(j, i)) return false;
      }
      return true;
    };
    if (!prefix_ok(0)) return;
    std::vector<MatrixElement>& out = buckets[first];
    const auto rec = [&](auto&& self, int j) -> void {
      if (j == dim) {
        MatrixElement m = to_matrix(chosen);
        if (has_form || determinant(f, m) != 0) out.push_back(std::move(m));
        return;
      }
      for (std::size_t v = 0; v < V; ++v) {
        chosen[j] = v;
        if (prefix_ok(j)) self(self, j + 1);
      }
    };
    rec(rec, 1);
  };

  const unsigned jobs = std::max(1u, config.jobs);
  if (jobs == 1) {
    for (std::size_t first = 0; first < V; ++first) scan_first(first);
  } else {
    std::vector<std::thread> workers;
    for (unsigned w = 0; w < jobs; ++w) {
      workers.emplace_back([&, w] {
        for (std::size_t first = w; first < V; first += jobs) scan_first(first);
      });
    }
    for (auto& t : workers) t.join();
  }

  MatrixGroup group;
  group.family_ = family;
  group.dim_ = dim;
  group.q_ = q;
  group.field_ = field;
  for (auto& bucket : buckets) {
    for (auto& m : bucket) group.elements_.push_back(std::move(m));
  }
  return group;
}

std::uint64_t count_mth_roots(const MatrixGroup& group, std::int64_t M) {
  if (M < 1) throw std::invalid_argument("M must be at least 1");
  const MatrixElement id = identity_matrix(group.dim());
  return static_cast<std::uint64_t>(
      std::count_if(group.elements().begin(), group.elements().end(), [&](const MatrixElement& x) {
        return matrix_pow(group.field(), x, static_cast<std::uint64_t>(M)) == id;
      }));
}

std::uint64_t count_mth_roots(GroupFamily family, int dim, std::int64_t q, std::int64_t M,
                              const OracleConfig& config) {
  return count_mth_roots(enumerate_group(family, dim, q, config), M);
}

std::uint64_t element_order(const FiniteField& field, const MatrixElement& x,
                            std::uint64_t annihilator) {
  if (determinant(field, x) == 0) throw std::invalid_argument("element_order: singular matrix");
  const MatrixElement id = identity_matrix(x.dim);
  if (annihilator == 0 || !(matrix_pow(field, x, annihilator) == id)) {
    throw std::invalid_argument("element_order: exponent does not annihilate the element");
  }
  std::uint64_t order = annihilator;
  std::uint64_t rest = annihilator;
  for (std::uint64_t p = 2; p <= rest; ++p) {
    if (rest % p != 0) continue;
    while (rest % p == 0) rest /= p;
    while (order % p == 0 && matrix_pow(field, x, order / p) == id) order /= p;
  }
  return order;
}

namespace {

bool is_power_of(std::uint64_t value, std::uint64_t p) {
  while (value % p == 0) value /= p;
  return value == 1;
}

}  // namespace

SplitCount count_split_roots(const MatrixGroup& group, std::int64_t M) {
  if (M < 1) throw std::invalid_argument("M must be at least 1");
  const auto p = static_cast<std::uint64_t>(group.field().characteristic());
  const MatrixElement id = identity_matrix(group.dim());
  SplitCount split;
  for (const MatrixElement& x : group.elements()) {
    if (!(matrix_pow(group.field(), x, static_cast<std::uint64_t>(M)) == id)) continue;
    const std::uint64_t order = element_order(group.field(), x, static_cast<std::uint64_t>(M));
    if (order % p != 0) {
      ++split.semisimple;
    } else if (is_power_of(order, p)) {
      ++split.unipotent;
    } else {
      ++split.mixed;
    }
  }
  return split;
}

SplitCount count_split_roots(GroupFamily family, int dim, std::int64_t q, std::int64_t M,
                             const OracleConfig& config) {
  return count_split_roots(enumerate_group(family, dim, q, config), M);
}

std::uint64_t unipotent_census(const MatrixGroup& group) {
  const auto p = static_cast<std::uint64_t>(group.field().characteristic());
  std::uint64_t count = 0;
  for (const MatrixElement& x : group.elements()) {
    if (is_power_of(element_order(group.field(), x, group.order()), p)) ++count;
  }
  return count;
}

}  // namespace rootcount
