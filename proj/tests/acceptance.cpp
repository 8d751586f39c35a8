// Acceptance run: one PASS/FAIL line per criterion, exit status 1 on any FAIL.

#include "rootcount/genfun.hpp"
#include "rootcount/oracle.hpp"
#include "rootcount/partitions.hpp"
#include "rootcount/qseries.hpp"
#include "rootcount/verify.hpp"

#include <chrono>
#include <functional>
#include <iostream>
#include <numeric>
#include <sstream>
#include <string>
#include <vector>

using namespace rootcount;

namespace {

Rational frac(long num, long den) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

struct Outcome {
  bool ok = true;
  int checks = 0;
  std::ostringstream detail;

  void expect(bool condition, const std::string& what) {
    ++checks;
    if (!condition) {
      ok = false;
      detail << "    mismatch: " << what << '\n';
    }
  }
};

Rational ratio(std::uint64_t num, std::uint64_t den) {
  Rational r(Integer(std::to_string(num)), Integer(std::to_string(den)));
  r.canonicalize();
  return r;
}

Integer to_integer(std::uint64_t v) { return Integer(std::to_string(v)); }

std::string label(GroupFamily family, std::int64_t dim, std::int64_t q, std::int64_t M) {
  return std::string(to_string(family)) + " dim=" + std::to_string(dim) +
         " q=" + std::to_string(q) + " M=" + std::to_string(M);
}

std::string show(const DimensionCheck& c) {
  std::ostringstream os;
  os << label(c.family, c.dim, c.q, c.M) << " genfun=" << to_fraction(c.genfun)
     << " classes=" << to_fraction(c.classes)
     << " oracle=" << (c.oracle ? to_fraction(*c.oracle) : std::string("infeasible"));
  return os.str();
}

struct GridRow {
  GroupFamily family;
  std::vector<std::int64_t> qs;
  std::vector<std::int64_t> dims;
  std::vector<std::int64_t> Ms;
};

const std::vector<GridRow>& grid() {
  static const std::vector<GridRow> rows = {
      {GroupFamily::GL, {3}, {1, 2, 3}, {1, 2, 3, 4, 6, 8, 12, 24}},
      {GroupFamily::Sp, {3, 5, 13}, {2}, {2, 3, 4, 6, 7, 12}},
      {GroupFamily::U, {3}, {1, 2}, {2, 3, 4, 8, 24}},
      {GroupFamily::OrthoPlus, {3}, {2}, {1, 2, 3, 4, 6}},
      {GroupFamily::OrthoMinus, {3}, {2}, {1, 2, 3, 4, 6}},
      {GroupFamily::OrthoOdd, {3}, {3}, {2, 3, 4, 6}},
  };
  return rows;
}

void triple_agreement(Outcome& out) {
  for (const GridRow& row : grid()) {
    for (std::int64_t q : row.qs) {
      for (std::int64_t dim : row.dims) {
        for (std::int64_t M : row.Ms) {
          const DimensionCheck c = verify_dimension(row.family, q, M, dim);
          out.expect(c.pass() && c.genfun.get_den() == 1, show(c));
        }
      }
    }
  }
}

void anchors(Outcome& out) {
  struct Anchor {
    GroupFamily family;
    std::int64_t dim, q, M;
    long count;
    Rational proportion;
  };
  const std::vector<Anchor> anchors = {
      {GroupFamily::GL, 2, 3, 2, 14, Rational(7, 24)},
      {GroupFamily::Sp, 2, 3, 3, 9, Rational(3, 8)},
      {GroupFamily::Sp, 2, 3, 4, 8, Rational(1, 3)},
      {GroupFamily::U, 2, 3, 4, 40, Rational(5, 12)},
      {GroupFamily::U, 2, 3, 8, 64, Rational(2, 3)},
      {GroupFamily::GL, 2, 13, 7, 469, frac(469, 26208)},
      {GroupFamily::Sp, 2, 13, 7, 469, frac(469, 2184)},
  };
  for (const Anchor& a : anchors) {
    const auto n = static_cast<std::size_t>(a.dim);
    const Rational series = gf_root_proportion(a.family, a.q, a.M, n)[n];
    const Rational count = series * Rational(group_order(a.family, n, a.q));
    const MatrixGroup group = enumerate_group(a.family, static_cast<int>(a.dim), a.q);
    const std::uint64_t brute = count_mth_roots(group, a.M);
    out.expect(series == a.proportion && count == a.count &&
                   brute == static_cast<std::uint64_t>(a.count) &&
                   ratio(brute, group.order()) == a.proportion,
               label(a.family, a.dim, a.q, a.M) + " series=" + to_fraction(series) +
                   " oracle=" + std::to_string(brute));
  }
}

void closed_form(Outcome& out) {
  for (auto [q, M] : {std::pair<std::int64_t, std::int64_t>{13, 7}, {41, 7}, {5, 3}, {11, 3}}) {
    const Series gl = gf_root_proportion(GroupFamily::GL, q, M, 6);
    const Series sp = gf_root_proportion(GroupFamily::Sp, q, M, 6);
    for (std::int64_t n = 1; n <= 6; ++n) {
      const auto i = static_cast<std::size_t>(n);
      out.expect(closed_form_prime_case(GroupFamily::GL, n, q, M) == gl[i],
                 label(GroupFamily::GL, n, q, M));
      if (n % 2 == 0) {
        out.expect(closed_form_prime_case(GroupFamily::Sp, n, q, M) == sp[i],
                   label(GroupFamily::Sp, n, q, M));
      }
    }
  }
}

void saturation(Outcome& out) {
  struct Case {
    GroupFamily family;
    std::int64_t M;
  };
  for (const Case& c : {Case{GroupFamily::GL, 24}, Case{GroupFamily::U, 24},
                        Case{GroupFamily::Sp, 12}}) {
    const Rational value = gf_root_proportion(c.family, 3, c.M, 2)[2];
    const MatrixGroup group = enumerate_group(c.family, 2, 3);
    out.expect(value == 1 && count_mth_roots(group, c.M) == group.order(),
               label(c.family, 2, 3, c.M) + " proportion=" + to_fraction(value));
  }
}

Integer power(std::int64_t q, std::int64_t e) {
  Integer v;
  mpz_ui_pow_ui(v.get_mpz_t(), static_cast<unsigned long>(q), static_cast<unsigned long>(e));
  return v;
}

void steinberg(Outcome& out) {
  for (std::int64_t q : {3, 5}) {
    for (int n = 1; n <= 5; ++n) {
      const Integer order = group_order(GroupFamily::GL, static_cast<std::size_t>(n), q);
      Rational total = 0;
      for (const Partition& lambda : gen_partitions(n)) total += Rational(order) / c_gl(lambda, q);
      out.expect(total == Rational(power(q, n * (n - 1))),
                 "gl n=" + std::to_string(n) + " q=" + std::to_string(q));
    }
    for (int k = 1; k <= 3; ++k) {
      const Integer order = group_order(GroupFamily::Sp, static_cast<std::size_t>(2 * k), q);
      Integer total = 0;
      for (const SignedPartition& lambda : gen_signed(SignedKind::Symplectic, 2 * k)) {
        total += order / c_signed(SignedKind::Symplectic, lambda, q);
      }
      out.expect(total == power(q, 2 * k * k),
                 "sp dim=" + std::to_string(2 * k) + " q=" + std::to_string(q));
    }
  }
  for (int n = 1; n <= 3; ++n) {
    const std::uint64_t census = unipotent_census(enumerate_group(GroupFamily::GL, n, 3));
    out.expect(to_integer(census) == power(3, n * (n - 1)),
               "gl census n=" + std::to_string(n) + " got " + std::to_string(census));
  }
  const std::uint64_t sp = unipotent_census(enumerate_group(GroupFamily::Sp, 2, 3));
  out.expect(to_integer(sp) == power(3, 2), "sp census dim=2 got " + std::to_string(sp));
}

void orthogonal_difference(Outcome& out) {
  const Rational series = gf_ortho_diff_ss(3, 2, 2)[2];
  const MatrixGroup plus = enumerate_group(GroupFamily::OrthoPlus, 2, 3);
  const MatrixGroup minus = enumerate_group(GroupFamily::OrthoMinus, 2, 3);
  const Rational p = ratio(count_mth_roots(plus, 2), plus.order());
  const Rational m = ratio(count_mth_roots(minus, 2), minus.order());
  out.expect(series == Rational(1, 4), "series coefficient " + to_fraction(series));
  out.expect(p == 1 && m == Rational(3, 4),
             "oracle proportions " + to_fraction(p) + " and " + to_fraction(m));
  out.expect(series == p - m, "series against oracle difference");
}

void coprime_regression(Outcome& out) {
  constexpr std::size_t N = 12;
  for (const GridRow& row : grid()) {
    const bool orthogonal = is_orthogonal(row.family);
    const GroupFamily family = orthogonal ? GroupFamily::OrthoSum : row.family;
    for (std::int64_t q : row.qs) {
      for (std::int64_t M : row.Ms) {
        if (std::gcd(M, q) != 1) continue;
        out.expect(gf_root_proportion(family, q, M, N) == gf_root_proportion(family, q, M, N, true),
                   label(family, static_cast<std::int64_t>(N), q, M));
        if (orthogonal) {
          out.expect(gf_ortho_diff(q, M, N) == gf_ortho_diff_ss(q, M, N),
                     "o-diff " + label(family, static_cast<std::int64_t>(N), q, M));
        }
      }
    }
  }
}

void stretch(Outcome& out) {
  OracleConfig config = OracleConfig::from_env();
  for (GroupFamily family : {GroupFamily::Sp, GroupFamily::OrthoPlus, GroupFamily::OrthoMinus}) {
    for (std::int64_t M : {2, 3}) {
      const DimensionCheck c = verify_dimension(family, 3, M, 4, config);
      out.expect(c.pass(), show(c));
    }
  }
  for (std::int64_t M : {2, 3}) {
    const DimensionCheck c = verify_dimension(GroupFamily::OrthoSum, 3, M, 4, config);
    out.expect(c.pass(), show(c));
  }
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* title;
    std::function<void(Outcome&)> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "triple agreement grid: series = class data = brute force", triple_agreement},
      {2, "anchor values", anchors},
      {3, "closed form equals series coefficients", closed_form},
      {4, "saturation at the group exponent", saturation},
      {5, "Steinberg identities and unipotent censuses", steinberg},
      {6, "orthogonal difference against O+_2(3) and O-_2(3)", orthogonal_difference},
      {7, "coprime M: full builder equals semisimple builder", coprime_regression},
      {8, "stretch: Sp_4(3), O+_4(3), O-_4(3) for M in {2,3}", stretch},
  };

  bool all = true;
  for (const Criterion& c : criteria) {
    Outcome outcome;
    const auto start = std::chrono::steady_clock::now();
    std::string error;
    try {
      c.run(outcome);
    } catch (const std::exception& e) {
      outcome.ok = false;
      error = e.what();
    }
    const double seconds =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::cout << (outcome.ok ? "PASS" : "FAIL") << "  criterion " << c.id << ": " << c.title
              << " (" << outcome.checks << " checks, " << seconds << " s)\n";
    std::cout << outcome.detail.str();
    if (!error.empty()) std::cout << "    error: " << error << '\n';
    all = all && outcome.ok;
  }
  return all ? 0 : 1;
}
