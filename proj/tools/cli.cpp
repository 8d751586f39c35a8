#include "cli.hpp"

#include "rootcount/genfun.hpp"
#include "rootcount/numtheory.hpp"
#include "rootcount/oracle.hpp"
#include "rootcount/qseries.hpp"
#include "rootcount/verify.hpp"

#include <CLI11.hpp>

#include <numeric>
#include <ostream>

namespace rootcount::cli {

namespace {

using nlohmann::json;

Integer parse_integer(const std::string& text) {
  Integer v;
  if (text.empty() || v.set_str(text, 10) != 0) {
    throw std::invalid_argument("malformed integer '" + text + "'");
  }
  return v;
}

std::int64_t parse_int64(const json& j) {
  return std::stoll(j.get<std::string>());
}

struct GenfunArgs {
  std::string family;
  std::int64_t q = 0;
  std::int64_t M = 0;
  std::int64_t max_dim = 0;
  bool semisimple_only = false;
  bool classes = false;
  std::string format = "tsv";
};

struct OracleArgs {
  std::string family;
  std::int64_t dim = 0;
  std::int64_t q = 0;
  std::int64_t M = 0;
  unsigned jobs = 1;
  std::string format = "tsv";
};

struct VerifyArgs {
  std::string family;
  std::int64_t q = 0;
  std::int64_t M = 0;
  std::int64_t max_dim = 0;
  unsigned jobs = 1;
};

struct DivisorArgs {
  std::string family;
  std::int64_t q = 0;
  std::int64_t M = 0;
};

OutputRecord build_genfun_record(const GenfunArgs& a) {
  if (a.max_dim < 0) throw std::invalid_argument("--max-dim must be non-negative");
  const auto N = static_cast<std::size_t>(a.max_dim);
  OutputRecord record{a.family, a.q, a.M, {}};

  const bool diff = a.family == "o-diff" || a.family == "o-diff-ss";
  const GroupFamily family = diff ? GroupFamily::OrthoSum : parse_family(a.family);
  if (a.classes && family != GroupFamily::GL && family != GroupFamily::Sp &&
      family != GroupFamily::U) {
    throw std::invalid_argument("--classes is available for gl, sp and u only");
  }
  Series series(N);
  if (diff) {
    series = a.family == "o-diff-ss" || a.semisimple_only ? gf_ortho_diff_ss(a.q, a.M, N)
                                                          : gf_ortho_diff(a.q, a.M, N);
  } else {
    series = gf_root_proportion(family, a.q, a.M, N, a.semisimple_only);
  }
  std::optional<Series> classes;
  if (a.classes) classes = gf_root_classes(family, a.q, a.M, N);

  for (std::size_t n = 1; n <= N; ++n) {
    if (family == GroupFamily::Sp && n % 2 != 0) continue;
    if (diff && n % 2 != 0) continue;
    OutputRow row;
    row.dim = static_cast<std::int64_t>(n);
    row.proportion = series[n];
    if (family == GroupFamily::Sp) row.rank = row.dim / 2;
    if (classes) row.classes = (*classes)[n].get_num();
    if (!diff) {
      if (family != GroupFamily::OrthoSum) {
        const Rational count = series[n] * Rational(group_order(family, n, a.q));
        row.count = count.get_num();
      } else if (n % 2 == 1) {
        const Rational count = series[n] * Rational(group_order(GroupFamily::OrthoOdd, n, a.q)) / 2;
        row.count = count.get_num();
      }
    }
    record.rows.push_back(std::move(row));
  }
  return record;
}

int run_genfun(const GenfunArgs& a, std::ostream& out) {
  const OutputRecord record = build_genfun_record(a);
  if (a.format == "json") {
    out << to_json(record).dump(2) << '\n';
  } else {
    write_tsv(out, record);
  }
  return kExitOk;
}

int run_oracle(const OracleArgs& a, std::ostream& out) {
  const GroupFamily family = parse_family(a.family);
  if (family == GroupFamily::OrthoSum) {
    throw std::invalid_argument("oracle needs a single group: o+, o- or o-odd");
  }
  OracleConfig config = OracleConfig::from_env();
  config.jobs = a.jobs;
  const MatrixGroup group = enumerate_group(family, static_cast<int>(a.dim), a.q, config);
  const SplitCount split = count_split_roots(group, a.M);
  const Integer count(std::to_string(split.total()));
  const Integer order(std::to_string(group.order()));
  Rational proportion(count, order);
  proportion.canonicalize();

  if (a.format == "json") {
    json j = {{"family", a.family},
              {"dim", std::to_string(a.dim)},
              {"q", std::to_string(a.q)},
              {"M", std::to_string(a.M)},
              {"order", to_decimal(order)},
              {"count", to_decimal(count)},
              {"proportion", to_fraction(proportion)},
              {"split",
               {{"semisimple", std::to_string(split.semisimple)},
                {"unipotent", std::to_string(split.unipotent)},
                {"mixed", std::to_string(split.mixed)}}}};
    out << j.dump(2) << '\n';
  } else {
    out << "family\tdim\tq\tM\torder\tcount\tproportion\tsemisimple\tunipotent\tmixed\n";
    out << a.family << '\t' << a.dim << '\t' << a.q << '\t' << a.M << '\t' << to_decimal(order)
        << '\t' << to_decimal(count) << '\t' << to_fraction(proportion) << '\t'
        << split.semisimple << '\t' << split.unipotent << '\t' << split.mixed << '\n';
  }
  return kExitOk;
}

std::string render(const Rational& value) {
  return value.get_den() == 1 ? to_decimal(value.get_num()) : to_fraction(value);
}

int run_verify(const VerifyArgs& a, std::ostream& out) {
  const GroupFamily family = parse_family(a.family);
  OracleConfig config = OracleConfig::from_env();
  config.jobs = a.jobs;
  const auto checks = verify_range(family, a.q, a.M, a.max_dim, config);

  bool ok = true;
  out << "dim\tgenfun\tclasses\toracle\tstatus\n";
  for (const DimensionCheck& c : checks) {
    std::string status;
    if (c.skipped()) {
      status = c.genfun == c.classes ? "SKIP" : "FAIL";
    } else {
      status = c.pass() ? "PASS" : "FAIL";
    }
    ok = ok && status != "FAIL";
    out << c.dim << '\t' << render(c.genfun) << '\t' << render(c.classes) << '\t'
        << (c.oracle ? render(*c.oracle) : std::string("-")) << '\t' << status << '\n';
  }
  return ok ? kExitOk : kExitMismatch;
}

int run_divisors(const DivisorArgs& a, std::ostream& out) {
  const GroupFamily family = parse_family(a.family);
  const RootProblem rp = split_root_problem(a.M, a.q);
  const GroupFamily classify_as =
      is_orthogonal(family) ? GroupFamily::Sp : family;
  out << "d\te\tphi\tkind\tfactor_count\tdegree\tbase\n";
  for (const DivisorClass& dc : classify_divisors(rp.t, a.q, classify_as)) {
    out << dc.d << '\t' << dc.e << '\t' << dc.phi << '\t' << dc.kind_name() << '\t'
        << dc.factor_count << '\t' << dc.degree() << '\t'
        << to_decimal(dc.centralizer_base(classify_as, a.q)) << '\n';
  }
  return kExitOk;
}

}  // namespace

json to_json(const OutputRecord& record) {
  json rows = json::array();
  for (const OutputRow& row : record.rows) {
    json r = {{"dim", std::to_string(row.dim)}, {"proportion", to_fraction(row.proportion)}};
    if (row.rank) r["rank"] = std::to_string(*row.rank);
    if (row.classes) r["classes"] = to_decimal(*row.classes);
    r["count"] = row.count ? json(to_decimal(*row.count)) : json(nullptr);
    rows.push_back(std::move(r));
  }
  return {{"family", record.family},
          {"q", std::to_string(record.q)},
          {"M", std::to_string(record.M)},
          {"rows", std::move(rows)}};
}

OutputRecord record_from_json(const json& j) {
  OutputRecord record;
  record.family = j.at("family").get<std::string>();
  record.q = parse_int64(j.at("q"));
  record.M = parse_int64(j.at("M"));
  for (const json& r : j.at("rows")) {
    OutputRow row;
    row.dim = parse_int64(r.at("dim"));
    row.proportion = parse_fraction(r.at("proportion").get<std::string>());
    if (r.contains("rank")) row.rank = parse_int64(r.at("rank"));
    if (r.contains("classes")) row.classes = parse_integer(r.at("classes").get<std::string>());
    if (r.contains("count") && !r.at("count").is_null()) {
      row.count = parse_integer(r.at("count").get<std::string>());
    }
    record.rows.push_back(std::move(row));
  }
  return record;
}

void write_tsv(std::ostream& out, const OutputRecord& record) {
  const bool has_rank = !record.rows.empty() && record.rows.front().rank.has_value();
  const bool has_classes = !record.rows.empty() && record.rows.front().classes.has_value();
  out << "dim";
  if (has_rank) out << "\trank";
  if (has_classes) out << "\tclasses";
  out << "\tcount\tproportion\n";
  for (const OutputRow& row : record.rows) {
    out << row.dim;
    if (has_rank) out << '\t' << *row.rank;
    if (has_classes) out << '\t' << to_decimal(*row.classes);
    out << '\t' << (row.count ? to_decimal(*row.count) : std::string("-")) << '\t'
        << to_fraction(row.proportion) << '\n';
  }
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Counts M-th roots of identity in finite classical groups"};
  app.require_subcommand(1);

  GenfunArgs g;
  auto* genfun = app.add_subcommand("genfun", "Generating-function coefficients");
  genfun->add_option("--family", g.family, "gl, u, sp, o-sum, o-diff or o-diff-ss")
      ->required()
      ->check(CLI::IsMember({"gl", "u", "sp", "o-sum", "o-diff", "o-diff-ss"}));
  genfun->add_option("--q", g.q, "Field size (odd prime power)")->required();
  genfun->add_option("--m", g.M, "Exponent M")->required();
  genfun->add_option("--max-dim", g.max_dim, "Largest matrix dimension")->required();
  genfun->add_flag("--semisimple-only", g.semisimple_only, "Count semisimple roots only");
  genfun->add_flag("--classes", g.classes, "Add semisimple class counts");
  genfun->add_option("--format", g.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

  OracleArgs o;
  auto* oracle = app.add_subcommand("oracle", "Brute-force count over an explicit matrix group");
  oracle->add_option("--family", o.family, "gl, u, sp, o+, o- or o-odd")
      ->required()
      ->check(CLI::IsMember({"gl", "u", "sp", "o+", "o-", "o-odd"}));
  oracle->add_option("--dim", o.dim, "Matrix dimension")->required();
  oracle->add_option("--q", o.q, "Field size (odd prime power)")->required();
  oracle->add_option("--m", o.M, "Exponent M")->required();
  oracle->add_option("--jobs", o.jobs, "Worker threads")->check(CLI::PositiveNumber);
  oracle->add_option("--format", o.format, "tsv or json")->check(CLI::IsMember({"tsv", "json"}));

  VerifyArgs v;
  auto* verify = app.add_subcommand("verify", "Compare series, class data and brute force");
  verify->add_option("--family", v.family, "gl, u, sp, o-sum, o+, o- or o-odd")
      ->required()
      ->check(CLI::IsMember({"gl", "u", "sp", "o-sum", "o+", "o-", "o-odd"}));
  verify->add_option("--q", v.q, "Field size (odd prime power)")->required();
  verify->add_option("--m", v.M, "Exponent M")->required();
  verify->add_option("--max-dim", v.max_dim, "Largest matrix dimension")->required();
  verify->add_option("--jobs", v.jobs, "Worker threads")->check(CLI::PositiveNumber);

  DivisorArgs d;
  auto* divisors = app.add_subcommand("divisors", "Divisor classification table");
  divisors->add_option("--family", d.family, "gl, u, sp or o-sum")
      ->required()
      ->check(CLI::IsMember({"gl", "u", "sp", "o-sum"}));
  divisors->add_option("--q", d.q, "Field size (odd prime power)")->required();
  divisors->add_option("--m", d.M, "Exponent M")->required();

  auto* selftest = app.add_subcommand("selftest", "Property suites and golden grid");

  // CLI11 consumes arguments from the back.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kExitOk;
  } catch (const CLI::ParseError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }

  try {
    if (*genfun) return run_genfun(g, out);
    if (*oracle) return run_oracle(o, out);
    if (*verify) return run_verify(v, out);
    if (*divisors) return run_divisors(d, out);
    if (*selftest) return run_selftest(out, OracleConfig::from_env()) ? kExitOk : kExitMismatch;
  } catch (const Infeasible& e) {
    err << "infeasible: " << e.what() << '\n';
    return kExitInfeasible;
  } catch (const std::invalid_argument& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}

}  // namespace rootcount::cli
