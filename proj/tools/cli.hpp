#pragma once

#include "rootcount/types.hpp"

#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

namespace rootcount::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitMismatch = 1;
inline constexpr int kExitInfeasible = 2;
inline constexpr int kExitUsage = 64;

struct OutputRow {
  std::int64_t dim = 0;
  std::optional<std::int64_t> rank;  // dim / 2, symplectic rows only
  std::optional<Integer> classes;
  std::optional<Integer> count;      // absent when the series does not determine it
  Rational proportion;

  friend bool operator==(const OutputRow&, const OutputRow&) = default;
};

struct OutputRecord {
  std::string family;
  std::int64_t q = 0;
  std::int64_t M = 0;
  std::vector<OutputRow> rows;

  friend bool operator==(const OutputRecord&, const OutputRecord&) = default;
};

nlohmann::json to_json(const OutputRecord& record);
OutputRecord record_from_json(const nlohmann::json& j);
void write_tsv(std::ostream& out, const OutputRecord& record);

/// Runs one subcommand (args excludes the program name). Returns the
/// process exit status.
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

}  // namespace rootcount::cli
