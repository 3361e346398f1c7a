#pragma once

// Parameter sweeps behind the command line tool. Every command turns a
// SweepSpec into a Table whose row order depends only on the spec, never
// on thread scheduling.

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

namespace qdarwin::cli {

/// How the second environment coordinate is given.
enum class EnvAxis {
  Zeta,           ///< coherence fraction of the pure state at the same sigma
  Haziness,       ///< target h, solved for zeta
  HazinessRatio,  ///< target h / h_m, solved for zeta
};

struct SweepSpec {
  std::vector<double> s00{0.5};
  /// |s01| of the system; absent means the pure state for each s00.
  std::optional<double> s01;
  std::vector<double> sigma{0.0};
  EnvAxis env_axis = EnvAxis::Zeta;
  std::vector<double> env_values{1.0};
  int nE = 200;
  std::vector<double> t{1.5707963267948966};  ///< pi/2
  /// Empty means 0..nE.
  std::vector<int> nF;
  std::vector<double> delta{0.1};

  std::string kind = "redundancy";  ///< scaling: redundancy | deviation
  int nE_max = 8;                   ///< verify
  int draws = 20;                   ///< verify
  std::uint64_t seed = 7;

  std::string format = "csv";
  std::string out;
  unsigned threads = 0;  ///< 0 means all hardware threads

  void validate(const std::string& command) const;
};

/// Errors in user input; the tool reports these as usage errors.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

/// "a:b:count" (inclusive linspace) or a comma list. Numbers may carry a
/// "pi" factor: "pi/2", "0.25pi", "pi".
std::vector<double> parse_real_grid(const std::string& text);

/// "a:b" or "a:b:step" (inclusive), or a comma list.
std::vector<int> parse_int_grid(const std::string& text);

double parse_real(const std::string& text);

/// Fills the parameters of a named figure preset ("3a", "5c", "11", ...)
/// for the given command. Throws UsageError for unknown names.
void apply_figure(SweepSpec& spec, const std::string& command, const std::string& figure);

/// Reads keys mirroring the long flag names (with '-' or '_') from a JSON
/// object. Grid values may be strings in grid syntax or JSON arrays.
void apply_config(SweepSpec& spec, const nlohmann::json& config);

nlohmann::json spec_to_json(const SweepSpec& spec);

using Cell = std::variant<std::monostate, double, std::int64_t, std::string, bool>;

struct Table {
  std::vector<std::string> header;
  std::vector<std::vector<Cell>> rows;
};

Table mi_surface(const SweepSpec& spec);
Table redundancy_table(const SweepSpec& spec);
Table discord_table(const SweepSpec& spec);
Table scaling_table(const SweepSpec& spec);

struct VerifyOutcome {
  Table table;
  bool all_passed;
  int failures;
};
VerifyOutcome verify(const SweepSpec& spec);

/// CSV with a header line, LF endings and %.12g floats. Empty cells for
/// undefined values.
void write_csv(std::ostream& os, const Table& table);

/// {"spec": ..., "rows": [...], "version": ...}
void write_json(std::ostream& os, const Table& table, const SweepSpec& spec);

std::string version();

}  // namespace qdarwin::cli
