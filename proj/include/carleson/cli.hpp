#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <string>
#include <vector>

#include "carleson/json_io.hpp"
#include "carleson/measure.hpp"

namespace carleson::cli {

using io::Json;

inline constexpr const char* kVersion = "0.1.0";

enum class Command {
  intensity,
  embed_check,
  finite_time,
  exp_orlicz,
  admissible,
  witness_phi,
  theta,
  crosscheck,
  zero_class
};
std::string to_string(Command c);
Command command_from_string(const std::string& s);

struct RunSpec {
  Command command = Command::intensity;
  std::string input_path;
  std::string output_path;  // empty: stdout
  std::string format = "json";

  std::optional<double> q;
  std::optional<double> p;
  std::optional<double> alpha;
  std::optional<double> tau0;
  std::vector<double> tau_grid;
  int budget = 0;
  std::optional<std::uint64_t> seed;

  std::optional<double> kappa_carleson;
  std::optional<double> kappa_holder;
  std::optional<double> hausdorff_young;
  bool auto_shift = false;

  std::string criterion = "linf";
  std::string space = "linf";   // linf, l1, lp, exp, exp-alpha
  std::string phi = "witness";  // zero-class: witness or exp
  std::string signal_path;      // theta: optional input signal
  double t0 = std::numeric_limits<double>::infinity();
  std::string weights = "unit"; // csv: unit or n2
};

// Checks the per-command requirements. Throws InputError.
void validate(const RunSpec& spec);

Json spec_to_json(const RunSpec& spec);

// Runs one command. The report has version, command, spec, results,
// constants_used and warnings. Non-finite numbers become null with a warning.
Json run(const RunSpec& spec);

// CSV rows n,C,weighted,cumulative sorted by n.
std::string emit_strip_csv(const IntensityTable& table, const SummabilityWeights& weights);

// Tabular output of a report for --format csv.
std::string report_to_csv(const Json& report);

// Writes to a temp file next to `path` and renames it over `path`.
void write_atomic(const std::string& path, const std::string& content);

// Full command-line entry point; returns the process exit code.
int main_entry(int argc, char** argv);

}  // namespace carleson::cli
