#include <catch_amalgamated.hpp>

#include <cmath>
#include <filesystem>
#include <fstream>
#include <sstream>

#include "carleson/cli.hpp"
#include "carleson/error.hpp"
#include "carleson/json_io.hpp"

using namespace carleson;
using Catch::Matchers::WithinRel;
namespace fs = std::filesystem;

namespace {

struct TempDir {
  fs::path path;
  TempDir() {
    path = fs::temp_directory_path() / ("carleson_cli_" + std::to_string(::getpid()));
    fs::create_directories(path);
  }
  ~TempDir() { fs::remove_all(path); }
  std::string write(const std::string& name, const std::string& text) const {
    std::ofstream(path / name) << text;
    return (path / name).string();
  }
};

int invoke(std::vector<std::string> args) {
  args.insert(args.begin(), "carleson-admit");
  std::vector<char*> argv;
  for (auto& a : args) argv.push_back(a.data());
  return cli::main_entry(static_cast<int>(argv.size()), argv.data());
}

std::string slurp(const std::string& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

const char* kFiveModes = R"({"q": 2, "modes": [
  {"lambda": [-1, 0], "b": [1, 0]},
  {"lambda": [-2, 1], "b": [0.5, 0.5]},
  {"lambda": [-4, 0], "b": [2, 0]},
  {"lambda": [-0.5, 3], "b": [0.3, 0]},
  {"lambda": [-8, -2], "b": [1, 1]}]})";

}  // namespace

TEST_CASE("measure and system JSON round trips") {
  const DiscreteMeasure mu({{{1.0, 2.0}, 0.1}, {{0.3, -1.0 / 3.0}, 2.0}});
  const auto j = io::to_json(mu);
  CHECK(io::measure_from_json(io::Json::parse(j.dump())) == mu);
  CHECK(io::measure_from_json({{"atoms", j}}) == mu);

  const DiagonalSystem sys(2.5, {{{-1.0 / 7.0, 3.0}, {0.1, -0.2}}});
  const auto back = io::system_from_json(io::Json::parse(io::to_json(sys).dump()));
  CHECK(back.q() == 2.5);
  CHECK(back.modes()[0].lambda == sys.modes()[0].lambda);
  CHECK(back.modes()[0].b == sys.modes()[0].b);

  CHECK_THROWS_AS(io::measure_from_json(io::Json::parse(R"([{"re": 1, "im": 0}])")), InputError);
  CHECK_THROWS_AS(io::measure_from_json(io::Json::parse(R"([{"re": -1, "im": 0, "weight": 1}])")),
                  DomainError);
  CHECK_THROWS_AS(io::load_input(io::Json::parse(R"({"foo": 1})")), InputError);
}

TEST_CASE("signal JSON") {
  const auto s = io::signal_from_json(io::Json::parse(R"({"kind": "modulated_indicator", "a": 0, "b": 2, "c": 1})"));
  CHECK(std::abs(s.laplace({0.0, 1.0}) - 2.0) < 1e-14);
  CHECK(io::signal_from_json(io::Json::parse(R"({"kind": "zero"})")).is_zero());
  const auto g = io::signal_from_json(io::Json::parse(R"({"kind": "grid", "start": 0, "end": 1, "samples": [[1, 0], [0, 1]]})"));
  CHECK(g.is_grid());
  CHECK_THROWS_AS(io::signal_from_json(io::Json::parse(R"({"kind": "nope"})")), InputError);
}

TEST_CASE("Young function JSON") {
  const auto j = io::to_json(YoungFunction::tabulated({{0, 0}, {1, 2}}));
  CHECK(j["kind"] == "tabulated");
  CHECK(j["knots"].size() == 2);
  CHECK(io::to_json(YoungFunction::exp_alpha(2.0))["params"]["alpha"] == 2.0);
}

TEST_CASE("strip CSV") {
  IntensityTable empty;
  CHECK(cli::emit_strip_csv(empty, SummabilityWeights::unit()) == "n,C,weighted,cumulative\n");
  IntensityTable t;
  t.per_strip = {{3, 0.5}, {1, 2.0}, {2, 0.25}};
  const std::string unit = cli::emit_strip_csv(t, SummabilityWeights::unit());
  CHECK(unit == "n,C,weighted,cumulative\n1,2,2,2\n2,0.25,0.25,2.25\n3,0.5,0.5,2.75\n");
  const std::string sq = cli::emit_strip_csv(t, SummabilityWeights::n_squared());
  CHECK(sq == "n,C,weighted,cumulative\n1,2,2,2\n2,0.25,1,3\n3,0.5,4.5,7.5\n");
}

TEST_CASE("run: intensity, admissible and theta") {
  TempDir dir;
  cli::RunSpec s;
  s.command = cli::Command::intensity;
  s.input_path = dir.write("m.json", R"([{"re": 1, "im": 0, "weight": 1}, {"re": 1, "im": 10, "weight": 1}])");
  s.alpha = 2.0;
  CHECK(cli::run(s)["results"]["intensity"] == 1.0);

  s = {};
  s.command = cli::Command::admissible;
  s.input_path = dir.write("s.json", kFiveModes);
  // Single-atom formula |b|^2 / Re^2, one atom per strip.
  const double expect = 0.09 / 0.25 + 1.0 + 0.5 / 4.0 + 4.0 / 16.0 + 2.0 / 64.0;
  const auto rep = cli::run(s);
  CHECK_THAT(rep["results"]["functional_value"].get<double>(), WithinRel(expect, 1e-14));
  CHECK(rep["results"]["witness_phi"]["verified"] == true);
  CHECK(rep["constants_used"]["kappa_holder"] == 2.0);

  s.command = cli::Command::theta;
  s.signal_path = dir.write("zero.json", R"({"kind": "zero"})");
  const auto th = cli::run(s);
  CHECK(th["results"]["state_norm"] == 0.0);
  for (const auto& x : th["results"]["state"]) CHECK(x == io::Json::array({0.0, 0.0}));
  CHECK(th["warnings"].empty());
}

TEST_CASE("run: determinism and spec validation") {
  TempDir dir;
  cli::RunSpec s;
  s.command = cli::Command::embed_check;
  s.input_path = dir.write("s.json", kFiveModes);
  s.budget = 6;
  s.seed = 123;
  CHECK(cli::run(s).dump() == cli::run(s).dump());
  s.seed.reset();
  CHECK_THROWS_AS(cli::run(s), InputError);
  s.budget = 0;
  s.command = cli::Command::finite_time;
  CHECK_THROWS_AS(cli::run(s), InputError);
}

TEST_CASE("exit codes and atomic output") {
  TempDir dir;
  const auto sys = dir.write("s.json", kFiveModes);
  const auto out = (dir.path / "out.json").string();
  CHECK(invoke({"admissible", "--input", sys, "--output", out}) == 0);
  const auto report = io::Json::parse(slurp(out));
  CHECK(report["command"] == "admissible");
  CHECK(!fs::exists(out + ".tmp"));

  const auto unstable = dir.write("u.json", R"({"q": 2, "modes": [{"lambda": [1, 0], "b": [1, 0]}]})");
  CHECK(invoke({"admissible", "--input", unstable, "--output", out}) == 2);
  CHECK(invoke({"admissible", "--input", unstable, "--auto-shift", "--output", out}) == 0);
  CHECK(invoke({"admissible", "--input", (dir.path / "missing.json").string()}) == 1);
  CHECK(invoke({"admissible", "--input", dir.write("bad.json", "{not json")}) == 1);
  CHECK(invoke({"theta", "--input", sys, "--budget", "3"}) == 1);
  CHECK(invoke({"frobnicate", "--input", sys}) == 1);

  const auto m = dir.write("m.json", R"([{"re": 1, "im": 0, "weight": 1}])");
  const auto sig = dir.write("sig.json", R"({"kind": "modulated_indicator", "a": 0, "b": 1})");
  // No upper bound in L1; reported as null with a warning.
  CHECK(invoke({"embed-check", "--input", m, "--q", "2", "--space", "l1", "--output", out}) == 0);
  CHECK(invoke({"theta", "--input", sys, "--signal", sig, "--t0", "2", "--output", out}) == 0);

  const auto csv = (dir.path / "strips.csv").string();
  CHECK(invoke({"intensity", "--input", m, "--alpha", "2", "--format", "csv", "--output", csv}) == 0);
  CHECK(slurp(csv) == "n,C,weighted,cumulative\n0,1,1,1\n");
}
