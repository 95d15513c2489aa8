#include "carleson/cli.hpp"

#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "carleson/admissibility.hpp"
#include "carleson/embedding.hpp"
#include "carleson/error.hpp"
#include "carleson/orlicz.hpp"

namespace carleson::cli {

namespace {

struct CommandName {
  Command c;
  const char* name;
};
constexpr CommandName kCommands[] = {
    {Command::intensity, "intensity"},   {Command::embed_check, "embed-check"},
    {Command::finite_time, "finite-time"}, {Command::exp_orlicz, "exp-orlicz"},
    {Command::admissible, "admissible"}, {Command::witness_phi, "witness-phi"},
    {Command::theta, "theta"},           {Command::crosscheck, "crosscheck"},
    {Command::zero_class, "zero-class"},
};

Json opt(const std::optional<double>& v) { return v ? Json(*v) : Json(nullptr); }

// Replaces non-finite numbers by null and records where.
void sanitize(Json& j, const std::string& path, std::vector<std::string>& where) {
  if (j.is_number_float()) {
    const double v = j.get<double>();
    if (!std::isfinite(v)) {
      where.push_back(path + (std::isnan(v) ? " = nan" : (v > 0 ? " = inf" : " = -inf")));
      j = nullptr;
    }
  } else if (j.is_array()) {
    for (std::size_t i = 0; i < j.size(); ++i) sanitize(j[i], path + "/" + std::to_string(i), where);
  } else if (j.is_object()) {
    for (auto it = j.begin(); it != j.end(); ++it) sanitize(it.value(), path + "/" + it.key(), where);
  }
}

std::vector<double> default_tau_grid() {
  std::vector<double> g;
  for (int e = 0; e >= -4; --e) g.push_back(std::pow(10.0, e));
  return g;
}

EmbeddingConstants constants_of(const RunSpec& s) {
  EmbeddingConstants c;
  c.kappa_carleson = s.kappa_carleson;
  if (s.kappa_holder) c.kappa_holder = *s.kappa_holder;
  c.hausdorff_young = s.hausdorff_young;
  return c;
}

Space space_of(const RunSpec& s) {
  if (s.space == "linf") return Space::linf();
  if (s.space == "l1") return Space::l1();
  if (s.space == "lp") return Space::lp(*s.p);
  if (s.space == "exp") return Space::orlicz(YoungFunction::exp());
  if (s.space == "exp-alpha") return Space::orlicz(YoungFunction::exp_alpha(*s.alpha));
  throw InputError("--space: unknown space '" + s.space + "'");
}

SummabilityWeights weights_of(const std::string& w) {
  if (w == "unit") return SummabilityWeights::unit();
  if (w == "n2") return SummabilityWeights::n_squared();
  throw InputError("--weights: expected unit or n2");
}

struct Loaded {
  std::optional<DiscreteMeasure> measure;
  std::optional<DiagonalSystem> system;
};

Loaded load(const RunSpec& s) {
  auto in = io::load_input(io::read_file(s.input_path));
  Loaded l;
  if (auto* m = std::get_if<DiscreteMeasure>(&in)) l.measure = std::move(*m);
  if (auto* y = std::get_if<DiagonalSystem>(&in)) l.system = std::move(*y);
  return l;
}

DiagonalSystem need_system(Loaded& l, const RunSpec& s, std::vector<std::string>& warnings) {
  if (!l.system) throw InputError("command '" + to_string(s.command) + "' needs a diagonal system input");
  DiagonalSystem sys = *l.system;
  if (s.auto_shift && s.criterion != "phi-exp" &&
      sys.stability() != StabilityClass::strongly_stable) {
    const double c = auto_shift_amount(sys);
    warnings.push_back("auto-shift applied: lambda_k -> lambda_k - " + std::to_string(c));
    sys = shift_generator(sys, c);
  }
  return sys;
}

// A measure input is used as is; a system input goes through to_measure.
DiscreteMeasure need_measure(Loaded& l, const RunSpec& s, std::vector<std::string>& warnings,
                             double* q_out) {
  if (l.measure) return *l.measure;
  DiagonalSystem sys = need_system(l, s, warnings);
  if (q_out) *q_out = sys.q();
  return to_measure(sys);
}

double need(const std::optional<double>& v, const char* flag) {
  if (!v) throw InputError(std::string("missing required option ") + flag);
  return *v;
}

Json upper_to_json(const UpperBound& ub) {
  Json terms = Json::array();
  for (const auto& t : ub.terms) {
    terms.push_back({{"n", t.n},
                     {"intensity", t.intensity},
                     {"norm_term", t.norm_term},
                     {"contribution", t.contribution}});
  }
  return {{"value", ub.value}, {"value_q", ub.value_q}, {"terms", terms}};
}

Json run_command(const RunSpec& s, std::vector<std::string>& warnings, Json& constants_used) {
  Loaded in = load(s);
  Json res;
  switch (s.command) {
    case Command::intensity: {
      const double alpha = need(s.alpha, "--alpha");
      const DiscreteMeasure mu = need_measure(in, s, warnings, nullptr);
      const IntensityResult d = alpha_intensity_detail(mu, alpha);
      res["intensity"] = d.value;
      res["maximiser"] = {{"center", d.interval.center}, {"length", d.interval.length}};
      res["per_strip"] = io::to_json(intensity_table(mu, alpha));
      break;
    }
    case Command::embed_check: {
      double q = s.q.value_or(0.0);
      const DiscreteMeasure mu = need_measure(in, s, warnings, s.q ? nullptr : &q);
      if (!(q > 1.0)) throw InputError("missing or invalid --q");
      const Space space = space_of(s);
      res["space"] = space.name();
      res["summability"] = io::to_json(summability_functional(mu, q, SummabilityWeights::unit()));
      res["per_strip"] = io::to_json(intensity_table(mu, q));
      const LowerBound lb = embedding_lower_bound(mu, q, space, s.budget, s.seed.value_or(0));
      res["lower_bound"] = {{"value", lb.value}, {"candidates", lb.candidates},
                            {"best_index", lb.best_index}};
      try {
        const UpperBound ub = embedding_upper_bound(mu, q, space, constants_of(s));
        res["upper_bound"] = upper_to_json(ub);
        constants_used = io::to_json(ub.constants);
      } catch (const DomainError& e) {
        res["upper_bound"] = nullptr;
        warnings.push_back(std::string("upper bound unavailable: ") + e.what());
      }
      if (s.p && s.space == "lp") {
        res["strip_check"] = io::to_json(strip_embedding_check(mu, *s.p, q));
      }
      break;
    }
    case Command::finite_time: {
      double q = s.q.value_or(0.0);
      const DiscreteMeasure mu = need_measure(in, s, warnings, s.q ? nullptr : &q);
      if (!(q > 1.0)) throw InputError("missing or invalid --q");
      res["check"] = io::to_json(finite_time_check(mu, q, need(s.tau0, "--tau0")));
      break;
    }
    case Command::exp_orlicz: {
      const DiscreteMeasure mu = need_measure(in, s, warnings, nullptr);
      res["check"] = io::to_json(exp_orlicz_embedding_check(mu, s.alpha.value_or(1.0)));
      break;
    }
    case Command::admissible: {
      const DiagonalSystem sys = need_system(in, s, warnings);
      DecideOptions o;
      o.tau0 = s.tau0.value_or(1.0);
      o.tau_grid = s.tau_grid;
      o.build_witness = true;
      o.constants = constants_of(s);
      const Criterion c = criterion_from_string(s.criterion);
      const AdmissibilityReport r = decide(sys, c, o);
      res = io::to_json(r);
      for (const auto& w : r.warnings) warnings.push_back(w);
      constants_used = io::to_json(resolve_constants(o.constants, sys.q()));
      break;
    }
    case Command::witness_phi: {
      if (in.measure) {
        const double q = need(s.q, "--q");
        res["witness_phi"] = io::to_json(witness_orlicz(intensity_table(*in.measure, q).per_strip, q));
      } else {
        const DiagonalSystem sys = need_system(in, s, warnings);
        const auto table = intensity_table(to_measure(sys), sys.q());
        const auto gammas = witness_gammas(table.per_strip, sys.q());
        Json g = Json::object();
        for (const auto& [n, v] : gammas) g[std::to_string(n)] = v;
        res["gammas"] = g;
        res["weighted_gamma_sum"] = weighted_gamma_sum(table.per_strip, gammas, sys.q());
        res["witness_phi"] = io::to_json(witness_orlicz(sys));
      }
      break;
    }
    case Command::theta: {
      const DiagonalSystem sys = need_system(in, s, warnings);
      if (!s.signal_path.empty()) {
        const InputSignal u = io::signal_from_json(io::read_file(s.signal_path));
        const StateResult st = input_to_state(sys, u, s.t0);
        Json x = Json::array();
        for (const auto& v : st.x) x.push_back(io::complex_to_json(v));
        res["state"] = x;
        res["state_norm"] = st.norm;
        res["input_norm"] = space_norm(u, space_of(s));
      } else {
        const ThetaEstimate est = theta_norm_estimate(sys, space_of(s), s.t0, s.budget, s.seed.value_or(0));
        res["estimate"] = est.value;
        res["candidates"] = est.candidates;
        res["space"] = space_of(s).name();
      }
      res["t0"] = std::isfinite(s.t0) ? Json(s.t0) : Json("inf");
      break;
    }
    case Command::crosscheck: {
      const DiagonalSystem sys = need_system(in, s, warnings);
      const CrosscheckResult r = propequiv_crosscheck(sys, space_of(s), s.budget, s.seed.value_or(0));
      res["max_relative_discrepancy"] = r.max_relative_discrepancy;
      res["inputs"] = r.inputs;
      break;
    }
    case Command::zero_class: {
      double q = s.q.value_or(0.0);
      const DiscreteMeasure mu = need_measure(in, s, warnings, s.q ? nullptr : &q);
      if (!(q > 1.0)) throw InputError("missing or invalid --q");
      const std::vector<double> taus = s.tau_grid.empty() ? default_tau_grid() : s.tau_grid;
      YoungFunction phi = YoungFunction::exp();
      if (s.phi == "witness") {
        if (q < 2.0) throw DomainError("q: the witness Young function needs q >= 2");
        const WitnessYoung w = witness_orlicz(intensity_table(mu, q).per_strip, q);
        if (!w.verified) warnings.push_back("witness verification failed");
        phi = w.phi;
      } else if (s.phi != "exp") {
        throw InputError("--phi: expected witness or exp");
      }
      const auto curve = zero_class_curve(mu, q, phi, taus, s.tau0.value_or(1.0), constants_of(s));
      Json c = Json::array();
      for (const auto& [t, b] : curve) c.push_back(Json::array({t, b}));
      res["phi"] = io::to_json(phi);
      res["curve"] = c;
      constants_used = io::to_json(resolve_constants(constants_of(s), q));
      break;
    }
  }
  return res;
}

}  // namespace

std::string to_string(Command c) {
  for (const auto& e : kCommands) {
    if (e.c == c) return e.name;
  }
  return "unknown";
}

Command command_from_string(const std::string& s) {
  for (const auto& e : kCommands) {
    if (s == e.name) return e.c;
  }
  throw InputError("unknown command '" + s + "'");
}

void validate(const RunSpec& s) {
  if (s.budget < 0) throw InputError("--budget must be nonnegative");
  if (s.budget > 0 && !s.seed) throw InputError("--seed is required when --budget > 0");
  if (s.format != "json" && s.format != "csv") throw InputError("--format must be json or csv");
  if (s.space == "lp" && !s.p) throw InputError("--space lp needs --p");
  if (s.space == "exp-alpha" && !s.alpha) throw InputError("--space exp-alpha needs --alpha");
  if (s.command == Command::intensity && !s.alpha) throw InputError("intensity needs --alpha");
  if (s.command == Command::finite_time && !s.tau0) throw InputError("finite-time needs --tau0");
  if (s.format == "csv" && s.command != Command::intensity && s.command != Command::admissible &&
      s.command != Command::zero_class) {
    throw InputError("--format csv is available for intensity, admissible and zero-class");
  }
  weights_of(s.weights);
}

Json spec_to_json(const RunSpec& s) {
  return {{"command", to_string(s.command)},
          {"input", s.input_path},
          {"format", s.format},
          {"q", opt(s.q)},
          {"p", opt(s.p)},
          {"alpha", opt(s.alpha)},
          {"tau0", opt(s.tau0)},
          {"tau_grid", s.tau_grid},
          {"budget", s.budget},
          {"seed", s.seed ? Json(*s.seed) : Json(nullptr)},
          {"kappa_carleson", opt(s.kappa_carleson)},
          {"kappa_holder", opt(s.kappa_holder)},
          {"hausdorff_young", opt(s.hausdorff_young)},
          {"auto_shift", s.auto_shift},
          {"criterion", s.criterion},
          {"space", s.space},
          {"phi", s.phi},
          {"signal", s.signal_path},
          {"t0", std::isfinite(s.t0) ? Json(s.t0) : Json("inf")},
          {"weights", s.weights}};
}

Json run(const RunSpec& spec) {
  validate(spec);
  std::vector<std::string> warnings;
  Json constants_used = nullptr;
  Json results = run_command(spec, warnings, constants_used);
  std::vector<std::string> bad;
  sanitize(results, "/results", bad);
  sanitize(constants_used, "/constants_used", bad);
  for (const auto& b : bad) warnings.push_back("non-finite value replaced by null at " + b);
  return {{"version", kVersion},
          {"command", to_string(spec.command)},
          {"spec", spec_to_json(spec)},
          {"results", results},
          {"constants_used", constants_used},
          {"warnings", warnings}};
}

std::string emit_strip_csv(const IntensityTable& table, const SummabilityWeights& weights) {
  std::ostringstream out;
  out.precision(17);
  out << "n,C,weighted,cumulative\n";
  double cumulative = 0.0;
  for (const auto& [n, c] : table.per_strip) {  // std::map: sorted by n
    const double w = weights.weight(n) * c;
    cumulative += w;
    out << n << ',' << c << ',' << w << ',' << cumulative << '\n';
  }
  return out.str();
}

std::string report_to_csv(const Json& report) {
  const Json& res = report.at("results");
  const std::string cmd = report.at("command").get<std::string>();
  if (cmd == "zero-class") {
    std::ostringstream out;
    out.precision(17);
    out << "tau,bound\n";
    for (const auto& row : res.at("curve")) out << row[0].get<double>() << ',' << row[1] << '\n';
    return out.str();
  }
  IntensityTable t;
  for (const auto& row : res.at("per_strip").at("per_strip")) {
    t.per_strip[row.at("n").get<int>()] = row.at("intensity").is_null()
                                              ? std::numeric_limits<double>::quiet_NaN()
                                              : row.at("intensity").get<double>();
  }
  return emit_strip_csv(t, weights_of(report.at("spec").at("weights").get<std::string>()));
}

void write_atomic(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw InputError("cannot write '" + tmp.string() + "'");
    out << content;
    out.flush();
    if (!out) throw InputError("write to '" + tmp.string() + "' failed");
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw InputError("cannot rename onto '" + path + "': " + ec.message());
  }
}

int main_entry(int argc, char** argv) {
  CLI::App app{"Laplace-Carleson embedding and admissibility checks for diagonal systems"};
  app.set_version_flag("--version", kVersion);
  RunSpec s;
  std::string command, t0 = "inf";
  std::uint64_t seed = 0;
  double q = 0, p = 0, alpha = 0, tau0 = 0, kc = 0, kh = 0, hy = 0;

  std::vector<std::string> names;
  for (const auto& e : kCommands) names.emplace_back(e.name);
  app.add_option("command", command, "Command to run")->required()->check(CLI::IsMember(names));
  app.add_option("--input,-i", s.input_path, "Measure or system JSON file")->required();
  app.add_option("--output,-o", s.output_path, "Output file (default stdout)");
  app.add_option("--format", s.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
  auto* oq = app.add_option("--q", q, "Target exponent q");
  auto* op = app.add_option("--p", p, "Input exponent p");
  auto* oa = app.add_option("--alpha", alpha, "Intensity exponent or exp-alpha parameter");
  auto* ot = app.add_option("--tau0", tau0, "Finite horizon");
  app.add_option("--tau-grid", s.tau_grid, "Zero-class sample points")->delimiter(',');
  app.add_option("--budget", s.budget, "Number of random candidate inputs");
  auto* os = app.add_option("--seed", seed, "Seed for random candidates");
  auto* okc = app.add_option("--kappa-carleson", kc, "Override of the Carleson constant");
  auto* okh = app.add_option("--kappa-holder", kh, "Override of the Orlicz Hoelder constant");
  auto* ohy = app.add_option("--hausdorff-young", hy, "Override of the Hausdorff-Young constant");
  app.add_flag("--auto-shift", s.auto_shift, "Shift a non-stable generator before checking");
  app.add_option("--criterion", s.criterion, "linf, phi-exp, lq-prime-group or finite-time")
      ->check(CLI::IsMember({"linf", "phi-exp", "lq-prime-group", "finite-time"}));
  app.add_option("--space", s.space, "Input space: linf, l1, lp, exp, exp-alpha")
      ->check(CLI::IsMember({"linf", "l1", "lp", "exp", "exp-alpha"}));
  app.add_option("--phi", s.phi, "zero-class Young function: witness or exp")
      ->check(CLI::IsMember({"witness", "exp"}));
  app.add_option("--signal", s.signal_path, "theta: input signal JSON");
  app.add_option("--t0", t0, "theta horizon (number or inf)");
  app.add_option("--weights", s.weights, "csv strip weights: unit or n2")
      ->check(CLI::IsMember({"unit", "n2"}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 1;
  }

  try {
    s.command = command_from_string(command);
    if (*oq) s.q = q;
    if (*op) s.p = p;
    if (*oa) s.alpha = alpha;
    if (*ot) s.tau0 = tau0;
    if (*os) s.seed = seed;
    if (*okc) s.kappa_carleson = kc;
    if (*okh) s.kappa_holder = kh;
    if (*ohy) s.hausdorff_young = hy;
    if (t0 == "inf") {
      s.t0 = std::numeric_limits<double>::infinity();
    } else {
      try {
        s.t0 = std::stod(t0);
      } catch (const std::exception&) {
        throw InputError("--t0: expected a number or inf");
      }
    }
    const Json report = run(s);
    const std::string text = s.format == "csv" ? report_to_csv(report) : report.dump(2) + "\n";
    if (s.output_path.empty()) {
      std::cout << text;
    } else {
      write_atomic(s.output_path, text);
    }
    for (const auto& w : report.at("warnings")) std::cerr << "warning: " << w.get<std::string>() << '\n';
    return 0;
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const DomainError& e) {
    std::cerr << "domain error: " << e.what() << '\n';
    return 2;
  } catch (const UnboundedNormError& e) {
    std::cerr << "unbounded norm: " << e.what() << '\n';
    return 3;
  } catch (const Json::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
}

}  // namespace carleson::cli
