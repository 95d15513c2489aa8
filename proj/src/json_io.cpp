#include "carleson/json_io.hpp"

#include <cmath>
#include <fstream>
#include <limits>

#include "carleson/error.hpp"

namespace carleson::io {

namespace {

const Json& field(const Json& j, const char* key, const std::string& path) {
  if (!j.is_object() || !j.contains(key)) {
    throw InputError(path + ": missing field '" + key + "'");
  }
  return j.at(key);
}

double number(const Json& j, const std::string& path) {
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    if (s == "inf" || s == "Infinity") return std::numeric_limits<double>::infinity();
  }
  if (!j.is_number()) throw InputError(path + ": expected a number");
  return j.get<double>();
}

double number_field(const Json& j, const char* key, const std::string& path) {
  return number(field(j, key, path), path + "/" + key);
}

}  // namespace

Json complex_to_json(Complex z) { return Json::array({z.real(), z.imag()}); }

Complex complex_from_json(const Json& j, const std::string& path) {
  if (j.is_number()) return {j.get<double>(), 0.0};
  if (!j.is_array() || j.size() != 2) throw InputError(path + ": expected [re, im]");
  return {number(j[0], path + "/0"), number(j[1], path + "/1")};
}

DiscreteMeasure measure_from_json(const Json& j) {
  const Json& arr = j.is_object() ? field(j, "atoms", "") : j;
  const std::string base = j.is_object() ? "/atoms" : "";
  if (!arr.is_array()) throw InputError(base + ": expected an array of atoms");
  std::vector<Atom> atoms;
  for (std::size_t i = 0; i < arr.size(); ++i) {
    const std::string p = base + "/" + std::to_string(i);
    atoms.push_back({{number_field(arr[i], "re", p), number_field(arr[i], "im", p)},
                     number_field(arr[i], "weight", p)});
  }
  return DiscreteMeasure(std::move(atoms));
}

Json to_json(const DiscreteMeasure& mu) {
  Json arr = Json::array();
  for (const auto& a : mu.atoms()) {
    arr.push_back({{"re", a.point.re}, {"im", a.point.im}, {"weight", a.weight}});
  }
  return arr;
}

DiagonalSystem system_from_json(const Json& j) {
  const double q = number_field(j, "q", "");
  const Json& modes = field(j, "modes", "");
  if (!modes.is_array()) throw InputError("/modes: expected an array");
  std::vector<Mode> out;
  for (std::size_t k = 0; k < modes.size(); ++k) {
    const std::string p = "/modes/" + std::to_string(k);
    out.push_back({complex_from_json(field(modes[k], "lambda", p), p + "/lambda"),
                   complex_from_json(field(modes[k], "b", p), p + "/b")});
  }
  return DiagonalSystem(q, std::move(out));
}

Json to_json(const DiagonalSystem& sys) {
  Json modes = Json::array();
  for (const auto& m : sys.modes()) {
    modes.push_back({{"lambda", complex_to_json(m.lambda)}, {"b", complex_to_json(m.b)}});
  }
  return {{"q", sys.q()}, {"modes", modes}};
}

std::variant<DiscreteMeasure, DiagonalSystem> load_input(const Json& j) {
  if (j.is_object() && j.contains("modes")) return system_from_json(j);
  if (j.is_array() || (j.is_object() && j.contains("atoms"))) return measure_from_json(j);
  throw InputError("input is neither a measure (array or {atoms}) nor a system ({q, modes})");
}

InputSignal signal_from_json(const Json& j) {
  const Json& kind_j = field(j, "kind", "");
  if (!kind_j.is_string()) throw InputError("/kind: expected a string");
  const std::string kind = kind_j.get<std::string>();
  if (kind == "zero") return {};
  if (kind == "modulated_indicator") {
    const double c = j.contains("c") ? number(j.at("c"), "/c") : 0.0;
    return InputSignal::modulated_indicator(number_field(j, "a", ""), number_field(j, "b", ""), c);
  }
  if (kind == "weighted_sum") {
    const Json& terms = field(j, "terms", "");
    if (!terms.is_array()) throw InputError("/terms: expected an array");
    std::vector<SignalTerm> out;
    for (std::size_t i = 0; i < terms.size(); ++i) {
      const std::string p = "/terms/" + std::to_string(i);
      const double c = terms[i].contains("c") ? number(terms[i].at("c"), p + "/c") : 0.0;
      const Complex coef = terms[i].contains("coef")
                               ? complex_from_json(terms[i].at("coef"), p + "/coef")
                               : Complex(1.0, 0.0);
      out.push_back({coef, number_field(terms[i], "a", p), number_field(terms[i], "b", p),
                     Complex(0.0, -c)});
    }
    return InputSignal::weighted_sum(std::move(out));
  }
  if (kind == "grid") {
    const Json& samples = field(j, "samples", "");
    if (!samples.is_array()) throw InputError("/samples: expected an array");
    std::vector<Complex> vals;
    for (std::size_t i = 0; i < samples.size(); ++i) {
      vals.push_back(complex_from_json(samples[i], "/samples/" + std::to_string(i)));
    }
    return InputSignal::grid(number_field(j, "start", ""), number_field(j, "end", ""),
                             std::move(vals));
  }
  throw InputError("/kind: unknown signal kind '" + kind + "'");
}

Json to_json(const InputSignal& s) {
  if (s.is_zero()) return {{"kind", "zero"}};
  if (s.is_grid()) {
    Json samples = Json::array();
    for (const auto& v : s.samples()) samples.push_back(complex_to_json(v));
    return {{"kind", "grid"}, {"start", s.grid_start()}, {"end", s.grid_end()}, {"samples", samples}};
  }
  Json terms = Json::array();
  for (const auto& t : s.terms()) {
    terms.push_back({{"coef", complex_to_json(t.coef)},
                     {"a", t.a},
                     {"b", t.b},
                     {"decay", complex_to_json(t.decay)}});
  }
  return {{"kind", "weighted_sum"}, {"terms", terms}};
}

Json to_json(const YoungFunction& phi) {
  Json j{{"kind", to_string(phi.kind())}};
  switch (phi.kind()) {
    case YoungKind::power:
      j["params"] = {{"p", phi.power_exponent()}, {"coeff", phi.power_coefficient()}};
      break;
    case YoungKind::exp:
      j["params"] = Json::object();
      break;
    case YoungKind::exp_alpha:
      j["params"] = {{"alpha", phi.exp_alpha_exponent()}};
      break;
    case YoungKind::tabulated: {
      Json knots = Json::array();
      for (const auto& k : phi.knots()) knots.push_back(Json::array({k.t, k.slope}));
      j["knots"] = knots;
      break;
    }
    case YoungKind::composed_qprime:
      j["params"] = {{"exponent", phi.composed_exponent()}, {"inner", to_json(phi.inner())}};
      break;
    case YoungKind::complementary:
      j["params"] = {{"primal", to_json(phi.primal())}};
      break;
  }
  return j;
}

Json to_json(const IntensityTable& t) {
  Json rows = Json::array();
  for (const auto& [n, c] : t.per_strip) rows.push_back({{"n", n}, {"intensity", c}});
  return {{"alpha", t.alpha}, {"per_strip", rows}, {"total", t.total}};
}

Json to_json(const SummabilityResult& r) {
  Json terms = Json::array();
  for (const auto& t : r.terms) {
    terms.push_back({{"n", t.n}, {"intensity", t.intensity}, {"weight", t.weight}, {"term", t.term}});
  }
  Json j{{"value", r.value}, {"terms", terms}, {"window_term", r.window_term},
         {"head_intensity", r.head_intensity}};
  j["finite_time_m"] = r.finite_time_m ? Json(*r.finite_time_m) : Json(nullptr);
  return j;
}

Json to_json(const WitnessYoung& w) {
  Json checks = Json::array();
  for (const auto& c : w.checks) {
    checks.push_back({{"n", c.n}, {"gamma", c.gamma}, {"lhs", c.lhs}, {"holds", c.holds}});
  }
  Json tab = Json::array();
  for (int e = -8; e <= 8; ++e) {
    const double t = std::ldexp(1.0, e);
    tab.push_back(Json::array({t, w.phi(t)}));
  }
  return {{"q", w.q},
          {"q_prime", w.q / (w.q - 1.0)},
          {"phi_tilde_c", to_json(w.phi_tilde_c)},
          {"phi_tilde", to_json(w.phi_tilde)},
          {"phi", to_json(w.phi)},
          {"checks", checks},
          {"verified", w.verified},
          {"phi_tabulation", tab}};
}

Json to_json(const AdmissibilityReport& r) {
  Json curve = Json::array();
  for (const auto& [tau, b] : r.zero_class_curve) curve.push_back(Json::array({tau, b}));
  Json j{{"criterion", to_string(r.criterion)},
         {"q", r.q},
         {"functional_value", r.functional_value},
         {"per_strip", to_json(r.per_strip)},
         {"summability", to_json(r.summability)},
         {"zero_class_curve", curve},
         {"shift_applied", r.shift_applied},
         {"warnings", r.warnings}};
  j["witness_phi"] = r.witness ? to_json(*r.witness) : Json(nullptr);
  return j;
}

Json to_json(const EmbeddingEstimate& e) {
  Json j{{"q", e.q},
         {"space", e.space},
         {"functional_value", e.functional_value},
         {"decided_bounded", e.decided_bounded},
         {"summability", to_json(e.summability)},
         {"metadata", e.metadata},
         {"notes", e.notes}};
  j["lower_bound"] = e.lower_bound ? Json(*e.lower_bound) : Json(nullptr);
  j["upper_bound"] = e.upper_bound ? Json(*e.upper_bound) : Json(nullptr);
  return j;
}

Json to_json(const ResolvedConstants& c) {
  return {{"kappa_carleson", c.kappa_carleson},
          {"kappa_holder", c.kappa_holder},
          {"hausdorff_young", c.hausdorff_young},
          {"lemma_factor", c.lemma_factor}};
}

Json read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw InputError("cannot open input file '" + path + "'");
  try {
    return Json::parse(in);
  } catch (const Json::parse_error& e) {
    throw InputError("'" + path + "' is not valid JSON: " + e.what());
  }
}

}  // namespace carleson::io
