#include "carleson/admissibility.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "carleson/error.hpp"
#include "carleson/parallel.hpp"

namespace carleson {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

std::string mode_name(std::size_t k) { return "modes[" + std::to_string(k) + "]"; }

double lq_norm(const std::vector<Complex>& x, double q) {
  std::vector<double> parts;
  parts.reserve(x.size());
  for (const auto& v : x) parts.push_back(std::pow(std::abs(v), q));
  return std::pow(pairwise_sum(parts), 1.0 / q);
}

std::vector<Atom> mode_points(const DiagonalSystem& sys) {
  std::vector<Atom> pts;
  for (const auto& m : sys.modes()) {
    pts.push_back({{-m.lambda.real(), -m.lambda.imag()}, std::pow(std::abs(m.b), sys.q())});
  }
  return pts;
}

// Shift used by the criteria that only see finite-time behaviour.
double stabilising_shift(const DiagonalSystem& sys) {
  if (sys.stability() == StabilityClass::strongly_stable) return 0.0;
  return sys.max_real_part() + 1.0;
}

}  // namespace

std::string to_string(StabilityClass c) {
  switch (c) {
    case StabilityClass::strongly_stable: return "strongly_stable";
    case StabilityClass::group_strip: return "group_strip";
    case StabilityClass::general: return "general";
  }
  return "general";
}

DiagonalSystem::DiagonalSystem(double q, std::vector<Mode> modes) : q_(q), modes_(std::move(modes)) {
  if (!(q >= 1.0) || !std::isfinite(q)) throw DomainError("q must be finite and >= 1");
  for (std::size_t k = 0; k < modes_.size(); ++k) {
    const auto& m = modes_[k];
    if (!std::isfinite(m.lambda.real()) || !std::isfinite(m.lambda.imag()) ||
        !std::isfinite(m.b.real()) || !std::isfinite(m.b.imag())) {
      throw DomainError(mode_name(k) + " has a non-finite entry");
    }
  }
}

StabilityClass DiagonalSystem::stability() const {
  for (const auto& m : modes_) {
    if (!(m.lambda.real() < 0.0)) return StabilityClass::group_strip;
  }
  return StabilityClass::strongly_stable;
}

double DiagonalSystem::max_real_part() const {
  double r = -kInf;
  for (const auto& m : modes_) r = std::max(r, m.lambda.real());
  return r;
}

DiscreteMeasure to_measure(const DiagonalSystem& sys) {
  std::vector<Atom> atoms;
  for (std::size_t k = 0; k < sys.modes().size(); ++k) {
    const auto& m = sys.modes()[k];
    if (!(m.lambda.real() < 0.0)) {
      throw DomainError(mode_name(k) + ".lambda has Re >= 0; the semigroup is not strongly stable");
    }
    const double w = std::pow(std::abs(m.b), sys.q());
    if (w > 0.0) atoms.push_back({{-m.lambda.real(), -m.lambda.imag()}, w});
  }
  return DiscreteMeasure(std::move(atoms));
}

DiagonalSystem shift_generator(const DiagonalSystem& sys, double c) {
  if (!std::isfinite(c)) throw DomainError("shift must be finite");
  std::vector<Mode> modes = sys.modes();
  for (auto& m : modes) m.lambda -= c;
  return DiagonalSystem(sys.q(), std::move(modes));
}

double auto_shift_amount(const DiagonalSystem& sys) {
  if (sys.modes().empty()) return 0.0;
  return std::max(0.0, sys.max_real_part() + 2.0 + 0.0625);
}

StateResult input_to_state(const DiagonalSystem& sys, const InputSignal& u, double t0) {
  if (!(t0 > 0.0)) throw DomainError("t0 must be positive");
  const bool infinite = t0 == kInf;
  if (infinite && sys.stability() != StabilityClass::strongly_stable) {
    throw DomainError("t0 = inf needs a strongly stable system");
  }
  // Theta u is the transform of the time-reflected input at -lambda_k.
  const InputSignal v = infinite ? u : u.reflect(t0);
  StateResult r;
  r.x.resize(sys.modes().size());
  parallel_for(r.x.size(), [&](std::size_t k) {
    const auto& m = sys.modes()[k];
    r.x[k] = m.b == Complex(0.0, 0.0) ? Complex(0.0, 0.0) : m.b * v.laplace(-m.lambda);
  });
  r.norm = lq_norm(r.x, sys.q());
  return r;
}

ThetaEstimate theta_norm_estimate(const DiagonalSystem& sys, const Space& space, double t0,
                                  int budget, std::uint64_t seed) {
  if (!(t0 > 0.0)) throw DomainError("t0 must be positive");
  if (t0 == kInf && sys.stability() != StabilityClass::strongly_stable) {
    throw DomainError("t0 = inf needs a strongly stable system");
  }
  ThetaEstimate est;
  const std::vector<InputSignal> cands = candidate_signals(mode_points(sys), space, budget, seed);
  est.candidates = cands.size();
  std::vector<double> ratio(cands.size(), 0.0);
  parallel_for(cands.size(), [&](std::size_t i) {
    const InputSignal u = t0 == kInf ? cands[i] : cands[i].clip(t0).reflect(t0);
    const double norm = space_norm(u, space);
    if (norm > 0.0) ratio[i] = input_to_state(sys, u, t0).norm / norm;
  });
  for (double r : ratio) est.value = std::max(est.value, r);
  return est;
}

std::string to_string(Criterion c) {
  switch (c) {
    case Criterion::linf_infinite_time: return "linf";
    case Criterion::phi_exp: return "phi-exp";
    case Criterion::lq_prime_group: return "lq-prime-group";
    case Criterion::finite_time: return "finite-time";
  }
  return "linf";
}

Criterion criterion_from_string(const std::string& s) {
  if (s == "linf") return Criterion::linf_infinite_time;
  if (s == "phi-exp") return Criterion::phi_exp;
  if (s == "lq-prime-group") return Criterion::lq_prime_group;
  if (s == "finite-time") return Criterion::finite_time;
  throw DomainError("criterion: unknown value '" + s + "'");
}

std::map<int, double> witness_gammas(const std::map<int, double>& intensities, double q) {
  if (!(q > 1.0)) throw DomainError("gamma selection needs q > 1");
  std::vector<std::pair<int, double>> order(intensities.begin(), intensities.end());
  std::stable_sort(order.begin(), order.end(), [](const auto& a, const auto& b) {
    const int aa = std::abs(a.first);
    const int bb = std::abs(b.first);
    return aa < bb || (aa == bb && a.first < b.first);
  });
  std::map<int, double> gammas;
  double tail = 0.0;
  for (auto it = order.rbegin(); it != order.rend(); ++it) {
    tail += it->second;
    const double g = tail > 0.0 ? std::pow(tail, -1.0 / (2.0 * (q - 1.0))) : 1.0;
    gammas[it->first] = std::max(1.0, g);
  }
  return gammas;
}

double weighted_gamma_sum(const std::map<int, double>& intensities,
                          const std::map<int, double>& gammas, double q) {
  std::vector<double> parts;
  for (const auto& [n, c] : intensities) parts.push_back(std::pow(gammas.at(n), q - 1.0) * c);
  return pairwise_sum(parts);
}

WitnessYoung witness_orlicz(const std::map<int, double>& intensities, double q) {
  if (intensities.empty()) {
    // Nothing to dominate; any Young function works.
    return construct_witness_young({{0, 1.0}}, q);
  }
  return construct_witness_young(witness_gammas(intensities, q), q);
}

WitnessYoung witness_orlicz(const DiagonalSystem& sys) {
  return witness_orlicz(intensity_table(to_measure(sys), sys.q()).per_strip, sys.q());
}

AdmissibilityReport decide_linf_admissible(const DiagonalSystem& sys, const DecideOptions& opts) {
  AdmissibilityReport r;
  r.criterion = Criterion::linf_infinite_time;
  r.q = sys.q();
  const DiscreteMeasure mu = to_measure(sys);
  r.per_strip = intensity_table(mu, sys.q());
  r.summability = summability_functional(mu, sys.q(), SummabilityWeights::unit());
  r.functional_value = r.summability.value;
  if (opts.build_witness) {
    if (sys.q() < 2.0) {
      r.warnings.push_back("witness Young function needs q >= 2; skipped");
    } else {
      r.witness = witness_orlicz(r.per_strip.per_strip, sys.q());
      if (!r.witness->verified) r.warnings.push_back("witness verification failed");
    }
  }
  if (!opts.tau_grid.empty()) {
    if (!r.witness) {
      r.warnings.push_back("zero-class curve needs the witness Young function; skipped");
    } else {
      r.zero_class_curve = zero_class_curve(mu, sys.q(), r.witness->phi, opts.tau_grid,
                                            opts.tau0, opts.constants);
    }
  }
  return r;
}

AdmissibilityReport decide_phi_exp_admissible(const DiagonalSystem& sys, const DecideOptions& opts) {
  AdmissibilityReport r;
  r.criterion = Criterion::phi_exp;
  r.q = sys.q();
  r.shift_applied = auto_shift_amount(sys);
  if (r.shift_applied > 0.0) {
    r.warnings.push_back("auto-shift applied: lambda_k -> lambda_k - " +
                         std::to_string(r.shift_applied));
  }
  if (sys.q() != 2.0) {
    r.warnings.push_back("the criterion is stated with exponent 2; weights use |b_k|^2, q is reported only");
  }
  const DiagonalSystem shifted = shift_generator(DiagonalSystem(2.0, sys.modes()), r.shift_applied);
  const DiscreteMeasure mu = to_measure(shifted);
  r.per_strip = intensity_table(mu, 2.0);
  const EmbeddingEstimate est = exp_orlicz_embedding_check(mu, 1.0);
  r.summability = est.summability;
  r.functional_value = est.functional_value;
  if (!opts.tau_grid.empty()) {
    r.zero_class_curve = zero_class_curve(mu, 2.0, YoungFunction::exp(), opts.tau_grid, opts.tau0,
                                          opts.constants);
  }
  return r;
}

AdmissibilityReport decide_lq_prime_group(const DiagonalSystem& sys) {
  AdmissibilityReport r;
  r.criterion = Criterion::lq_prime_group;
  r.q = sys.q();
  if (sys.q() < 2.0) throw DomainError("q must be >= 2 for the group criterion");
  r.shift_applied = stabilising_shift(sys);
  if (r.shift_applied > 0.0) {
    r.warnings.push_back("shift applied for a non-stable group: lambda_k -> lambda_k - " +
                         std::to_string(r.shift_applied));
  }
  const DiscreteMeasure mu = to_measure(shift_generator(sys, r.shift_applied));
  // p = q' gives p' = q and the exponent q / p' = 1.
  const EmbeddingEstimate est = strip_embedding_check(mu, sys.q() / (sys.q() - 1.0), sys.q());
  r.per_strip = intensity_table(mu, 1.0);
  r.functional_value = est.functional_value;
  return r;
}

AdmissibilityReport decide_finite_time(const DiagonalSystem& sys, double tau0) {
  AdmissibilityReport r;
  r.criterion = Criterion::finite_time;
  r.q = sys.q();
  r.shift_applied = stabilising_shift(sys);
  if (r.shift_applied > 0.0) {
    r.warnings.push_back("shift applied: lambda_k -> lambda_k - " + std::to_string(r.shift_applied));
  }
  const DiscreteMeasure mu = to_measure(shift_generator(sys, r.shift_applied));
  const EmbeddingEstimate est = finite_time_check(mu, sys.q(), tau0);
  r.per_strip = intensity_table(mu, sys.q());
  r.summability = est.summability;
  r.functional_value = est.functional_value;
  return r;
}

AdmissibilityReport decide(const DiagonalSystem& sys, Criterion c, const DecideOptions& opts) {
  switch (c) {
    case Criterion::linf_infinite_time: return decide_linf_admissible(sys, opts);
    case Criterion::phi_exp: return decide_phi_exp_admissible(sys, opts);
    case Criterion::lq_prime_group: return decide_lq_prime_group(sys);
    case Criterion::finite_time: return decide_finite_time(sys, opts.tau0);
  }
  return decide_linf_admissible(sys, opts);
}

ResolventResult resolvent_condition(const DiagonalSystem& sys, double alpha,
                                    const std::vector<Complex>& grid) {
  ResolventResult r;
  for (const auto& l : grid) {
    if (!(l.real() > alpha)) {
      throw DomainError("resolvent grid point with Re lambda <= alpha");
    }
  }
  std::vector<double> values(grid.size(), 0.0);
  parallel_for(grid.size(), [&](std::size_t i) {
    std::vector<Complex> x;
    for (const auto& m : sys.modes()) x.push_back(m.b / (grid[i] - m.lambda));
    values[i] = lq_norm(x, sys.q());
  });
  for (std::size_t i = 0; i < grid.size(); ++i) {
    if (values[i] > r.grid_max) {
      r.grid_max = values[i];
      r.argmax = grid[i];
    }
  }
  if (sys.modes().size() == 1) {
    const auto& m = sys.modes().front();
    r.analytic_sup = m.lambda.real() < alpha ? std::abs(m.b) / (alpha - m.lambda.real()) : kInf;
  }
  return r;
}

MultiInputReport multi_input_decide(double q, const std::vector<Complex>& lambdas,
                                    const std::vector<std::vector<Complex>>& columns, Criterion c,
                                    const DecideOptions& opts) {
  MultiInputReport out;
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].size() != lambdas.size()) {
      throw DomainError("columns[" + std::to_string(j) + "] does not match the eigenvalue count");
    }
    std::vector<Mode> modes;
    for (std::size_t k = 0; k < lambdas.size(); ++k) modes.push_back({lambdas[k], columns[j][k]});
    out.columns.push_back(decide(DiagonalSystem(q, std::move(modes)), c, opts));
    out.overall = std::max(out.overall, out.columns.back().functional_value);
  }
  return out;
}

CrosscheckResult propequiv_crosscheck(const DiagonalSystem& sys,
                                      const std::vector<InputSignal>& inputs) {
  const DiscreteMeasure mu = to_measure(sys);
  CrosscheckResult r;
  r.inputs = inputs.size();
  std::vector<double> disc(inputs.size(), 0.0);
  parallel_for(inputs.size(), [&](std::size_t i) {
    const double a = input_to_state(sys, inputs[i], kInf).norm;
    const double b = transform_lq_norm(mu, inputs[i], sys.q());
    const double scale = std::max(a, b);
    disc[i] = scale > 0.0 ? std::abs(a - b) / scale : 0.0;
  });
  for (double d : disc) r.max_relative_discrepancy = std::max(r.max_relative_discrepancy, d);
  return r;
}

CrosscheckResult propequiv_crosscheck(const DiagonalSystem& sys, const Space& space, int budget,
                                      std::uint64_t seed) {
  if (sys.stability() != StabilityClass::strongly_stable) {
    throw DomainError("cross-check needs a strongly stable system");
  }
  return propequiv_crosscheck(sys, candidate_signals(mode_points(sys), space, budget, seed));
}

std::vector<double> truncation_sequence(const std::vector<DiagonalSystem>& family, Criterion c) {
  std::vector<double> out;
  for (const auto& sys : family) out.push_back(decide(sys, c).functional_value);
  return out;
}

}  // namespace carleson
