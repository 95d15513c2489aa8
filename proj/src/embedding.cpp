#include "carleson/embedding.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <set>

#include "carleson/error.hpp"
#include "carleson/parallel.hpp"

namespace carleson {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();
constexpr double kTwoPi = 2.0 * M_PI;

// Panel integration over the real line: uniform panels of width h across
// [c_lo, c_hi], then geometrically widening panels on both sides until
// tail(L, R) drops below rel_tol times the running value.
struct LineSum {
  double re = 0.0;
  double im = 0.0;
  double tail = kInf;
};

LineSum line_integral(const std::function<Complex(double)>& g, bool complex_valued,
                      double c_lo, double c_hi, double h, double oscillation,
                      const std::function<double(double, double)>& tail, double rel_tol) {
  std::vector<double> re_parts;
  std::vector<double> im_parts;
  const auto add_panel = [&](double lo, double hi) {
    if (complex_valued) {
      const Complex v = quad::integrate_complex(g, lo, hi);
      re_parts.push_back(v.real());
      im_parts.push_back(v.imag());
    } else {
      re_parts.push_back(quad::integrate([&](double y) { return g(y).real(); }, lo, hi));
    }
  };
  double L = c_lo - 8.0 * h;
  double R = c_hi + 8.0 * h;
  const double core = R - L;
  const int panels = static_cast<int>(std::min(4000.0, std::ceil(core / h)));
  const double width = core / panels;
  for (int i = 0; i < panels; ++i) {
    add_panel(L + width * i, i + 1 == panels ? R : L + width * (i + 1));
  }
  LineSum out;
  double w = h;
  // Panels wider than a few thousand oscillation periods are not resolved by
  // the quadrature; stop there and report the analytic tail instead.
  const double widest = 4096.0 * oscillation;
  for (int step = 0; step < 4000 && w <= widest; ++step) {
    add_panel(R, R + w);
    add_panel(L - w, L);
    R += w;
    L -= w;
    w *= 1.3;
    out.re = pairwise_sum(re_parts);
    out.im = pairwise_sum(im_parts);
    out.tail = tail(L, R);
    const double mag = std::hypot(out.re, out.im);
    if (out.tail <= rel_tol * mag || (mag == 0.0 && out.tail == 0.0)) break;
  }
  if (re_parts.size() == static_cast<std::size_t>(panels)) out.tail = tail(L, R);
  return out;
}

// Period of the oscillating factors e^{-iy a}, e^{-iy b} of Lf; inf when
// there are none.
double oscillation_period(const std::vector<SignalTerm>& terms) {
  double h = kInf;
  for (const auto& t : terms) {
    const double reach = t.b == kInf ? t.a : t.b;
    if (reach > 0.0) h = std::min(h, kTwoPi / reach);
  }
  return h;
}

// Feature width of Lf near the line Re z = x.
double transform_scale(const std::vector<SignalTerm>& terms, double x) {
  double h = std::min(1e3, oscillation_period(terms));
  for (const auto& t : terms) {
    if (t.b == kInf) h = std::min(h, x + t.decay.real());
  }
  return std::max(h, 1e-9);
}

// |Lf(x + iy)| <= A / (|y| - c) once |y| > c.
std::pair<double, double> transform_tail_constants(const std::vector<SignalTerm>& terms,
                                                   double x) {
  double A = 0.0;
  double c = 0.0;
  for (const auto& t : terms) {
    const double r = x + t.decay.real();
    double e = std::exp(-r * t.a);
    if (t.b != kInf) e += std::exp(-r * t.b);
    A += std::abs(t.coef) * e;
    c = std::max(c, std::abs(t.decay.imag()));
  }
  return {A, c};
}

std::pair<double, double> centre_range(const std::vector<SignalTerm>& terms) {
  double lo = kInf;
  double hi = -kInf;
  for (const auto& t : terms) {
    lo = std::min(lo, -t.decay.imag());
    hi = std::max(hi, -t.decay.imag());
  }
  if (lo > hi) return {0.0, 0.0};
  return {lo, hi};
}

}  // namespace

Complex kernel_value(Complex lambda, Complex z) {
  return 1.0 / (kTwoPi * (z + std::conj(lambda)));
}

double kernel_norm(Complex lambda, double p) {
  if (!(lambda.real() > 0.0)) throw DomainError("kernel norm needs Re lambda > 0");
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("kernel norm needs 1 <= p < inf");
  return std::pow(1.0 / (p * std::pow(kTwoPi, p) * lambda.real()), 1.0 / p);
}

KernelBounds kernel_square_bounds(const ImaginaryInterval& interval) {
  if (!(interval.length > 0.0)) throw DomainError("interval length must be positive");
  return {1.0 / (std::sqrt(10.0) * M_PI * interval.length), 1.0 / (M_PI * interval.length)};
}

KernelBoundCheck check_kernel_square_bounds(const ImaginaryInterval& interval, int samples,
                                            std::uint64_t seed) {
  const KernelBounds b = kernel_square_bounds(interval);
  const Complex lambda{0.5 * interval.length, interval.center};
  SeededRng rng(seed);
  KernelBoundCheck out;
  out.min_value = kInf;
  for (int i = 0; i < samples; ++i) {
    double u = 0.0;
    while (u == 0.0) u = rng.uniform();
    const Complex z{interval.length * u, interval.lower() + interval.length * rng.uniform()};
    const double v = std::abs(kernel_value(lambda, z));
    out.min_value = std::min(out.min_value, v);
    out.max_value = std::max(out.max_value, v);
    if (!(v >= b.lo && v <= b.hi)) ++out.violations;
    ++out.samples;
  }
  return out;
}

HardyNormEstimate hardy_norm(const InputSignal& f, double p, double shift) {
  if (!(p >= 1.0) || !std::isfinite(p)) throw DomainError("Hardy norm needs 1 <= p < inf");
  if (!(shift >= 0.0)) throw DomainError("Hardy norm shift must be >= 0");
  HardyNormEstimate est;
  est.p = p;
  est.shift = shift;
  est.epsilon_grid = {1.0, 0.25, 0.0625, 0.015625, 0.0};
  if (f.is_zero()) {
    est.line_values.assign(est.epsilon_grid.size(), 0.0);
    est.tail_bound = 0.0;
    return est;
  }
  if (p <= 1.0) {
    throw UnboundedNormError("boundary trace of a piecewise signal's transform is not integrable for p = 1");
  }
  const std::vector<SignalTerm> terms = f.as_terms();
  const auto [c_lo, c_hi] = centre_range(terms);
  for (double eps : est.epsilon_grid) {
    const double x = eps + shift;
    bool admissible = true;
    for (const auto& t : terms) {
      if (t.b == kInf && !(x + t.decay.real() > 0.0)) admissible = false;
    }
    if (!admissible) {
      est.line_values.push_back(kInf);
      continue;
    }
    const auto [A, c] = transform_tail_constants(terms, x);
    const auto tail = [&, A = A, c = c](double L, double R) {
      if (R <= c || -L <= c) return kInf;
      return std::pow(A, p) * (std::pow(R - c, 1.0 - p) + std::pow(-L - c, 1.0 - p)) / (p - 1.0);
    };
    const auto g = [&](double y) -> Complex {
      return std::pow(std::abs(f.laplace({x, y})), p);
    };
    const LineSum s = line_integral(g, false, c_lo, c_hi, transform_scale(terms, x),
                                   oscillation_period(terms), tail, 1e-8);
    est.line_values.push_back(s.re);
    if (s.re >= est.value) {
      est.value = s.re;
      est.tail_bound = s.tail;
    }
  }
  est.norm = std::pow(est.value, 1.0 / p);
  return est;
}

double reproducing_residual(const InputSignal& f, Complex lambda) {
  if (!(lambda.real() > 0.0)) throw DomainError("reproducing formula needs Re lambda > 0");
  if (f.is_zero()) return 0.0;
  const std::vector<SignalTerm> terms = f.as_terms();
  auto [c_lo, c_hi] = centre_range(terms);
  c_lo = std::min(c_lo, lambda.imag());
  c_hi = std::max(c_hi, lambda.imag());
  const auto [A, c0] = transform_tail_constants(terms, 0.0);
  const double c = std::max(c0, std::abs(lambda.imag()));
  const auto tail = [A = A, c](double L, double R) {
    if (R <= c || -L <= c) return kInf;
    return A / kTwoPi * (1.0 / (R - c) + 1.0 / (-L - c));
  };
  const auto g = [&](double y) -> Complex {
    return f.laplace({0.0, y}) / (kTwoPi * (lambda - Complex(0.0, y)));
  };
  const double h = std::min(transform_scale(terms, 0.0), lambda.real());
  const LineSum s = line_integral(g, true, c_lo, c_hi, h, oscillation_period(terms), tail, 1e-12);
  return std::abs(f.laplace(lambda) - Complex(s.re, s.im));
}

InputSignal test_family_fn(int n, const ImaginaryInterval& interval) {
  const double want = std::ldexp(1.0, n + 1);
  if (std::abs(interval.length - want) > 1e-12 * want) {
    throw DomainError("f_" + std::to_string(n) + " needs |I_n| = 2^(n+1)");
  }
  return InputSignal::modulated_indicator(std::ldexp(1.0, -n - 1), std::ldexp(1.0, -n),
                                          interval.center);
}

int minimal_linf_spacing() {
  const double c = std::exp(-2.0) * std::cos(1.0) / 2.0;
  int N = 2;
  while (std::ldexp(1.0, 3 - N) > c) ++N;
  return N;
}

InputSignal test_family_gk(const FamilySpec& spec, int k,
                           const std::function<double(int)>& centre) {
  if (spec.m_lo > spec.m_hi) throw DomainError("empty m range for g_k");
  if (spec.kind == FamilyKind::linf) {
    if (spec.N < minimal_linf_spacing()) {
      throw DomainError("N = " + std::to_string(spec.N) + " violates C 2^(3-N) <= c; need N >= " +
                        std::to_string(minimal_linf_spacing()));
    }
  } else {
    if (spec.N < 2) throw DomainError("exponential family needs N >= 2");
    if (k < 0) throw DomainError("exponential family needs k >= 0");
    if (spec.m_lo < 0) throw DomainError("exponential family sums over m >= 0");
    if (spec.kind == FamilyKind::exp_alpha && !(spec.alpha > 0.0)) {
      throw DomainError("exp_alpha family needs alpha > 0");
    }
  }
  std::vector<SignalTerm> terms;
  for (int m = spec.m_lo; m <= spec.m_hi; ++m) {
    double w = 1.0;
    if (spec.kind == FamilyKind::exp) w = std::log(2.0) * m;
    if (spec.kind == FamilyKind::exp_alpha) {
      w = std::pow(std::log(2.0) * m, 1.0 / spec.alpha);
    }
    if (w == 0.0) continue;
    const int j = m * spec.N + k;
    terms.push_back({w, std::ldexp(1.0, -j - 1), std::ldexp(1.0, -j), Complex(0.0, -centre(j))});
  }
  return InputSignal::weighted_sum(std::move(terms));
}

ExpNormalization exp_family_normalization(int k, int N, int m_max) {
  ExpNormalization out;
  const InputSignal g =
      test_family_gk({FamilyKind::exp, N, 1.0, 0, m_max}, k, [](int) { return 0.0; });
  const YoungFunction phi = YoungFunction::exp();
  out.integral = g.integrate_modulus([&](double m) { return phi(m); });
  std::vector<double> parts;
  for (int m = 0; m <= m_max; ++m) parts.push_back(std::ldexp(1.0, m - (k + m * N + 1)));
  out.geometric_sum = pairwise_sum(parts);
  out.closed_form = std::ldexp(1.0, -k - 1) / (1.0 - std::ldexp(1.0, 1 - N));
  out.holds = out.integral <= out.geometric_sum && out.geometric_sum <= out.closed_form &&
              out.closed_form <= 1.0;
  return out;
}

double transform_lq_norm(const DiscreteMeasure& mu, const InputSignal& g, double q) {
  const auto& atoms = mu.atoms();
  std::vector<double> parts(atoms.size(), 0.0);
  parallel_for(atoms.size(), [&](std::size_t i) {
    parts[i] = atoms[i].weight * std::pow(std::abs(g.laplace(atoms[i].point.as_complex())), q);
  });
  return std::pow(pairwise_sum(parts), 1.0 / q);
}

std::vector<InputSignal> candidate_signals(const std::vector<Atom>& points, const Space& space,
                                           int budget, std::uint64_t seed) {
  std::vector<InputSignal> out;
  std::vector<Atom> positive;
  for (const auto& a : points) {
    if (a.point.re > 0.0 && a.weight > 0.0) positive.push_back(a);
  }
  const DiscreteMeasure mu(positive);

  std::map<int, double> centres;
  for (const auto& a : mu.atoms()) centres[strip_index(a.point.re)] = 0.0;
  int nmin = 0;
  int nmax = 0;
  if (!centres.empty()) {
    nmin = centres.begin()->first;
    nmax = centres.rbegin()->first;
  }
  for (auto& [n, c] : centres) {
    c = max_window_mass(strip_restrict(mu, n), std::ldexp(1.0, n + 1)).interval.center;
    out.push_back(test_family_fn(n, {c, std::ldexp(1.0, n + 1)}));
  }
  const auto centre_of = [&](int j) {
    const auto it = centres.find(j);
    return it == centres.end() ? 0.0 : it->second;
  };

  const int N = minimal_linf_spacing();
  for (int k = 0; k < N; ++k) {
    const int m_lo = static_cast<int>(std::ceil(static_cast<double>(nmin - 1 - k) / N));
    const int m_hi = static_cast<int>(std::floor(static_cast<double>(nmax + 1 - k) / N));
    if (m_lo > m_hi) continue;
    out.push_back(test_family_gk({FamilyKind::linf, N, 1.0, m_lo, m_hi}, k, centre_of));
  }
  if (space.kind != Space::Kind::linf && nmax >= 0) {
    for (int Ne : {2, 3}) {
      for (int k = 0; k < Ne; ++k) {
        const int m_hi = std::max(1, (nmax + 1 - k) / Ne);
        out.push_back(test_family_gk({FamilyKind::exp, Ne, 1.0, 0, m_hi}, k, centre_of));
      }
    }
  }

  // Modulated indicators at the dyadic time scales seen by the atoms.
  const int jlo = -nmax - 2;
  const int jhi = -nmin + 2;
  std::vector<Atom> by_weight = points;
  std::stable_sort(by_weight.begin(), by_weight.end(),
                   [](const Atom& a, const Atom& b) { return a.weight > b.weight; });
  std::vector<double> freqs{0.0};
  for (const auto& a : by_weight) {
    if (freqs.size() >= 17) break;
    if (std::find(freqs.begin(), freqs.end(), a.point.im) == freqs.end()) {
      freqs.push_back(a.point.im);
    }
  }
  for (int j = jlo; j <= jhi; ++j) {
    for (double y : freqs) out.push_back(InputSignal::modulated_indicator(0.0, std::ldexp(1.0, j), y));
  }

  SeededRng rng(seed);
  for (int i = 0; i < budget; ++i) {
    const double T = std::ldexp(1.0, rng.uniform_int(jlo, jhi));
    const int cells = 1 << rng.uniform_int(0, 6);
    const bool unimodular = rng.uniform_int(0, 1) == 1;
    std::vector<Complex> samples(static_cast<std::size_t>(cells));
    for (auto& s : samples) {
      if (unimodular) {
        s = std::polar(1.0, kTwoPi * rng.uniform());
      } else {
        s = rng.uniform_int(0, 1) == 1 ? 1.0 : -1.0;
      }
    }
    out.push_back(InputSignal::grid(0.0, T, std::move(samples)));
  }
  return out;
}

LowerBound embedding_lower_bound(const DiscreteMeasure& mu, double q, const Space& space,
                                 int budget, std::uint64_t seed) {
  if (!(q >= 1.0)) throw DomainError("q must be at least 1");
  LowerBound lb;
  if (mu.empty()) return lb;
  const std::vector<InputSignal> cands = candidate_signals(mu.atoms(), space, budget, seed);
  std::vector<double> ratio(cands.size(), 0.0);
  parallel_for(cands.size(), [&](std::size_t i) {
    const double norm = space_norm(cands[i], space);
    if (norm > 0.0) ratio[i] = transform_lq_norm(mu, cands[i], q) / norm;
  });
  lb.candidates = cands.size();
  for (std::size_t i = 0; i < ratio.size(); ++i) {
    if (ratio[i] > lb.value) {
      lb.value = ratio[i];
      lb.best_index = i;
    }
  }
  return lb;
}

ResolvedConstants resolve_constants(const EmbeddingConstants& c, double q) {
  ResolvedConstants r;
  r.kappa_carleson = c.kappa_carleson.value_or(std::pow(1.0 + 2.0 / M_PI, q) * q *
                                                std::pow(2.0, q + 1.0) / (q - 1.0));
  r.kappa_holder = c.kappa_holder;
  r.hausdorff_young = c.hausdorff_young.value_or(std::pow(kTwoPi, 1.0 / q));
  r.lemma_factor = std::pow(2.0, q + 1.0);
  return r;
}

UpperBound embedding_upper_bound(const DiscreteMeasure& mu, double q, const Space& space,
                                 const EmbeddingConstants& constants) {
  if (!(q >= 2.0) || !std::isfinite(q)) throw DomainError("upper bound needs 2 <= q < inf");
  const double qp = q / (q - 1.0);
  UpperBound ub;
  ub.constants = resolve_constants(constants, q);

  // norm_of(n) = 2^n ||exp^{-q' 2^{n-1}}|| in the space paired with Phi~.
  std::function<double(int)> norm_of;
  bool uses_holder = false;
  std::optional<YoungFunction> phic;
  switch (space.kind) {
    case Space::Kind::linf:
      norm_of = [qp](int) { return 2.0 / qp; };
      break;
    case Space::Kind::l1:
      throw DomainError("space L1 is not of the form Phi(t) = Phi~(t^q')");
    case Space::Kind::lp:
      if (space.p < qp) {
        throw DomainError("space Lp needs p >= q' = " + std::to_string(qp));
      }
      if (space.p == qp) {
        // Phi~ = identity, so Phi~^c is the L^inf gauge and the norm is 1.
        norm_of = [](int n) { return std::ldexp(1.0, n); };
        break;
      }
      phic = complementary(YoungFunction::power(space.p / qp));
      uses_holder = true;
      break;
    case Space::Kind::orlicz: {
      const auto inner = decompose_power_inner(*space.phi, qp);
      if (!inner) throw DomainError("Young function is not of the form Phi(t) = Phi~(t^q')");
      phic = complementary(*inner);
      uses_holder = true;
      break;
    }
  }
  if (phic) {
    norm_of = [&, qp](int n) {
      return std::ldexp(exp_function_norm(*phic, qp * std::ldexp(1.0, n - 1)), n);
    };
  }

  const IntensityTable table = intensity_table(mu, q);
  std::vector<int> keys;
  for (const auto& [n, c] : table.per_strip) keys.push_back(n);
  ub.terms.resize(keys.size());
  parallel_for(keys.size(), [&](std::size_t i) {
    const int n = keys[i];
    UpperTerm t{n, table.per_strip.at(n), norm_of(n), 0.0};
    t.contribution = std::pow(t.norm_term, q - 1.0) * t.intensity;
    ub.terms[i] = t;
  });
  std::vector<double> parts;
  for (const auto& t : ub.terms) parts.push_back(t.contribution);
  double factor = ub.constants.kappa_carleson * std::pow(ub.constants.hausdorff_young, q) *
                  ub.constants.lemma_factor;
  if (uses_holder) factor *= std::pow(ub.constants.kappa_holder, q - 1.0);
  ub.value_q = factor * pairwise_sum(parts);
  ub.value = std::pow(ub.value_q, 1.0 / q);
  return ub;
}

EmbeddingEstimate strip_embedding_check(const DiscreteMeasure& mu, double p, double q,
                                        std::optional<std::pair<double, double>> strip) {
  if (!(p >= 1.0)) throw DomainError("p must be >= 1");
  const double pp = p == kInf ? 1.0 : (p == 1.0 ? kInf : p / (p - 1.0));
  if (!(q >= 2.0) || !std::isfinite(q)) throw DomainError("strip check needs 2 <= q < inf");
  if (!(pp >= 1.0 && pp <= q)) throw DomainError("strip check needs 1 <= p' <= q");
  EmbeddingEstimate est;
  est.q = q;
  est.space = p == kInf ? "Linfty" : "Lp";
  double a1 = kInf;
  double a2 = 0.0;
  for (const auto& a : mu.atoms()) {
    a1 = std::min(a1, a.point.re);
    a2 = std::max(a2, a.point.re);
  }
  if (strip) {
    if (!(strip->first > 0.0) || !(strip->second >= strip->first)) {
      throw DomainError("strip bounds need 0 < alpha1 <= alpha2");
    }
    for (const auto& a : mu.atoms()) {
      if (a.point.re < strip->first || a.point.re > strip->second) {
        throw DomainError("atom at re = " + std::to_string(a.point.re) + ", im = " +
                          std::to_string(a.point.im) + " lies outside the strip");
      }
    }
    a1 = strip->first;
    a2 = strip->second;
  }
  est.functional_value = alpha_intensity(mu, q / pp);
  est.decided_bounded = std::isfinite(est.functional_value);
  est.metadata["exponent"] = q / pp;
  if (!mu.empty()) {
    est.metadata["alpha1"] = a1;
    est.metadata["alpha2"] = a2;
    est.metadata["alpha_ratio"] = a2 / a1;
    est.lower_bound = embedding_lower_bound(mu, q, Space::lp(p), 0, 0).value;
  } else {
    est.lower_bound = 0.0;
  }
  est.notes.push_back("bound depends only on the intensity and alpha2/alpha1");
  return est;
}

int finite_time_index(double tau0) {
  if (!(tau0 > 0.0) || !std::isfinite(tau0)) throw DomainError("tau0 must be positive and finite");
  int e = 0;
  std::frexp(tau0, &e);
  return e - 1;
}

EmbeddingEstimate finite_time_check(const DiscreteMeasure& mu, double q, double tau0) {
  if (!(q >= 2.0)) throw DomainError("finite-time check needs q >= 2");
  const int M = finite_time_index(tau0);
  EmbeddingEstimate est;
  est.q = q;
  est.space = "Linfty";
  est.summability = summability_functional(mu, q, SummabilityWeights::unit(), M);
  est.functional_value = est.summability.value;
  est.decided_bounded = std::isfinite(est.functional_value);
  est.metadata["M"] = M;
  est.metadata["tau0"] = tau0;
  est.metadata["head_intensity"] = est.summability.head_intensity;
  est.notes.push_back("boundedness on (0, tau) for one tau > 0 gives it for every tau > 0");
  return est;
}

EmbeddingEstimate exp_orlicz_embedding_check(const DiscreteMeasure& mu, double alpha) {
  if (!(alpha >= 1.0)) throw DomainError("exp-Orlicz check needs alpha >= 1");
  const SummabilityWeights w =
      alpha == 1.0 ? SummabilityWeights::n_squared() : SummabilityWeights::n_pow(2.0 / alpha);
  EmbeddingEstimate est;
  est.q = 2.0;
  est.space = "LPhi";
  est.summability = summability_functional(mu, 2.0, w);
  est.functional_value = est.summability.value;
  est.decided_bounded = std::isfinite(est.functional_value);
  est.metadata["alpha"] = alpha;
  est.metadata["window_term"] = est.summability.window_term;
  return est;
}

PsiCheck psi_integral_limit_check(double B, int n) {
  if (n < 4) throw DomainError("psi integral check needs n >= 4");
  if (!(B > 0.0)) throw DomainError("psi integral check needs B > 0");
  const double two_n = std::ldexp(1.0, n);
  const double bn2 = B * n * n;
  if (!(two_n * std::exp(-two_n) / bn2 < 0.5)) {
    throw DomainError("B too small: 2^n e^{-2^n} / (B n^2) must be < 1/2");
  }
  const double upper = two_n / bn2;
  if (!(upper > 0.5)) throw DomainError("B too large: 2^n / (B n^2) must exceed 1/2");
  const auto integrand = [&](double s) {
    const double l = std::log(2.0 * s);
    return l * l / two_n * std::log(2.0 * two_n / (bn2 * s));
  };
  PsiCheck out;
  out.value = 4.0 * quad::integrate(integrand, 0.5, upper);
  out.limit = 4.0 * std::log(2.0) * std::log(2.0) / B;
  return out;
}

std::vector<std::pair<double, double>> zero_class_curve(const DiscreteMeasure& mu, double q,
                                                        const YoungFunction& phi,
                                                        const std::vector<double>& taus,
                                                        double tau0,
                                                        const EmbeddingConstants& constants) {
  for (double tau : taus) {
    if (!(tau > 0.0) || !(tau <= tau0)) throw DomainError("zero-class bound needs 0 < tau <= tau0");
  }
  const double op = embedding_upper_bound(mu, q, Space::orlicz(phi), constants).value;
  std::vector<std::pair<double, double>> out(taus.size());
  parallel_for(taus.size(), [&](std::size_t i) {
    const double tau = taus[i];
    out[i] = {tau, op * luxemburg_norm(InputSignal::modulated_indicator(0.0, tau), phi)};
  });
  return out;
}

double zero_class_bound(const DiscreteMeasure& mu, double q, const YoungFunction& phi, double tau,
                        double tau0, const EmbeddingConstants& constants) {
  return zero_class_curve(mu, q, phi, {tau}, tau0, constants).front().second;
}

}  // namespace carleson
