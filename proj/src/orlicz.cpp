#include "carleson/orlicz.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "carleson/error.hpp"

namespace carleson {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// Smallest k with value(k) <= 1 for a nonincreasing value(k). `start` seeds
// the bracket search.
double solve_gauge(const std::function<double(double)>& value, double start,
                   const char* what) {
  double hi = start > 0.0 && std::isfinite(start) ? start : 1.0;
  int guard = 0;
  while (!(value(hi) <= 1.0)) {
    hi *= 2.0;
    if (++guard > 2000 || !std::isfinite(hi)) {
      throw UnboundedNormError(std::string(what) + ": modular stays above 1 for every k");
    }
  }
  double lo = 0.5 * hi;
  guard = 0;
  while (value(lo) <= 1.0) {
    hi = lo;
    lo *= 0.5;
    if (++guard > 2000 || lo == 0.0) return hi;
  }
  return bisect_threshold([&](double k) { return value(k) <= 1.0; }, lo, hi, 1e-14);
}

}  // namespace

double orlicz_modular(const InputSignal& f, const YoungFunction& phi, double k) {
  if (!(k > 0.0)) throw DomainError("Luxemburg scale must be positive");
  return f.integrate_modulus([&](double m) { return phi(m / k); });
}

double luxemburg_norm(const InputSignal& f, const YoungFunction& phi) {
  if (f.is_zero()) return 0.0;
  return solve_gauge([&](double k) { return orlicz_modular(f, phi, k); }, f.sup_norm(),
                     "Luxemburg norm");
}

Space Space::lp(double p) {
  if (!(p >= 1.0)) throw DomainError("Lp space needs p >= 1");
  if (p == kInf) return linf();
  if (p == 1.0) return l1();
  return {Kind::lp, p, {}};
}

std::string Space::name() const {
  switch (kind) {
    case Kind::linf: return "Linfty";
    case Kind::l1: return "L1";
    case Kind::lp: return "Lp";
    case Kind::orlicz: return "LPhi";
  }
  return "unknown";
}

double space_norm(const InputSignal& f, const Space& space) {
  switch (space.kind) {
    case Space::Kind::linf: return f.sup_norm();
    case Space::Kind::l1: return f.l1_norm();
    case Space::Kind::lp: return f.lp_norm(space.p);
    case Space::Kind::orlicz: return luxemburg_norm(f, *space.phi);
  }
  return 0.0;
}

double exp_orlicz_integral(const YoungFunction& phi, double alpha, double C) {
  if (!(alpha > 0.0) || !(C > 0.0)) throw DomainError("alpha and C must be positive");
  std::vector<double> breaks;
  for (double b : phi.derivative_breaks()) breaks.push_back(b * C);
  const double inner = quad::integrate_log_weight(
      [&](double s) { return phi.derivative(s / C); }, breaks);
  return inner / (alpha * C);
}

double exp_orlicz_integral_direct(const YoungFunction& phi, double alpha, double C) {
  if (!(alpha > 0.0) || !(C > 0.0)) throw DomainError("alpha and C must be positive");
  std::vector<double> breaks;
  for (double b : phi.derivative_breaks()) {
    if (b > 0.0) {
      const double t = -std::log(b * C) / alpha;
      if (t > 0.0) breaks.push_back(t);
    }
  }
  return quad::integrate([&](double t) { return phi(std::exp(-alpha * t) / C); }, 0.0,
                         kInf, breaks);
}

double exp_function_norm(const YoungFunction& phic, double rate) {
  if (!(rate > 0.0)) throw DomainError("rate must be positive");
  return solve_gauge([&](double k) { return exp_orlicz_integral(phic, rate, k); },
                     1.0 / rate, "exponential norm");
}

double exp_function_norm_l1(double rate) {
  if (!(rate > 0.0)) throw DomainError("rate must be positive");
  return 1.0 / rate;
}

WitnessYoung construct_witness_young(const std::map<int, double>& gammas, double q,
                                     std::optional<std::pair<int, int>> window) {
  if (!(q >= 2.0) || !std::isfinite(q)) throw DomainError("witness construction needs q >= 2");
  if (gammas.empty()) throw DomainError("witness construction needs at least one gamma_n");
  for (const auto& [n, g] : gammas) {
    if (!(g >= 1.0) || !std::isfinite(g)) {
      throw DomainError("gamma_" + std::to_string(n) + " must be finite and >= 1");
    }
  }
  if (window) {
    const auto [lo, hi] = *window;
    // Outside the window gamma has to grow with |n| on each side.
    double prev = 0.0;
    for (auto it = gammas.upper_bound(hi); it != gammas.end(); ++it) {
      if (it->second < prev) {
        throw DomainError("gamma tail is not divergent at n = " + std::to_string(it->first));
      }
      prev = it->second;
    }
    prev = 0.0;
    for (auto it = std::make_reverse_iterator(gammas.lower_bound(lo)); it != gammas.rend();
         ++it) {
      if (it->second < prev) {
        throw DomainError("gamma tail is not divergent at n = " + std::to_string(it->first));
      }
      prev = it->second;
    }
  }

  const double qp = q / (q - 1.0);
  std::vector<int> ns;
  std::vector<double> caps;
  for (const auto& [n, g] : gammas) {
    ns.push_back(n);
    caps.push_back(0.5 * qp * g);
  }
  // phi^c is increasing, so the value at 2^n is capped by every later cap.
  for (std::size_t i = caps.size() - 1; i-- > 0;) caps[i] = std::min(caps[i], caps[i + 1]);

  std::vector<Knot> knots{{0.0, 0.0}};
  for (std::size_t i = 0; i < ns.size(); ++i) {
    const double r = 1.0 - 0.5 / static_cast<double>(i + 1);
    knots.push_back({std::ldexp(1.0, ns[i]), caps[i] * r});
  }

  WitnessYoung w{q, YoungFunction::tabulated(knots), YoungFunction::exp(),
                 YoungFunction::exp(), {}, true};
  w.phi_tilde = complementary(w.phi_tilde_c);
  w.phi = YoungFunction::composed(w.phi_tilde, qp);
  for (const auto& [n, g] : gammas) {
    const double lhs = std::ldexp(exp_function_norm(w.phi_tilde_c, qp * std::ldexp(1.0, n - 1)), n);
    const bool ok = lhs <= g;
    w.checks.push_back({n, g, lhs, ok});
    w.verified = w.verified && ok;
  }
  return w;
}

HolderCheck holder_orlicz(const InputSignal& f, const InputSignal& g, const YoungFunction& phi,
                          double kappa_holder) {
  HolderCheck h;
  h.product_norm = product_l1_norm(f, g);
  if (f.is_zero() || g.is_zero()) {
    h.bound = 0.0;
  } else {
    h.bound = kappa_holder * luxemburg_norm(f, phi) * luxemburg_norm(g, complementary(phi));
  }
  // Equality is attained for indicators with kappa_H = 2; allow rounding.
  h.holds = h.product_norm <= h.bound * (1.0 + 1e-12);
  return h;
}

}  // namespace carleson
