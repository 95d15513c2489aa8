#include "carleson/young.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "carleson/error.hpp"
#include "carleson/numerics.hpp"

namespace carleson {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

// e^t - t - 1 without cancellation for small t.
double phi_exp(double t) {
  if (t < 1e-2) {
    double term = t * t / 2.0;
    double sum = term;
    for (int k = 3; k < 12; ++k) {
      term *= t / k;
      sum += term;
    }
    return sum;
  }
  return std::expm1(t) - t;
}

}  // namespace

std::string to_string(YoungKind kind) {
  switch (kind) {
    case YoungKind::power: return "power";
    case YoungKind::exp: return "exp";
    case YoungKind::exp_alpha: return "exp_alpha";
    case YoungKind::tabulated: return "tabulated";
    case YoungKind::composed_qprime: return "composed_qprime";
    case YoungKind::complementary: return "complementary";
  }
  return "unknown";
}

YoungFunction YoungFunction::power(double p, double coeff) {
  if (!(p > 1.0) || !std::isfinite(p)) {
    throw DomainError("power Young function needs 1 < p < inf");
  }
  if (!(coeff > 0.0) || !std::isfinite(coeff)) {
    throw DomainError("power Young function needs a positive coefficient");
  }
  return YoungFunction(Power{p, coeff});
}

YoungFunction YoungFunction::exp() { return YoungFunction(Exp{}); }

YoungFunction YoungFunction::exp_alpha(double alpha) {
  if (!(alpha >= 0.5) || !std::isfinite(alpha)) {
    throw DomainError("exp_alpha needs alpha >= 1/2 for convexity");
  }
  return YoungFunction(ExpAlpha{alpha});
}

YoungFunction YoungFunction::tabulated(std::vector<Knot> knots) {
  if (knots.size() < 2) throw DomainError("tabulated Young function needs two knots");
  if (knots.front().t != 0.0 || knots.front().slope != 0.0) {
    throw DomainError("tabulated Young function must start at (0, 0)");
  }
  Tabulated tab;
  tab.cumulative.push_back(0.0);
  for (std::size_t i = 1; i < knots.size(); ++i) {
    const Knot& a = knots[i - 1];
    const Knot& b = knots[i];
    if (!(b.t > a.t) || !(b.slope > a.slope) || !std::isfinite(b.t) ||
        !std::isfinite(b.slope)) {
      throw DomainError("tabulated knots must be finite and strictly increasing");
    }
    tab.cumulative.push_back(tab.cumulative.back() +
                             0.5 * (b.t - a.t) * (a.slope + b.slope));
  }
  tab.knots = std::move(knots);
  return YoungFunction(std::move(tab));
}

YoungFunction YoungFunction::composed(const YoungFunction& inner, double exponent) {
  if (!(exponent >= 1.0) || !std::isfinite(exponent)) {
    throw DomainError("composition exponent must be >= 1");
  }
  return YoungFunction(Composed{std::make_shared<const YoungFunction>(inner), exponent});
}

YoungKind YoungFunction::kind() const {
  return static_cast<YoungKind>(rep_.index());
}

double YoungFunction::power_exponent() const { return std::get<Power>(rep_).p; }
double YoungFunction::power_coefficient() const { return std::get<Power>(rep_).coeff; }
double YoungFunction::exp_alpha_exponent() const { return std::get<ExpAlpha>(rep_).alpha; }
const std::vector<Knot>& YoungFunction::knots() const { return std::get<Tabulated>(rep_).knots; }
const YoungFunction& YoungFunction::inner() const { return *std::get<Composed>(rep_).inner; }
double YoungFunction::composed_exponent() const { return std::get<Composed>(rep_).exponent; }
const YoungFunction& YoungFunction::primal() const { return *std::get<Conjugate>(rep_).primal; }

double YoungFunction::operator()(double t) const {
  if (!(t > 0.0)) return 0.0;
  if (t == kInf) return kInf;
  struct Visitor {
    double t;
    double operator()(const Power& r) const { return r.coeff * std::pow(t, r.p); }
    double operator()(const Exp&) const { return phi_exp(t); }
    double operator()(const ExpAlpha& r) const { return phi_exp(std::pow(t, r.alpha)); }
    double operator()(const Tabulated& r) const {
      const auto& k = r.knots;
      const auto it = std::upper_bound(k.begin(), k.end(), t,
                                       [](double v, const Knot& kn) { return v < kn.t; });
      std::size_t i = static_cast<std::size_t>(it - k.begin()) - 1;
      if (i + 1 >= k.size()) i = k.size() - 2;  // extrapolate along the last segment
      const double slope = (k[i + 1].slope - k[i].slope) / (k[i + 1].t - k[i].t);
      const double dt = t - k[i].t;
      return r.cumulative[i] + dt * (k[i].slope + 0.5 * slope * dt);
    }
    double operator()(const Composed& r) const { return (*r.inner)(std::pow(t, r.exponent)); }
    double operator()(const Conjugate& r) const {
      const double star = r.primal->derivative_inverse(t);
      if (star == kInf) return kInf;
      return std::max(0.0, t * star - (*r.primal)(star));
    }
  };
  return std::visit(Visitor{t}, rep_);
}

double YoungFunction::derivative(double t) const {
  if (t < 0.0) return 0.0;
  if (t == kInf) return kInf;
  struct Visitor {
    double t;
    double operator()(const Power& r) const {
      return t == 0.0 ? 0.0 : r.coeff * r.p * std::pow(t, r.p - 1.0);
    }
    double operator()(const Exp&) const { return std::expm1(t); }
    double operator()(const ExpAlpha& r) const {
      const double a = r.alpha;
      if (t == 0.0) return a == 0.5 ? 0.5 : 0.0;
      const double u = std::pow(t, a);
      if (u < 1e-8) return a * std::pow(t, 2.0 * a - 1.0) * (1.0 + 0.5 * u);
      return a * std::expm1(u) * std::pow(t, a - 1.0);
    }
    double operator()(const Tabulated& r) const {
      const auto& k = r.knots;
      const auto it = std::upper_bound(k.begin(), k.end(), t,
                                       [](double v, const Knot& kn) { return v < kn.t; });
      std::size_t i = static_cast<std::size_t>(it - k.begin()) - 1;
      if (i + 1 >= k.size()) i = k.size() - 2;
      const double slope = (k[i + 1].slope - k[i].slope) / (k[i + 1].t - k[i].t);
      return k[i].slope + slope * (t - k[i].t);
    }
    double operator()(const Composed& r) const {
      if (t == 0.0) return r.exponent > 1.0 ? 0.0 : r.inner->derivative(0.0);
      const double u = std::pow(t, r.exponent);
      return r.exponent * std::pow(t, r.exponent - 1.0) * r.inner->derivative(u);
    }
    double operator()(const Conjugate& r) const { return r.primal->derivative_inverse(t); }
  };
  return std::visit(Visitor{t}, rep_);
}

double YoungFunction::derivative_inverse(double s) const {
  if (!(s > 0.0)) return 0.0;
  if (s == kInf) return kInf;
  if (const auto* r = std::get_if<Power>(&rep_)) {
    return std::pow(s / (r->coeff * r->p), 1.0 / (r->p - 1.0));
  }
  if (std::holds_alternative<Exp>(rep_)) return std::log1p(s);
  if (const auto* r = std::get_if<Tabulated>(&rep_)) {
    const auto& k = r->knots;
    const auto it = std::upper_bound(k.begin(), k.end(), s,
                                     [](double v, const Knot& kn) { return v < kn.slope; });
    std::size_t i = static_cast<std::size_t>(it - k.begin()) - 1;
    if (i + 1 >= k.size()) i = k.size() - 2;
    const double inv_slope = (k[i + 1].t - k[i].t) / (k[i + 1].slope - k[i].slope);
    return k[i].t + inv_slope * (s - k[i].slope);
  }
  if (const auto* r = std::get_if<Conjugate>(&rep_)) {
    // Inverse of the inverse; phi^c vanishes wherever phi(0+) exceeds s.
    return r->primal->derivative(s);
  }
  return numeric_derivative_inverse(s);
}

double YoungFunction::numeric_derivative_inverse(double s) const {
  if (s <= derivative(0.0)) return 0.0;
  double hi = 1.0;
  int guard = 0;
  while (derivative(hi) < s) {
    hi *= 2.0;
    if (++guard > 2000 || hi == kInf) return kInf;
  }
  double lo = 0.0;
  if (guard > 0) lo = 0.5 * hi;
  return bisect_threshold([&](double x) { return derivative(x) >= s; }, lo, hi);
}

std::vector<double> YoungFunction::derivative_breaks() const {
  std::vector<double> out;
  if (const auto* r = std::get_if<Tabulated>(&rep_)) {
    for (const auto& k : r->knots) out.push_back(k.t);
  } else if (const auto* r = std::get_if<Conjugate>(&rep_)) {
    if (r->primal->kind() == YoungKind::tabulated) {
      for (const auto& k : r->primal->knots()) out.push_back(k.slope);
    }
    // phi^c is flat below phi(0+) of the primal.
    const double start = r->primal->derivative(0.0);
    if (start > 0.0) out.push_back(start);
  } else if (const auto* r = std::get_if<Composed>(&rep_)) {
    for (double b : r->inner->derivative_breaks()) {
      out.push_back(std::pow(b, 1.0 / r->exponent));
    }
  }
  return out;
}

YoungFunction complementary(const YoungFunction& phi) {
  using P = YoungFunction;
  if (const auto* r = std::get_if<P::Power>(&phi.rep_)) {
    const double pc = r->p / (r->p - 1.0);
    const double coeff = (r->p - 1.0) * r->coeff * std::pow(1.0 / (r->coeff * r->p), pc);
    return P::power(pc, coeff);
  }
  if (const auto* r = std::get_if<P::Tabulated>(&phi.rep_)) {
    std::vector<Knot> swapped;
    swapped.reserve(r->knots.size());
    for (const auto& k : r->knots) swapped.push_back({k.slope, k.t});
    return P::tabulated(std::move(swapped));
  }
  if (const auto* r = std::get_if<P::Conjugate>(&phi.rep_)) return *r->primal;
  return YoungFunction(P::Conjugate{std::make_shared<const YoungFunction>(phi)});
}

std::optional<YoungFunction> decompose_power_inner(const YoungFunction& phi, double r) {
  if (!(r >= 1.0)) return std::nullopt;
  if (r == 1.0) return phi;
  switch (phi.kind()) {
    case YoungKind::composed_qprime:
      if (std::abs(phi.composed_exponent() - r) <= 1e-14 * r) return phi.inner();
      return std::nullopt;
    case YoungKind::exp:
      if (1.0 / r >= 0.5) return YoungFunction::exp_alpha(1.0 / r);
      return std::nullopt;
    case YoungKind::exp_alpha:
      if (phi.exp_alpha_exponent() / r >= 0.5) {
        return YoungFunction::exp_alpha(phi.exp_alpha_exponent() / r);
      }
      return std::nullopt;
    case YoungKind::power:
      if (phi.power_exponent() / r > 1.0) {
        return YoungFunction::power(phi.power_exponent() / r, phi.power_coefficient());
      }
      return std::nullopt;
    default:
      return std::nullopt;
  }
}

YoungDiagnostics diagnose_young(const YoungFunction& phi, double grid_max, int samples) {
  YoungDiagnostics d;
  d.zero_at_origin = phi(0.0) == 0.0;
  d.nondecreasing = true;
  d.midpoint_convex = true;
  const double h = grid_max / samples;
  double prev = 0.0;
  for (int i = 1; i <= samples; ++i) {
    const double t = i * h;
    const double v = phi(t);
    if (v < prev) d.nondecreasing = false;
    prev = v;
    for (int j = 0; j < i; j += std::max(1, i / 16)) {
      const double s = j * h;
      const double mid = phi(0.5 * (s + t));
      const double chord = 0.5 * (phi(s) + v);
      if (mid > chord * (1.0 + 1e-12) + 1e-300) d.midpoint_convex = false;
    }
  }
  const double tiny = 1e-9;
  d.ratio_at_small = phi(tiny) / tiny;
  const double big = 1e6;
  d.ratio_at_large = big / phi(big);
  const auto breaks = phi.derivative_breaks();
  for (double t : {0.25 * grid_max / 10, grid_max / 10, 0.5 * grid_max / 10, grid_max / 5}) {
    const double integral = quad::integrate([&](double s) { return phi.derivative(s); },
                                            0.0, t, breaks);
    const double ref = phi(t);
    const double gap = std::abs(integral - ref) / std::max(ref, 1e-300);
    d.max_integral_gap = std::max(d.max_integral_gap, gap);
  }
  return d;
}

}  // namespace carleson
