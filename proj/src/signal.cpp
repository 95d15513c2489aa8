#include "carleson/signal.hpp"

#include <algorithm>
#include <cmath>

#include "carleson/error.hpp"

namespace carleson {

namespace {

constexpr double kInf = std::numeric_limits<double>::infinity();

void check_term(const SignalTerm& t) {
  if (!(t.a >= 0.0) || !std::isfinite(t.a) || !(t.b > t.a) || std::isnan(t.b)) {
    throw DomainError("signal term needs 0 <= a < b");
  }
  if (t.b == kInf && !(t.decay.real() > 0.0)) {
    throw DomainError("signal term with unbounded support needs Re(decay) > 0");
  }
  if (!std::isfinite(t.coef.real()) || !std::isfinite(t.coef.imag()) ||
      !std::isfinite(t.decay.real()) || !std::isfinite(t.decay.imag())) {
    throw DomainError("signal term coefficients must be finite");
  }
}

Complex term_laplace(const SignalTerm& t, Complex z) {
  const Complex w = z + t.decay;
  if (t.b == kInf) {
    if (!(w.real() > 0.0)) {
      throw DomainError("Laplace integral diverges: Re(z + decay) <= 0 on unbounded support");
    }
    return t.coef * std::exp(-w * t.a) / w;
  }
  return t.coef * exp_integral(-w, t.a, t.b);
}

}  // namespace

InputSignal InputSignal::modulated_indicator(double a, double b, double c) {
  return weighted_sum({SignalTerm{1.0, a, b, Complex(0.0, -c)}});
}

InputSignal InputSignal::weighted_sum(std::vector<SignalTerm> terms) {
  for (const auto& t : terms) check_term(t);
  InputSignal s;
  for (auto& t : terms) {
    if (t.coef != Complex(0.0, 0.0)) s.terms_.push_back(t);
  }
  return s;
}

InputSignal InputSignal::exponential(Complex decay, Complex coef) {
  return weighted_sum({SignalTerm{coef, 0.0, kInf, decay}});
}

InputSignal InputSignal::kernel(Complex lambda) {
  if (!(lambda.real() > 0.0)) throw DomainError("kernel needs Re lambda > 0");
  return exponential(std::conj(lambda), 1.0 / (2.0 * M_PI));
}

InputSignal InputSignal::grid(double start, double end, std::vector<Complex> samples) {
  if (!(start >= 0.0) || !(end > start) || !std::isfinite(end)) {
    throw DomainError("grid signal needs 0 <= start < end < inf");
  }
  if (samples.empty()) throw DomainError("grid signal needs at least one sample");
  for (const auto& s : samples) {
    if (!std::isfinite(s.real()) || !std::isfinite(s.imag())) {
      throw DomainError("grid samples must be finite");
    }
  }
  InputSignal s;
  s.grid_ = true;
  s.start_ = start;
  s.end_ = end;
  s.samples_ = std::move(samples);
  return s;
}

bool InputSignal::is_zero() const {
  if (grid_) {
    return std::all_of(samples_.begin(), samples_.end(),
                       [](Complex v) { return v == Complex(0.0, 0.0); });
  }
  return terms_.empty();
}

std::vector<SignalTerm> InputSignal::as_terms() const {
  if (!grid_) return terms_;
  std::vector<SignalTerm> out;
  const double h = (end_ - start_) / static_cast<double>(samples_.size());
  for (std::size_t i = 0; i < samples_.size(); ++i) {
    if (samples_[i] == Complex(0.0, 0.0)) continue;
    const double lo = start_ + h * static_cast<double>(i);
    const double hi = i + 1 == samples_.size() ? end_ : start_ + h * static_cast<double>(i + 1);
    out.push_back({samples_[i], lo, hi, 0.0});
  }
  return out;
}

Complex InputSignal::operator()(double t) const {
  if (grid_) {
    if (!(t > start_) || t > end_) return 0.0;
    const double h = (end_ - start_) / static_cast<double>(samples_.size());
    auto i = static_cast<std::size_t>(std::ceil((t - start_) / h)) - 1;
    i = std::min(i, samples_.size() - 1);
    return samples_[i];
  }
  Complex v = 0.0;
  for (const auto& term : terms_) {
    if (t > term.a && t <= term.b) v += term.coef * std::exp(-term.decay * t);
  }
  return v;
}

double InputSignal::support_end() const {
  if (grid_) return end_;
  double e = 0.0;
  for (const auto& t : terms_) e = std::max(e, t.b);
  return e;
}

Complex InputSignal::laplace(Complex z) const {
  const std::vector<SignalTerm> ts = as_terms();
  std::vector<double> re;
  std::vector<double> im;
  re.reserve(ts.size());
  im.reserve(ts.size());
  for (const auto& t : ts) {
    const Complex v = term_laplace(t, z);
    re.push_back(v.real());
    im.push_back(v.imag());
  }
  return {pairwise_sum(re), pairwise_sum(im)};
}

InputSignal InputSignal::clip(double horizon) const {
  if (!(horizon > 0.0)) throw DomainError("clip horizon must be positive");
  if (support_end() <= horizon) return *this;
  if (grid_) {
    const double h = (end_ - start_) / static_cast<double>(samples_.size());
    const double cells = (horizon - start_) / h;
    if (cells <= 0.0) return {};
    if (cells == std::floor(cells)) {
      const auto n = static_cast<std::size_t>(cells);
      return grid(start_, horizon, {samples_.begin(), samples_.begin() + n});
    }
  }
  std::vector<SignalTerm> kept;
  for (auto t : as_terms()) {
    if (t.a >= horizon) continue;
    t.b = std::min(t.b, horizon);
    kept.push_back(t);
  }
  return weighted_sum(std::move(kept));
}

InputSignal InputSignal::reflect(double t0) const {
  const InputSignal c = clip(t0);
  if (c.grid_) {
    std::vector<Complex> rev(c.samples_.rbegin(), c.samples_.rend());
    return grid(t0 - c.end_, t0 - c.start_, std::move(rev));
  }
  std::vector<SignalTerm> out;
  for (const auto& t : c.terms_) {
    // coef e^{-d (t0 - s)} = coef e^{-d t0} e^{d s}
    out.push_back({t.coef * std::exp(-t.decay * t0), t0 - t.b, t0 - t.a, -t.decay});
  }
  return weighted_sum(std::move(out));
}

InputSignal InputSignal::scaled(Complex factor) const {
  InputSignal s = *this;
  for (auto& t : s.terms_) t.coef *= factor;
  for (auto& v : s.samples_) v *= factor;
  if (factor == Complex(0.0, 0.0)) return {};
  return s;
}

double InputSignal::integrate_modulus(const std::function<double(double)>& g) const {
  std::vector<double> parts;
  if (grid_) {
    const double h = (end_ - start_) / static_cast<double>(samples_.size());
    parts.reserve(samples_.size());
    for (const auto& v : samples_) {
      const double m = std::abs(v);
      if (m > 0.0) parts.push_back(g(m) * h);
    }
    return pairwise_sum(parts);
  }
  std::vector<double> cuts;
  for (const auto& t : terms_) {
    cuts.push_back(t.a);
    cuts.push_back(t.b);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    std::vector<const SignalTerm*> active;
    for (const auto& t : terms_) {
      if (t.a <= lo && t.b >= hi) active.push_back(&t);
    }
    if (active.empty()) continue;
    bool constant = true;
    for (const auto* t : active) {
      if (t->decay.real() != 0.0 || t->decay.imag() != active.front()->decay.imag()) {
        constant = false;
      }
    }
    if (constant) {
      Complex sum = 0.0;
      for (const auto* t : active) sum += t->coef;
      const double m = std::abs(sum);
      if (m > 0.0) parts.push_back(g(m) * (hi - lo));
      continue;
    }
    const auto integrand = [&](double t) {
      Complex v = 0.0;
      for (const auto* term : active) v += term->coef * std::exp(-term->decay * t);
      const double m = std::abs(v);
      return m > 0.0 ? g(m) : 0.0;
    };
    parts.push_back(quad::integrate(integrand, lo, hi));
  }
  return pairwise_sum(parts);
}

double InputSignal::sup_norm() const {
  double best = 0.0;
  if (grid_) {
    for (const auto& v : samples_) best = std::max(best, std::abs(v));
    return best;
  }
  std::vector<double> cuts;
  for (const auto& t : terms_) {
    cuts.push_back(t.a);
    cuts.push_back(t.b);
  }
  std::sort(cuts.begin(), cuts.end());
  cuts.erase(std::unique(cuts.begin(), cuts.end()), cuts.end());
  for (std::size_t i = 0; i + 1 < cuts.size(); ++i) {
    const double lo = cuts[i];
    const double hi = cuts[i + 1];
    std::vector<const SignalTerm*> active;
    for (const auto& t : terms_) {
      if (t.a <= lo && t.b >= hi) active.push_back(&t);
    }
    if (active.empty()) continue;
    const auto modulus = [&](double t) {
      Complex v = 0.0;
      for (const auto* term : active) v += term->coef * std::exp(-term->decay * t);
      return std::abs(v);
    };
    if (active.size() == 1) {
      // |coef| e^{-Re(d) t} is monotone; the sup sits at an end of the piece.
      const auto* t = active.front();
      const double r = t->decay.real();
      const double at = r >= 0.0 ? lo : hi;
      best = std::max(best, std::abs(t->coef) * std::exp(-r * at));
      continue;
    }
    // Several distinct exponentials: dense sampling.
    const double top = hi == kInf ? lo + 50.0 / std::max(1e-300, active.front()->decay.real()) : hi;
    const int n = 1024;
    for (int k = 0; k <= n; ++k) {
      const double t = lo + (top - lo) * k / n;
      best = std::max(best, modulus(t == lo ? std::nextafter(lo, kInf) : t));
    }
  }
  return best;
}

double InputSignal::l1_norm() const {
  return integrate_modulus([](double m) { return m; });
}

double InputSignal::lp_norm(double p) const {
  if (!(p >= 1.0)) throw DomainError("Lp norm needs p >= 1");
  if (p == kInf) return sup_norm();
  return std::pow(integrate_modulus([p](double m) { return std::pow(m, p); }), 1.0 / p);
}

double product_l1_norm(const InputSignal& f, const InputSignal& g) {
  if (f.is_zero() || g.is_zero()) return 0.0;
  if (f.is_grid() && g.is_grid() && f.grid_start() == g.grid_start() &&
      f.grid_end() == g.grid_end() && f.samples().size() == g.samples().size()) {
    std::vector<Complex> prod(f.samples().size());
    for (std::size_t i = 0; i < prod.size(); ++i) prod[i] = f.samples()[i] * g.samples()[i];
    return InputSignal::grid(f.grid_start(), f.grid_end(), std::move(prod)).l1_norm();
  }
  std::vector<SignalTerm> prod;
  for (const auto& s : f.as_terms()) {
    for (const auto& t : g.as_terms()) {
      const double a = std::max(s.a, t.a);
      const double b = std::min(s.b, t.b);
      if (a < b) prod.push_back({s.coef * t.coef, a, b, s.decay + t.decay});
    }
  }
  return InputSignal::weighted_sum(std::move(prod)).l1_norm();
}

}  // namespace carleson
