#pragma once

#include <functional>
#include <limits>
#include <vector>

#include "carleson/numerics.hpp"

namespace carleson {

// coef * chi_(a, b](t) * exp(-decay * t). b may be +inf when Re decay > 0.
struct SignalTerm {
  Complex coef{1.0, 0.0};
  double a = 0.0;
  double b = 1.0;
  Complex decay{0.0, 0.0};
};

// Scalar input on (0, inf): either a finite sum of exponentially weighted
// indicators, or a piecewise-constant grid sample on (start, end].
class InputSignal {
 public:
  InputSignal() = default;  // the zero signal

  // chi_(a, b](t) e^{ict}
  static InputSignal modulated_indicator(double a, double b, double c = 0.0);
  static InputSignal weighted_sum(std::vector<SignalTerm> terms);
  // coef * e^{-decay t} on (0, inf)
  static InputSignal exponential(Complex decay, Complex coef = 1.0);
  // Reproducing kernel k_lambda(t) = e^{-conj(lambda) t} / (2 pi).
  static InputSignal kernel(Complex lambda);
  // samples[i] on (start + i h, start + (i + 1) h], h = (end - start) / size.
  static InputSignal grid(double start, double end, std::vector<Complex> samples);

  bool is_grid() const { return grid_; }
  bool is_zero() const;
  const std::vector<SignalTerm>& terms() const { return terms_; }
  double grid_start() const { return start_; }
  double grid_end() const { return end_; }
  const std::vector<Complex>& samples() const { return samples_; }

  // Every grid cell as a term; symbolic terms unchanged.
  std::vector<SignalTerm> as_terms() const;

  Complex operator()(double t) const;
  double support_end() const;  // inf for unbounded support

  // Lf(z) = int_0^inf e^{-zt} f(t) dt. DomainError when the integral
  // diverges (unbounded support and Re(z + decay) <= 0).
  Complex laplace(Complex z) const;

  // s -> f(t0 - s) on (0, t0), with f first restricted to (0, t0].
  InputSignal reflect(double t0) const;
  // Restriction to (0, horizon].
  InputSignal clip(double horizon) const;
  InputSignal scaled(Complex factor) const;

  // int g(|f(t)|) dt over the support of f, for g with g(0) = 0. Exact on
  // pieces where |f| is constant, adaptive quadrature elsewhere.
  double integrate_modulus(const std::function<double(double)>& g) const;

  double sup_norm() const;
  double l1_norm() const;
  double lp_norm(double p) const;

 private:
  bool grid_ = false;
  std::vector<SignalTerm> terms_;
  double start_ = 0.0;
  double end_ = 0.0;
  std::vector<Complex> samples_;
};

// ||f g||_1 for two symbolic signals, or two grids on the same cells.
double product_l1_norm(const InputSignal& f, const InputSignal& g);

}  // namespace carleson
