#pragma once

#include <complex>
#include <cstdint>
#include <functional>
#include <random>
#include <span>
#include <vector>

namespace carleson {

using Complex = std::complex<double>;

namespace quad {

struct Options {
  double tolerance = 1e-12;  // relative to the L1 norm of the integrand
  unsigned max_depth = 15;
};

// Adaptive 31-point Gauss-Kronrod. Either limit may be infinite.
double integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opts = {});
Complex integrate_complex(const std::function<Complex(double)>& f, double a, double b,
                  const Options& opts = {});

// Splits [a, b] at the given interior points before integrating, so kinks of
// the integrand sit on panel boundaries.
double integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> breaks, const Options& opts = {});

// Integral of g(s) log(1/s) over (0, 1). Uses s = exp(-u) so the endpoint
// singularity becomes the smooth weight u e^{-u} on (0, inf). `breaks` are
// kink locations of g in s-coordinates.
double integrate_log_weight(const std::function<double(double)>& g,
                            std::span<const double> breaks = {},
                            const Options& opts = {});

}  // namespace quad

// Returns the smallest x (to relative precision rel_tol) in [lo, hi] where a
// monotone predicate switches from false to true. Requires pred(hi) true.
double bisect_threshold(const std::function<bool(double)>& pred, double lo,
                        double hi, double rel_tol = 4e-16);

// Pairwise (cascade) summation; deterministic for a fixed input order.
double pairwise_sum(std::span<const double> values);

// Reproducible uniform doubles independent of the standard library's
// distribution implementations.
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : engine_(seed) {}
  double uniform() {  // [0, 1)
    return static_cast<double>(engine_() >> 11) * 0x1.0p-53;
  }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  int uniform_int(int lo, int hi) {  // inclusive
    const auto span = static_cast<std::uint64_t>(hi - lo + 1);
    return lo + static_cast<int>(engine_() % span);
  }

 private:
  std::mt19937_64 engine_;
};

// (exp(z) - 1) / z, accurate near z = 0.
Complex expm1_over(Complex z);

// Integral of exp(w t) over (a, b) for finite a < b.
Complex exp_integral(Complex w, double a, double b);

}  // namespace carleson
