#include "carleson/numerics.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include <boost/math/quadrature/gauss_kronrod.hpp>

namespace carleson {

namespace quad {

using GK = boost::math::quadrature::gauss_kronrod<double, 31>;

double integrate(const std::function<double(double)>& f, double a, double b,
                 const Options& opts) {
  if (a == b) return 0.0;
  double err = 0.0;
  return GK::integrate(f, a, b, opts.max_depth, opts.tolerance, &err);
}

Complex integrate_complex(const std::function<Complex(double)>& f, double a, double b,
                  const Options& opts) {
  if (a == b) return {0.0, 0.0};
  // Real and imaginary parts separately: the error control of the adaptive
  // driver is then per component.
  const double re = integrate([&](double t) { return f(t).real(); }, a, b, opts);
  const double im = integrate([&](double t) { return f(t).imag(); }, a, b, opts);
  return {re, im};
}

double integrate(const std::function<double(double)>& f, double a, double b,
                 std::span<const double> breaks, const Options& opts) {
  std::vector<double> pts{a};
  for (double x : breaks) {
    if (x > a && x < b) pts.push_back(x);
  }
  std::sort(pts.begin() + 1, pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  pts.push_back(b);
  std::vector<double> parts;
  parts.reserve(pts.size() - 1);
  for (std::size_t i = 0; i + 1 < pts.size(); ++i) {
    parts.push_back(integrate(f, pts[i], pts[i + 1], opts));
  }
  return pairwise_sum(parts);
}

double integrate_log_weight(const std::function<double(double)>& g,
                            std::span<const double> breaks,
                            const Options& opts) {
  std::vector<double> ubreaks;
  for (double s : breaks) {
    if (s > 0.0 && s < 1.0) ubreaks.push_back(-std::log(s));
  }
  const auto integrand = [&](double u) {
    if (u > 745.0) return 0.0;
    const double e = std::exp(-u);
    return g(e) * u * e;
  };
  return integrate(integrand, 0.0, std::numeric_limits<double>::infinity(),
                   ubreaks, opts);
}

}  // namespace quad

double bisect_threshold(const std::function<bool(double)>& pred, double lo,
                        double hi, double rel_tol) {
  for (int iter = 0; iter < 2000; ++iter) {
    if (hi - lo <= rel_tol * std::abs(hi)) break;
    const double mid = lo + 0.5 * (hi - lo);
    if (mid <= lo || mid >= hi) break;
    if (pred(mid)) {
      hi = mid;
    } else {
      lo = mid;
    }
  }
  return hi;
}

double pairwise_sum(std::span<const double> values) {
  if (values.size() <= 8) {
    double s = 0.0;
    for (double v : values) s += v;
    return s;
  }
  const std::size_t half = values.size() / 2;
  return pairwise_sum(values.first(half)) + pairwise_sum(values.subspan(half));
}

Complex expm1_over(Complex z) {
  if (std::abs(z) < 1e-4) {
    return 1.0 + z / 2.0 + z * z / 6.0 + z * z * z / 24.0;
  }
  // expm1(x + iy) = expm1(x) cos y - 2 sin^2(y/2) + i e^x sin y
  const double x = z.real();
  const double y = z.imag();
  const double s = std::sin(0.5 * y);
  const Complex num{std::expm1(x) * std::cos(y) - 2.0 * s * s,
                    std::exp(x) * std::sin(y)};
  return num / z;
}

Complex exp_integral(Complex w, double a, double b) {
  const double len = b - a;
  return std::exp(w * a) * len * expm1_over(w * len);
}

}  // namespace carleson
