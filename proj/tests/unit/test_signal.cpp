#include <catch_amalgamated.hpp>

#include <cmath>

#include "carleson/error.hpp"
#include "carleson/signal.hpp"

using namespace carleson;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// Composite Simpson rule on (0, T) with the signal sampled pointwise; kinks
// of the signal must sit on the mesh for full accuracy.
Complex simpson_laplace(const InputSignal& f, Complex z, double T, int panels) {
  const double h = T / panels;
  Complex sum = 0.0;
  for (int i = 0; i <= panels; ++i) {
    // Sample just inside each cell so (a, b] indicators are evaluated on the
    // correct side of a knot.
    double t = i * h;
    if (i == 0) t = 1e-15;
    const double w = (i == 0 || i == panels) ? 1.0 : (i % 2 ? 4.0 : 2.0);
    sum += w * std::exp(-z * t) * f(t);
  }
  return sum * h / 3.0;
}

}  // namespace

TEST_CASE("Laplace transform examples") {
  const auto chi = InputSignal::modulated_indicator(0.0, 1.0);
  CHECK_THAT(std::abs(chi.laplace(1.0) - (1.0 - std::exp(-1.0))), WithinAbs(0.0, 1e-15));
  const Complex lam(2.0, 3.0);
  const auto k = InputSignal::kernel(lam);
  const Complex z(0.5, -1.0);
  CHECK(std::abs(k.laplace(z) - 1.0 / (2.0 * M_PI * (z + std::conj(lam)))) < 1e-15);
  const auto m = InputSignal::modulated_indicator(0.5, 2.0, 3.0);
  CHECK(std::abs(m.laplace({0.0, 3.0}) - 1.5) < 1e-14);
}

TEST_CASE("Laplace transform against time-side Simpson quadrature") {
  SeededRng rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    std::vector<Complex> s;
    for (int i = 0; i < 8; ++i) s.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const auto g = InputSignal::grid(0.0, 2.0, s);
    const Complex z(rng.uniform(0.1, 3.0), rng.uniform(-5, 5));
    // Knots at multiples of 0.25 are mesh points of the Simpson grid; the
    // jumps then only cost O(h).
    const Complex ref = simpson_laplace(g, z, 2.0, 1 << 16);
    CHECK(std::abs(g.laplace(z) - ref) < 1e-4);
  }
  const auto e = InputSignal::exponential({1.0, 2.0}, {0.5, -0.5});
  const Complex z(0.7, 1.0);
  CHECK(std::abs(e.laplace(z) - Complex(0.5, -0.5) / (z + Complex(1.0, 2.0))) < 1e-15);
  CHECK(std::abs(e.laplace(z) - simpson_laplace(e, z, 40.0, 1 << 18)) < 1e-9);
}

TEST_CASE("divergent transforms are domain errors") {
  CHECK_THROWS_AS(InputSignal::exponential({-1.0, 0.0}), DomainError);
  const auto e = InputSignal::exponential({1.0, 0.0});
  CHECK_THROWS_AS(e.laplace(-1.5), DomainError);
  CHECK_THROWS_AS(InputSignal::modulated_indicator(0.0, INFINITY), DomainError);
}

TEST_CASE("clip and reflect") {
  const auto f = InputSignal::exponential({1.0, 0.0});
  const auto r = f.reflect(2.0);
  for (double s : {0.1, 0.5, 1.9}) CHECK(std::abs(r(s) - f(2.0 - s)) < 1e-15);
  CHECK(r(2.5) == Complex(0.0));
  const auto c = f.clip(1.0);
  CHECK(c.support_end() == 1.0);
  CHECK(c(1.5) == Complex(0.0));
  CHECK(std::abs(c(0.5) - std::exp(-0.5)) < 1e-15);
  const auto g = InputSignal::grid(0.0, 1.0, {1.0, 2.0, 3.0, 4.0});
  const auto gr = g.reflect(1.0);
  CHECK(std::abs(gr(0.1) - 4.0) < 1e-15);
  CHECK(std::abs(gr(0.9) - 1.0) < 1e-15);
}

TEST_CASE("signal norms") {
  const auto g = InputSignal::grid(0.0, 2.0, {Complex(3, 4), 1.0});
  CHECK_THAT(g.sup_norm(), WithinRel(5.0, 1e-15));
  CHECK_THAT(g.l1_norm(), WithinRel(6.0, 1e-15));
  CHECK_THAT(g.lp_norm(2.0), WithinRel(std::sqrt(26.0), 1e-14));
  const auto e = InputSignal::exponential(2.0);
  CHECK_THAT(e.l1_norm(), WithinRel(0.5, 1e-12));
  CHECK_THAT(e.lp_norm(2.0), WithinRel(0.5, 1e-10));
  CHECK(InputSignal{}.is_zero());
  CHECK(InputSignal{}.sup_norm() == 0.0);
}

TEST_CASE("product L1 norm") {
  const auto a = InputSignal::modulated_indicator(0.0, 2.0, 5.0);
  const auto b = InputSignal::modulated_indicator(1.0, 3.0, -2.0);
  CHECK_THAT(product_l1_norm(a, b), WithinRel(1.0, 1e-12));
}
