#include <catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "carleson/error.hpp"
#include "carleson/orlicz.hpp"
#include "carleson/young.hpp"

using namespace carleson;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

// max_t (s t - Phi(t)) by a dense scan on [0, tmax] followed by a ternary
// refinement around the best sample.
double conjugate_oracle(const YoungFunction& phi, double s, double tmax) {
  const int samples = 200000;
  const double h = tmax / samples;
  int best = 0;
  double best_v = 0.0;
  for (int i = 0; i <= samples; ++i) {
    const double v = s * i * h - phi(i * h);
    if (v > best_v) {
      best_v = v;
      best = i;
    }
  }
  double lo = std::max(0.0, (best - 1) * h), hi = (best + 1) * h;
  for (int it = 0; it < 200; ++it) {
    const double m1 = lo + (hi - lo) / 3, m2 = hi - (hi - lo) / 3;
    if (s * m1 - phi(m1) < s * m2 - phi(m2)) {
      lo = m1;
    } else {
      hi = m2;
    }
  }
  const double t = 0.5 * (lo + hi);
  return std::max(best_v, s * t - phi(t));
}

// Root of e^x - x = 2 by plain bisection.
double exp_root() {
  double lo = 0.0, hi = 3.0;
  for (int i = 0; i < 200; ++i) {
    const double mid = 0.5 * (lo + hi);
    (std::exp(mid) - mid < 2.0 ? lo : hi) = mid;
  }
  return 0.5 * (lo + hi);
}

}  // namespace

TEST_CASE("Young function axioms on every kind") {
  const std::vector<Knot> knots{{0, 0}, {1, 1}, {2, 3}, {4, 4}};
  const std::vector<YoungFunction> all{
      YoungFunction::power(2.0, 0.5),  YoungFunction::power(3.0),
      YoungFunction::exp(),           YoungFunction::exp_alpha(2.0),
      YoungFunction::exp_alpha(0.75), YoungFunction::tabulated(knots),
      YoungFunction::composed(YoungFunction::exp(), 2.0),
      complementary(YoungFunction::exp())};
  for (const auto& phi : all) {
    INFO(to_string(phi.kind()));
    const auto d = diagnose_young(phi, 8.0, 300);
    CHECK(d.zero_at_origin);
    CHECK(d.nondecreasing);
    CHECK(d.midpoint_convex);
    CHECK(d.max_integral_gap < 1e-8);
  }
  CHECK(diagnose_young(YoungFunction::exp()).ratio_at_small < 1e-3);
  CHECK(diagnose_young(YoungFunction::exp()).ratio_at_large < 1e-3);
}

TEST_CASE("invalid Young parameters are rejected") {
  CHECK_THROWS_AS(YoungFunction::power(1.0), DomainError);
  CHECK_THROWS_AS(YoungFunction::tabulated({{0, 0}, {1, 1}, {0.5, 2}}), DomainError);
  CHECK_THROWS_AS(YoungFunction::tabulated({{0.1, 0}, {1, 1}}), DomainError);
}

TEST_CASE("complementary functions against the dense-max oracle") {
  const auto half_square = YoungFunction::power(2.0, 0.5);
  for (double s : {0.0, 0.5, 1.0, 2.0, 3.0}) {
    CHECK_THAT(complementary(half_square)(s), WithinAbs(0.5 * s * s, 1e-12));
    CHECK_THAT(conjugate_oracle(half_square, s, 10.0), WithinAbs(0.5 * s * s, 1e-8));
  }
  const auto ec = complementary(YoungFunction::exp());
  for (double s : {0.5, 1.0, 2.0}) {
    const double closed = (1 + s) * std::log1p(s) - s;
    CHECK_THAT(ec(s), WithinAbs(closed, 1e-8));
    CHECK_THAT(conjugate_oracle(YoungFunction::exp(), s, 10.0), WithinAbs(closed, 1e-8));
  }
  const std::vector<Knot> knots{{0, 0}, {1, 1}, {2, 3}, {4, 4}};
  const auto tab = YoungFunction::tabulated(knots);
  const auto tabc = complementary(tab);
  CHECK(tabc.kind() == YoungKind::tabulated);
  for (double s : {0.0, 0.3, 1.0, 2.5, 3.5}) {
    CHECK_THAT(tabc(s), WithinAbs(conjugate_oracle(tab, s, 40.0), 1e-8));
  }
  CHECK(complementary(YoungFunction::exp_alpha(2.0))(0.0) == 0.0);
}

TEST_CASE("power duality and double conjugation") {
  const auto c = complementary(YoungFunction::power(3.0));
  REQUIRE(c.kind() == YoungKind::power);
  // (t^3)^c(s) = (2/3) (s/3)^{3/2}: exponent 3/2, coefficient 2 / 3^{3/2}.
  CHECK_THAT(c.power_exponent(), WithinRel(1.5, 1e-15));
  CHECK_THAT(c.power_coefficient(), WithinRel(2.0 / std::pow(3.0, 1.5), 1e-14));
  const auto back = complementary(complementary(YoungFunction::exp()));
  CHECK(back.kind() == YoungKind::exp);
}

TEST_CASE("decomposition as inner(t^r)") {
  const auto d = decompose_power_inner(YoungFunction::power(4.0), 2.0);
  REQUIRE(d);
  CHECK_THAT((*d)(3.0), WithinRel(std::pow(3.0, 2.0), 1e-14));
  const auto e = decompose_power_inner(YoungFunction::exp_alpha(3.0), 1.5);
  REQUIRE(e);
  CHECK_THAT((*e)(std::pow(1.7, 1.5)), WithinRel(YoungFunction::exp_alpha(3.0)(1.7), 1e-12));
}

TEST_CASE("Luxemburg norms") {
  const auto chi = InputSignal::modulated_indicator(0.0, 1.0);
  CHECK_THAT(luxemburg_norm(chi, YoungFunction::power(2.0)), WithinRel(1.0, 1e-12));
  const double k_star = 1.0 / exp_root();
  CHECK_THAT(luxemburg_norm(chi, YoungFunction::exp()), WithinRel(k_star, 1e-10));
  CHECK_THAT(k_star, WithinAbs(0.8725, 1e-3));
  const auto scaled = InputSignal::weighted_sum({{{3.0, 0.0}, 0.0, 1.0, {0.0, 0.0}}});
  CHECK_THAT(luxemburg_norm(scaled, YoungFunction::exp()), WithinRel(3.0 * k_star, 1e-10));
  CHECK(luxemburg_norm(InputSignal{}, YoungFunction::exp()) == 0.0);
  CHECK_THAT(orlicz_modular(chi, YoungFunction::exp(), k_star), WithinAbs(1.0, 1e-10));
}

TEST_CASE("space norms") {
  const auto chi = InputSignal::modulated_indicator(1.0, 3.0, 2.0);
  CHECK_THAT(space_norm(chi, Space::linf()), WithinRel(1.0, 1e-15));
  CHECK_THAT(space_norm(chi, Space::l1()), WithinRel(2.0, 1e-15));
  CHECK_THAT(space_norm(chi, Space::lp(3.0)), WithinRel(std::cbrt(2.0), 1e-14));
  CHECK_THROWS_AS(Space::lp(0.5), DomainError);
}

TEST_CASE("exponential Orlicz integral, both sides") {
  const auto sq = YoungFunction::power(2.0);
  CHECK_THAT(exp_orlicz_integral(sq, 1.0, 1.0), WithinAbs(0.5, 1e-12));
  CHECK_THAT(exp_orlicz_integral_direct(sq, 1.0, 1.0), WithinAbs(0.5, 1e-12));
  const auto e = YoungFunction::exp();
  CHECK_THAT(exp_orlicz_integral(e, 2.0, 10.0), WithinAbs(exp_orlicz_integral_direct(e, 2.0, 10.0), 1e-8));
  double prev = INFINITY;
  for (double C : {1.0, 10.0, 100.0, 1e4}) {
    const double v = exp_orlicz_integral(e, 1.0, C);
    CHECK(v < prev);
    prev = v;
  }
  CHECK(prev < 1e-8);
}

TEST_CASE("log-weight quadrature") {
  CHECK_THAT(quad::integrate_log_weight([](double) { return 1.0; }), WithinAbs(1.0, 1e-13));
  CHECK_THAT(quad::integrate_log_weight([](double s) { return s; }), WithinAbs(0.25, 1e-13));
}

TEST_CASE("exponential function norms") {
  CHECK_THAT(exp_function_norm_l1(3.0), WithinRel(1.0 / 3.0, 1e-15));
  CHECK_THAT(exp_function_norm_l1(6.0), WithinRel(0.5 * exp_function_norm_l1(3.0), 1e-15));
  for (double rate : {0.25, 1.0, 3.0}) {
    CHECK_THAT(exp_function_norm(YoungFunction::power(2.0), rate),
               WithinRel(1.0 / std::sqrt(2.0 * rate), 1e-10));
  }
}

TEST_CASE("witness construction") {
  const double q = 3.0;
  std::map<int, double> gammas;
  for (int n = -6; n <= 6; ++n) gammas[n] = (n >= -2 && n <= 3) ? 50.0 : 50.0 + 10.0 * std::abs(n);
  const auto w = construct_witness_young(gammas, q, std::pair{-2, 3});
  CHECK(w.verified);
  REQUIRE(w.checks.size() == gammas.size());
  const double qp = q / (q - 1);
  for (const auto& c : w.checks) {
    // Independent recomputation with the two-sided integral identity: the
    // Luxemburg norm k satisfies int Phi(e^{-rate t} / k) dt = 1.
    const double rate = qp * std::ldexp(1.0, c.n - 1);
    const double k = c.lhs / std::ldexp(1.0, c.n);
    CHECK_THAT(exp_orlicz_integral_direct(w.phi_tilde_c, rate, k), WithinAbs(1.0, 1e-7));
    CHECK(c.lhs <= c.gamma);
  }
  const auto d = diagnose_young(w.phi, 4.0, 200);
  CHECK(d.midpoint_convex);
  CHECK(d.nondecreasing);

  // Enlarging gamma keeps the earlier phi^c feasible.
  for (const auto& c : w.checks) CHECK(c.lhs <= 2.0 * c.gamma);

  std::map<int, double> bad = gammas;
  bad[6] = 1.0;
  CHECK_THROWS_AS(construct_witness_young(bad, q, std::pair{-2, 3}), DomainError);
  CHECK_THROWS_AS(construct_witness_young(gammas, 1.5), DomainError);
  CHECK_THROWS_AS(construct_witness_young({{0, 0.5}}, 2.0), DomainError);
}

TEST_CASE("single-strip witness") {
  const auto w = construct_witness_young({{2, 1.0}}, 2.0);
  CHECK(w.verified);
}

TEST_CASE("Orlicz Hoelder inequality") {
  const auto chi = InputSignal::modulated_indicator(0.0, 1.0);
  const auto h = holder_orlicz(chi, chi, YoungFunction::power(2.0));
  CHECK_THAT(h.product_norm, WithinRel(1.0, 1e-14));
  CHECK_THAT(h.bound, WithinRel(1.0, 1e-10));
  CHECK(h.holds);
  CHECK(holder_orlicz(InputSignal{}, chi, YoungFunction::exp()).holds);

  SeededRng rng(424242);
  int violations = 0;
  for (int i = 0; i < 1000; ++i) {
    const int cells = rng.uniform_int(1, 6);
    std::vector<Complex> a, b;
    for (int c = 0; c < cells; ++c) {
      a.emplace_back(rng.uniform(-2, 2), rng.uniform(-2, 2));
      b.emplace_back(rng.uniform(-2, 2), rng.uniform(-2, 2));
    }
    const double end = rng.uniform(0.2, 3.0);
    const auto phi = (i % 2 == 0) ? YoungFunction::exp() : YoungFunction::power(1.5 + i % 3);
    if (!holder_orlicz(InputSignal::grid(0, end, a), InputSignal::grid(0, end, b), phi).holds) {
      ++violations;
    }
  }
  CHECK(violations == 0);
}
