#include <catch_amalgamated.hpp>

#include <cmath>

#include "carleson/admissibility.hpp"
#include "carleson/error.hpp"

using namespace carleson;
using Catch::Matchers::ContainsSubstring;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

DiagonalSystem geometric_system(int N, double q) {
  std::vector<Mode> modes;
  for (int n = 1; n <= N; ++n) {
    modes.push_back({-std::ldexp(1.0, n), std::pow(std::pow(2.0, n * q) / (n * n), 1.0 / q)});
  }
  return DiagonalSystem(q, modes);
}

DiagonalSystem random_system(SeededRng& rng, int max_modes, double q) {
  std::vector<Mode> modes;
  const int m = rng.uniform_int(1, max_modes);
  for (int k = 0; k < m; ++k) {
    modes.push_back({{-std::ldexp(rng.uniform(1.0, 2.0), rng.uniform_int(-3, 4)), rng.uniform(-20, 20)},
                     {rng.uniform(-2, 2), rng.uniform(-2, 2)}});
  }
  return DiagonalSystem(q, modes);
}

}  // namespace

TEST_CASE("system to measure") {
  const auto mu = to_measure(DiagonalSystem(2.0, {{-1.0, 2.0}}));
  REQUIRE(mu.size() == 1);
  CHECK(mu.atoms()[0].point == HalfPlanePoint{1.0, 0.0});
  CHECK(mu.atoms()[0].weight == 4.0);

  std::vector<Mode> modes;
  for (int n = -2; n <= 3; ++n) modes.push_back({{-std::ldexp(1.0, n), -1.0 * n}, 1.0});
  const auto nu = to_measure(DiagonalSystem(2.0, modes));
  for (int n = -2; n <= 3; ++n) {
    const auto part = strip_restrict(nu, n);
    REQUIRE(part.size() == 1);
    CHECK(part.atoms()[0].point.im == n);
  }
  CHECK(to_measure(DiagonalSystem(2.0, {{-1.0, 0.0}})).empty());
  CHECK_THROWS_WITH(to_measure(DiagonalSystem(2.0, {{-1.0, 1.0}, {{0.5, 1.0}, 1.0}})),
                    ContainsSubstring("modes[1]"));
  CHECK_THROWS_AS(DiagonalSystem(0.5, {}), DomainError);
}

TEST_CASE("stability classes") {
  CHECK(DiagonalSystem(2.0, {{-1.0, 1.0}}).stability() == StabilityClass::strongly_stable);
  CHECK(DiagonalSystem(2.0, {{{0.0, 3.0}, 1.0}}).stability() == StabilityClass::group_strip);
  CHECK(DiagonalSystem(2.0, {{-3.0, 1.0}, {{-0.5, 1.0}, 1.0}}).max_real_part() == -0.5);
}

TEST_CASE("generator shifts") {
  const DiagonalSystem sys(2.0, {{-3.0, 1.0}, {{-0.5, 2.0}, 1.0}});
  const double c = auto_shift_amount(sys);
  CHECK_THAT(c, WithinAbs(1.5625, 1e-15));
  CHECK(shift_generator(sys, c).max_real_part() < -2.0);
  const auto same = shift_generator(sys, 0.0);
  CHECK(to_measure(same) == to_measure(sys));
  CHECK(auto_shift_amount(DiagonalSystem(2.0, {{-5.0, 1.0}})) == 0.0);
  CHECK(shift_generator(sys, 0.7).stability() == StabilityClass::strongly_stable);

  SeededRng rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto s = random_system(rng, 10, 2.5);
    const double shift = rng.uniform(0.0, 3.0);
    CHECK(to_measure(shift_generator(s, shift)) == shift_measure(to_measure(s), -shift));
  }
}

TEST_CASE("input to state map") {
  const DiagonalSystem sys(2.0, {{-1.0, 1.0}});
  const auto one = InputSignal::modulated_indicator(0.0, 1.0);
  CHECK_THAT(std::abs(input_to_state(sys, one, 1.0).x[0]), WithinRel(1.0 - std::exp(-1.0), 1e-14));
  const auto long_one = InputSignal::modulated_indicator(0.0, 60.0);
  CHECK_THAT(input_to_state(sys, long_one, INFINITY).x[0].real(), WithinAbs(1.0, 1e-15));
  CHECK(input_to_state(sys, InputSignal{}, 1.0).norm == 0.0);
  CHECK_THROWS_AS(input_to_state(DiagonalSystem(2.0, {{0.0, 1.0}}), one, INFINITY), DomainError);
  // Finite horizon for a non-stable mode is fine.
  const auto grow = input_to_state(DiagonalSystem(2.0, {{1.0, 1.0}}), one, 1.0);
  CHECK_THAT(grow.x[0].real(), WithinRel(std::exp(1.0) - 1.0, 1e-13));
}

TEST_CASE("Theta norm estimate") {
  const DiagonalSystem sys(2.0, {{-1.0, 1.0}});
  const auto est = theta_norm_estimate(sys, Space::linf(), INFINITY, 0, 0);
  CHECK(est.value >= 1.0 - std::exp(-1.0));
  CHECK(est.value <= 1.0 + 1e-12);
  CHECK(theta_norm_estimate(DiagonalSystem(2.0, {{-1.0, 0.0}}), Space::linf(), INFINITY, 4, 1).value == 0.0);
  const auto g = geometric_system(5, 2.0);
  double prev = 0.0;
  for (int budget : {0, 5, 20}) {
    const double v = theta_norm_estimate(g, Space::linf(), INFINITY, budget, 77).value;
    CHECK(v >= prev);
    prev = v;
  }
}

TEST_CASE("L-infinity admissibility functional") {
  const double q = 2.0;
  const int N = 8;
  const auto sys = geometric_system(N, q);
  double expect = 0.0;
  for (int n = 1; n <= N; ++n) expect += 1.0 / (n * n);
  const auto r = decide_linf_admissible(sys);
  CHECK_THAT(r.functional_value, WithinRel(expect, 1e-13));
  CHECK(r.functional_value ==
        summability_functional(to_measure(sys), q, SummabilityWeights::unit()).value);

  const DiagonalSystem single(3.0, {{{-2.0, 5.0}, {1.0, 1.0}}});
  CHECK_THAT(decide_linf_admissible(single).functional_value,
             WithinRel(std::pow(std::sqrt(2.0), 3.0) / 8.0, 1e-14));
  CHECK(decide_linf_admissible(DiagonalSystem(2.0, {{-1.0, 0.0}, {-4.0, 0.0}})).functional_value == 0.0);

  const auto seq = truncation_sequence({geometric_system(2, q), geometric_system(4, q), geometric_system(8, q)},
                                       Criterion::linf_infinite_time);
  CHECK(seq[0] < seq[1]);
  CHECK(seq[1] < seq[2]);
  CHECK(seq[2] < M_PI * M_PI / 6);
}

TEST_CASE("L-infinity report with witness and zero-class curve") {
  DecideOptions o;
  o.build_witness = true;
  o.tau_grid = {1.0, 0.1, 0.01};
  const auto r = decide_linf_admissible(geometric_system(6, 2.0), o);
  REQUIRE(r.witness);
  CHECK(r.witness->verified);
  REQUIRE(r.zero_class_curve.size() == 3);
  CHECK(r.zero_class_curve[2].second <= r.zero_class_curve[0].second);
}

TEST_CASE("witness gammas") {
  const double q = 2.0;
  std::map<int, double> c;
  for (int n = 1; n <= 12; ++n) c[n] = 1.0 / std::pow(n, 4.0);
  const auto g = witness_gammas(c, q);
  for (int n = 2; n <= 12; ++n) CHECK(g.at(n) >= g.at(n - 1));
  CHECK(g.at(12) > g.at(1));
  double total = 0.0;
  for (const auto& [n, v] : c) total += v;
  const double ws = weighted_gamma_sum(c, g, q);
  CHECK(std::isfinite(ws));
  CHECK(ws <= 2.0 * std::sqrt(total) + 1e-12);
  const auto w = witness_orlicz(c, q);
  CHECK(w.verified);
  for (const auto& ch : w.checks) CHECK(ch.lhs <= ch.gamma);
  CHECK(witness_orlicz({{3, 0.25}}, 3.0).verified);
  CHECK(witness_orlicz(std::map<int, double>{}, 2.0).verified);
}

TEST_CASE("phi-exp criterion") {
  std::vector<Mode> modes;
  for (int n = 1; n <= 5; ++n) modes.push_back({-std::ldexp(1.0, n), std::sqrt(static_cast<double>(n))});
  const DiagonalSystem sys(2.0, modes);
  const auto r = decide_phi_exp_admissible(sys);
  const double c = auto_shift_amount(sys);
  CHECK(r.shift_applied == c);
  double expect = 0.0;
  for (int n = 1; n <= 5; ++n) {
    const double x = std::ldexp(1.0, n) + c;
    expect += n * n * n / (x * x);  // weight n, strip n, n^2 w / x^2
  }
  CHECK_THAT(r.functional_value, WithinRel(expect, 1e-13));
  CHECK(decide_phi_exp_admissible(DiagonalSystem(2.0, {{-1.0, 0.0}})).functional_value == 0.0);
  const auto q3 = decide_phi_exp_admissible(DiagonalSystem(3.0, modes));
  CHECK(q3.functional_value == r.functional_value);
  CHECK(!q3.warnings.empty());
}

TEST_CASE("group and finite-time criteria") {
  const DiagonalSystem sys(2.0, {{{0.5, 1.0}, 1.0}, {{-0.25, -3.0}, 2.0}});
  const auto g = decide_lq_prime_group(sys);
  CHECK(g.shift_applied == 1.5);
  const auto mu = to_measure(shift_generator(sys, 1.5));
  CHECK(g.functional_value == alpha_intensity(mu, 1.0));
  const auto f = decide_finite_time(sys, 2.0);
  CHECK(f.functional_value == finite_time_check(mu, 2.0, 2.0).functional_value);
  CHECK(decide(sys, Criterion::finite_time, {2.0}).functional_value == f.functional_value);
  CHECK(criterion_from_string("lq-prime-group") == Criterion::lq_prime_group);
  CHECK_THROWS(criterion_from_string("bogus"));
}

TEST_CASE("resolvent condition") {
  std::vector<Complex> grid;
  for (int i = 1; i <= 200; ++i) {
    for (int j = -50; j <= 50; ++j) grid.emplace_back(1e-4 * i * i, 0.5 * j);
  }
  const auto r = resolvent_condition(DiagonalSystem(2.0, {{-1.0, 1.0}}), 0.0, grid);
  REQUIRE(r.analytic_sup);
  CHECK(*r.analytic_sup == 1.0);
  CHECK_THAT(r.grid_max, WithinRel(1.0, 1e-3));
  CHECK(resolvent_condition(DiagonalSystem(2.0, {{-1.0, 0.0}}), 0.0, grid).grid_max == 0.0);

  std::vector<Complex> grid2;
  for (int i = 1; i <= 100; ++i) {
    for (int j = -300; j <= 300; ++j) grid2.emplace_back(1e-4 * i * i, 0.5 * j);
  }
  const Mode a{-1.0, 1.0}, b{{-2.0, 100.0}, 1.0};
  const auto two = resolvent_condition(DiagonalSystem(2.0, {a, b}), 0.0, grid2);
  const double sa = *resolvent_condition(DiagonalSystem(2.0, {a}), 0.0, grid2).analytic_sup;
  const double sb = *resolvent_condition(DiagonalSystem(2.0, {b}), 0.0, grid2).analytic_sup;
  CHECK_THAT(two.grid_max, WithinRel(std::max(sa, sb), 0.01));
  CHECK_THAT(two.grid_max, WithinRel(std::hypot(sa, sb), 0.12));
  CHECK_THROWS_AS(resolvent_condition(DiagonalSystem(2.0, {a}), 1.0, grid), DomainError);
}

TEST_CASE("multi-input decisions") {
  const std::vector<Complex> lambdas{-1.0, -2.0, {-4.0, 1.0}};
  const std::vector<Complex> col{1.0, {0.0, 2.0}, 0.5};
  const auto same = multi_input_decide(2.0, lambdas, {col, col}, Criterion::linf_infinite_time);
  CHECK(same.columns[0].functional_value == same.columns[1].functional_value);
  const auto mixed = multi_input_decide(2.0, lambdas, {col, {0.0, 0.0, 0.0}, {3.0, 0.0, 0.0}},
                                        Criterion::linf_infinite_time);
  CHECK(mixed.columns[1].functional_value == 0.0);
  double mx = 0.0;
  for (const auto& c : mixed.columns) mx = std::max(mx, c.functional_value);
  CHECK(mixed.overall == mx);
  CHECK_THROWS_AS(multi_input_decide(2.0, lambdas, {{1.0}}, Criterion::linf_infinite_time), DomainError);
}

TEST_CASE("Theta and transform agree") {
  SeededRng rng(31337);
  for (int trial = 0; trial < 10; ++trial) {
    const auto sys = random_system(rng, 20, rng.uniform(1.5, 4.0));
    const double a = rng.uniform(0, 2);
    const auto u = InputSignal::modulated_indicator(a, a + rng.uniform(0.1, 3), rng.uniform(-5, 5));
    CHECK(propequiv_crosscheck(sys, std::vector<InputSignal>{u}).max_relative_discrepancy < 1e-10);
    std::vector<Complex> s;
    for (int i = 0; i < 16; ++i) s.emplace_back(rng.uniform(-1, 1), rng.uniform(-1, 1));
    const auto g = InputSignal::grid(0.0, 3.0, s);
    CHECK(propequiv_crosscheck(sys, std::vector<InputSignal>{g}).max_relative_discrepancy < 1e-6);
  }
  const DiagonalSystem sys(2.0, {{-1.0, 1.0}});
  CHECK(propequiv_crosscheck(sys, std::vector<InputSignal>{InputSignal{}}).max_relative_discrepancy == 0.0);
  CHECK(propequiv_crosscheck(geometric_system(6, 2.0), Space::linf(), 10, 4).max_relative_discrepancy < 1e-10);
}
