#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carleson/embedding.hpp"
#include "carleson/measure.hpp"
#include "carleson/orlicz.hpp"
#include "carleson/signal.hpp"

namespace carleson {

struct Mode {
  Complex lambda;
  Complex b;
};

enum class StabilityClass { strongly_stable, group_strip, general };
std::string to_string(StabilityClass c);

// Diagonal generator on l^q: A e_k = lambda_k e_k, B = (b_k).
class DiagonalSystem {
 public:
  DiagonalSystem(double q, std::vector<Mode> modes);

  double q() const { return q_; }
  const std::vector<Mode>& modes() const { return modes_; }
  // strongly_stable when every Re lambda_k < 0; a finite family always lies
  // in a vertical strip, so the remaining case is group_strip.
  StabilityClass stability() const;
  double max_real_part() const;

 private:
  double q_;
  std::vector<Mode> modes_;
};

// mu = sum |b_k|^q delta_{-lambda_k}. DomainError naming the mode when
// Re lambda_k >= 0.
DiscreteMeasure to_measure(const DiagonalSystem& sys);

DiagonalSystem shift_generator(const DiagonalSystem& sys, double c);
// max(0, max Re lambda_k + 2 + 2^-4): all Re lambda_k < -2 after the shift.
double auto_shift_amount(const DiagonalSystem& sys);

struct StateResult {
  std::vector<Complex> x;
  double norm = 0.0;  // (sum |x_k|^q)^{1/q}
};
// x_k = b_k int_0^t0 e^{lambda_k (t0 - s)} u(s) ds; t0 may be +inf.
StateResult input_to_state(const DiagonalSystem& sys, const InputSignal& u, double t0);

struct ThetaEstimate {
  double value = 0.0;
  std::size_t candidates = 0;
};
// Running max of ||Theta u|| / ||u|| over deterministic inputs and `budget`
// seeded random ones.
ThetaEstimate theta_norm_estimate(const DiagonalSystem& sys, const Space& space, double t0,
                                  int budget, std::uint64_t seed);

enum class Criterion { linf_infinite_time, phi_exp, lq_prime_group, finite_time };
std::string to_string(Criterion c);
Criterion criterion_from_string(const std::string& s);

struct AdmissibilityReport {
  Criterion criterion = Criterion::linf_infinite_time;
  double q = 2.0;
  double functional_value = 0.0;
  IntensityTable per_strip;
  SummabilityResult summability;
  std::optional<WitnessYoung> witness;
  std::vector<std::pair<double, double>> zero_class_curve;
  double shift_applied = 0.0;
  std::vector<std::string> warnings;
};

struct DecideOptions {
  double tau0 = 1.0;                  // finite_time only
  std::vector<double> tau_grid;       // zero-class curve sample points
  bool build_witness = false;         // linf only
  EmbeddingConstants constants;
};

AdmissibilityReport decide_linf_admissible(const DiagonalSystem& sys,
                                           const DecideOptions& opts = {});
AdmissibilityReport decide_phi_exp_admissible(const DiagonalSystem& sys,
                                              const DecideOptions& opts = {});
AdmissibilityReport decide_lq_prime_group(const DiagonalSystem& sys);
AdmissibilityReport decide_finite_time(const DiagonalSystem& sys, double tau0);
AdmissibilityReport decide(const DiagonalSystem& sys, Criterion c, const DecideOptions& opts = {});

// gamma_n = max(1, R_n^{-1/(2(q-1))}) with R_n the tail sum of the
// intensities, strips ordered by (|n|, n).
std::map<int, double> witness_gammas(const std::map<int, double>& intensities, double q);
// Sum gamma_n^{q-1} C_q[mu_n].
double weighted_gamma_sum(const std::map<int, double>& intensities,
                          const std::map<int, double>& gammas, double q);
WitnessYoung witness_orlicz(const DiagonalSystem& sys);
WitnessYoung witness_orlicz(const std::map<int, double>& intensities, double q);

struct ResolventResult {
  double grid_max = 0.0;
  Complex argmax;
  std::optional<double> analytic_sup;  // single mode: |b| / (alpha - Re lambda)
};
// max over the grid of (sum |b_k / (lambda - lambda_k)|^q)^{1/q}.
ResolventResult resolvent_condition(const DiagonalSystem& sys, double alpha,
                                    const std::vector<Complex>& grid);

struct MultiInputReport {
  std::vector<AdmissibilityReport> columns;
  double overall = 0.0;  // max over columns
};
// columns[j][k] is the coefficient of input j on mode k.
MultiInputReport multi_input_decide(double q, const std::vector<Complex>& lambdas,
                                    const std::vector<std::vector<Complex>>& columns,
                                    Criterion c, const DecideOptions& opts = {});

struct CrosscheckResult {
  double max_relative_discrepancy = 0.0;
  std::size_t inputs = 0;
};
// ||Theta_inf u||_{l^q} against ||Lu||_{L^q(mu)} over the candidate inputs.
CrosscheckResult propequiv_crosscheck(const DiagonalSystem& sys, const Space& space, int budget,
                                      std::uint64_t seed);
CrosscheckResult propequiv_crosscheck(const DiagonalSystem& sys,
                                      const std::vector<InputSignal>& inputs);

// Functional value for each system of a growing family.
std::vector<double> truncation_sequence(const std::vector<DiagonalSystem>& family, Criterion c);

}  // namespace carleson
