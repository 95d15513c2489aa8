#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carleson/measure.hpp"
#include "carleson/orlicz.hpp"
#include "carleson/signal.hpp"

namespace carleson {

// K_lambda(z) = 1 / (2 pi (z + conj(lambda))).
Complex kernel_value(Complex lambda, Complex z);

// ||k_lambda||_p = (1 / (p (2 pi)^p Re lambda))^{1/p}.
double kernel_norm(Complex lambda, double p);

struct KernelBounds {
  double lo = 0.0;  // 1 / (sqrt(10) pi |I|)
  double hi = 0.0;  // 1 / (pi |I|)
};
KernelBounds kernel_square_bounds(const ImaginaryInterval& interval);

// Samples z over Q_I with lambda the centre of Q_I and counts violations of
// lo <= |K_lambda(z)| <= hi.
struct KernelBoundCheck {
  int samples = 0;
  int violations = 0;
  double min_value = 0.0;
  double max_value = 0.0;
};
KernelBoundCheck check_kernel_square_bounds(const ImaginaryInterval& interval, int samples,
                                            std::uint64_t seed);

struct HardyNormEstimate {
  double p = 2.0;
  double shift = 0.0;
  double value = 0.0;  // sup over the epsilon grid of int |F(eps + shift + iy)|^p dy
  double norm = 0.0;   // value^{1/p}
  std::vector<double> epsilon_grid;
  std::vector<double> line_values;
  double tail_bound = 0.0;  // analytic bound on the truncated |y| tails
};
// F = Lf on the half-plane Re z > shift. UnboundedNormError for p <= 1 and a
// nonzero piecewise signal, whose transform decays only like 1/|y|.
HardyNormEstimate hardy_norm(const InputSignal& f, double p, double shift = 0.0);

// |F(lambda) - int F(iy) conj(K_lambda(iy)) dy| for F = Lf.
double reproducing_residual(const InputSignal& f, Complex lambda);

// f_n = chi_(2^{-n-1}, 2^{-n}] e^{i c_n t} with c_n the centre of I_n,
// |I_n| = 2^{n+1}.
InputSignal test_family_fn(int n, const ImaginaryInterval& interval);

enum class FamilyKind { linf, exp, exp_alpha };

struct FamilySpec {
  FamilyKind kind = FamilyKind::linf;
  int N = 8;
  double alpha = 1.0;  // exp_alpha only
  int m_lo = 0;        // truncation of the m-sum (m >= 0 for the exp kinds)
  int m_hi = 4;
};

// Smallness condition C 2^{3-N} <= e^{-2} cos(1) / 2 with C = 1.
int minimal_linf_spacing();

// g_k for the chosen kind; centre(j) gives c_j for the block f_j.
InputSignal test_family_gk(const FamilySpec& spec, int k,
                           const std::function<double(int)>& centre);

struct ExpNormalization {
  double integral = 0.0;        // int_0^1 Phi_exp(|g_k|) over the truncated sum
  double geometric_sum = 0.0;   // sum_m 2^{-(k+mN+1)} 2^m over the same m
  double closed_form = 0.0;     // 2^{-k-1} / (1 - 2^{1-N}), the full series
  bool holds = false;           // integral <= geometric_sum <= closed_form <= 1
};
ExpNormalization exp_family_normalization(int k, int N, int m_max);

// ||Lg||_{L^q(mu)} = (sum_atoms w |Lg(z)|^q)^{1/q}.
double transform_lq_norm(const DiscreteMeasure& mu, const InputSignal& g, double q);

// Deterministic test inputs (f_n on best windows, g_k blocks, modulated
// indicators) followed by `budget` seeded random grid signals. Points with
// Re <= 0 only contribute their imaginary parts.
std::vector<InputSignal> candidate_signals(const std::vector<Atom>& points, const Space& space,
                                           int budget, std::uint64_t seed);

struct LowerBound {
  double value = 0.0;
  std::size_t best_index = 0;
  std::size_t candidates = 0;
};
LowerBound embedding_lower_bound(const DiscreteMeasure& mu, double q, const Space& space,
                                 int budget, std::uint64_t seed);

struct EmbeddingConstants {
  std::optional<double> kappa_carleson;   // default (1+2/pi)^q q 2^{q+1} / (q-1)
  double kappa_holder = 2.0;
  std::optional<double> hausdorff_young;  // default (2 pi)^{1/q}
};

struct ResolvedConstants {
  double kappa_carleson = 0.0;
  double kappa_holder = 0.0;
  double hausdorff_young = 0.0;
  double lemma_factor = 0.0;  // 2^{q+1}
};
ResolvedConstants resolve_constants(const EmbeddingConstants& c, double q);

struct UpperTerm {
  int n = 0;
  double intensity = 0.0;  // C_q[mu_n]
  double norm_term = 0.0;  // 2^n ||exp^{-q' 2^{n-1}}||
  double contribution = 0.0;
};

struct UpperBound {
  double value = 0.0;
  double value_q = 0.0;  // value^q
  std::vector<UpperTerm> terms;
  ResolvedConstants constants;
};
// Sufficient-condition bound for L^inf, L^p (p >= q') and composed L^Phi.
UpperBound embedding_upper_bound(const DiscreteMeasure& mu, double q, const Space& space,
                                 const EmbeddingConstants& constants = {});

struct EmbeddingEstimate {
  double q = 2.0;
  std::string space;
  std::optional<double> lower_bound;
  std::optional<double> upper_bound;
  double functional_value = 0.0;
  bool decided_bounded = true;
  SummabilityResult summability;
  std::map<std::string, double> metadata;
  std::vector<std::string> notes;
};

// Strip-supported measure: reports C_{q/p'}[mu]. With bounds given the
// support is checked against alpha1 <= Re <= alpha2.
EmbeddingEstimate strip_embedding_check(const DiscreteMeasure& mu, double p, double q,
                                        std::optional<std::pair<double, double>> strip = {});

// M = floor(log2 tau0); sum over n >= -M plus C_q[mu^M].
int finite_time_index(double tau0);
EmbeddingEstimate finite_time_check(const DiscreteMeasure& mu, double q, double tau0);

// sum n^{2/alpha} C_2[mu_n] over n >= 1 plus the |I| = 2 window term.
EmbeddingEstimate exp_orlicz_embedding_check(const DiscreteMeasure& mu, double alpha);

struct PsiCheck {
  double value = 0.0;
  double limit = 0.0;  // 4 (log 2)^2 / B
};
PsiCheck psi_integral_limit_check(double B, int n);

// Product bound ||L||_{L^Phi -> L^q} ||chi_[0,tau]||_Phi.
double zero_class_bound(const DiscreteMeasure& mu, double q, const YoungFunction& phi,
                        double tau, double tau0, const EmbeddingConstants& constants = {});
std::vector<std::pair<double, double>> zero_class_curve(const DiscreteMeasure& mu, double q,
                                                        const YoungFunction& phi,
                                                        const std::vector<double>& taus,
                                                        double tau0,
                                                        const EmbeddingConstants& constants = {});

}  // namespace carleson
