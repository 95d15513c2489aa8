#pragma once

#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "carleson/signal.hpp"
#include "carleson/young.hpp"

namespace carleson {

// inf{k > 0 : int Phi(|f| / k) <= 1}. Zero for the zero signal.
// UnboundedNormError when no finite k works.
double luxemburg_norm(const InputSignal& f, const YoungFunction& phi);

// The modular int Phi(|f| / k).
double orlicz_modular(const InputSignal& f, const YoungFunction& phi, double k);

// Input space of an embedding. L^1 and L^inf use their natural norms.
struct Space {
  enum class Kind { linf, l1, lp, orlicz };
  Kind kind = Kind::linf;
  double p = 2.0;
  std::optional<YoungFunction> phi;

  static Space linf() { return {}; }
  static Space l1() { return {Kind::l1, 1.0, {}}; }
  static Space lp(double p);
  static Space orlicz(const YoungFunction& phi) { return {Kind::orlicz, 0.0, phi}; }

  std::string name() const;
};

double space_norm(const InputSignal& f, const Space& space);

// (1 / (alpha C)) int_0^1 phi(s / C) log(1/s) ds, the right-hand form.
double exp_orlicz_integral(const YoungFunction& phi, double alpha, double C);
// int_0^inf Phi(e^{-alpha t} / C) dt, the left-hand form.
double exp_orlicz_integral_direct(const YoungFunction& phi, double alpha, double C);

// Luxemburg norm of t -> e^{-rate t} on (0, inf).
double exp_function_norm(const YoungFunction& phic, double rate);
// The same in L^1, the convention for the complement of L^inf.
double exp_function_norm_l1(double rate);

struct WitnessCheck {
  int n = 0;
  double gamma = 0.0;
  double lhs = 0.0;  // 2^n ||e^{-q' 2^{n-1} t}||_{Phi~^c}
  bool holds = false;
};

struct WitnessYoung {
  double q = 2.0;
  YoungFunction phi_tilde_c;  // tabulated Phi~^c
  YoungFunction phi_tilde;    // its complement
  YoungFunction phi;          // Phi(t) = Phi~(t^{q'})
  std::vector<WitnessCheck> checks;
  bool verified = false;
};

// Builds Phi~^c with phi~^c(2^n) <= (q'/2) gamma_n at each supplied n and
// verifies 2^n ||exp^{-q' 2^{n-1}}||_{Phi~^c} <= gamma_n. With a window
// [lo, hi], gamma must be nondecreasing in |n| outside it.
WitnessYoung construct_witness_young(const std::map<int, double>& gammas, double q,
                                     std::optional<std::pair<int, int>> window = {});

struct HolderCheck {
  double product_norm = 0.0;  // ||f g||_1
  double bound = 0.0;         // kappa_H ||f||_Phi ||g||_{Phi^c}
  bool holds = false;
};
HolderCheck holder_orlicz(const InputSignal& f, const InputSignal& g,
                          const YoungFunction& phi, double kappa_holder = 2.0);

}  // namespace carleson
