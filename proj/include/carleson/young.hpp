#pragma once

#include <memory>
#include <optional>
#include <string>
#include <variant>
#include <vector>

namespace carleson {

// Knot (t, phi(t)) of a piecewise-linear derivative.
struct Knot {
  double t = 0.0;
  double slope = 0.0;  // value of the derivative phi at t
  friend bool operator==(const Knot&, const Knot&) = default;
};

enum class YoungKind {
  power,            // coeff * t^p, p > 1
  exp,              // e^t - t - 1
  exp_alpha,        // e^{t^a} - t^a - 1, a >= 1/2
  tabulated,        // integral of a piecewise-linear derivative
  composed_qprime,  // inner(t^r)
  complementary,    // max_t (s t - primal(t)) for a primal without closed form
};

std::string to_string(YoungKind kind);

// Convex nondecreasing Phi on [0, inf) with Phi(0) = 0 and a left-continuous
// nondecreasing derivative phi. Immutable; copies share their inner parts.
class YoungFunction {
 public:
  static YoungFunction power(double p, double coeff = 1.0);
  static YoungFunction exp();
  static YoungFunction exp_alpha(double alpha);
  // knots[0] must be (0, 0); t and slope strictly increasing. The derivative
  // continues with the last segment's slope beyond the final knot.
  static YoungFunction tabulated(std::vector<Knot> knots);
  static YoungFunction composed(const YoungFunction& inner, double exponent);

  double operator()(double t) const;  // Phi(t)
  double derivative(double t) const;  // phi(t)
  // Left-continuous inverse of phi: inf{t >= 0 : phi(t) >= s}.
  double derivative_inverse(double s) const;

  YoungKind kind() const;

  // Kind parameters. Each accessor throws std::bad_variant_access for a
  // different kind.
  double power_exponent() const;
  double power_coefficient() const;
  double exp_alpha_exponent() const;
  const std::vector<Knot>& knots() const;
  const YoungFunction& inner() const;  // composed_qprime
  double composed_exponent() const;
  const YoungFunction& primal() const;  // complementary

  // Phi(s) - s t style kinks (tabulated knots) where quadrature should split.
  std::vector<double> derivative_breaks() const;

 private:
  struct Power {
    double p;
    double coeff;
  };
  struct Exp {};
  struct ExpAlpha {
    double alpha;
  };
  struct Tabulated {
    std::vector<Knot> knots;
    std::vector<double> cumulative;  // Phi at each knot
  };
  struct Composed {
    std::shared_ptr<const YoungFunction> inner;
    double exponent;
  };
  struct Conjugate {
    std::shared_ptr<const YoungFunction> primal;
  };
  using Rep = std::variant<Power, Exp, ExpAlpha, Tabulated, Composed, Conjugate>;

  explicit YoungFunction(Rep rep) : rep_(std::move(rep)) {}
  double numeric_derivative_inverse(double s) const;

  friend YoungFunction complementary(const YoungFunction& phi);

  Rep rep_;
};

// Phi^c(s) = max_{t >= 0} (s t - Phi(t)). Closed form for power and tabulated
// functions; (Phi^c)^c returns the original primal.
YoungFunction complementary(const YoungFunction& phi);

// Writes phi as inner(t^r) when the kind allows it (composed with matching
// exponent, exp and exp_alpha via exp_alpha(a / r), power(p) via power(p / r)).
std::optional<YoungFunction> decompose_power_inner(const YoungFunction& phi,
                                                   double r);

// Sampled checks of the Young-function axioms.
struct YoungDiagnostics {
  bool zero_at_origin = false;
  bool nondecreasing = false;
  bool midpoint_convex = false;
  double ratio_at_small = 0.0;    // Phi(x)/x at a tiny x
  double ratio_at_large = 0.0;    // x/Phi(x) at a large x
  double max_integral_gap = 0.0;  // |Phi(t) - int_0^t phi| relative
};
YoungDiagnostics diagnose_young(const YoungFunction& phi,
                                double grid_max = 20.0, int samples = 400);

}  // namespace carleson
