#pragma once

#include <map>
#include <optional>
#include <vector>

#include "carleson/numerics.hpp"

namespace carleson {

// A point x + iy of the open right half-plane.
struct HalfPlanePoint {
  double re = 1.0;
  double im = 0.0;

  Complex as_complex() const { return {re, im}; }
  friend bool operator==(const HalfPlanePoint&, const HalfPlanePoint&) = default;
};

struct Atom {
  HalfPlanePoint point;
  double weight = 0.0;
  friend bool operator==(const Atom&, const Atom&) = default;
};

// Finite positive combination of point masses in the open right half-plane.
// Atoms are kept sorted by (re, im); coincident points are merged.
class DiscreteMeasure {
 public:
  DiscreteMeasure() = default;
  // Throws DomainError for re <= 0, non-finite coordinates, or weight <= 0.
  explicit DiscreteMeasure(std::vector<Atom> atoms);

  const std::vector<Atom>& atoms() const { return atoms_; }
  bool empty() const { return atoms_.empty(); }
  std::size_t size() const { return atoms_.size(); }
  double total_mass() const;

  DiscreteMeasure scaled(double factor) const;

  friend bool operator==(const DiscreteMeasure&, const DiscreteMeasure&) = default;

 private:
  std::vector<Atom> atoms_;
};

// Closed interval of the imaginary axis, given by its midpoint and length.
struct ImaginaryInterval {
  double center = 0.0;
  double length = 1.0;

  double lower() const { return center - 0.5 * length; }
  double upper() const { return center + 0.5 * length; }
};

// Q_I = {x + iy : iy in I, 0 < x < |I|}.
struct CarlesonSquare {
  ImaginaryInterval interval;
  bool contains(const HalfPlanePoint& z) const;
};

// mu(Q_I). Throws DomainError unless I.length > 0.
double square_mass(const DiscreteMeasure& mu, const ImaginaryInterval& interval);

// Best placement of a square of fixed side length: the largest mu(Q_I) over
// all intervals I with |I| = length, and one interval attaining it.
struct WindowMax {
  double mass = 0.0;
  ImaginaryInterval interval;
};
WindowMax max_window_mass(const DiscreteMeasure& mu, double length);

// Exact supremum of mu(Q_I) / |I|^alpha over all intervals. The supremum is
// a limit |I| -> length from above when the maximizing square is pinned by an
// atom's real part; `interval` is the limiting square.
struct IntensityResult {
  double value = 0.0;
  ImaginaryInterval interval;
};
IntensityResult alpha_intensity_detail(const DiscreteMeasure& mu, double alpha);
double alpha_intensity(const DiscreteMeasure& mu, double alpha);

// Index n of the dyadic strip 2^n <= re < 2^{n+1} containing a point.
int strip_index(double re);
DiscreteMeasure strip_restrict(const DiscreteMeasure& mu, int n);
// Atoms with re <= bound (the measure mu^M for bound = 2^{-M}).
DiscreteMeasure restrict_re_at_most(const DiscreteMeasure& mu, double bound);

// Moves every atom from re to re - h. Throws DomainError if an atom would
// leave the open half-plane.
DiscreteMeasure shift_measure(const DiscreteMeasure& mu, double h);

struct IntensityTable {
  double alpha = 1.0;
  std::map<int, double> per_strip;  // only strips carrying atoms
  double total = 0.0;               // C_alpha of the whole measure
};
IntensityTable intensity_table(const DiscreteMeasure& mu, double alpha);

enum class StripWeighting { unit, n_squared, n_pow };

// Weighting of the strip sum. n_squared and n_pow restrict the sum to n >= 1
// and add sup_{|I|=2} mu(Q_I).
struct SummabilityWeights {
  StripWeighting kind = StripWeighting::unit;
  double exponent = 2.0;  // used by n_pow: weight n^exponent

  double weight(int n) const;
  static SummabilityWeights unit() { return {}; }
  static SummabilityWeights n_squared() { return {StripWeighting::n_squared, 2.0}; }
  static SummabilityWeights n_pow(double e) { return {StripWeighting::n_pow, e}; }
};

struct SummabilityTerm {
  int n = 0;
  double intensity = 0.0;
  double weight = 1.0;
  double term = 0.0;
};

struct SummabilityResult {
  double value = 0.0;
  std::vector<SummabilityTerm> terms;
  double window_term = 0.0;           // sup_{|I|=2} mu(Q_I) when applicable
  std::optional<int> finite_time_m;   // M when the finite-time variant ran
  double head_intensity = 0.0;        // C_q[mu^M] in the finite-time variant
};

// Sum_n w_n C_q[mu_n] (+ extra terms, see SummabilityWeights). With
// finite_time_m = M the sum runs over n >= -M and C_q[mu^M] is added.
SummabilityResult summability_functional(const DiscreteMeasure& mu, double q,
                                         const SummabilityWeights& weights,
                                         std::optional<int> finite_time_m = {});

}  // namespace carleson
