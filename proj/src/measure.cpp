#include "carleson/measure.hpp"

#include <algorithm>
#include <cmath>
#include <sstream>

#include "carleson/error.hpp"
#include "carleson/parallel.hpp"

namespace carleson {

namespace {

std::string describe(const HalfPlanePoint& p) {
  std::ostringstream os;
  os.precision(17);
  os << p.re << (p.im < 0 ? " - " : " + ") << std::abs(p.im) << "i";
  return os.str();
}

bool point_less(const HalfPlanePoint& a, const HalfPlanePoint& b) {
  return a.re < b.re || (a.re == b.re && a.im < b.im);
}

// Largest total weight of a closed im-window of width `length` among atoms
// with re <= re_bound (inclusive) or re < re_bound (strict). `by_im` holds the
// atoms sorted by imaginary part.
WindowMax sweep_window(const std::vector<Atom>& by_im, double length,
                       double re_bound, bool strict) {
  WindowMax best;
  best.interval.length = length;
  std::vector<const Atom*> live;
  live.reserve(by_im.size());
  for (const auto& a : by_im) {
    const bool inside = strict ? a.point.re < re_bound : a.point.re <= re_bound;
    if (inside) live.push_back(&a);
  }
  double mass = 0.0;
  std::size_t left = 0;
  for (std::size_t right = 0; right < live.size(); ++right) {
    mass += live[right]->weight;
    while (live[right]->point.im - live[left]->point.im > length) {
      mass -= live[left]->weight;
      ++left;
    }
    if (mass > best.mass) {
      best.mass = mass;
      best.interval.center = live[left]->point.im + 0.5 * length;
    }
  }
  return best;
}

std::vector<Atom> sorted_by_im(const DiscreteMeasure& mu) {
  std::vector<Atom> by_im = mu.atoms();
  std::stable_sort(by_im.begin(), by_im.end(), [](const Atom& a, const Atom& b) {
    return a.point.im < b.point.im;
  });
  return by_im;
}

}  // namespace

DiscreteMeasure::DiscreteMeasure(std::vector<Atom> atoms) {
  for (const auto& a : atoms) {
    if (!std::isfinite(a.point.re) || !std::isfinite(a.point.im)) {
      throw DomainError("atom at " + describe(a.point) + " is not finite");
    }
    if (!(a.point.re > 0.0)) {
      throw DomainError("atom at " + describe(a.point) +
                        " is not in the open right half-plane");
    }
    if (!(a.weight > 0.0) || !std::isfinite(a.weight)) {
      throw DomainError("atom at " + describe(a.point) +
                        " has non-positive or non-finite weight");
    }
  }
  std::stable_sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) {
    return point_less(a.point, b.point);
  });
  for (const auto& a : atoms) {
    if (!atoms_.empty() && atoms_.back().point == a.point) {
      atoms_.back().weight += a.weight;
    } else {
      atoms_.push_back(a);
    }
  }
}

double DiscreteMeasure::total_mass() const {
  std::vector<double> w;
  w.reserve(atoms_.size());
  for (const auto& a : atoms_) w.push_back(a.weight);
  return pairwise_sum(w);
}

DiscreteMeasure DiscreteMeasure::scaled(double factor) const {
  if (!(factor > 0.0)) throw DomainError("scale factor must be positive");
  DiscreteMeasure out = *this;
  for (auto& a : out.atoms_) a.weight *= factor;
  return out;
}

bool CarlesonSquare::contains(const HalfPlanePoint& z) const {
  return z.re > 0.0 && z.re < interval.length && z.im >= interval.lower() &&
         z.im <= interval.upper();
}

double square_mass(const DiscreteMeasure& mu, const ImaginaryInterval& interval) {
  if (!(interval.length > 0.0)) {
    throw DomainError("interval length must be positive");
  }
  const CarlesonSquare square{interval};
  double mass = 0.0;
  for (const auto& a : mu.atoms()) {
    if (square.contains(a.point)) mass += a.weight;
  }
  return mass;
}

WindowMax max_window_mass(const DiscreteMeasure& mu, double length) {
  if (!(length > 0.0)) throw DomainError("window length must be positive");
  return sweep_window(sorted_by_im(mu), length, length, /*strict=*/true);
}

IntensityResult alpha_intensity_detail(const DiscreteMeasure& mu, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  IntensityResult best;
  if (mu.empty()) return best;

  const std::vector<Atom> by_im = sorted_by_im(mu);
  // Every captured atom set S is dominated by the critical length
  // max(max re over S, im-span of S), so these lengths suffice.
  std::vector<double> lengths;
  lengths.reserve(by_im.size() * (by_im.size() + 1) / 2);
  for (const auto& a : by_im) lengths.push_back(a.point.re);
  for (std::size_t i = 0; i < by_im.size(); ++i) {
    for (std::size_t j = i + 1; j < by_im.size(); ++j) {
      const double span = by_im[j].point.im - by_im[i].point.im;
      if (span > 0.0) lengths.push_back(span);
    }
  }
  std::sort(lengths.begin(), lengths.end());
  lengths.erase(std::unique(lengths.begin(), lengths.end()), lengths.end());

  const double total = mu.total_mass();
  for (double len : lengths) {
    const double scale = std::pow(len, alpha);
    // Window masses never exceed the total, so no longer length can win.
    if (total / scale <= best.value) break;
    // re <= len: the limit of the open constraint re < |I| as |I| -> len+.
    const WindowMax w = sweep_window(by_im, len, len, /*strict=*/false);
    const double ratio = w.mass / scale;
    if (ratio > best.value) {
      best.value = ratio;
      best.interval = w.interval;
    }
  }
  return best;
}

double alpha_intensity(const DiscreteMeasure& mu, double alpha) {
  return alpha_intensity_detail(mu, alpha).value;
}

int strip_index(double re) {
  if (!(re > 0.0) || !std::isfinite(re)) {
    throw DomainError("strip index requires a finite positive real part");
  }
  int e = 0;
  std::frexp(re, &e);  // re = m 2^e with m in [1/2, 1)
  return e - 1;
}

DiscreteMeasure strip_restrict(const DiscreteMeasure& mu, int n) {
  std::vector<Atom> kept;
  for (const auto& a : mu.atoms()) {
    if (strip_index(a.point.re) == n) kept.push_back(a);
  }
  return DiscreteMeasure(std::move(kept));
}

DiscreteMeasure restrict_re_at_most(const DiscreteMeasure& mu, double bound) {
  std::vector<Atom> kept;
  for (const auto& a : mu.atoms()) {
    if (a.point.re <= bound) kept.push_back(a);
  }
  return DiscreteMeasure(std::move(kept));
}

DiscreteMeasure shift_measure(const DiscreteMeasure& mu, double h) {
  if (!std::isfinite(h)) throw DomainError("shift must be finite");
  std::vector<Atom> moved;
  moved.reserve(mu.size());
  for (const auto& a : mu.atoms()) {
    const double re = a.point.re - h;
    if (!(re > 0.0)) {
      throw DomainError("shift by " + std::to_string(h) + " moves atom at " +
                        describe(a.point) + " out of the right half-plane");
    }
    moved.push_back({{re, a.point.im}, a.weight});
  }
  return DiscreteMeasure(std::move(moved));
}

IntensityTable intensity_table(const DiscreteMeasure& mu, double alpha) {
  if (!(alpha > 0.0)) throw DomainError("alpha must be positive");
  IntensityTable table;
  table.alpha = alpha;
  std::map<int, std::vector<Atom>> strips;
  for (const auto& a : mu.atoms()) strips[strip_index(a.point.re)].push_back(a);

  std::vector<int> keys;
  std::vector<DiscreteMeasure> parts;
  for (auto& [n, atoms] : strips) {
    keys.push_back(n);
    parts.emplace_back(std::move(atoms));
  }
  std::vector<double> values(parts.size(), 0.0);
  parallel_for(parts.size(), [&](std::size_t i) {
    values[i] = alpha_intensity(parts[i], alpha);
  });
  for (std::size_t i = 0; i < keys.size(); ++i) table.per_strip[keys[i]] = values[i];
  table.total = alpha_intensity(mu, alpha);
  return table;
}

double SummabilityWeights::weight(int n) const {
  switch (kind) {
    case StripWeighting::unit:
      return 1.0;
    case StripWeighting::n_squared:
      return n >= 1 ? static_cast<double>(n) * n : 0.0;
    case StripWeighting::n_pow:
      return n >= 1 ? std::pow(static_cast<double>(n), exponent) : 0.0;
  }
  return 1.0;
}

SummabilityResult summability_functional(const DiscreteMeasure& mu, double q,
                                         const SummabilityWeights& weights,
                                         std::optional<int> finite_time_m) {
  if (!(q >= 1.0)) throw DomainError("q must be at least 1");
  SummabilityResult result;
  result.finite_time_m = finite_time_m;
  const IntensityTable table = intensity_table(mu, q);
  std::vector<double> parts;
  for (const auto& [n, c] : table.per_strip) {
    if (weights.kind != StripWeighting::unit && n < 1) continue;
    if (finite_time_m && n < -*finite_time_m) continue;
    SummabilityTerm t{n, c, weights.weight(n), 0.0};
    t.term = t.weight * c;
    parts.push_back(t.term);
    result.terms.push_back(t);
  }
  if (weights.kind != StripWeighting::unit) {
    result.window_term = max_window_mass(mu, 2.0).mass;
    parts.push_back(result.window_term);
  }
  if (finite_time_m) {
    const double bound = std::ldexp(1.0, -*finite_time_m);
    result.head_intensity = alpha_intensity(restrict_re_at_most(mu, bound), q);
    parts.push_back(result.head_intensity);
  }
  result.value = pairwise_sum(parts);
  return result;
}

}  // namespace carleson
