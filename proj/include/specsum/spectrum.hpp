#pragma once

#include <cmath>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "specsum/errors.hpp"
#include "specsum/poly.hpp"
#include "specsum/symfunc.hpp"

namespace specsum {

struct SpectrumEntry {
  double value = 0.0;
  int multiplicity = 1;
};

/// Sorted eigenvalue list with multiplicities summing to the ambient count n.
struct Spectrum {
  int n = 0;
  std::vector<SpectrumEntry> entries;  // values strictly increasing

  static Spectrum from_entries(std::vector<SpectrumEntry> entries) {
    Spectrum s;
    int total = 0;
    for (std::size_t i = 0; i < entries.size(); ++i) {
      if (entries[i].multiplicity < 1) {
        throw InvalidInput("Spectrum: multiplicities must be positive");
      }
      if (!std::isfinite(entries[i].value)) {
        throw InvalidInput("Spectrum: non-finite eigenvalue");
      }
      if (i > 0 && !(entries[i].value > entries[i - 1].value)) {
        throw InvalidInput("Spectrum: eigenvalues must be strictly increasing");
      }
      total += entries[i].multiplicity;
    }
    if (total < 1) throw InvalidInput("Spectrum: empty");
    s.entries = std::move(entries);
    s.n = total;
    return s;
  }

  bool all_simple() const {
    for (const auto& e : entries) {
      if (e.multiplicity != 1) return false;
    }
    return true;
  }

  /// Eigenvalues repeated by multiplicity, ascending: lambda_1..lambda_n.
  std::vector<double> expanded() const {
    std::vector<double> out;
    out.reserve(n);
    for (const auto& e : entries) {
      for (int k = 0; k < e.multiplicity; ++k) out.push_back(e.value);
    }
    return out;
  }

  /// Ordered multiplicity sequence (m_1, ..., m_g).
  std::vector<int> multiplicities() const {
    std::vector<int> out;
    out.reserve(entries.size());
    for (const auto& e : entries) out.push_back(e.multiplicity);
    return out;
  }
};

/// p_k = sum_i m_i mu_i^k for k = 1..k_max.
inline PowerSums power_sums_of(const Spectrum& s, int k_max) {
  if (k_max < 1) throw InvalidInput("power_sums_of: k_max must be positive");
  PowerSums p(k_max, 0.0);
  for (const auto& e : s.entries) {
    double t = 1.0;
    for (int k = 0; k < k_max; ++k) {
      t *= e.value;
      p[k] += e.multiplicity * t;
    }
  }
  return p;
}

/**
 * Everything derived from the prescribed power sums c = (c_1..c_{n-1}):
 * the elementary symmetric values d, the affine offset C of the top
 * elementary symmetric function, and the f-independent part of the
 * characteristic polynomial,
 *   base(x) = x^n - d_1 x^{n-1} + d_2 x^{n-2} - ... + (-1)^{n-1} d_{n-1} x.
 * The full characteristic polynomial at a given top power sum f is then
 *   base(x) - f/n + (-1)^n C.
 */
struct ConstraintModel {
  int n = 0;
  std::vector<double> c;  // prescribed power sums p_1..p_{n-1}
  std::vector<double> d;  // elementary symmetric values e_1..e_{n-1}
  double offset = 0.0;    // C
  Poly base;

  /// Sign-adjusted offset (-1)^n C appearing in the characteristic polynomial.
  double signed_offset() const { return (n % 2 == 0 ? 1.0 : -1.0) * offset; }
};

inline ConstraintModel build_model(int n, std::span<const double> c) {
  if (n < 2) throw InvalidInput("build_model: n must be at least 2");
  if (static_cast<int>(c.size()) != n - 1) {
    throw InvalidInput("build_model: need exactly n-1 power-sum constants, got " +
                       std::to_string(c.size()));
  }
  detail::require_finite(c, "build_model");

  ConstraintModel m;
  m.n = n;
  m.c.assign(c.begin(), c.end());
  m.d = power_sums_to_elementary(c);
  m.offset = top_elementary_offset(c);

  std::vector<double> coeffs(n + 1, 0.0);
  coeffs[n] = 1.0;
  for (int k = 1; k <= n - 1; ++k) {
    coeffs[n - k] = (k % 2 == 1 ? -1.0 : 1.0) * m.d[k - 1] + 0.0;  // kill -0.0
  }
  m.base = Poly(std::move(coeffs));
  return m;
}

/// Characteristic polynomial at top power sum f: base(x) - f/n + (-1)^n C.
inline Poly char_poly_at(const ConstraintModel& m, double f) {
  if (!std::isfinite(f)) throw InvalidInput("char_poly_at: f must be finite");
  return add_constant(m.base, -f / m.n + m.signed_offset());
}

/**
 * Feasible range [lower, upper] of the top power sum. upper_critical is the
 * least local-maximum value of the base polynomial (+inf when it has none),
 * lower_critical the greatest local-minimum value (-inf when none), and
 *   upper = n (upper_critical + (-1)^n C),  lower = n (lower_critical + (-1)^n C).
 */
struct FeasibleInterval {
  double lower = -std::numeric_limits<double>::infinity();
  double upper = std::numeric_limits<double>::infinity();
  double lower_critical = -std::numeric_limits<double>::infinity();
  double upper_critical = std::numeric_limits<double>::infinity();
};

inline FeasibleInterval feasible_interval(const ConstraintModel& m,
                                          double tol = 1e-12) {
  const Extrema ext = local_extreme_values(m.base, tol);
  FeasibleInterval iv;
  for (double v : ext.maxima) iv.upper_critical = std::min(iv.upper_critical, v);
  for (double v : ext.minima) iv.lower_critical = std::max(iv.lower_critical, v);
  iv.lower = m.n * (iv.lower_critical + m.signed_offset());
  iv.upper = m.n * (iv.upper_critical + m.signed_offset());
  return iv;
}

namespace detail {
inline Spectrum spectrum_from_char_poly(int n, const Poly& char_poly, double f,
                                        double tol) {
  const RootList roots = real_roots(char_poly, tol);
  int total = 0;
  for (const Root& r : roots) total += r.multiplicity;
  if (total < n) {
    throw NonRealRoots("spectrum_at: " + std::to_string(total) + " of " +
                       std::to_string(n) + " roots are real at f=" +
                       std::to_string(f));
  }
  if (total > n) {
    throw IllConditioned("spectrum_at: spurious root multiplicity at f=" +
                         std::to_string(f));
  }
  std::vector<SpectrumEntry> entries;
  entries.reserve(roots.size());
  for (const Root& r : roots) entries.push_back({r.value, r.multiplicity});
  return Spectrum::from_entries(std::move(entries));
}
}  // namespace detail

/// Spectrum realizing (c_1..c_{n-1}, f), i.e. the real roots of the
/// characteristic polynomial at f. Throws NonRealRoots when fewer than n
/// real roots exist (f outside the feasible interval).
inline Spectrum spectrum_at(const ConstraintModel& m, double f,
                            double tol = 1e-12) {
  return detail::spectrum_from_char_poly(m.n, char_poly_at(m, f), f, tol);
}

enum class Region { AtLower, Interior, AtUpper };
enum class Band { NearLower, Core, NearUpper };

struct RegionClassification {
  Region region = Region::Interior;
  std::optional<Band> band;  // set only for interior points
};

/// Locates f relative to the feasible interval: at an endpoint (within
/// 1e-9 * (1 + |endpoint|)), or interior with the eps-band refinement
/// near-lower (lower < f < lower+eps), core (lower+eps <= f <= upper-eps),
/// near-upper (upper-eps < f < upper).
inline RegionClassification classify_point(const ConstraintModel&,
                                           const FeasibleInterval& iv, double f,
                                           double eps) {
  if (!std::isfinite(iv.lower) || !std::isfinite(iv.upper)) {
    throw InvalidInput("classify_point: both endpoints must be finite");
  }
  if (!(eps > 0.0 && eps < 0.5 * (iv.upper - iv.lower))) {
    throw InvalidInput("classify_point: eps must lie in (0, (upper-lower)/2)");
  }
  const double tol_lo = 1e-9 * (1.0 + std::abs(iv.lower));
  const double tol_hi = 1e-9 * (1.0 + std::abs(iv.upper));
  if (f < iv.lower - tol_lo || f > iv.upper + tol_hi) {
    throw OutOfRange("classify_point: f=" + std::to_string(f) +
                     " outside [" + std::to_string(iv.lower) + ", " +
                     std::to_string(iv.upper) + "]");
  }
  if (std::abs(f - iv.lower) <= tol_lo) return {Region::AtLower, std::nullopt};
  if (std::abs(f - iv.upper) <= tol_hi) return {Region::AtUpper, std::nullopt};
  Band band = Band::Core;
  if (f < iv.lower + eps) band = Band::NearLower;
  else if (f > iv.upper - eps) band = Band::NearUpper;
  return {Region::Interior, band};
}

enum class IntervalEnd { Lower, Upper };

struct BoundaryPattern {
  Spectrum spectrum;
  /// 0-based expanded positions where a doubled eigenvalue starts.
  std::vector<int> doubled_positions;
  bool verified = false;
};

/**
 * Spectrum at a finite endpoint of the feasible interval, with the
 * multiplicity layout checked: every multiplicity is at most 2, each doubled
 * value sits at a critical point of the base polynomial of the admissible
 * kind (local maxima at the upper end, local minima at the lower end), and
 * the expanded start positions carry the admissible parity. Violations raise
 * PatternViolation rather than being silently accepted; they indicate tied
 * critical values interacting with roundoff.
 */
inline BoundaryPattern boundary_pattern(const ConstraintModel& m,
                                        IntervalEnd end, double tol = 1e-12) {
  const FeasibleInterval iv = feasible_interval(m, tol);
  const double endpoint = end == IntervalEnd::Lower ? iv.lower : iv.upper;
  if (!std::isfinite(endpoint)) {
    throw InvalidInput("boundary_pattern: requested endpoint is not finite");
  }

  // At an endpoint the characteristic polynomial is base minus the binding
  // critical value. Shifting by that value directly keeps the touching root
  // at the evaluation-noise floor; going through f and back would not.
  const double binding =
      end == IntervalEnd::Lower ? iv.lower_critical : iv.upper_critical;
  BoundaryPattern bp;
  bp.spectrum = detail::spectrum_from_char_poly(
      m.n, add_constant(m.base, -binding), endpoint, tol);

  int pos = 0;
  for (const auto& e : bp.spectrum.entries) {
    if (e.multiplicity > 2) {
      throw PatternViolation("boundary_pattern: eigenvalue " +
                             std::to_string(e.value) + " has multiplicity " +
                             std::to_string(e.multiplicity) + " > 2");
    }
    if (e.multiplicity == 2) bp.doubled_positions.push_back(pos);
    pos += e.multiplicity;
  }

  // Parity of the 1-based expanded start index: congruent to n at the upper
  // end, to n+1 at the lower end.
  for (int p0 : bp.doubled_positions) {
    const int start = p0 + 1;
    const bool ok = end == IntervalEnd::Upper ? (start % 2 == m.n % 2)
                                              : (start % 2 != m.n % 2);
    if (!ok) {
      throw PatternViolation(
          "boundary_pattern: doubled eigenvalue at expanded position " +
          std::to_string(start) + " violates the parity rule");
    }
  }

  const auto cps = classify_critical_points(m.base, tol);
  const CriticalKind want =
      end == IntervalEnd::Upper ? CriticalKind::LocalMax : CriticalKind::LocalMin;
  for (int p0 : bp.doubled_positions) {
    const double v = bp.spectrum.expanded()[p0];
    bool matched = false;
    for (const auto& cp : cps) {
      if (std::abs(cp.x - v) <= 1e-7 * (1.0 + std::abs(v))) {
        matched = cp.kind == want;
        break;
      }
    }
    if (!matched) {
      throw PatternViolation("boundary_pattern: doubled eigenvalue " +
                             std::to_string(v) +
                             " is not at an admissible critical point");
    }
  }

  bp.verified = true;
  return bp;
}

}  // namespace specsum
