#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <limits>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "specsum/errors.hpp"

namespace specsum {

/// A real root together with its detected multiplicity.
struct Root {
  double value = 0.0;
  int multiplicity = 1;
};

/// Roots sorted ascending; values are pairwise distinct after merging.
using RootList = std::vector<Root>;

/// Dense real univariate polynomial, coefficients stored in ascending
/// degree. The zero polynomial is represented as {0}.
class Poly {
 public:
  Poly() : coeffs_{0.0} {}

  explicit Poly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) coeffs_.push_back(0.0);
    for (double c : coeffs_) {
      if (!std::isfinite(c)) throw InvalidInput("Poly: non-finite coefficient");
    }
    trim();
  }

  /// Monic polynomial with the given real roots (repeats allowed).
  static Poly from_roots(std::span<const double> roots) {
    Poly p(std::vector<double>{1.0});
    for (double r : roots) p = p * Poly(std::vector<double>{-r, 1.0});
    return p;
  }

  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.size() == 1 && coeffs_[0] == 0.0; }
  double leading() const { return coeffs_.back(); }
  const std::vector<double>& coeffs() const { return coeffs_; }

  /// Horner evaluation.
  double eval(double x) const {
    double acc = coeffs_.back();
    for (std::size_t i = coeffs_.size() - 1; i-- > 0;) acc = acc * x + coeffs_[i];
    return acc;
  }

  /// Formal derivative; the derivative of a constant is the zero polynomial.
  Poly derivative() const {
    if (degree() == 0) return Poly();
    std::vector<double> d(coeffs_.size() - 1);
    for (std::size_t k = 1; k < coeffs_.size(); ++k) {
      d[k - 1] = coeffs_[k] * static_cast<double>(k);
    }
    return Poly(std::move(d));
  }

  /// Cauchy bound: every real root lies strictly inside [-B, B].
  double cauchy_root_bound() const {
    double top = 0.0;
    for (std::size_t k = 0; k + 1 < coeffs_.size(); ++k) {
      top = std::max(top, std::abs(coeffs_[k]));
    }
    return 1.0 + top / std::abs(coeffs_.back());
  }

  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    std::vector<double> out(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
    for (std::size_t i = 0; i < a.coeffs_.size(); ++i) {
      for (std::size_t j = 0; j < b.coeffs_.size(); ++j) {
        out[i + j] += a.coeffs_[i] * b.coeffs_[j];
      }
    }
    return Poly(std::move(out));
  }

 private:
  void trim() {
    while (coeffs_.size() > 1 && coeffs_.back() == 0.0) coeffs_.pop_back();
  }

  std::vector<double> coeffs_;
};

/// Returns p + c (constant term shifted).
inline Poly add_constant(const Poly& p, double c) {
  std::vector<double> coeffs = p.coeffs();
  coeffs[0] += c;
  return Poly(std::move(coeffs));
}

namespace detail {

/// Magnitude bound used to scale residual thresholds: sum |a_k| max(1,|x|)^k.
/// Floored at |x| = 1 so the threshold tracks the coefficient scale even at
/// roots near the origin.
inline double eval_scale(const Poly& p, double x) {
  const double b = std::max(1.0, std::abs(x));
  double t = 1.0;
  double s = 0.0;
  for (double c : p.coeffs()) {
    s += std::abs(c) * t;
    t *= b;
  }
  return s;
}

inline double bisect_and_polish(const Poly& p, const Poly& dp, double lo,
                                double hi, double flo, double tol) {
  const double lo0 = lo;
  const double hi0 = hi;
  for (int it = 0; it < 200 && (hi - lo) > tol; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = p.eval(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  double v = 0.5 * (lo + hi);
  double best = std::abs(p.eval(v));
  for (int it = 0; it < 3; ++it) {
    const double d = dp.eval(v);
    if (d == 0.0) break;
    const double w = v - p.eval(v) / d;
    if (!(w >= lo0 && w <= hi0)) break;
    const double aw = std::abs(p.eval(w));
    if (aw < best) {
      v = w;
      best = aw;
    } else {
      break;
    }
  }
  return v;
}

/// Decides whether a critical point tau (a root of p' of multiplicity
/// dmult) is a root of p, in which case its multiplicity is dmult + 1.
/// Two complementary criteria: the residual sits at the evaluation-noise
/// floor, or the implied distance to a root of that multiplicity,
/// (m! |p(tau)| / |p^(m)(tau)|)^{1/m}, falls inside the merge radius.
/// A plain residual threshold cannot serve here: clustered multiple roots
/// push genuinely nonzero critical values far below coefficient-scale
/// thresholds.
inline bool critical_point_is_root(const Poly& p, double tau, double ptau,
                                   int dmult, double tol) {
  const double noise = eval_scale(p, tau) * 256.0 *
                       std::numeric_limits<double>::epsilon();
  if (std::abs(ptau) <= noise) return true;
  const int m = dmult + 1;
  Poly der = p;
  double mfact = 1.0;
  for (int j = 1; j <= m; ++j) {
    der = der.derivative();
    mfact *= j;
  }
  const double dm = std::abs(der.eval(tau));
  if (dm == 0.0) return false;
  const double implied = std::pow(mfact * std::abs(ptau) / dm, 1.0 / m);
  return implied <= 10.0 * tol;
}

inline RootList real_roots_rec(const Poly& p, double tol) {
  if (p.degree() == 1) {
    return {{-p.coeffs()[0] / p.coeffs()[1], 1}};
  }

  const Poly dp = p.derivative();
  const RootList crit = real_roots_rec(dp, tol);
  const double bound = p.cauchy_root_bound();

  // Bracket points: the Cauchy bound plus every critical point. Between
  // consecutive points p is strictly monotonic, so it has at most one zero
  // there, and bisection finds it.
  std::vector<double> pts{-bound};
  std::vector<int> dmult{0};
  for (const Root& r : crit) {
    if (r.value > -bound && r.value < bound) {
      pts.push_back(r.value);
      dmult.push_back(r.multiplicity);
    }
  }
  pts.push_back(bound);
  dmult.push_back(0);

  const std::size_t m = pts.size();
  std::vector<double> val(m);
  std::vector<bool> isroot(m, false);
  for (std::size_t i = 0; i < m; ++i) val[i] = p.eval(pts[i]);
  for (std::size_t i = 1; i + 1 < m; ++i) {
    isroot[i] = critical_point_is_root(p, pts[i], val[i], dmult[i], tol);
  }

  RootList out;
  // A critical point where p vanishes is a root whose multiplicity exceeds
  // the critical point's multiplicity as a root of p' by exactly one.
  for (std::size_t i = 1; i + 1 < m; ++i) {
    if (isroot[i]) out.push_back({pts[i], dmult[i] + 1});
  }
  // Intervals adjacent to a flagged root contain no further zero: p is
  // monotonic there and already vanishes at the shared endpoint.
  for (std::size_t i = 0; i + 1 < m; ++i) {
    if (isroot[i] || isroot[i + 1]) continue;
    if ((val[i] < 0.0) != (val[i + 1] < 0.0)) {
      out.push_back(
          {bisect_and_polish(p, dp, pts[i], pts[i + 1], val[i], tol), 1});
    }
  }

  std::sort(out.begin(), out.end(),
            [](const Root& a, const Root& b) { return a.value < b.value; });

  RootList merged;
  for (const Root& r : out) {
    if (!merged.empty() && r.value - merged.back().value <= 10.0 * tol) {
      Root& b = merged.back();
      const double w = b.multiplicity + r.multiplicity;
      b.value = (b.value * b.multiplicity + r.value * r.multiplicity) / w;
      b.multiplicity += r.multiplicity;
    } else {
      merged.push_back(r);
    }
  }

  int total = 0;
  for (const Root& r : merged) total += r.multiplicity;
  if (total > p.degree()) {
    throw IllConditioned("real_roots: recovered multiplicities exceed degree " +
                         std::to_string(p.degree()) + "; tighten tol");
  }
  for (std::size_t i = 0; i + 1 < merged.size(); ++i) {
    if (merged[i + 1].value - merged[i].value <= 10.0 * tol) {
      throw IllConditioned("real_roots: unmerged root cluster near " +
                           std::to_string(merged[i].value));
    }
  }
  return merged;
}

}  // namespace detail

/**
 * All real roots of p with multiplicities, each located within tol.
 *
 * Roots of p' are isolated recursively; p is then bisected on the intervals
 * cut out by consecutive critical points and by the Cauchy bound. Roots
 * closer than 10*tol are merged with summed multiplicity.
 */
inline RootList real_roots(const Poly& p, double tol = 1e-12) {
  if (!(tol > 0.0)) throw InvalidInput("real_roots: tol must be positive");
  if (p.is_zero() || p.degree() < 1) {
    throw InvalidInput("real_roots: degree must be at least 1");
  }
  return detail::real_roots_rec(p, tol);
}

/// Real roots of p', sorted ascending. May return fewer than degree-1
/// points when p' has complex roots.
inline RootList critical_points(const Poly& p, double tol = 1e-12) {
  if (p.degree() < 2) {
    throw InvalidInput("critical_points: degree must be at least 2");
  }
  return real_roots(p.derivative(), tol);
}

enum class CriticalKind { LocalMax, LocalMin, Inflection };

struct CriticalPoint {
  double x = 0.0;
  double value = 0.0;       // p(x)
  CriticalKind kind = CriticalKind::Inflection;
  int multiplicity = 1;     // multiplicity as a root of p'
};

/// Critical points of p classified by the sign of p'' (falling back to the
/// sign change of p' across the point when p'' vanishes there).
inline std::vector<CriticalPoint> classify_critical_points(const Poly& p,
                                                           double tol = 1e-12) {
  const Poly dp = p.derivative();
  const RootList crit = critical_points(p, tol);
  const Poly ddp = dp.derivative();

  std::vector<CriticalPoint> out;
  out.reserve(crit.size());
  for (std::size_t i = 0; i < crit.size(); ++i) {
    const double x = crit[i].value;
    CriticalPoint cp{x, p.eval(x), CriticalKind::Inflection,
                     crit[i].multiplicity};
    const double second = ddp.eval(x);
    if (std::abs(second) > detail::eval_scale(ddp, x) * 1e-10) {
      cp.kind = second < 0.0 ? CriticalKind::LocalMax : CriticalKind::LocalMin;
    } else {
      // Sample p' strictly inside the neighbouring critical-point gaps,
      // where its sign is constant.
      const double gl = i == 0 ? 1.0 : 0.5 * (x - crit[i - 1].value);
      const double gr = i + 1 == crit.size() ? 1.0 : 0.5 * (crit[i + 1].value - x);
      const double sl = dp.eval(x - gl);
      const double sr = dp.eval(x + gr);
      if (sl > 0.0 && sr < 0.0) {
        cp.kind = CriticalKind::LocalMax;
      } else if (sl < 0.0 && sr > 0.0) {
        cp.kind = CriticalKind::LocalMin;
      }
    }
    out.push_back(cp);
  }
  return out;
}

struct Extrema {
  std::vector<double> maxima;  // p at each local maximum, ordered by position
  std::vector<double> minima;  // p at each local minimum, ordered by position
};

/// Values of p at its local extrema. Non-extremum inflection points are
/// excluded from both lists; that is the documented behaviour, not a failure.
inline Extrema local_extreme_values(const Poly& p, double tol = 1e-12) {
  if (p.degree() < 2) {
    throw InvalidInput("local_extreme_values: degree must be at least 2");
  }
  if (!(p.leading() > 0.0)) {
    throw InvalidInput("local_extreme_values: leading coefficient must be positive");
  }
  Extrema ext;
  for (const CriticalPoint& cp : classify_critical_points(p, tol)) {
    if (cp.kind == CriticalKind::LocalMax) ext.maxima.push_back(cp.value);
    if (cp.kind == CriticalKind::LocalMin) ext.minima.push_back(cp.value);
  }
  return ext;
}

}  // namespace specsum
