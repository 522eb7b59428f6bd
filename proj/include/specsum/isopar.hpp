#pragma once

#include <cmath>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

#include "specsum/errors.hpp"

namespace specsum {

namespace detail {

constexpr double kPoleTol = 1e-8;

/// Distance from angle to the nearest multiple of pi.
inline double pole_distance(double angle) {
  return std::abs(std::remainder(angle, std::numbers::pi));
}

inline void require_off_pole(double angle) {
  if (pole_distance(angle) < kPoleTol) {
    throw PoleAngle("angle " + std::to_string(angle) +
                    " is within tolerance of a cotangent pole");
  }
}

inline double cot(double angle) { return std::cos(angle) / std::sin(angle); }

}  // namespace detail

/**
 * An isoparametric family on the unit sphere: g distinct principal
 * curvatures cot(theta + (i-1) pi / g) whose multiplicities alternate
 * between m1 and m2 (equal when g is odd). The hypersurface dimension is
 * n = g (m1 + m2) / 2. For g = 1 the alternation degenerates to a single
 * curvature and m2 is required to equal m1.
 */
struct IsoparametricFamily {
  int g = 1;
  int m1 = 1;
  int m2 = 1;

  static IsoparametricFamily make(int g, int m1, int m2) {
    if (g != 1 && g != 2 && g != 3 && g != 4 && g != 6) {
      throw InvalidInput("IsoparametricFamily: g must be one of 1, 2, 3, 4, 6");
    }
    if (m1 < 1 || m2 < 1) {
      throw InvalidInput("IsoparametricFamily: multiplicities must be positive");
    }
    if (g == 1) m2 = m1;  // single curvature; m2 carries no information
    if (g % 2 == 1 && m1 != m2) {
      throw InvalidInput("IsoparametricFamily: odd g requires equal multiplicities");
    }
    return {g, m1, m2};
  }

  int n() const { return g * (m1 + m2) / 2; }
};

/// The g principal curvature values with their multiplicities at angle theta.
inline std::vector<std::pair<double, int>> principal_curvatures(
    const IsoparametricFamily& fam, double theta) {
  std::vector<std::pair<double, int>> out;
  out.reserve(fam.g);
  for (int i = 0; i < fam.g; ++i) {
    const double angle = theta + i * std::numbers::pi / fam.g;
    detail::require_off_pole(angle);
    out.emplace_back(detail::cot(angle), i % 2 == 0 ? fam.m1 : fam.m2);
  }
  return out;
}

struct CurvatureProfile {
  double theta = 0.0;
  std::vector<std::pair<double, int>> curvatures;
  double mean_curvature = 0.0;       // H
  double second_form_norm_sq = 0.0;  // S
  double scalar_curvature = 0.0;     // n(n-1) + H^2 - S
};

inline CurvatureProfile curvature_profile(const IsoparametricFamily& fam,
                                          double theta) {
  CurvatureProfile p;
  p.theta = theta;
  p.curvatures = principal_curvatures(fam, theta);
  for (const auto& [c, m] : p.curvatures) {
    p.mean_curvature += m * c;
    p.second_form_norm_sq += m * c * c;
  }
  const double n = fam.n();
  p.scalar_curvature = n * (n - 1.0) +
                       p.mean_curvature * p.mean_curvature -
                       p.second_form_norm_sq;
  return p;
}

/**
 * Scalar curvature in closed form. Equal multiplicities m1 = m2 = m give
 *   n (n - g) (1 + cot^2(g theta)),
 * vanishing exactly when g = n. Unequal multiplicities (g even) give, with
 * t = cot(g theta / 2),
 *   (g^2/4) [ m1 (m1-1)(1 + t^2) + m2 (m2-1)(1 + 1/t^2) ],
 * vanishing exactly when m1 = m2 = 1.
 */
inline double scalar_curvature_closed_form(const IsoparametricFamily& fam,
                                           double theta) {
  for (int i = 0; i < fam.g; ++i) {
    detail::require_off_pole(theta + i * std::numbers::pi / fam.g);
  }
  const double n = fam.n();
  if (fam.m1 == fam.m2) {
    const double c = detail::cot(fam.g * theta);
    return n * (n - fam.g) * (1.0 + c * c);
  }
  const double t = detail::cot(0.5 * fam.g * theta);
  const double a = static_cast<double>(fam.m1) * (fam.m1 - 1);
  const double b = static_cast<double>(fam.m2) * (fam.m2 - 1);
  double acc = 0.0;
  if (a > 0.0) acc += a * (1.0 + t * t);
  if (b > 0.0) acc += b * (1.0 + 1.0 / (t * t));
  return 0.25 * fam.g * fam.g * acc;
}

/// Root of H(theta) = 0 inside the bracket, by bisection. H is strictly
/// decreasing on each smooth branch, so a sign change pins a unique zero.
inline double minimal_theta(const IsoparametricFamily& fam, double lo,
                            double hi) {
  if (!(lo < hi)) throw InvalidInput("minimal_theta: empty bracket");
  auto h = [&](double th) { return curvature_profile(fam, th).mean_curvature; };
  double flo = h(lo);
  double fhi = h(hi);
  if (flo == 0.0) return lo;
  if (fhi == 0.0) return hi;
  if ((flo < 0.0) == (fhi < 0.0)) {
    throw NoSignChange("minimal_theta: mean curvature does not change sign on the bracket");
  }
  for (int it = 0; it < 200 && hi - lo > 1e-15; ++it) {
    const double mid = 0.5 * (lo + hi);
    const double fm = h(mid);
    if (fm == 0.0) return mid;
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// Default bracket: one period (0, pi/g) of the curvature family, where H
/// falls from +inf to -inf and has exactly one zero.
inline double minimal_theta(const IsoparametricFamily& fam) {
  const double margin = 1e-6;
  return minimal_theta(fam, margin, std::numbers::pi / fam.g - margin);
}

struct CotIdentity {
  double sum_lhs = 0.0;    // sum_k cot(theta + (k-1) pi / n)
  double sum_rhs = 0.0;    // n cot(n theta)
  double sumsq_lhs = 0.0;  // sum_k cot^2(theta + (k-1) pi / n)
  double sumsq_rhs = 0.0;  // n^2 cot^2(n theta) + n^2 - n
};

/// Both cotangent identities at once; the caller compares the sides.
inline CotIdentity cot_sum_identity(int n, double theta) {
  if (n < 1) throw InvalidInput("cot_sum_identity: n must be positive");
  detail::require_off_pole(n * theta);
  CotIdentity id;
  for (int k = 0; k < n; ++k) {
    const double angle = theta + k * std::numbers::pi / n;
    detail::require_off_pole(angle);
    const double c = detail::cot(angle);
    id.sum_lhs += c;
    id.sumsq_lhs += c * c;
  }
  const double cn = detail::cot(n * theta);
  id.sum_rhs = n * cn;
  id.sumsq_rhs = static_cast<double>(n) * n * cn * cn +
                 static_cast<double>(n) * n - n;
  return id;
}

/// (prod_k sin(theta + (k-1) pi / n), 2^{1-n} sin(n theta)) for
/// theta in the open interval (0, pi/n).
inline std::pair<double, double> sin_product_identity(int n, double theta) {
  if (n < 1) throw InvalidInput("sin_product_identity: n must be positive");
  if (!(theta > 0.0 && theta < std::numbers::pi / n)) {
    throw InvalidInput("sin_product_identity: theta must lie in (0, pi/n)");
  }
  double prod = 1.0;
  for (int k = 0; k < n; ++k) {
    prod *= std::sin(theta + k * std::numbers::pi / n);
  }
  return {prod, std::ldexp(std::sin(n * theta), 1 - n)};
}

}  // namespace specsum
