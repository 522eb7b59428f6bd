#pragma once

#include <cmath>
#include <cstddef>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "specsum/errors.hpp"
#include "specsum/poly.hpp"
#include "specsum/spectrum.hpp"

namespace specsum {

namespace detail {

constexpr double kMinEigenvalueGap = 1e-12;

inline void require_distinct(std::span<const double> lam) {
  for (std::size_t i = 0; i < lam.size(); ++i) {
    for (std::size_t j = i + 1; j < lam.size(); ++j) {
      if (std::abs(lam[i] - lam[j]) < kMinEigenvalueGap) {
        throw RepeatedEigenvalue("eigenvalue gap below " +
                                 std::to_string(kMinEigenvalueGap));
      }
    }
  }
}

inline double factorial(int k) {
  double r = 1.0;
  for (int i = 2; i <= k; ++i) r *= i;
  return r;
}

}  // namespace detail

/// Dense square matrix, row-major; just enough for the gradient tables.
struct SquareMatrix {
  int n = 0;
  std::vector<double> a;

  explicit SquareMatrix(int n_) : n(n_), a(static_cast<std::size_t>(n_) * n_, 0.0) {}
  double& operator()(int i, int j) { return a[static_cast<std::size_t>(i) * n + j]; }
  double operator()(int i, int j) const { return a[static_cast<std::size_t>(i) * n + j]; }
};

/**
 * Eigenvalue gradients in closed form. Row i, column j holds the derivative
 * of the i-th eigenvalue in the j-th frame direction:
 *   grad(i,j) = (-1)^{n+1} (f_j / n) / prod_{k != i} (lambda_k - lambda_i).
 */
inline SquareMatrix lambda_gradient_closed_form(std::span<const double> lam,
                                                std::span<const double> f_grad) {
  const int n = static_cast<int>(lam.size());
  if (n < 2) throw InvalidInput("lambda_gradient_closed_form: need n >= 2");
  if (f_grad.size() != lam.size()) {
    throw InvalidInput("lambda_gradient_closed_form: f_grad size mismatch");
  }
  detail::require_distinct(lam);
  const double sign = n % 2 == 0 ? -1.0 : 1.0;  // (-1)^{n+1}
  SquareMatrix out(n);
  for (int i = 0; i < n; ++i) {
    double prod = 1.0;
    for (int k = 0; k < n; ++k) {
      if (k != i) prod *= lam[k] - lam[i];
    }
    for (int j = 0; j < n; ++j) {
      out(i, j) = sign * (f_grad[j] / n) / prod;
    }
  }
  return out;
}

/**
 * The same gradients by a direct solve of the differentiated constraint
 * system: the Vandermonde matrix D with D(k,i) = lambda_i^k (k = 0..n-1)
 * against the right-hand side (0, ..., 0, f_j/n) per column j. Partial
 * pivoting plus one step of iterative refinement.
 */
inline SquareMatrix lambda_gradient_linear_solve(std::span<const double> lam,
                                                 std::span<const double> f_grad,
                                                 double tol = 1e-12) {
  const int n = static_cast<int>(lam.size());
  if (n < 2) throw InvalidInput("lambda_gradient_linear_solve: need n >= 2");
  if (f_grad.size() != lam.size()) {
    throw InvalidInput("lambda_gradient_linear_solve: f_grad size mismatch");
  }
  for (int i = 0; i < n; ++i) {
    for (int j = i + 1; j < n; ++j) {
      if (std::abs(lam[i] - lam[j]) < tol) {
        throw SingularSystem("lambda_gradient_linear_solve: eigenvalue gap below tol");
      }
    }
  }

  SquareMatrix d(n);
  for (int i = 0; i < n; ++i) {
    double t = 1.0;
    for (int k = 0; k < n; ++k) {
      d(k, i) = t;
      t *= lam[i];
    }
  }

  // LU with partial pivoting on a copy of D.
  SquareMatrix lu = d;
  std::vector<int> piv(n);
  for (int i = 0; i < n; ++i) piv[i] = i;
  for (int col = 0; col < n; ++col) {
    int best = col;
    for (int r = col + 1; r < n; ++r) {
      if (std::abs(lu(r, col)) > std::abs(lu(best, col))) best = r;
    }
    if (lu(best, col) == 0.0) {
      throw SingularSystem("lambda_gradient_linear_solve: zero pivot");
    }
    if (best != col) {
      for (int k = 0; k < n; ++k) std::swap(lu.a[best * n + k], lu.a[col * n + k]);
      std::swap(piv[best], piv[col]);
    }
    for (int r = col + 1; r < n; ++r) {
      const double m = lu(r, col) / lu(col, col);
      lu(r, col) = m;
      for (int k = col + 1; k < n; ++k) lu(r, k) -= m * lu(col, k);
    }
  }

  auto lu_solve = [&](const std::vector<double>& rhs) {
    std::vector<double> x(n);
    for (int i = 0; i < n; ++i) x[i] = rhs[piv[i]];
    for (int i = 0; i < n; ++i) {
      for (int k = 0; k < i; ++k) x[i] -= lu(i, k) * x[k];
    }
    for (int i = n - 1; i >= 0; --i) {
      for (int k = i + 1; k < n; ++k) x[i] -= lu(i, k) * x[k];
      x[i] /= lu(i, i);
    }
    return x;
  };

  SquareMatrix out(n);
  std::vector<double> rhs(n, 0.0);
  for (int j = 0; j < n; ++j) {
    std::fill(rhs.begin(), rhs.end(), 0.0);
    rhs[n - 1] = f_grad[j] / n;
    std::vector<double> x = lu_solve(rhs);
    // One refinement pass.
    std::vector<double> resid(n);
    for (int k = 0; k < n; ++k) {
      double acc = -rhs[k];
      for (int i = 0; i < n; ++i) acc += d(k, i) * x[i];
      resid[k] = acc;
    }
    const std::vector<double> corr = lu_solve(resid);
    for (int i = 0; i < n; ++i) out(i, j) = x[i] - corr[i];
  }
  return out;
}

/**
 * The strictly negative kernel controlling the exterior-derivative density:
 * the sum over ordered pairs p != q with p, q != r of
 *   1 / [ (l_r-l_p)(l_r-l_q) prod_{k != p}(l_k-l_p) prod_{l != q}(l_l-l_q) ].
 * Indices are 0-based.
 */
inline double dpsi_kernel(std::span<const double> lam, int r) {
  const int n = static_cast<int>(lam.size());
  if (n < 3) throw InvalidInput("dpsi_kernel: need n >= 3");
  if (r < 0 || r >= n) throw InvalidInput("dpsi_kernel: index out of range");
  detail::require_distinct(lam);

  // Full gap products prod_{k != p}(l_k - l_p), cached per index.
  std::vector<double> g(n, 1.0);
  for (int p = 0; p < n; ++p) {
    for (int k = 0; k < n; ++k) {
      if (k != p) g[p] *= lam[k] - lam[p];
    }
  }
  double total = 0.0;
  for (int p = 0; p < n; ++p) {
    if (p == r) continue;
    for (int q = 0; q < n; ++q) {
      if (q == r || q == p) continue;
      total += 1.0 / ((lam[r] - lam[p]) * (lam[r] - lam[q]) * g[p] * g[q]);
    }
  }
  return total;
}

/// u weight of an ordered index pair: 1 / [(l_i-l_j)^2 prod_{k != i,j}(l_k-l_j)].
/// The empty product at n = 2 equals 1.
inline double dfpsi_pair_weight(std::span<const double> lam, int i, int j) {
  const int n = static_cast<int>(lam.size());
  if (n < 2) throw InvalidInput("dfpsi_pair_weight: need n >= 2");
  if (i < 0 || i >= n || j < 0 || j >= n || i == j) {
    throw InvalidInput("dfpsi_pair_weight: need distinct indices in range");
  }
  detail::require_distinct(lam);
  const double gap = lam[i] - lam[j];
  double prod = gap * gap;
  for (int k = 0; k < n; ++k) {
    if (k != i && k != j) prod *= lam[k] - lam[j];
  }
  return 1.0 / prod;
}

/// Weight of f_i^2 in the df wedge psi density:
///   u_i = -(2 (n-2)! / n) sum_{j != i} u_ij.
inline double dfpsi_weight(std::span<const double> lam, int i) {
  const int n = static_cast<int>(lam.size());
  if (n < 2) throw InvalidInput("dfpsi_weight: need n >= 2");
  if (i < 0 || i >= n) throw InvalidInput("dfpsi_weight: index out of range");
  detail::require_distinct(lam);
  double sum = 0.0;
  for (int j = 0; j < n; ++j) {
    if (j != i) sum += dfpsi_pair_weight(lam, i, j);
  }
  return -(2.0 * detail::factorial(n - 2) / n) * sum;
}

/// Density of the (sign-adjusted) exterior derivative of the comparison form:
///   (n-2)! R_M + ((n-3)!/n^2) sum_r (-kernel(r)) f_r^2.
/// Non-negative whenever R_M >= 0, since the kernel is strictly negative.
inline double dpsi_density(std::span<const double> lam, double scalar_curvature,
                           std::span<const double> f_grad) {
  const int n = static_cast<int>(lam.size());
  if (n < 3) throw InvalidInput("dpsi_density: need n >= 3");
  if (f_grad.size() != lam.size()) {
    throw InvalidInput("dpsi_density: f_grad size mismatch");
  }
  detail::require_distinct(lam);
  double acc = detail::factorial(n - 2) * scalar_curvature;
  const double pref = detail::factorial(n - 3) / (static_cast<double>(n) * n);
  for (int r = 0; r < n; ++r) {
    acc += pref * (-dpsi_kernel(lam, r)) * f_grad[r] * f_grad[r];
  }
  return acc;
}

/// Density of df wedge psi: sum_i u_i f_i^2.
inline double dfpsi_density(std::span<const double> lam,
                            std::span<const double> f_grad) {
  const int n = static_cast<int>(lam.size());
  if (n < 2) throw InvalidInput("dfpsi_density: need n >= 2");
  if (f_grad.size() != lam.size()) {
    throw InvalidInput("dfpsi_density: f_grad size mismatch");
  }
  double acc = 0.0;
  for (int i = 0; i < n; ++i) acc += dfpsi_weight(lam, i) * f_grad[i] * f_grad[i];
  return acc;
}

/**
 * Closed-form limit of (-1)^n u_p at a boundary spectrum, for an index p
 * outside every doubled pair. Each doubled pair (i, i+1) with common value b
 * contributes through the expanded auxiliary polynomial
 *   H(x) = (beta_p - x)^2 prod_{k not in {p,i,i+1}} (beta_k - x),
 * as (-1)^{n+1} H'(b) / [ (beta_p - b)^4 prod_{k not in {p,i,i+1}} (beta_k - b)^2 ];
 * the remaining indices contribute their ordinary pair weights at the
 * boundary values. The total carries the prefactor 2 (n-2)! / n.
 */
inline double boundary_weight_limit(const ConstraintModel& m, IntervalEnd end,
                                    int p, double tol = 1e-12) {
  const BoundaryPattern bp = boundary_pattern(m, end, tol);
  const std::vector<double> beta = bp.spectrum.expanded();
  const int n = m.n;
  if (p < 0 || p >= n) throw InvalidInput("boundary_weight_limit: index out of range");

  std::set<int> paired;
  for (int s : bp.doubled_positions) {
    paired.insert(s);
    paired.insert(s + 1);
  }
  if (paired.count(p)) {
    throw IndexInDoubledPair("boundary_weight_limit: index " + std::to_string(p) +
                             " lies in a doubled pair; the limit diverges");
  }

  const double sign = n % 2 == 0 ? -1.0 : 1.0;  // (-1)^{n+1}
  double acc = 0.0;
  for (int s : bp.doubled_positions) {
    const double b = beta[s];
    Poly h = Poly(std::vector<double>{beta[p], -1.0}) *
             Poly(std::vector<double>{beta[p], -1.0});
    double dpb = beta[p] - b;
    double denom = dpb * dpb * dpb * dpb;
    for (int k = 0; k < n; ++k) {
      if (k == p || k == s || k == s + 1) continue;
      h = h * Poly(std::vector<double>{beta[k], -1.0});
      denom *= (beta[k] - b) * (beta[k] - b);
    }
    acc += sign * h.derivative().eval(b) / denom;
  }
  for (int j = 0; j < n; ++j) {
    if (j == p || paired.count(j)) continue;
    const double gap = beta[p] - beta[j];
    double prod = gap * gap;
    for (int k = 0; k < n; ++k) {
      if (k != p && k != j) prod *= beta[k] - beta[j];
    }
    acc += sign / prod;
  }
  return (2.0 * detail::factorial(n - 2) / n) * acc;
}

namespace detail {

/// Richardson extrapolation of v(h) = A + c1 h + c2 h^2 + ... sampled at a
/// geometric schedule h_k = h_0 q^k. Returns the most stable diagonal entry.
inline double richardson_limit(std::span<const double> v, double q) {
  const std::size_t k = v.size();
  if (k == 1) return v[0];
  std::vector<double> cur(v.begin(), v.end());
  double best = cur.back();
  double best_step = std::abs(cur[k - 1] - cur[k - 2]);
  double qm = 1.0;
  for (std::size_t m = 1; m < k; ++m) {
    qm *= q;
    std::vector<double> next(cur.size() - 1);
    for (std::size_t i = 0; i + 1 < cur.size(); ++i) {
      next[i] = (cur[i + 1] - qm * cur[i]) / (1.0 - qm);
    }
    const double step = next.size() > 1
                            ? std::abs(next.back() - next[next.size() - 2])
                            : std::abs(next.back() - cur.back());
    if (step < best_step) {
      best = next.back();
      best_step = step;
    }
    cur = std::move(next);
  }
  return best;
}

}  // namespace detail

struct ScanSample {
  double f = 0.0;
  double delta = 0.0;  // distance to the endpoint
  std::vector<double> u_signed;  // (-1)^n u_p per index
};

struct ScanIndexSummary {
  int index = 0;
  bool doubled = false;
  bool diverged = false;
  double min_value = 0.0;
  double max_value = 0.0;
  std::optional<double> extrapolated;  // converging indices only
  std::optional<double> closed_form;
  std::optional<double> rel_diff;
};

struct ScanReport {
  IntervalEnd end = IntervalEnd::Upper;
  double eps = 0.0;
  double endpoint = 0.0;
  std::vector<int> doubled_positions;
  std::vector<ScanSample> samples;
  std::vector<ScanIndexSummary> index_summaries;
  /// Extreme values of (-1)^n u over all indices and samples; the lower one
  /// is the empirical candidate -A at the upper end, the upper one mirrors
  /// it at the lower end.
  double empirical_min = 0.0;
  double empirical_max = 0.0;
  std::vector<std::string> diagnostics;
};

/**
 * Samples f on the geometric schedule endpoint -/+ eps 2^{-k} and tracks
 * (-1)^n u_p for every index. Indices inside a doubled pair of the boundary
 * pattern must blow up (positively at the upper end, negatively at the
 * lower end); the others converge, and their Richardson extrapolation is
 * compared against the closed-form boundary limit.
 */
inline ScanReport boundary_scan(const ConstraintModel& m, IntervalEnd end,
                                double eps = 1e-2, int n_samples = 30,
                                double tol = 1e-12) {
  if (!(eps > 0.0)) throw InvalidInput("boundary_scan: eps must be positive");
  if (n_samples < 4) throw InvalidInput("boundary_scan: need at least 4 samples");

  const BoundaryPattern bp = boundary_pattern(m, end, tol);
  const FeasibleInterval iv = feasible_interval(m, tol);
  const double endpoint = end == IntervalEnd::Lower ? iv.lower : iv.upper;
  const double width = iv.upper - iv.lower;
  if (std::isfinite(width) && !(eps < 0.5 * width)) {
    throw InvalidInput("boundary_scan: eps must be below half the interval width");
  }

  ScanReport rep;
  rep.end = end;
  rep.eps = eps;
  rep.endpoint = endpoint;
  rep.doubled_positions = bp.doubled_positions;

  std::set<int> paired;
  for (int s : bp.doubled_positions) {
    paired.insert(s);
    paired.insert(s + 1);
  }

  const double u_sign = m.n % 2 == 0 ? 1.0 : -1.0;  // (-1)^n
  for (int k = 0; k < n_samples; ++k) {
    const double delta = std::ldexp(eps, -k);
    const double f = end == IntervalEnd::Upper ? endpoint - delta : endpoint + delta;
    Spectrum s;
    try {
      s = spectrum_at(m, f, tol);
    } catch (const NonRealRoots&) {
      rep.diagnostics.push_back("sample at delta=" + std::to_string(delta) +
                                " lost real roots; stopping");
      break;
    }
    if (!s.all_simple()) {
      rep.diagnostics.push_back("sample at delta=" + std::to_string(delta) +
                                " collapsed onto the boundary spectrum; stopping");
      break;
    }
    const std::vector<double> lam = s.expanded();
    ScanSample smp;
    smp.f = f;
    smp.delta = delta;
    smp.u_signed.reserve(m.n);
    for (int i = 0; i < m.n; ++i) {
      smp.u_signed.push_back(u_sign * dfpsi_weight(lam, i));
    }
    rep.samples.push_back(std::move(smp));
  }
  if (rep.samples.empty()) {
    throw IllConditioned("boundary_scan: no usable samples near the endpoint");
  }

  rep.empirical_min = rep.samples[0].u_signed[0];
  rep.empirical_max = rep.samples[0].u_signed[0];
  for (const ScanSample& smp : rep.samples) {
    for (double v : smp.u_signed) {
      rep.empirical_min = std::min(rep.empirical_min, v);
      rep.empirical_max = std::max(rep.empirical_max, v);
    }
  }

  // Extrapolation uses only shallow samples: close to the endpoint the gap
  // inside a doubled pair shrinks like sqrt(delta) and root roundoff starts
  // to dominate the converging sums.
  std::size_t extrap_count = 0;
  while (extrap_count < rep.samples.size() &&
         rep.samples[extrap_count].delta >= 1e-8) {
    ++extrap_count;
  }
  const double q = 1.0 / std::sqrt(2.0);  // ratio of sqrt(delta) per step

  for (int i = 0; i < m.n; ++i) {
    ScanIndexSummary sum;
    sum.index = i;
    sum.doubled = paired.count(i) > 0;
    sum.min_value = rep.samples[0].u_signed[i];
    sum.max_value = rep.samples[0].u_signed[i];
    for (const ScanSample& smp : rep.samples) {
      sum.min_value = std::min(sum.min_value, smp.u_signed[i]);
      sum.max_value = std::max(sum.max_value, smp.u_signed[i]);
    }
    if (sum.doubled) {
      sum.diverged = end == IntervalEnd::Upper ? sum.max_value > 1e6
                                               : sum.min_value < -1e6;
    } else {
      std::vector<double> vals;
      vals.reserve(extrap_count);
      for (std::size_t k = 0; k < extrap_count; ++k) {
        vals.push_back(rep.samples[k].u_signed[i]);
      }
      sum.extrapolated = detail::richardson_limit(vals, q);
      sum.closed_form = boundary_weight_limit(m, end, i, tol);
      sum.rel_diff = std::abs(*sum.extrapolated - *sum.closed_form) /
                     std::max(1e-30, std::abs(*sum.closed_form));
    }
    rep.index_summaries.push_back(std::move(sum));
  }
  return rep;
}

}  // namespace specsum
