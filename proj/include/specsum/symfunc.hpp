#pragma once

#include <cmath>
#include <span>
#include <vector>

#include "specsum/errors.hpp"

namespace specsum {

/// p_1..p_m, the power sums of an (implicit) eigenvalue list.
using PowerSums = std::vector<double>;
/// e_1..e_m, the elementary symmetric polynomials of the same list.
using ElementarySymmetric = std::vector<double>;

namespace detail {
inline void require_finite(std::span<const double> v, const char* what) {
  for (double x : v) {
    if (!std::isfinite(x)) throw InvalidInput(std::string(what) + ": non-finite entry");
  }
}
}  // namespace detail

/// Newton's identities, power sums -> elementary symmetric:
/// e_k = (1/k) * sum_{i=1..k} (-1)^{i-1} e_{k-i} p_i, with e_0 = 1.
/// Accumulation runs in ascending i for reproducibility.
inline ElementarySymmetric power_sums_to_elementary(std::span<const double> p) {
  detail::require_finite(p, "power_sums_to_elementary");
  if (p.empty()) throw InvalidInput("power_sums_to_elementary: need at least one entry");
  const int m = static_cast<int>(p.size());
  ElementarySymmetric e(m, 0.0);
  for (int k = 1; k <= m; ++k) {
    double acc = 0.0;
    for (int i = 1; i <= k; ++i) {
      const double e_prev = (k - i == 0) ? 1.0 : e[k - i - 1];
      acc += (i % 2 == 1 ? 1.0 : -1.0) * e_prev * p[i - 1];
    }
    e[k - 1] = acc / k;
  }
  return e;
}

/// Inverse direction of the same identities:
/// p_k = (-1)^{k-1} * (k e_k - sum_{i=1..k-1} (-1)^{i-1} e_{k-i} p_i).
inline PowerSums elementary_to_power_sums(std::span<const double> e) {
  detail::require_finite(e, "elementary_to_power_sums");
  if (e.empty()) throw InvalidInput("elementary_to_power_sums: need at least one entry");
  const int m = static_cast<int>(e.size());
  PowerSums p(m, 0.0);
  for (int k = 1; k <= m; ++k) {
    double acc = 0.0;
    for (int i = 1; i <= k - 1; ++i) {
      acc += (i % 2 == 1 ? 1.0 : -1.0) * e[k - i - 1] * p[i - 1];
    }
    p[k - 1] = (k % 2 == 1 ? 1.0 : -1.0) * (k * e[k - 1] - acc);
  }
  return p;
}

/**
 * The constant C tying the top elementary symmetric value to the top power
 * sum: with c = (p_1, ..., p_{n-1}) fixed, e_n = ((-1)^{n-1}/n) p_n + C.
 * Computed as C = (1/n) sum_{i=1..n-1} (-1)^{i-1} e_{n-i} c_i with the e_j
 * from power_sums_to_elementary(c).
 */
inline double top_elementary_offset(std::span<const double> c) {
  detail::require_finite(c, "top_elementary_offset");
  if (c.empty()) throw InvalidInput("top_elementary_offset: need n-1 >= 1 entries");
  const int n = static_cast<int>(c.size()) + 1;
  const ElementarySymmetric e = power_sums_to_elementary(c);
  double acc = 0.0;
  for (int i = 1; i <= n - 1; ++i) {
    acc += (i % 2 == 1 ? 1.0 : -1.0) * e[n - i - 1] * c[i - 1];
  }
  return acc / n;
}

}  // namespace specsum
