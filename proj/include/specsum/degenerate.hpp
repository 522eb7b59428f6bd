#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "specsum/errors.hpp"
#include "specsum/poly.hpp"
#include "specsum/spectrum.hpp"

namespace specsum {

/// Ordered composition (m_1, ..., m_g) of n with some part >= 2.
using MultiplicityPattern = std::vector<int>;

/// All ordered compositions of n with at least one part >= 2; there are
/// 2^{n-1} - 1 of them. Deterministic order (separator bitmask ascending).
inline std::vector<MultiplicityPattern> enumerate_patterns(int n) {
  if (n < 2) throw InvalidInput("enumerate_patterns: n must be at least 2");
  if (n > 24) throw InvalidInput("enumerate_patterns: n too large to enumerate");
  std::vector<MultiplicityPattern> out;
  const unsigned long top = 1UL << (n - 1);
  for (unsigned long mask = 0; mask < top; ++mask) {
    MultiplicityPattern pat;
    int run = 1;
    for (int j = 0; j < n - 1; ++j) {
      if (mask & (1UL << j)) {
        pat.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    pat.push_back(run);
    if (static_cast<int>(pat.size()) < n) out.push_back(std::move(pat));
  }
  return out;
}

struct DegenerateSolution {
  Spectrum spectrum;
  double f_value = 0.0;
  MultiplicityPattern pattern;
};

struct PatternOutcome {
  MultiplicityPattern pattern;
  std::optional<DegenerateSolution> solution;
  std::string reason;  // why no solution exists, when solution is empty
};

namespace detail {
inline void validate_pattern(const ConstraintModel& m,
                             const MultiplicityPattern& pat) {
  int total = 0;
  bool repeated = false;
  for (int part : pat) {
    if (part < 1) throw InvalidInput("pattern parts must be positive");
    if (part >= 2) repeated = true;
    total += part;
  }
  if (total != m.n) throw InvalidInput("pattern parts must sum to n");
  if (!repeated) throw InvalidInput("pattern must contain a part >= 2");
}
}  // namespace detail

/**
 * Constructive uniqueness for one multiplicity pattern. With k the first
 * index whose part is >= 2, the k-th repeated eigenvalue must be the k-th
 * smallest real critical point mu of the base polynomial; the top elementary
 * symmetric value is then pinned to d_n = (-1)^{n-1} base(mu), the candidate
 * characteristic polynomial is base(x) + (-1)^n d_n, and the pattern is
 * accepted only if its real roots realize exactly the requested multiplicity
 * sequence. At most one solution can ever exist per pattern.
 */
inline PatternOutcome solve_pattern_outcome(const ConstraintModel& m,
                                            const MultiplicityPattern& pat,
                                            double tol = 1e-12) {
  detail::validate_pattern(m, pat);

  int k = 0;
  while (pat[k] < 2) ++k;

  const RootList crit = real_roots(m.base.derivative(), tol);
  if (static_cast<int>(crit.size()) <= k) {
    return {pat, std::nullopt,
            "base polynomial has only " + std::to_string(crit.size()) +
                " real critical points; need at least " + std::to_string(k + 1)};
  }
  const double mu = crit[k].value;
  const double sign_n1 = m.n % 2 == 0 ? -1.0 : 1.0;  // (-1)^{n-1}
  const double dn = sign_n1 * m.base.eval(mu);
  const Poly candidate = add_constant(m.base, -sign_n1 * dn);

  const RootList roots = real_roots(candidate, tol);
  int total = 0;
  for (const Root& r : roots) total += r.multiplicity;
  if (total != m.n) {
    return {pat, std::nullopt, "pinned characteristic polynomial has " +
                                   std::to_string(total) + " real roots"};
  }
  bool matches = roots.size() == pat.size();
  for (std::size_t i = 0; matches && i < roots.size(); ++i) {
    matches = roots[i].multiplicity == pat[i];
  }
  if (!matches) {
    std::string got = "(";
    for (std::size_t i = 0; i < roots.size(); ++i) {
      got += (i ? "," : "") + std::to_string(roots[i].multiplicity);
    }
    got += ")";
    return {pat, std::nullopt, "construction yields pattern " + got};
  }

  std::vector<SpectrumEntry> entries;
  for (const Root& r : roots) entries.push_back({r.value, r.multiplicity});
  DegenerateSolution sol;
  sol.spectrum = Spectrum::from_entries(std::move(entries));
  sol.f_value = sign_n1 * m.n * (dn - m.offset);
  sol.pattern = pat;

  // The constraints must be reproduced; failure here means the roots were
  // located too loosely for the requested tolerance.
  const PowerSums ps = power_sums_of(sol.spectrum, m.n - 1);
  for (int j = 0; j < m.n - 1; ++j) {
    if (std::abs(ps[j] - m.c[j]) > 1e-8 * (1.0 + std::abs(m.c[j]))) {
      return {pat, std::nullopt, "candidate spectrum deviates from the constraints"};
    }
  }
  return {pat, std::move(sol), ""};
}

inline std::optional<DegenerateSolution> solve_pattern(
    const ConstraintModel& m, const MultiplicityPattern& pat,
    double tol = 1e-12) {
  return solve_pattern_outcome(m, pat, tol).solution;
}

/// Per-pattern outcomes over every pattern of n, in enumeration order.
inline std::vector<PatternOutcome> pattern_outcomes(const ConstraintModel& m,
                                                    double tol = 1e-12) {
  std::vector<PatternOutcome> out;
  for (const MultiplicityPattern& pat : enumerate_patterns(m.n)) {
    out.push_back(solve_pattern_outcome(m, pat, tol));
  }
  return out;
}

/// The discrete set of top-power-sum values admitting a repeated eigenvalue,
/// deduplicated by f within tolerance.
inline std::vector<DegenerateSolution> all_degenerate_values(
    const ConstraintModel& m, double tol = 1e-12) {
  std::vector<DegenerateSolution> out;
  for (PatternOutcome& po : pattern_outcomes(m, tol)) {
    if (!po.solution) continue;
    bool dup = false;
    for (const DegenerateSolution& s : out) {
      if (std::abs(s.f_value - po.solution->f_value) <=
          10.0 * tol * (1.0 + std::abs(s.f_value))) {
        dup = true;
        break;
      }
    }
    if (!dup) out.push_back(std::move(*po.solution));
  }
  return out;
}

}  // namespace specsum
