#pragma once

// Report assembly for the command-line surface. Reports are deterministic
// for fixed inputs and seed: the only run-dependent field is timing_ms.

#include <chrono>
#include <cmath>
#include <cstdio>
#include <optional>
#include <string>
#include <vector>

#include <json.hpp>

#include "specsum/degenerate.hpp"
#include "specsum/errors.hpp"
#include "specsum/isopar.hpp"
#include "specsum/pointwise.hpp"
#include "specsum/poly.hpp"
#include "specsum/rng.hpp"
#include "specsum/spectrum.hpp"
#include "specsum/svg.hpp"
#include "specsum/symfunc.hpp"

namespace specsum {

inline constexpr const char* kVersion = "0.1.0";

// Exit codes of the command-line surface.
inline constexpr int kExitOk = 0;
inline constexpr int kExitVerifyFailed = 1;
inline constexpr int kExitInvalidInput = 2;
inline constexpr int kExitPatternViolation = 3;
inline constexpr int kExitIoError = 4;

// Thresholds used by the verify modes; identical to the acceptance gates.
inline constexpr double kGradientGate = 1e-9;
inline constexpr double kAssertionLimitGate = 1e-6;
inline constexpr double kAssertionDivergenceGate = 1e6;
inline constexpr double kIdentityGate = 1e-10;

struct CsvTable {
  std::vector<std::string> header;
  std::vector<std::vector<std::string>> rows;

  std::string to_string() const {
    std::string out;
    for (std::size_t i = 0; i < header.size(); ++i) {
      out += (i ? "," : "") + header[i];
    }
    out += "\n";
    for (const auto& row : rows) {
      for (std::size_t i = 0; i < row.size(); ++i) {
        out += (i ? "," : "") + row[i];
      }
      out += "\n";
    }
    return out;
  }
};

struct RunOutput {
  nlohmann::json report;
  int exit_code = kExitOk;
  std::optional<CsvTable> csv;
  std::optional<std::string> svg;
};

/// 17 significant digits; round-trips doubles exactly.
inline std::string num17(double x) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.17g", x);
  return std::string(buf);
}

/// Finite values stay JSON numbers; infinities become "+inf"/"-inf".
inline nlohmann::json jnum(double x) {
  if (std::isfinite(x)) return x;
  if (std::isinf(x)) return x > 0 ? "+inf" : "-inf";
  return "nan";
}

namespace detail {

class ReportTimer {
 public:
  ReportTimer() : start_(std::chrono::steady_clock::now()) {}
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

inline nlohmann::json make_report(const std::string& command,
                                  nlohmann::json inputs, nlohmann::json results,
                                  const std::vector<std::string>& diagnostics,
                                  const ReportTimer& timer) {
  nlohmann::json rep;
  rep["command"] = command;
  rep["inputs"] = std::move(inputs);
  rep["results"] = std::move(results);
  rep["diagnostics"] = diagnostics;
  rep["version"] = kVersion;
  rep["timing_ms"] = timer.elapsed_ms();
  return rep;
}

inline nlohmann::json spectrum_json(const Spectrum& s) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& e : s.entries) {
    out.push_back({{"value", e.value}, {"multiplicity", e.multiplicity}});
  }
  return out;
}

inline const char* kind_name(CriticalKind k) {
  switch (k) {
    case CriticalKind::LocalMax: return "local_max";
    case CriticalKind::LocalMin: return "local_min";
    default: return "inflection";
  }
}

inline void require_desk_scale(int n) {
  if (n < 2 || n > 12) {
    throw InvalidInput("n must lie in [2, 12] for the command-line surface");
  }
}

inline IntervalEnd parse_end(const std::string& s) {
  if (s == "lower") return IntervalEnd::Lower;
  if (s == "upper") return IntervalEnd::Upper;
  throw InvalidInput("end must be 'lower' or 'upper'");
}

/// Height of the horizontal line in the base-polynomial chart at which the
/// characteristic polynomial with top power sum f has its roots.
inline double mark_height(const ConstraintModel& m, double f) {
  return f / m.n - m.signed_offset();
}

inline std::vector<double> distinct_spectrum(Xoshiro256pp& rng, int n,
                                             double lo, double hi,
                                             double min_gap) {
  std::vector<double> v(n);
  for (int attempt = 0; attempt < 10000; ++attempt) {
    for (double& x : v) x = rng.uniform(lo, hi);
    std::sort(v.begin(), v.end());
    bool ok = true;
    for (int i = 0; i + 1 < n; ++i) ok = ok && (v[i + 1] - v[i] >= min_gap);
    if (ok) return v;
  }
  for (int i = 0; i < n; ++i) v[i] = lo + (hi - lo) * (i + 0.5) / n;
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// analyze: model construction, feasible interval, boundary layouts.
// ---------------------------------------------------------------------------
inline RunOutput run_analyze(int n, const std::vector<double>& c,
                             double tol = 1e-12) {
  detail::ReportTimer timer;
  detail::require_desk_scale(n);
  const ConstraintModel m = build_model(n, c);
  const FeasibleInterval iv = feasible_interval(m, tol);
  const auto cps = classify_critical_points(m.base, tol);

  RunOutput out;
  std::vector<std::string> diagnostics;
  nlohmann::json results;
  results["base_coefficients"] = m.base.coeffs();
  results["elementary_symmetric"] = m.d;
  results["offset"] = m.offset;
  results["interval"] = {{"lower", jnum(iv.lower)},
                         {"upper", jnum(iv.upper)},
                         {"lower_critical", jnum(iv.lower_critical)},
                         {"upper_critical", jnum(iv.upper_critical)}};
  nlohmann::json crit = nlohmann::json::array();
  for (const auto& cp : cps) {
    crit.push_back({{"x", cp.x},
                    {"value", cp.value},
                    {"kind", detail::kind_name(cp.kind)},
                    {"multiplicity", cp.multiplicity}});
  }
  results["critical_points"] = crit;

  for (IntervalEnd end : {IntervalEnd::Lower, IntervalEnd::Upper}) {
    const bool lower = end == IntervalEnd::Lower;
    const char* key = lower ? "boundary_lower" : "boundary_upper";
    const double endpoint = lower ? iv.lower : iv.upper;
    if (!std::isfinite(endpoint)) {
      results[key] = nullptr;
      diagnostics.push_back(std::string(key) + ": endpoint is not finite");
      continue;
    }
    try {
      const BoundaryPattern bp = boundary_pattern(m, end, tol);
      results[key] = {{"f", endpoint},
                      {"spectrum", detail::spectrum_json(bp.spectrum)},
                      {"doubled_positions", bp.doubled_positions},
                      {"pattern_ok", bp.verified}};
    } catch (const PatternViolation& e) {
      nlohmann::json entry = {{"f", endpoint}, {"pattern_ok", false}};
      try {
        entry["spectrum"] = detail::spectrum_json(spectrum_at(m, endpoint, tol));
      } catch (const Error&) {
      }
      results[key] = entry;
      diagnostics.push_back(e.what());
      out.exit_code = kExitPatternViolation;
    } catch (const Error& e) {
      results[key] = nullptr;
      diagnostics.push_back(std::string(key) + ": " + e.what());
    }
  }

  CsvTable csv;
  csv.header = {"x", "value", "kind", "multiplicity"};
  for (const auto& cp : cps) {
    csv.rows.push_back({num17(cp.x), num17(cp.value),
                        detail::kind_name(cp.kind),
                        std::to_string(cp.multiplicity)});
  }
  out.csv = std::move(csv);
  out.report = detail::make_report(
      "analyze", {{"n", n}, {"c", c}, {"tol", tol}}, results, diagnostics, timer);
  return out;
}

// ---------------------------------------------------------------------------
// spectrum: reconstruction at a given top power sum.
// ---------------------------------------------------------------------------
inline RunOutput run_spectrum(int n, const std::vector<double>& c, double f,
                              double eps = 0.0, double tol = 1e-12) {
  detail::ReportTimer timer;
  detail::require_desk_scale(n);
  const ConstraintModel m = build_model(n, c);
  const FeasibleInterval iv = feasible_interval(m, tol);

  RunOutput out;
  std::vector<std::string> diagnostics;
  nlohmann::json results;
  results["interval"] = {{"lower", jnum(iv.lower)}, {"upper", jnum(iv.upper)}};

  CsvTable csv;
  csv.header = {"eigenvalue", "multiplicity"};
  try {
    const Spectrum s = spectrum_at(m, f, tol);
    results["feasible"] = true;
    results["spectrum"] = detail::spectrum_json(s);
    const auto ps = power_sums_of(s, n);
    results["power_sums"] = ps;
    double resid = 0.0;
    for (int k = 0; k < n - 1; ++k) {
      resid = std::max(resid, std::abs(ps[k] - c[k]) / (1.0 + std::abs(c[k])));
    }
    resid = std::max(resid, std::abs(ps[n - 1] - f) / (1.0 + std::abs(f)));
    results["constraint_residual"] = resid;
    for (const auto& e : s.entries) {
      csv.rows.push_back({num17(e.value), std::to_string(e.multiplicity)});
    }
  } catch (const NonRealRoots& e) {
    results["feasible"] = false;
    diagnostics.push_back(e.what());
  }

  if (eps > 0.0) {
    try {
      const RegionClassification rc = classify_point(m, iv, f, eps);
      const char* region = rc.region == Region::AtLower   ? "at_lower"
                           : rc.region == Region::AtUpper ? "at_upper"
                                                          : "interior";
      results["region"] = region;
      if (rc.band) {
        const char* band = *rc.band == Band::NearLower   ? "near_lower"
                           : *rc.band == Band::NearUpper ? "near_upper"
                                                         : "core";
        results["band"] = band;
      }
    } catch (const Error& e) {
      diagnostics.push_back(std::string("classification: ") + e.what());
    }
  }

  out.csv = std::move(csv);
  out.report = detail::make_report(
      "spectrum", {{"n", n}, {"c", c}, {"f", f}, {"eps", eps}, {"tol", tol}},
      results, diagnostics, timer);
  return out;
}

// ---------------------------------------------------------------------------
// degenerate: per-pattern uniqueness table.
// ---------------------------------------------------------------------------
inline RunOutput run_degenerate(int n, const std::vector<double>& c,
                                double tol = 1e-12) {
  detail::ReportTimer timer;
  detail::require_desk_scale(n);
  const ConstraintModel m = build_model(n, c);
  const auto outcomes = pattern_outcomes(m, tol);

  nlohmann::json table = nlohmann::json::array();
  CsvTable csv;
  csv.header = {"pattern", "solved", "f", "reason"};
  int solved = 0;
  for (const auto& po : outcomes) {
    std::string pat;
    for (std::size_t i = 0; i < po.pattern.size(); ++i) {
      pat += (i ? "+" : "") + std::to_string(po.pattern[i]);
    }
    nlohmann::json row;
    row["pattern"] = po.pattern;
    if (po.solution) {
      ++solved;
      row["f"] = po.solution->f_value;
      row["spectrum"] = detail::spectrum_json(po.solution->spectrum);
      csv.rows.push_back({pat, "1", num17(po.solution->f_value), ""});
    } else {
      row["reason"] = po.reason;
      csv.rows.push_back({pat, "0", "", po.reason});
    }
    table.push_back(row);
  }

  nlohmann::json values = nlohmann::json::array();
  for (const auto& sol : all_degenerate_values(m, tol)) {
    values.push_back({{"f", sol.f_value}, {"pattern", sol.pattern}});
  }

  RunOutput out;
  out.csv = std::move(csv);
  out.report = detail::make_report(
      "degenerate", {{"n", n}, {"c", c}, {"tol", tol}},
      {{"patterns", table},
       {"solved_count", solved},
       {"rejected_count", static_cast<int>(outcomes.size()) - solved},
       {"degenerate_values", values}},
      {}, timer);
  return out;
}

// ---------------------------------------------------------------------------
// verify: property scans with reproducible sampling.
// ---------------------------------------------------------------------------
inline RunOutput run_verify_lsign(int n, int samples, std::uint64_t seed) {
  detail::ReportTimer timer;
  if (n < 3 || n > 12) throw InvalidInput("Lsign: n must lie in [3, 12]");
  if (samples < 1) throw InvalidInput("samples must be positive");
  Xoshiro256pp rng(seed);
  int violations = 0;
  double worst = -std::numeric_limits<double>::infinity();
  for (int k = 0; k < samples; ++k) {
    const auto lam = detail::distinct_spectrum(rng, n, -1.5, 1.5, 1e-3);
    for (int r = 0; r < n; ++r) {
      const double kernel = dpsi_kernel(lam, r);
      worst = std::max(worst, kernel);
      if (!(kernel < 0.0)) ++violations;
    }
  }
  RunOutput out;
  out.exit_code = violations == 0 ? kExitOk : kExitVerifyFailed;
  CsvTable csv;
  csv.header = {"n", "samples", "violations", "worst_kernel"};
  csv.rows.push_back({std::to_string(n), std::to_string(samples),
                      std::to_string(violations), num17(worst)});
  out.csv = std::move(csv);
  out.report = detail::make_report(
      "verify",
      {{"mode", "Lsign"}, {"n", n}, {"samples", samples}, {"seed", seed}},
      {{"checked", samples * n}, {"violations", violations}, {"worst_kernel", worst}},
      {}, timer);
  return out;
}

inline RunOutput run_verify_gradients(int n, int samples, std::uint64_t seed) {
  detail::ReportTimer timer;
  if (n < 2 || n > 12) throw InvalidInput("gradients: n must lie in [2, 12]");
  if (samples < 1) throw InvalidInput("samples must be positive");
  Xoshiro256pp rng(seed);
  double max_rel = 0.0;
  double max_resid = 0.0;
  for (int k = 0; k < samples; ++k) {
    const auto lam = detail::distinct_spectrum(rng, n, -1.5, 1.5, 0.05);
    std::vector<double> fg(n);
    for (double& x : fg) x = rng.uniform(-1.0, 1.0);
    const SquareMatrix a = lambda_gradient_closed_form(lam, fg);
    const SquareMatrix b = lambda_gradient_linear_solve(lam, fg);
    double amax = 0.0;
    double diff = 0.0;
    for (std::size_t i = 0; i < a.a.size(); ++i) {
      amax = std::max(amax, std::abs(a.a[i]));
      diff = std::max(diff, std::abs(a.a[i] - b.a[i]));
    }
    max_rel = std::max(max_rel, diff / std::max(amax, 1e-30));
    for (int j = 0; j < n; ++j) {
      for (int row = 0; row < n; ++row) {
        double acc = 0.0;
        double scale = 0.0;
        for (int i = 0; i < n; ++i) {
          const double w = std::pow(lam[i], row);
          acc += w * a(i, j);
          scale += std::abs(w * a(i, j));
        }
        const double rhs = row == n - 1 ? fg[j] / n : 0.0;
        max_resid =
            std::max(max_resid, std::abs(acc - rhs) / std::max(1.0, scale));
      }
    }
  }
  RunOutput out;
  const bool ok = max_rel < kGradientGate && max_resid < kGradientGate;
  out.exit_code = ok ? kExitOk : kExitVerifyFailed;
  CsvTable csv;
  csv.header = {"n", "samples", "max_rel_discrepancy", "max_residual"};
  csv.rows.push_back({std::to_string(n), std::to_string(samples),
                      num17(max_rel), num17(max_resid)});
  out.csv = std::move(csv);
  out.report = detail::make_report(
      "verify",
      {{"mode", "gradients"}, {"n", n}, {"samples", samples}, {"seed", seed}},
      {{"max_rel_discrepancy", max_rel},
       {"max_residual", max_resid},
       {"gate", kGradientGate},
       {"passed", ok}},
      {}, timer);
  return out;
}

inline RunOutput run_verify_assertion(int n, const std::vector<double>& c,
                                      const std::string& end_name,
                                      double eps = 1e-2, int samples = 30,
                                      double tol = 1e-12) {
  detail::ReportTimer timer;
  detail::require_desk_scale(n);
  const ConstraintModel m = build_model(n, c);
  const IntervalEnd end = detail::parse_end(end_name);
  const ScanReport rep = boundary_scan(m, end, eps, samples, tol);

  bool ok = true;
  nlohmann::json rows = nlohmann::json::array();
  CsvTable csv;
  csv.header = {"index",     "doubled",      "diverged",    "min_value",
                "max_value", "extrapolated", "closed_form", "rel_diff"};
  for (const auto& s : rep.index_summaries) {
    nlohmann::json row;
    row["index"] = s.index;
    row["doubled"] = s.doubled;
    row["diverged"] = s.diverged;
    row["min_value"] = jnum(s.min_value);
    row["max_value"] = jnum(s.max_value);
    std::string ext;
    std::string closed;
    std::string rel;
    if (s.doubled) {
      ok = ok && s.diverged;
    } else {
      row["extrapolated"] = jnum(*s.extrapolated);
      row["closed_form"] = jnum(*s.closed_form);
      row["rel_diff"] = jnum(*s.rel_diff);
      ext = num17(*s.extrapolated);
      closed = num17(*s.closed_form);
      rel = num17(*s.rel_diff);
      ok = ok && *s.rel_diff < kAssertionLimitGate;
    }
    rows.push_back(row);
    csv.rows.push_back({std::to_string(s.index), s.doubled ? "1" : "0",
                        s.diverged ? "1" : "0", num17(s.min_value),
                        num17(s.max_value), ext, closed, rel});
  }

  RunOutput out;
  out.exit_code = ok ? kExitOk : kExitVerifyFailed;
  out.csv = std::move(csv);
  out.report = detail::make_report(
      "verify",
      {{"mode", "assertion"},
       {"n", n},
       {"c", c},
       {"end", end_name},
       {"eps", eps},
       {"samples", samples},
       {"tol", tol}},
      {{"indices", rows},
       {"doubled_positions", rep.doubled_positions},
       {"empirical_min", jnum(rep.empirical_min)},
       {"empirical_max", jnum(rep.empirical_max)},
       {"bound_candidate",
        jnum(end == IntervalEnd::Upper ? -rep.empirical_min : rep.empirical_max)},
       {"samples_used", rep.samples.size()},
       {"passed", ok}},
      rep.diagnostics, timer);
  return out;
}

// ---------------------------------------------------------------------------
// isopar: curvature sweep over one family.
// ---------------------------------------------------------------------------
inline RunOutput run_isopar(int g, int m1, int m2, int grid = 10000) {
  detail::ReportTimer timer;
  if (grid < 2) throw InvalidInput("grid must have at least 2 points");
  const IsoparametricFamily fam = IsoparametricFamily::make(g, m1, m2);
  const double margin = 1e-3;
  const double pi = 3.14159265358979323846;
  const double lo = margin;
  const double hi = pi / fam.g - margin;

  double min_rm = std::numeric_limits<double>::infinity();
  double argmin = lo;
  double max_resid = 0.0;
  CsvTable csv;
  csv.header = {"theta", "H", "S", "R_M", "R_M_closed_form"};
  for (int k = 0; k < grid; ++k) {
    const double theta = lo + (hi - lo) * k / (grid - 1.0);
    const CurvatureProfile p = curvature_profile(fam, theta);
    const double closed = scalar_curvature_closed_form(fam, theta);
    max_resid = std::max(max_resid,
                         std::abs(closed - p.scalar_curvature) /
                             (1.0 + std::abs(closed)));
    if (p.scalar_curvature < min_rm) {
      min_rm = p.scalar_curvature;
      argmin = theta;
    }
    csv.rows.push_back({num17(theta), num17(p.mean_curvature),
                        num17(p.second_form_norm_sq),
                        num17(p.scalar_curvature), num17(closed)});
  }

  const double theta_min = minimal_theta(fam);
  const CurvatureProfile at_min = curvature_profile(fam, theta_min);
  const double peng_terng = (fam.g - 1.0) * fam.n();

  RunOutput out;
  out.csv = std::move(csv);
  out.report = detail::make_report(
      "isopar",
      {{"g", g}, {"m1", m1}, {"m2", m2}, {"grid", grid}},
      {{"n", fam.n()},
       {"min_scalar_curvature", min_rm},
       {"argmin_theta", argmin},
       {"equality_family", min_rm < 1e-6},
       {"max_closed_form_residual", max_resid},
       {"minimal_theta", theta_min},
       {"S_at_minimal_theta", at_min.second_form_norm_sq},
       {"peng_terng_value", peng_terng},
       {"peng_terng_residual",
        std::abs(at_min.second_form_norm_sq - peng_terng)}},
      {}, timer);
  return out;
}

// ---------------------------------------------------------------------------
// identities: residual sweep of the trigonometric identities.
// ---------------------------------------------------------------------------
inline RunOutput run_identities(int n_max, int samples, std::uint64_t seed) {
  detail::ReportTimer timer;
  if (n_max < 2 || n_max > 64) throw InvalidInput("identities: n must lie in [2, 64]");
  if (samples < 1) throw InvalidInput("samples must be positive");
  const double pi = 3.14159265358979323846;
  Xoshiro256pp rng(seed);

  CsvTable csv;
  csv.header = {"n", "max_cot_sum_residual", "max_cot_sq_residual",
                "max_sin_product_residual"};
  nlohmann::json per_n = nlohmann::json::array();
  double overall = 0.0;
  for (int n = 2; n <= n_max; ++n) {
    double r1 = 0.0;
    double r2 = 0.0;
    double r3 = 0.0;
    for (int k = 0; k < samples; ++k) {
      const int cell = static_cast<int>(rng.below(n));
      const double r = rng.uniform(0.15 * pi / n, 0.85 * pi / n);
      const CotIdentity id = cot_sum_identity(n, cell * pi / n + r);
      r1 = std::max(r1, std::abs(id.sum_lhs - id.sum_rhs));
      r2 = std::max(r2, std::abs(id.sumsq_lhs - id.sumsq_rhs));
      const auto [lhs, rhs] = sin_product_identity(n, rng.uniform(1e-4, pi / n - 1e-4));
      r3 = std::max(r3, std::abs(lhs - rhs));
    }
    per_n.push_back({{"n", n},
                     {"max_cot_sum_residual", r1},
                     {"max_cot_sq_residual", r2},
                     {"max_sin_product_residual", r3}});
    csv.rows.push_back({std::to_string(n), num17(r1), num17(r2), num17(r3)});
    overall = std::max({overall, r1, r2, r3});
  }

  RunOutput out;
  out.exit_code = overall <= kIdentityGate ? kExitOk : kExitVerifyFailed;
  out.csv = std::move(csv);
  out.report = detail::make_report(
      "identities", {{"n", n_max}, {"samples", samples}, {"seed", seed}},
      {{"per_n", per_n},
       {"max_residual", overall},
       {"gate", kIdentityGate},
       {"passed", overall <= kIdentityGate}},
      {}, timer);
  return out;
}

// ---------------------------------------------------------------------------
// plot: base polynomial chart with marker lines, plus the sampled data.
// ---------------------------------------------------------------------------
inline RunOutput run_plot(int n, const std::vector<double>& c,
                          const std::vector<double>& f_marks,
                          double tol = 1e-12) {
  detail::ReportTimer timer;
  detail::require_desk_scale(n);
  const ConstraintModel m = build_model(n, c);
  const FeasibleInterval iv = feasible_interval(m, tol);
  const auto cps = classify_critical_points(m.base, tol);
  const double bound = m.base.cauchy_root_bound();

  SvgPlot plot;
  plot.title = "base polynomial, n=" + std::to_string(n);
  const int kSamples = 512;
  CsvTable csv;
  csv.header = {"x", "value"};
  for (int k = 0; k < kSamples; ++k) {
    const double x = -bound + 2.0 * bound * k / (kSamples - 1.0);
    const double y = m.base.eval(x);
    plot.xs.push_back(x);
    plot.ys.push_back(y);
    csv.rows.push_back({num17(x), num17(y)});
  }
  for (const auto& cp : cps) plot.points.emplace_back(cp.x, cp.value);

  std::vector<std::pair<std::string, double>> marks;
  for (double f : f_marks) marks.emplace_back("f=" + num17(f), f);
  if (std::isfinite(iv.lower)) marks.emplace_back("f=lower", iv.lower);
  if (std::isfinite(iv.upper)) marks.emplace_back("f=upper", iv.upper);
  nlohmann::json jmarks = nlohmann::json::array();
  for (const auto& [label, f] : marks) {
    const double h = detail::mark_height(m, f);
    plot.hlines.push_back({h, label});
    jmarks.push_back({{"f", f}, {"height", h}, {"label", label}});
  }

  RunOutput out;
  out.svg = plot.render();
  out.csv = std::move(csv);
  out.report = detail::make_report(
      "plot", {{"n", n}, {"c", c}, {"f_marks", f_marks}, {"tol", tol}},
      {{"x_range", {-bound, bound}},
       {"samples", kSamples},
       {"marks", jmarks},
       {"interval", {{"lower", jnum(iv.lower)}, {"upper", jnum(iv.upper)}}}},
      {}, timer);
  return out;
}

}  // namespace specsum
