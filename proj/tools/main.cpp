// Command-line surface: one job per invocation, deterministic reports,
// output written once through an atomic rename.

#include <cstdint>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "specsum/report.hpp"

namespace {

using specsum::RunOutput;

struct OutputSpec {
  std::string path;    // empty means stdout
  std::string format;  // json | csv | svg
};

void atomic_write(const std::string& path, const std::string& content) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream os(tmp, std::ios::binary | std::ios::trunc);
    if (!os) throw specsum::Error("cannot open " + tmp.string() + " for writing");
    os << content;
    if (!os.good()) throw specsum::Error("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp, ec);
    throw specsum::Error("cannot rename onto " + target.string());
  }
}

std::string with_extension(const std::string& path, const char* ext) {
  return std::filesystem::path(path).replace_extension(ext).string();
}

int emit(const RunOutput& out, const OutputSpec& spec) {
  std::string payload;
  if (spec.format == "json") {
    payload = out.report.dump(2) + "\n";
  } else if (spec.format == "csv") {
    if (!out.csv) throw specsum::InvalidInput("this command has no CSV output");
    payload = out.csv->to_string();
  } else if (spec.format == "svg") {
    if (!out.svg) throw specsum::InvalidInput("this command has no SVG output");
    payload = *out.svg;
  } else {
    throw specsum::InvalidInput("format must be json, csv or svg");
  }

  try {
    if (spec.path.empty()) {
      std::cout << payload;
    } else {
      atomic_write(spec.path, payload);
      // The chart data always travels with the rendered chart.
      if (spec.format == "svg" && out.csv) {
        atomic_write(with_extension(spec.path, ".csv"), out.csv->to_string());
      }
    }
  } catch (const specsum::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return specsum::kExitIoError;
  }
  return out.exit_code;
}

RunOutput dispatch(const std::string& command, const nlohmann::json& p) {
  auto dget = [&](const char* key, double fallback) {
    return p.contains(key) ? p.at(key).get<double>() : fallback;
  };
  auto iget = [&](const char* key, std::int64_t fallback) {
    return p.contains(key) ? p.at(key).get<std::int64_t>() : fallback;
  };
  auto vget = [&](const char* key) {
    return p.contains(key) ? p.at(key).get<std::vector<double>>()
                           : std::vector<double>{};
  };

  const double tol = dget("tol", 1e-12);
  if (command == "analyze") {
    return specsum::run_analyze(static_cast<int>(iget("n", 0)), vget("c"), tol);
  }
  if (command == "spectrum") {
    return specsum::run_spectrum(static_cast<int>(iget("n", 0)), vget("c"),
                                 dget("f", 0.0), dget("eps", 0.0), tol);
  }
  if (command == "degenerate") {
    return specsum::run_degenerate(static_cast<int>(iget("n", 0)), vget("c"), tol);
  }
  if (command == "verify") {
    const std::string mode = p.at("mode").get<std::string>();
    const int n = static_cast<int>(iget("n", 0));
    const auto seed = static_cast<std::uint64_t>(iget("seed", 0));
    if (mode == "Lsign") {
      return specsum::run_verify_lsign(n, static_cast<int>(iget("samples", 10000)), seed);
    }
    if (mode == "gradients") {
      return specsum::run_verify_gradients(n, static_cast<int>(iget("samples", 1000)), seed);
    }
    if (mode == "assertion") {
      return specsum::run_verify_assertion(
          n, vget("c"), p.at("end").get<std::string>(), dget("eps", 1e-2),
          static_cast<int>(iget("samples", 30)), tol);
    }
    throw specsum::InvalidInput("mode must be Lsign, gradients or assertion");
  }
  if (command == "isopar") {
    return specsum::run_isopar(static_cast<int>(iget("g", 0)),
                               static_cast<int>(iget("m1", 0)),
                               static_cast<int>(iget("m2", 1)),
                               static_cast<int>(iget("grid", 10000)));
  }
  if (command == "identities") {
    return specsum::run_identities(static_cast<int>(iget("n", 12)),
                                   static_cast<int>(iget("samples", 1000)),
                                   static_cast<std::uint64_t>(iget("seed", 0)));
  }
  if (command == "plot") {
    return specsum::run_plot(static_cast<int>(iget("n", 0)), vget("c"),
                             vget("f_marks"), tol);
  }
  throw specsum::InvalidInput("unknown command: " + command);
}

int run_job_file(const std::string& path) {
  nlohmann::json job;
  {
    std::ifstream is(path);
    if (!is) {
      std::cerr << "error: cannot read job file " << path << "\n";
      return specsum::kExitIoError;
    }
    try {
      is >> job;
    } catch (const std::exception& e) {
      std::cerr << "error: job file is not valid JSON: " << e.what() << "\n";
      return specsum::kExitInvalidInput;
    }
  }
  const std::string command = job.at("command").get<std::string>();
  const nlohmann::json params =
      job.contains("parameters") ? job.at("parameters") : nlohmann::json::object();
  OutputSpec spec;
  spec.format = "json";
  if (job.contains("output")) {
    spec.path = job.at("output").value("path", "");
    spec.format = job.at("output").value("format", "json");
  }
  return emit(dispatch(command, params), spec);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"power-sum constrained spectra: intervals, degenerate patterns, "
               "boundary estimates and isoparametric curvature"};
  app.set_version_flag("--version", specsum::kVersion);
  app.require_subcommand(0, 1);

  std::string out_path;
  std::string format = "json";
  double tol = 1e-12;
  std::uint64_t seed = 0;
  std::string job_path;
  app.add_option("--out", out_path, "output path (default: stdout)");
  app.add_option("--format", format, "json | csv | svg")->default_val("json");
  app.add_option("--tol", tol, "numerical tolerance")->default_val(1e-12);
  app.add_option("--seed", seed, "seed for sampled modes")->default_val(0);
  app.add_option("--job", job_path, "run a JSON job document instead of flags");

  int n = 0;
  std::vector<double> c;
  double f = 0.0;
  double eps = 0.0;
  std::string mode;
  std::string end = "upper";
  int samples = 0;
  int g = 0;
  int m1 = 1;
  int m2 = 1;
  int grid = 10000;
  std::vector<double> f_marks;

  CLI::App* analyze = app.add_subcommand("analyze", "model, interval and boundary layouts");
  analyze->add_option("--n", n, "eigenvalue count")->required();
  analyze->add_option("--c", c, "comma-separated power sums c_1..c_{n-1}")
      ->required()
      ->delimiter(',');

  CLI::App* spectrum = app.add_subcommand("spectrum", "reconstruct the spectrum at f");
  spectrum->add_option("--n", n, "eigenvalue count")->required();
  spectrum->add_option("--c", c, "power sums")->required()->delimiter(',');
  spectrum->add_option("--f", f, "top power sum")->required();
  spectrum->add_option("--eps", eps, "band width for region labels");

  CLI::App* degenerate = app.add_subcommand("degenerate", "per-pattern uniqueness table");
  degenerate->add_option("--n", n, "eigenvalue count")->required();
  degenerate->add_option("--c", c, "power sums")->required()->delimiter(',');

  CLI::App* verify = app.add_subcommand("verify", "property scans");
  verify->add_option("--mode", mode, "Lsign | gradients | assertion")->required();
  verify->add_option("--n", n, "eigenvalue count")->required();
  verify->add_option("--c", c, "power sums (assertion mode)")->delimiter(',');
  verify->add_option("--end", end, "lower | upper (assertion mode)");
  verify->add_option("--samples", samples, "sample count");
  verify->add_option("--eps", eps, "scan window (assertion mode)");

  CLI::App* isopar = app.add_subcommand("isopar", "curvature sweep of one family");
  isopar->add_option("--g", g, "distinct curvature count (1,2,3,4,6)")->required();
  isopar->add_option("--m1", m1, "first multiplicity")->required();
  isopar->add_option("--m2", m2, "second multiplicity");
  isopar->add_option("--grid", grid, "theta grid size");

  CLI::App* identities = app.add_subcommand("identities", "trigonometric identity residuals");
  identities->add_option("--n", n, "largest term count")->required();
  identities->add_option("--samples", samples, "angles per n");

  CLI::App* plot = app.add_subcommand("plot", "chart of the base polynomial");
  plot->add_option("--n", n, "eigenvalue count")->required();
  plot->add_option("--c", c, "power sums")->required()->delimiter(',');
  plot->add_option("--f-marks", f_marks, "marker levels for f")->delimiter(',');

  // Let --out, --format, --tol and --seed appear after the subcommand name.
  for (CLI::App* sub : app.get_subcommands(nullptr)) sub->fallthrough();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : specsum::kExitInvalidInput;
  }

  try {
    if (!job_path.empty()) return run_job_file(job_path);
    if (app.get_subcommands().empty()) {
      std::cerr << app.help();
      return specsum::kExitInvalidInput;
    }

    RunOutput out;
    if (*analyze) {
      out = specsum::run_analyze(n, c, tol);
    } else if (*spectrum) {
      out = specsum::run_spectrum(n, c, f, eps, tol);
    } else if (*degenerate) {
      out = specsum::run_degenerate(n, c, tol);
    } else if (*verify) {
      if (mode == "Lsign") {
        out = specsum::run_verify_lsign(n, samples > 0 ? samples : 10000, seed);
      } else if (mode == "gradients") {
        out = specsum::run_verify_gradients(n, samples > 0 ? samples : 1000, seed);
      } else if (mode == "assertion") {
        out = specsum::run_verify_assertion(n, c, end, eps > 0 ? eps : 1e-2,
                                            samples > 0 ? samples : 30, tol);
      } else {
        throw specsum::InvalidInput("mode must be Lsign, gradients or assertion");
      }
    } else if (*isopar) {
      out = specsum::run_isopar(g, m1, m2, grid);
    } else if (*identities) {
      out = specsum::run_identities(n, samples > 0 ? samples : 1000, seed);
    } else if (*plot) {
      if (format == "json") format = "svg";  // charts default to SVG
      out = specsum::run_plot(n, c, f_marks, tol);
    }
    return emit(out, OutputSpec{out_path, format});
  } catch (const specsum::PatternViolation& e) {
    std::cerr << "error: " << e.what() << "\n";
    return specsum::kExitPatternViolation;
  } catch (const specsum::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return specsum::kExitInvalidInput;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return specsum::kExitInvalidInput;
  }
}
