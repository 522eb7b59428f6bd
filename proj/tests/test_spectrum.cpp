#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <limits>
#include <vector>

#include "oracles.hpp"
#include "specsum/rng.hpp"
#include "specsum/spectrum.hpp"

using namespace specsum;

namespace {
const double kInvSqrt2 = 1.0 / std::sqrt(2.0);
const double kInvSqrt3 = 1.0 / std::sqrt(3.0);

ConstraintModel cubic_model() { return build_model(3, std::vector<double>{0, 2}); }
ConstraintModel quartic_model() { return build_model(4, std::vector<double>{0, 2, 0}); }
}  // namespace

TEST_CASE("build_model assembles the base polynomial") {
  SECTION("n=3, c=(0,2) gives x^3 - x") {
    const ConstraintModel m = cubic_model();
    CHECK(m.base.coeffs() == std::vector<double>{0, -1, 0, 1});
    CHECK(m.offset == Catch::Approx(0.0).margin(1e-15));
  }
  SECTION("n=4, c=(0,2,0) gives x^4 - x^2") {
    const ConstraintModel m = quartic_model();
    CHECK(m.base.coeffs() == std::vector<double>{0, 0, -1, 0, 1});
    CHECK(m.offset == Catch::Approx(0.5));
  }
  SECTION("n=2, c=(0) gives x^2") {
    const ConstraintModel m = build_model(2, std::vector<double>{0});
    CHECK(m.base.coeffs() == std::vector<double>{0, 0, 1});
    CHECK(m.offset == Catch::Approx(0.0).margin(1e-15));
  }
  CHECK_THROWS_AS(build_model(4, std::vector<double>{0, 2}), InvalidInput);
  CHECK_THROWS_AS(build_model(1, std::vector<double>{}), InvalidInput);
}

TEST_CASE("characteristic polynomial at given top power sum") {
  CHECK(char_poly_at(cubic_model(), 0.0).coeffs() ==
        std::vector<double>{0, -1, 0, 1});
  const Poly f1 = char_poly_at(quartic_model(), 1.0);
  CHECK(f1.coeffs()[0] == Catch::Approx(0.25));
  const Poly f2 = char_poly_at(quartic_model(), 2.0);
  CHECK(f2.coeffs()[0] == Catch::Approx(0.0).margin(1e-15));
}

TEST_CASE("feasible interval of the worked models") {
  SECTION("n=3") {
    const FeasibleInterval iv = feasible_interval(cubic_model());
    CHECK(iv.lower == Catch::Approx(-2.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(iv.upper == Catch::Approx(2.0 / std::sqrt(3.0)).epsilon(1e-12));
    CHECK(iv.lower == Catch::Approx(-1.1547005).epsilon(1e-6));
  }
  SECTION("n=4") {
    const FeasibleInterval iv = feasible_interval(quartic_model());
    CHECK(iv.lower == Catch::Approx(1.0).epsilon(1e-12));
    CHECK(iv.upper == Catch::Approx(2.0).epsilon(1e-12));
    CHECK(iv.lower_critical == Catch::Approx(-0.25));
    CHECK(iv.upper_critical == Catch::Approx(0.0).margin(1e-12));
  }
  SECTION("n=2 has an unbounded upper end") {
    const FeasibleInterval iv = feasible_interval(build_model(2, std::vector<double>{0}));
    CHECK(iv.lower == Catch::Approx(0.0).margin(1e-12));
    CHECK(std::isinf(iv.upper));
    CHECK(iv.upper > 0);
  }
}

TEST_CASE("spectra reconstructed at given f") {
  const ConstraintModel m = quartic_model();
  SECTION("f = 1: two doubled values") {
    const Spectrum s = spectrum_at(m, 1.0);
    REQUIRE(s.entries.size() == 2);
    CHECK(s.entries[0].value == Catch::Approx(-kInvSqrt2));
    CHECK(s.entries[1].value == Catch::Approx(kInvSqrt2));
    CHECK(s.entries[0].multiplicity == 2);
    CHECK(s.entries[1].multiplicity == 2);
  }
  SECTION("f = 2: -1, 0 doubled, 1") {
    const Spectrum s = spectrum_at(m, 2.0);
    REQUIRE(s.entries.size() == 3);
    CHECK(s.entries[0].value == Catch::Approx(-1.0));
    CHECK(s.entries[1].value == Catch::Approx(0.0).margin(1e-9));
    CHECK(s.entries[2].value == Catch::Approx(1.0));
    CHECK(s.entries[1].multiplicity == 2);
  }
  SECTION("f = 3 is infeasible") {
    CHECK_THROWS_AS(spectrum_at(m, 3.0), NonRealRoots);
  }
}

TEST_CASE("region classification") {
  const ConstraintModel m = quartic_model();
  const FeasibleInterval iv = feasible_interval(m);
  SECTION("endpoints") {
    CHECK(classify_point(m, iv, 1.0, 0.1).region == Region::AtLower);
    CHECK(classify_point(m, iv, 2.0, 0.1).region == Region::AtUpper);
    CHECK_FALSE(classify_point(m, iv, 1.0, 0.1).band.has_value());
  }
  SECTION("interior bands") {
    const auto mid = classify_point(m, iv, 1.5, 0.1);
    CHECK(mid.region == Region::Interior);
    CHECK(mid.band == Band::Core);
    const auto hi = classify_point(m, iv, 1.95, 0.1);
    CHECK(hi.region == Region::Interior);
    CHECK(hi.band == Band::NearUpper);
    const auto lo = classify_point(m, iv, 1.05, 0.1);
    CHECK(lo.band == Band::NearLower);
    CHECK(classify_point(m, iv, 1.1, 0.1).band == Band::Core);
  }
  SECTION("errors") {
    CHECK_THROWS_AS(classify_point(m, iv, 2.5, 0.1), OutOfRange);
    CHECK_THROWS_AS(classify_point(m, iv, 1.5, 0.6), InvalidInput);
    const FeasibleInterval open = feasible_interval(build_model(2, std::vector<double>{0}));
    CHECK_THROWS_AS(classify_point(m, open, 0.5, 0.1), InvalidInput);
  }
}

TEST_CASE("boundary patterns of the worked models") {
  SECTION("n=4 upper: doubled value at the local maximum") {
    const BoundaryPattern bp = boundary_pattern(quartic_model(), IntervalEnd::Upper);
    CHECK(bp.verified);
    CHECK(bp.spectrum.multiplicities() == std::vector<int>{1, 2, 1});
    REQUIRE(bp.doubled_positions.size() == 1);
    CHECK(bp.doubled_positions[0] == 1);
  }
  SECTION("n=4 lower: both doubled values at local minima") {
    const BoundaryPattern bp = boundary_pattern(quartic_model(), IntervalEnd::Lower);
    CHECK(bp.spectrum.multiplicities() == std::vector<int>{2, 2});
    CHECK(bp.doubled_positions == std::vector<int>{0, 2});
  }
  SECTION("n=3 upper matches the doubled-first layout") {
    const BoundaryPattern bp = boundary_pattern(cubic_model(), IntervalEnd::Upper);
    REQUIRE(bp.spectrum.entries.size() == 2);
    CHECK(bp.spectrum.entries[0].value == Catch::Approx(-kInvSqrt3));
    CHECK(bp.spectrum.entries[0].multiplicity == 2);
    CHECK(bp.spectrum.entries[1].value == Catch::Approx(2.0 * kInvSqrt3));
    CHECK(bp.doubled_positions == std::vector<int>{0});
  }
  SECTION("multiplicity above 2 is reported, not accepted") {
    // c = (0,0,0) pins a quadruple root at the lower endpoint.
    const ConstraintModel m = build_model(4, std::vector<double>{0, 0, 0});
    CHECK_THROWS_AS(boundary_pattern(m, IntervalEnd::Lower), PatternViolation);
    CHECK_THROWS_AS(boundary_pattern(m, IntervalEnd::Upper), InvalidInput);
  }
}

TEST_CASE("power sums of reconstructed spectra reproduce the constraints") {
  Xoshiro256pp rng(1003);
  for (int done = 0; done < 150; ++done) {
    const int n = 2 + static_cast<int>(rng.below(9));
    const auto values = oracles::separated_values(rng, n, -2.0, 2.0, 0.05);
    std::vector<SpectrumEntry> entries;
    for (double v : values) entries.push_back({v, 1});
    const Spectrum gen = Spectrum::from_entries(entries);
    const auto p = power_sums_of(gen, n);

    const ConstraintModel m =
        build_model(n, std::vector<double>(p.begin(), p.end() - 1));
    const double f = p[n - 1];
    const Spectrum found = spectrum_at(m, f);
    const auto ps = power_sums_of(found, n);
    for (int k = 0; k < n - 1; ++k) {
      CHECK(std::abs(ps[k] - m.c[k]) <= 1e-8 * (1.0 + std::abs(m.c[k])));
    }
    CHECK(std::abs(ps[n - 1] - f) <= 1e-8 * (1.0 + std::abs(f)));
  }
}

TEST_CASE("feasibility characterization by sampling") {
  Xoshiro256pp rng(2718);
  const ConstraintModel models[] = {cubic_model(), quartic_model()};
  for (const ConstraintModel& m : models) {
    const FeasibleInterval iv = feasible_interval(m);
    const double width = iv.upper - iv.lower;
    int checked = 0;
    for (int k = 0; k < 200; ++k) {
      const double f = rng.uniform(iv.lower - 0.5 * width, iv.upper + 0.5 * width);
      // Skip the ambiguous sliver right at the endpoints.
      if (std::abs(f - iv.lower) < 1e-9 || std::abs(f - iv.upper) < 1e-9) continue;
      bool ok = true;
      try {
        (void)spectrum_at(m, f);
      } catch (const NonRealRoots&) {
        ok = false;
      }
      CHECK(ok == (f > iv.lower && f < iv.upper));
      ++checked;
    }
    CHECK(checked > 150);
  }
}

TEST_CASE("interior points have simple spectra") {
  Xoshiro256pp rng(31415);
  const ConstraintModel models[] = {cubic_model(), quartic_model()};
  for (const ConstraintModel& m : models) {
    const FeasibleInterval iv = feasible_interval(m);
    for (int k = 0; k < 100; ++k) {
      const double f = rng.uniform(iv.lower + 1e-6, iv.upper - 1e-6);
      CHECK(spectrum_at(m, f).all_simple());
    }
    CHECK(iv.upper_critical > iv.lower_critical);
  }
}

TEST_CASE("n=3 brute-force range oracle for the feasible interval") {
  // Sweep the constraint curve p_1 = 0, p_2 = 2 in the (l1, l2) chart with
  // l3 = -l1 - l2: radially solving l1^2 + l2^2 + l1 l2 = 1 keeps every
  // sample inside the |p2 - c2| < 1e-6 filter, and the empirical range of
  // p3 must match the interval computed from the base polynomial.
  const ConstraintModel m = cubic_model();
  const FeasibleInterval iv = feasible_interval(m);
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  const int steps = 20000;
  for (int i = 0; i < steps; ++i) {
    const double phi = 2.0 * 3.14159265358979323846 * i / steps;
    const double c = std::cos(phi);
    const double s = std::sin(phi);
    const double r = std::sqrt(1.0 / (1.0 + c * s));
    const double l1 = r * c;
    const double l2 = r * s;
    const double l3 = -l1 - l2;
    const double p2 = l1 * l1 + l2 * l2 + l3 * l3;
    REQUIRE(std::abs(p2 - 2.0) < 1e-6);
    const double p3 = l1 * l1 * l1 + l2 * l2 * l2 + l3 * l3 * l3;
    lo = std::min(lo, p3);
    hi = std::max(hi, p3);
  }
  CHECK(lo == Catch::Approx(iv.lower).margin(1e-3));
  CHECK(hi == Catch::Approx(iv.upper).margin(1e-3));
}

TEST_CASE("spectrum validation") {
  CHECK_THROWS_AS(Spectrum::from_entries({{1.0, 1}, {1.0, 1}}), InvalidInput);
  CHECK_THROWS_AS(Spectrum::from_entries({{1.0, 0}}), InvalidInput);
  CHECK_THROWS_AS(power_sums_of(Spectrum::from_entries({{1.0, 1}}), 0), InvalidInput);
}
