#include <catch2/catch_amalgamated.hpp>

#include <algorithm>
#include <cmath>
#include <set>
#include <vector>

#include "oracles.hpp"
#include "specsum/degenerate.hpp"
#include "specsum/rng.hpp"

using namespace specsum;

namespace {
ConstraintModel cubic_model() { return build_model(3, std::vector<double>{0, 2}); }
ConstraintModel quartic_model() { return build_model(4, std::vector<double>{0, 2, 0}); }
}  // namespace

TEST_CASE("pattern enumeration") {
  SECTION("n=3") {
    const auto pats = enumerate_patterns(3);
    const std::set<MultiplicityPattern> got(pats.begin(), pats.end());
    const std::set<MultiplicityPattern> want{{3}, {2, 1}, {1, 2}};
    CHECK(got == want);
  }
  SECTION("counts are 2^{n-1} - 1") {
    CHECK(enumerate_patterns(2).size() == 1);
    CHECK(enumerate_patterns(4).size() == 7);
    CHECK(enumerate_patterns(6).size() == 31);
  }
  CHECK_THROWS_AS(enumerate_patterns(1), InvalidInput);
}

TEST_CASE("worked quartic model: constructive solutions per pattern") {
  const ConstraintModel m = quartic_model();
  SECTION("(2,2) at f = 1") {
    const auto sol = solve_pattern(m, {2, 2});
    REQUIRE(sol.has_value());
    CHECK(sol->f_value == Catch::Approx(1.0).epsilon(1e-10));
    CHECK(sol->spectrum.entries[0].value == Catch::Approx(-1.0 / std::sqrt(2.0)));
    CHECK(sol->spectrum.entries[1].value == Catch::Approx(1.0 / std::sqrt(2.0)));
  }
  SECTION("(1,2,1) at f = 2") {
    const auto sol = solve_pattern(m, {1, 2, 1});
    REQUIRE(sol.has_value());
    CHECK(sol->f_value == Catch::Approx(2.0).epsilon(1e-10));
    CHECK(sol->spectrum.multiplicities() == std::vector<int>{1, 2, 1});
  }
  SECTION("(2,1,1) has no solution") {
    const PatternOutcome out = solve_pattern_outcome(m, {2, 1, 1});
    CHECK_FALSE(out.solution.has_value());
    CHECK_FALSE(out.reason.empty());
  }
}

TEST_CASE("worked cubic model") {
  const ConstraintModel m = cubic_model();
  SECTION("triple root is impossible") {
    CHECK_FALSE(solve_pattern(m, {3}).has_value());
  }
  SECTION("(2,1) and (1,2)") {
    const auto a = solve_pattern(m, {2, 1});
    const auto b = solve_pattern(m, {1, 2});
    REQUIRE(a.has_value());
    REQUIRE(b.has_value());
    CHECK(a->f_value == Catch::Approx(2.0 / std::sqrt(3.0)));
    CHECK(b->f_value == Catch::Approx(-2.0 / std::sqrt(3.0)));
  }
}

TEST_CASE("all degenerate values") {
  SECTION("quartic model: exactly two, five rejections") {
    const auto sols = all_degenerate_values(quartic_model());
    REQUIRE(sols.size() == 2);
    std::vector<double> fs{sols[0].f_value, sols[1].f_value};
    std::sort(fs.begin(), fs.end());
    CHECK(fs[0] == Catch::Approx(1.0));
    CHECK(fs[1] == Catch::Approx(2.0));
    int rejected = 0;
    for (const auto& out : pattern_outcomes(quartic_model())) {
      if (!out.solution) ++rejected;
    }
    CHECK(rejected == 5);
  }
  SECTION("cubic model: two") {
    CHECK(all_degenerate_values(cubic_model()).size() == 2);
  }
  SECTION("n=2: the double root at zero") {
    const auto sols = all_degenerate_values(build_model(2, std::vector<double>{0}));
    REQUIRE(sols.size() == 1);
    CHECK(sols[0].f_value == Catch::Approx(0.0).margin(1e-12));
    CHECK(sols[0].pattern == MultiplicityPattern{2});
  }
}

TEST_CASE("degenerate f-values land on interval endpoints when doubled") {
  for (const ConstraintModel& m : {cubic_model(), quartic_model()}) {
    const FeasibleInterval iv = feasible_interval(m);
    for (const auto& sol : all_degenerate_values(m)) {
      bool has_triple = false;
      for (int part : sol.pattern) has_triple = has_triple || part >= 3;
      if (has_triple) continue;
      const bool at_lower = std::abs(sol.f_value - iv.lower) <= 1e-8;
      const bool at_upper = std::abs(sol.f_value - iv.upper) <= 1e-8;
      CHECK((at_lower || at_upper));
      // Cross-check against the boundary layout.
      const BoundaryPattern bp = boundary_pattern(
          m, at_lower ? IntervalEnd::Lower : IntervalEnd::Upper);
      CHECK(bp.spectrum.multiplicities() == sol.pattern);
    }
  }
}

TEST_CASE("constructive solver agrees with the multi-start search oracle") {
  // Worked models plus models generated from random degenerate spectra.
  std::vector<ConstraintModel> models{cubic_model(), quartic_model()};
  Xoshiro256pp rng(60601);
  while (models.size() < 5) {
    const int n = 3 + static_cast<int>(rng.below(2));
    const auto values = oracles::separated_values(rng, n - 1, -1.5, 1.5, 0.3);
    std::vector<SpectrumEntry> entries;
    entries.push_back({values[0], 2});
    for (int i = 1; i < n - 1; ++i) entries.push_back({values[i], 1});
    const Spectrum s = Spectrum::from_entries(entries);
    const auto p = power_sums_of(s, n - 1);
    models.push_back(build_model(n, p));
  }

  std::uint64_t seed = 1;
  for (const ConstraintModel& m : models) {
    for (const MultiplicityPattern& pat : enumerate_patterns(m.n)) {
      const auto constructive = solve_pattern(m, pat);
      const auto searched = oracles::search_pattern(pat, m.c, seed++);
      // Uniqueness: the oracle never finds two solutions for one pattern.
      CHECK(searched.solutions.size() <= 1);
      REQUIRE(constructive.has_value() == !searched.solutions.empty());
      if (constructive) {
        const auto& mu = searched.solutions[0];
        REQUIRE(mu.size() == constructive->spectrum.entries.size());
        for (std::size_t i = 0; i < mu.size(); ++i) {
          CHECK(constructive->spectrum.entries[i].value ==
                Catch::Approx(mu[i]).margin(1e-4));
        }
      }
    }
  }
}

TEST_CASE("solutions reproduce the constraints") {
  for (const ConstraintModel& m : {cubic_model(), quartic_model()}) {
    for (const auto& sol : all_degenerate_values(m)) {
      const auto ps = power_sums_of(sol.spectrum, m.n - 1);
      for (int k = 0; k < m.n - 1; ++k) {
        CHECK(std::abs(ps[k] - m.c[k]) <= 1e-8 * (1.0 + std::abs(m.c[k])));
      }
    }
  }
}

TEST_CASE("pattern validation") {
  const ConstraintModel m = quartic_model();
  CHECK_THROWS_AS(solve_pattern(m, {1, 1, 1, 1}), InvalidInput);
  CHECK_THROWS_AS(solve_pattern(m, {2, 1}), InvalidInput);
  CHECK_THROWS_AS(solve_pattern(m, {5, -1}), InvalidInput);
}
