#include <catch2/catch_amalgamated.hpp>

#include <cmath>
#include <vector>

#include "oracles.hpp"
#include "specsum/rng.hpp"
#include "specsum/spectrum.hpp"
#include "specsum/symfunc.hpp"

using namespace specsum;

TEST_CASE("power sums to elementary symmetric") {
  SECTION("zero spectrum") {
    const auto e = power_sums_to_elementary(std::vector<double>{0, 0, 0});
    CHECK(e == std::vector<double>{0, 0, 0});
  }
  SECTION("roots -1, 0, 1") {
    // (x-1) x (x+1) = x^3 - x, so e = (0, -1, 0).
    const auto e = power_sums_to_elementary(std::vector<double>{0, 2, 0});
    REQUIRE(e.size() == 3);
    CHECK(e[0] == Catch::Approx(0.0).margin(1e-14));
    CHECK(e[1] == Catch::Approx(-1.0));
    CHECK(e[2] == Catch::Approx(0.0).margin(1e-14));
  }
  SECTION("partial list is independent of the ambient count") {
    // Power sums of {-1, 0, 0, 1} truncated at m = 3.
    const auto e = power_sums_to_elementary(std::vector<double>{0, 2, 0});
    CHECK(e[0] == Catch::Approx(0.0).margin(1e-14));
    CHECK(e[1] == Catch::Approx(-1.0));
    CHECK(e[2] == Catch::Approx(0.0).margin(1e-14));
  }
}

TEST_CASE("elementary symmetric to power sums") {
  SECTION("inverse of the roots -1, 0, 1 case") {
    const auto p = elementary_to_power_sums(std::vector<double>{0, -1, 0});
    REQUIRE(p.size() == 3);
    CHECK(p[0] == Catch::Approx(0.0).margin(1e-14));
    CHECK(p[1] == Catch::Approx(2.0));
    CHECK(p[2] == Catch::Approx(0.0).margin(1e-14));
  }
  SECTION("zeros") {
    CHECK(elementary_to_power_sums(std::vector<double>{0, 0}) ==
          std::vector<double>{0, 0});
  }
  SECTION("double root at 1") {
    const auto p = elementary_to_power_sums(std::vector<double>{2, 1});
    CHECK(p[0] == Catch::Approx(2.0));
    CHECK(p[1] == Catch::Approx(2.0));
  }
}

TEST_CASE("round trip p -> e -> p on random inputs") {
  Xoshiro256pp rng(20240811);
  for (int trial = 0; trial < 200; ++trial) {
    const int m = 1 + static_cast<int>(rng.below(12));
    std::vector<double> p(m);
    for (double& x : p) x = rng.uniform(-5.0, 5.0);
    const auto back = elementary_to_power_sums(power_sums_to_elementary(p));
    REQUIRE(back.size() == p.size());
    for (int k = 0; k < m; ++k) {
      CHECK(back[k] == Catch::Approx(p[k]).epsilon(1e-10).margin(1e-10));
    }
  }
}

TEST_CASE("elementary values match an independent expansion of the characteristic polynomial") {
  Xoshiro256pp rng(77);
  for (int trial = 0; trial < 100; ++trial) {
    const int groups = 1 + static_cast<int>(rng.below(4));
    const auto values = oracles::separated_values(rng, groups, -2.0, 2.0, 0.1);
    std::vector<SpectrumEntry> entries;
    std::vector<int> mult(groups);
    int n = 0;
    for (int i = 0; i < groups; ++i) {
      mult[i] = 1 + static_cast<int>(rng.below(3));
      n += mult[i];
      entries.push_back({values[i], mult[i]});
    }
    const Spectrum s = Spectrum::from_entries(entries);
    const auto e = power_sums_to_elementary(power_sums_of(s, n));

    // Independent oracle: expand prod (x - mu_i)^{m_i} by convolution and
    // read the coefficients; coeff of x^{n-k} is (-1)^k e_k.
    const auto coeffs = oracles::expand_from_roots(values, mult);
    REQUIRE(static_cast<int>(coeffs.size()) == n + 1);
    for (int k = 1; k <= n; ++k) {
      const double expected = (k % 2 == 0 ? 1.0 : -1.0) * coeffs[n - k];
      CHECK(e[k - 1] == Catch::Approx(expected).epsilon(1e-9).margin(1e-9));
    }
  }
}

TEST_CASE("top elementary offset") {
  SECTION("n=3, c=(0,2)") {
    CHECK(top_elementary_offset(std::vector<double>{0, 2}) ==
          Catch::Approx(0.0).margin(1e-15));
  }
  SECTION("n=4, c=(0,2,0)") {
    CHECK(top_elementary_offset(std::vector<double>{0, 2, 0}) ==
          Catch::Approx(0.5));
  }
  SECTION("n=2, c=(0)") {
    CHECK(top_elementary_offset(std::vector<double>{0}) ==
          Catch::Approx(0.0).margin(1e-15));
  }
}

TEST_CASE("offset consistency against explicit spectra") {
  // e_n(s) - ((-1)^{n-1}/n) p_n(s) must equal the offset computed from the
  // truncated power sums alone.
  Xoshiro256pp rng(4242);
  for (int trial = 0; trial < 100; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(7));
    const auto values = oracles::separated_values(rng, n, -2.0, 2.0, 0.05);
    std::vector<SpectrumEntry> entries;
    for (double v : values) entries.push_back({v, 1});
    const Spectrum s = Spectrum::from_entries(entries);

    const auto p = power_sums_of(s, n);
    const auto e = power_sums_to_elementary(p);
    const double sign = n % 2 == 0 ? -1.0 : 1.0;
    const double offset =
        top_elementary_offset(std::vector<double>(p.begin(), p.end() - 1));
    CHECK(e[n - 1] - sign / n * p[n - 1] ==
          Catch::Approx(offset).epsilon(1e-9).margin(1e-9));
  }
}

TEST_CASE("power sums of explicit spectra") {
  const Spectrum s1 = Spectrum::from_entries({{-1.0, 1}, {1.0, 1}});
  CHECK(power_sums_of(s1, 2) == std::vector<double>{0.0, 2.0});

  const double r = 1.0 / std::sqrt(2.0);
  const Spectrum s2 = Spectrum::from_entries({{-r, 2}, {r, 2}});
  const auto p2 = power_sums_of(s2, 4);
  CHECK(p2[0] == Catch::Approx(0.0).margin(1e-15));
  CHECK(p2[1] == Catch::Approx(2.0));
  CHECK(p2[2] == Catch::Approx(0.0).margin(1e-15));
  CHECK(p2[3] == Catch::Approx(1.0));

  const Spectrum s3 = Spectrum::from_entries({{-1.0, 1}, {0.0, 2}, {1.0, 1}});
  const auto p3 = power_sums_of(s3, 4);
  CHECK(p3[1] == Catch::Approx(2.0));
  CHECK(p3[3] == Catch::Approx(2.0));
}

TEST_CASE("symfunc input validation") {
  CHECK_THROWS_AS(power_sums_to_elementary(std::vector<double>{}), InvalidInput);
  CHECK_THROWS_AS(
      power_sums_to_elementary(std::vector<double>{1.0, std::nan("")}),
      InvalidInput);
  CHECK_THROWS_AS(top_elementary_offset(std::vector<double>{}), InvalidInput);
}
