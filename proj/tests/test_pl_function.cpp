// SPDX-License-Identifier: Apache-2.0
#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <random>

#include "hjhalf/csv_io.hpp"
#include "hjhalf/errors.hpp"
#include "hjhalf/pl_function.hpp"
#include "hjhalf/presets.hpp"
#include "hjhalf/random_pl.hpp"

using namespace hjhalf;

namespace {

// Brute-force scan: no sign change of f - g may occur strictly between
// consecutive reported crossings.
void check_crossings_against_sign_scan(const PLFunction& f, const PLFunction& g,
                                       double lo, double hi, int n) {
  const auto roots = crossings(f, g);
  double prev_x = lo;
  double prev_d = f(lo) - g(lo);
  for (int i = 1; i <= n; ++i) {
    const double x = lo + (hi - lo) * i / n;
    const double d = f(x) - g(x);
    if (prev_d != 0.0 && d != 0.0 && (prev_d > 0) != (d > 0)) {
      bool covered = false;
      for (double r : roots)
        if (r >= prev_x - 1e-9 && r <= x + 1e-9) covered = true;
      CAPTURE(prev_x);
      CAPTURE(x);
      CHECK(covered);
    }
    prev_x = x;
    prev_d = d;
  }
}

}  // namespace

TEST_CASE("eval matches breakpoint table and tails") {
  const PLFunction hw = preset("W");
  CHECK(hw(0.0) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(hw(-3.0) == doctest::Approx(2.0).epsilon(1e-15));
  CHECK(hw(-1.0) == 0.0);
  CHECK(hw(1.0) == 0.0);
  CHECK(hw(0.5) == doctest::Approx(0.5));
  const PLFunction flin = preset("linear");
  CHECK(flin(7.0) == doctest::Approx(-7.0));
  // eval is exact on every stored breakpoint
  std::mt19937_64 rng(2024);
  for (int k = 0; k < 50; ++k) {
    const PLFunction f = random_coercive(rng);
    for (const auto& b : f.breakpoints()) CHECK(f(b.p) == b.value);
  }
}

TEST_CASE("inverse_monotone solves exactly and rejects non-monotone input") {
  const PLFunction flin = preset("linear");
  CHECK(inverse_monotone(flin, 3.0) == doctest::Approx(-3.0));
  CHECK(inverse_monotone(flin, 0.0) == 0.0);
  CHECK_THROWS_AS(inverse_monotone(preset("W"), 0.3), NotMonotoneError);
  CHECK_THROWS_AS(inverse_monotone(preset("staircaseF"), 0.5), NotMonotoneError);

  const PLFunction steep = preset("steepF");
  for (double y : {-3.0, -0.5, 0.0, 1.0, 4.0, 11.0})
    CHECK(steep(inverse_monotone(steep, y)) == doctest::Approx(y).epsilon(1e-12));
}

TEST_CASE("inverse_pl agrees with inverse_monotone") {
  std::mt19937_64 rng(7);
  for (int k = 0; k < 30; ++k) {
    const PLFunction f = random_strictly_decreasing_flux(rng);
    const PLFunction finv = inverse_pl(f);
    for (double y = -6.0; y <= 6.0; y += 0.37)
      CHECK(finv(y) == doctest::Approx(inverse_monotone(f, y)).epsilon(1e-12));
  }
}

TEST_CASE("crossings: W against linear flux") {
  const auto roots = crossings(preset("linear"), preset("W"));
  // F - H is +1 on the left tail, crosses once at -1/2, and stays negative
  // to the right (-1 on [0,1], then 1-2p)
  REQUIRE(roots.size() == 1);
  CHECK(roots[0] == doctest::Approx(-0.5).epsilon(1e-12));
  check_crossings_against_sign_scan(preset("linear"), preset("W"), -6.0, 6.0, 10000);
}

TEST_CASE("crossings: degenerate and parallel cases") {
  const PLFunction hw = preset("W");
  const auto self = crossings(hw, hw);
  REQUIRE(self.size() == hw.size());  // both endpoints of every segment
  for (std::size_t i = 0; i < self.size(); ++i)
    CHECK(self[i] == doctest::Approx(hw.breakpoints()[i].p));
  const PLFunction flin = preset("linear");
  CHECK(crossings(flin, shift_value(flin, 1.0)).empty());
}

TEST_CASE("crossings validated against sign scan on random pairs") {
  std::mt19937_64 rng(11);
  for (int k = 0; k < 60; ++k) {
    const PLFunction h = random_coercive(rng);
    const PLFunction f = random_nonincreasing_semicoercive(rng);
    check_crossings_against_sign_scan(f, h, -8.0, 8.0, 10000);
  }
}

TEST_CASE("coercivity checks read the tails") {
  CHECK(check_coercive(preset("W")));
  CHECK(check_coercive(preset("V")));
  CHECK_FALSE(check_coercive(preset("linear")));
  CHECK(check_semicoercive(preset("linear")));
  CHECK(check_semicoercive(preset("staircaseF")));
  CHECK(is_nonincreasing(preset("staircaseF")));
  CHECK_FALSE(is_strictly_decreasing(preset("staircaseF")));
  CHECK(is_strictly_decreasing(preset("steepF")));
  CHECK(is_strictly_decreasing(preset("asymF")));
}

TEST_CASE("decreasing envelope of the W shape") {
  const PLFunction env = decreasing_envelope(preset("W"));
  CHECK(env(0.5) == 0.0);
  CHECK(env(-1.0) == 0.0);
  CHECK(env(5.0) == 0.0);
  CHECK(env(-3.0) == doctest::Approx(2.0));
  // monotone input is its own envelope
  const PLFunction flin = preset("linear");
  const PLFunction env2 = decreasing_envelope(flin);
  for (double p = -5; p <= 5; p += 0.31) CHECK(env2(p) == doctest::Approx(flin(p)));
}

TEST_CASE("decreasing envelope: monotone, dominated, idempotent") {
  std::mt19937_64 rng(13);
  std::uniform_real_distribution<double> xdist(-9.0, 9.0);
  for (int k = 0; k < 1000; ++k) {
    const PLFunction h = random_coercive(rng);
    const PLFunction env = decreasing_envelope(h);
    const PLFunction env2 = decreasing_envelope(env);
    double prev = env(-9.0);
    for (int i = 0; i < 100; ++i) {
      const double x = -9.0 + 18.0 * i / 99.0;
      const double e = env(x);
      CHECK(e <= h(x) + 1e-12);
      CHECK(e <= prev + 1e-12);
      CHECK(env2(x) == doctest::Approx(e).epsilon(1e-12));
      prev = e;
    }
    for (int i = 0; i < 10; ++i) {
      const double x = xdist(rng);
      CHECK(env(x) <= h(x) + 1e-12);
    }
  }
}

TEST_CASE("bln flux of the W shape at p0 = 0") {
  const PLFunction f = bln_flux(preset("W"), 0.0);
  CHECK(f(-3.0) == doctest::Approx(2.0));   // sup over [-3,0] attained at -3
  CHECK(f(-2.0) == doctest::Approx(1.0));
  CHECK(f(-1.0) == doctest::Approx(1.0));   // max(-p-1, 1)
  CHECK(f(0.0) == doctest::Approx(1.0));
  CHECK(f(0.5) == doctest::Approx(0.5));    // 1 - p
  CHECK(f(1.0) == doctest::Approx(0.0));
  CHECK(f(4.0) == doctest::Approx(0.0));
}

TEST_CASE("bln flux anchors at H(p0) and is non-increasing and continuous") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> p0dist(-6.0, 6.0);
  for (int k = 0; k < 200; ++k) {
    const PLFunction h = random_coercive(rng);
    const double p0 = p0dist(rng);
    const PLFunction f = bln_flux(h, p0);
    CHECK(f(p0) == doctest::Approx(h(p0)).epsilon(1e-12));
    double prev = f(-10.0);
    for (int i = 1; i <= 400; ++i) {
      const double x = -10.0 + 20.0 * i / 400.0;
      const double v = f(x);
      CHECK(v <= prev + 1e-12);
      prev = v;
    }
    // continuity at stored breakpoints: left and right limits agree
    for (const auto& b : f.breakpoints()) {
      const double eps = 1e-7;
      CHECK(std::abs(f(b.p - eps) - f(b.p + eps)) < 1e-5);
      CHECK(f(b.p) == b.value);
    }
    // independent value check: extremes of PL functions over an interval sit
    // at the interval ends or at interior breakpoints
    for (int i = 0; i < 5; ++i) {
      const double p = p0dist(rng);
      const double lo = std::min(p, p0), hi = std::max(p, p0);
      double expect = p <= p0 ? std::max(h(p), h(p0)) : std::min(h(p), h(p0));
      for (const auto& b : h.breakpoints()) {
        if (b.p < lo || b.p > hi) continue;
        expect = p <= p0 ? std::max(expect, b.value) : std::min(expect, b.value);
      }
      CHECK(f(p) == doctest::Approx(expect).epsilon(1e-12));
    }
  }
}

TEST_CASE("subtract and shift behave pointwise") {
  const PLFunction hw = preset("W");
  const PLFunction flin = preset("linear");
  const PLFunction d = subtract(flin, hw);
  for (double p = -4; p <= 4; p += 0.17) CHECK(d(p) == doctest::Approx(flin(p) - hw(p)));
  const PLFunction s = shift_value(hw, 2.5);
  for (double p = -4; p <= 4; p += 0.17) CHECK(s(p) == doctest::Approx(hw(p) + 2.5));
}

TEST_CASE("simplified drops collinear nodes without changing the function") {
  const PLFunction f({{-1.0, 1.0}, {0.0, 0.0}, {1.0, -1.0}, {2.0, -2.0}}, -1.0, -1.0);
  const PLFunction g = simplified(f);
  CHECK(g.size() == 1);
  for (double p = -4; p <= 4; p += 0.23) CHECK(g(p) == doctest::Approx(f(p)));
}

TEST_CASE("PLFunction CSV round-trips exactly") {
  std::mt19937_64 rng(23);
  const auto dir = std::filesystem::temp_directory_path() / "hjhalf_test_csv";
  std::filesystem::create_directories(dir);
  for (int k = 0; k < 20; ++k) {
    const PLFunction f = random_coercive(rng);
    const auto path = dir / ("f" + std::to_string(k) + ".csv");
    write_pl_csv(path, f);
    CHECK(exact_equal(read_pl_csv(path), f));
  }
  // non-dyadic values round-trip too
  const PLFunction odd({{-1.0 / 3.0, 0.1}, {0.7, -0.3}}, -1.23456789012345e-7, -3.0);
  const auto path = dir / "odd.csv";
  write_pl_csv(path, odd);
  CHECK(exact_equal(read_pl_csv(path), odd));
}

TEST_CASE("constructor rejects malformed data") {
  CHECK_THROWS(PLFunction({}, -1.0, 1.0));
  CHECK_THROWS(PLFunction({{0.0, 0.0}, {0.0, 1.0}}, -1.0, 1.0));
  CHECK_THROWS(PLFunction({{1.0, 0.0}, {0.0, 1.0}}, -1.0, 1.0));
}
