#include <catch2/catch_amalgamated.hpp>

#include <random>

#include "chromatic/graph.hpp"
#include "chromatic/intpoly.hpp"
#include "test_util.hpp"

using chromatic::CheckedInt;
using chromatic::IntPoly;

namespace {

IntPoly random_poly(std::mt19937& rng, int max_degree) {
  int d = (int)(rng() % (max_degree + 1));
  std::vector<CheckedInt> c;
  for (int i = 0; i <= d; ++i) c.push_back((long long)(rng() % 21) - 10);
  return IntPoly(std::move(c));
}

}  // namespace

TEST_CASE("checked integers") {
  CheckedInt a = 7, b = -3;
  REQUIRE((a + b).to_int64() == 4);
  REQUIRE((a * b).to_int64() == -21);
  REQUIRE((-a).to_int64() == -7);
  REQUIRE(CheckedInt(0).is_zero());
  REQUIRE(a.abs() == a);
  REQUIRE(b.abs() == CheckedInt(3));

  SECTION("overflow raises instead of wrapping") {
    CheckedInt x = 1;
    for (int i = 0; i < 4; ++i) x *= 1000000000LL;  // 10^36
    REQUIRE_THROWS_AS(x * x, std::overflow_error);
    REQUIRE_THROWS_AS(x + x * 170, std::overflow_error);
    REQUIRE_FALSE(x.fits_int64());
    REQUIRE_THROWS_AS(x.to_int64(), std::overflow_error);
  }
  SECTION("string round trip beyond 64 bits") {
    CheckedInt big = CheckedInt::parse("-170141183460469231731687303715884105727");
    REQUIRE(big.to_string() == "-170141183460469231731687303715884105727");
    REQUIRE(CheckedInt::parse("12345") == CheckedInt(12345));
    REQUIRE_THROWS_AS(CheckedInt::parse("12x"), std::invalid_argument);
    REQUIRE_THROWS_AS(CheckedInt::parse(""), std::invalid_argument);
  }
  SECTION("exact division") {
    REQUIRE(CheckedInt(84).exact_div(7) == CheckedInt(12));
    REQUIRE_THROWS_AS(CheckedInt(85).exact_div(7), std::invalid_argument);
    REQUIRE_THROWS_AS(CheckedInt(85).exact_div(0), std::invalid_argument);
  }
}

TEST_CASE("ring operations") {
  const IntPoly t = IntPoly::variable();
  const IntPoly one = IntPoly::constant(1);

  REQUIRE((t - one).to_string() == "t - 1");
  REQUIRE((t + IntPoly()) == t);

  // t(t-1)^3 - t(t-1)(t-2) = t^4 - 4t^3 + 6t^2 - 3t
  IntPoly lhs = IntPoly::from_roots({0, 1, 1, 1}) - IntPoly::from_roots({0, 1, 2});
  REQUIRE(lhs == IntPoly({0, -3, 6, -4, 1}));
  REQUIRE(lhs.to_string() == "t^4 - 4*t^3 + 6*t^2 - 3*t");
}

TEST_CASE("from_roots") {
  REQUIRE(IntPoly::from_roots({0, 1, 1, 2}) == IntPoly({0, -2, 5, -4, 1}));
  REQUIRE(IntPoly::from_roots({}) == IntPoly::constant(1));
  REQUIRE(IntPoly::from_roots({0, 0}) == IntPoly::monomial(2));

  std::mt19937 rng(42);
  for (int trial = 0; trial < 50; ++trial) {
    std::vector<long long> roots;
    for (int i = 0; i < (int)(rng() % 6); ++i)
      roots.push_back((long long)(rng() % 11) - 5);
    IntPoly p = IntPoly::from_roots(roots);
    for (long long r : roots) REQUIRE(p.eval(r).is_zero());
    REQUIRE(p.leading() == CheckedInt(1));
  }
}

TEST_CASE("evaluation") {
  const IntPoly p_gstar({0, -2, 5, -4, 1});  // t^4 - 4t^3 + 5t^2 - 2t
  REQUIRE(p_gstar.eval(-1) == CheckedInt(12));
  REQUIRE(p_gstar.eval(0) == p_gstar.coeff(0));

  // value at 3 agrees with the brute-force count of proper 3-colorings
  chromatic::Graph gstar(4, {{1, 2}, {1, 4}, {2, 4}, {2, 3}});
  REQUIRE(p_gstar.eval(3).to_int64() == testutil::brute_color_count(gstar, 3));

  // (10^9)^5 exceeds 128 bits
  REQUIRE_THROWS_AS(IntPoly::monomial(5).eval(1000000000LL * 1000000000LL),
                    std::overflow_error);

  std::mt19937 rng(7);
  for (int trial = 0; trial < 100; ++trial) {
    IntPoly p = random_poly(rng, 5), q = random_poly(rng, 5);
    CheckedInt at = (long long)(rng() % 9) - 4;
    REQUIRE((p * q).eval(at) == p.eval(at) * q.eval(at));
  }
}

TEST_CASE("interpolation") {
  chromatic::Graph gstar(4, {{1, 2}, {1, 4}, {2, 4}, {2, 3}});
  std::vector<std::pair<long long, CheckedInt>> points;
  for (long long t = 0; t <= 4; ++t)
    points.emplace_back(t, testutil::brute_color_count(gstar, t));
  REQUIRE(IntPoly::interpolate(points) == IntPoly({0, -2, 5, -4, 1}));

  REQUIRE(IntPoly::interpolate({{0, 5}}) == IntPoly::constant(5));

  chromatic::Graph c4(4, {{1, 2}, {2, 3}, {3, 4}, {1, 4}});
  points.clear();
  for (long long t = 0; t <= 4; ++t)
    points.emplace_back(t, testutil::brute_color_count(c4, t));
  REQUIRE(IntPoly::interpolate(points) == IntPoly({0, -3, 6, -4, 1}));

  SECTION("rejects repeated abscissae") {
    REQUIRE_THROWS_AS(IntPoly::interpolate({{1, 2}, {1, 3}}),
                      std::invalid_argument);
  }
  SECTION("rejects non-integer interpolants") {
    // the line through (0,0) and (2,1) is t/2
    REQUIRE_THROWS_AS(IntPoly::interpolate({{0, 0}, {2, 1}}),
                      std::invalid_argument);
  }
  SECTION("left inverse of sampling") {
    std::mt19937 rng(99);
    for (int trial = 0; trial < 60; ++trial) {
      IntPoly p = random_poly(rng, 6);
      std::vector<std::pair<long long, CheckedInt>> samples;
      for (long long t = 0; t <= std::max(0, p.degree()); ++t)
        samples.emplace_back(t, p.eval(t));
      REQUIRE(IntPoly::interpolate(samples) == p);
    }
  }
}

TEST_CASE("ring laws on random triples") {
  std::mt19937 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    IntPoly a = random_poly(rng, 4), b = random_poly(rng, 4),
            c = random_poly(rng, 4);
    REQUIRE(a + b == b + a);
    REQUIRE(a * b == b * a);
    REQUIRE((a + b) + c == a + (b + c));
    REQUIRE((a * b) * c == a * (b * c));
    REQUIRE(a * (b + c) == a * b + a * c);
    REQUIRE(a - a == IntPoly());
  }
}

TEST_CASE("log-concavity") {
  auto report = chromatic::check_log_concavity(IntPoly({0, -2, 5, -4, 1}));
  REQUIRE(report.log_concave);  // 16 >= 5, 25 >= 8, 4 >= 0
  REQUIRE(report.signs_alternate);

  // a row of Pascal's triangle: (t+1)^8
  IntPoly pascal = IntPoly::from_roots({-1, -1, -1, -1, -1, -1, -1, -1});
  REQUIRE(chromatic::is_log_concave(pascal));
  REQUIRE_FALSE(chromatic::check_log_concavity(pascal).signs_alternate);

  auto humped = chromatic::check_log_concavity(IntPoly({1, 0, 1}));  // 1 + t^2
  REQUIRE_FALSE(humped.log_concave);
  REQUIRE_FALSE(humped.signs_alternate);

  // pure powers alternate trivially: leading 1 then zeros
  auto power = chromatic::check_log_concavity(IntPoly::monomial(5));
  REQUIRE(power.log_concave);
  REQUIRE(power.signs_alternate);

  REQUIRE(chromatic::is_log_concave(IntPoly()));
  REQUIRE(chromatic::is_log_concave(IntPoly::constant(-3)));
}

TEST_CASE("text rendering") {
  REQUIRE(IntPoly().to_string() == "0");
  REQUIRE(IntPoly::constant(-7).to_string() == "-7");
  REQUIRE(IntPoly({0, 1}).to_string() == "t");
  REQUIRE(IntPoly({0, -1}).to_string() == "-t");
  REQUIRE(IntPoly({0, -2, 5, -4, 1}).to_string() == "t^4 - 4*t^3 + 5*t^2 - 2*t");
  REQUIRE(IntPoly({3, 0, -2}).to_string() == "-2*t^2 + 3");
}
