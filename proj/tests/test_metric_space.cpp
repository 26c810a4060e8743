#include <doctest.h>

#include <algorithm>

#include "lexmetric/constructions.hpp"
#include "lexmetric/corpus.hpp"
#include "lexmetric/metric_space.hpp"
#include "oracles.hpp"

using namespace lexmetric;

namespace {

FiniteMetricSpace line(const std::vector<double>& xs, std::vector<PointId> labels) {
  std::vector<std::vector<double>> d(xs.size(), std::vector<double>(xs.size()));
  for (std::size_t i = 0; i < xs.size(); ++i)
    for (std::size_t j = 0; j < xs.size(); ++j) d[i][j] = std::abs(xs[i] - xs[j]);
  return FiniteMetricSpace(std::move(labels), std::move(d));
}

FiniteMetricSpace p3() {
  return FiniteMetricSpace({"a", "b", "c"}, oracle::path(3));
}

}  // namespace

TEST_CASE("construction rejects malformed tables") {
  CHECK_THROWS_AS(FiniteMetricSpace({"a"}, {{0}}), MetricError);
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, {{0, 1}}), MetricError);
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, {{0, 1}, {1}}), MetricError);
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "a"}, {{0, 1}, {1, 0}}), MetricError);
  CHECK_THROWS_AS(FiniteMetricSpace({"a", "b"}, {{0, 1}, {1, 0}}, -1.0), MetricError);
}

TEST_CASE("validate") {
  SUBCASE("smallest metric") {
    CHECK(validate(FiniteMetricSpace({"a", "b"}, {{0, 1}, {1, 0}})).ok);
  }
  SUBCASE("asymmetric table") {
    const auto r = validate(FiniteMetricSpace({"a", "b"}, {{0, 1}, {2, 0}}));
    REQUIRE_FALSE(r.ok);
    CHECK(std::any_of(r.violations.begin(), r.violations.end(),
                      [](const Violation& v) { return v.axiom == "symmetry"; }));
  }
  SUBCASE("collinear reals and a broken triangle") {
    auto s = line({0, 1, 5}, {"0", "1", "5"});
    CHECK(validate(s).ok);
    auto t = s.table();
    t[0][2] = t[2][0] = 10;  // 10 > 1 + 4
    const auto r = validate(FiniteMetricSpace(s.points(), t));
    REQUIRE_FALSE(r.ok);
    REQUIRE(r.violations.size() == 1);
    CHECK(r.violations[0].axiom == "triangle");
    CHECK(r.violations[0].points == std::array<PointId, 3>{"0", "1", "5"});
    CHECK(r.violations[0].lhs == 10);
    CHECK(r.violations[0].rhs == 5);
  }
  SUBCASE("every violation is listed") {
    const auto r = validate(
        FiniteMetricSpace({"a", "b", "c"}, {{1, 0, 1}, {0, 0, 1}, {1, 3, 0}}));
    std::size_t diag = 0, ident = 0, sym = 0;
    for (const auto& v : r.violations) {
      diag += v.axiom == "zero-diagonal";
      ident += v.axiom == "identity";
      sym += v.axiom == "symmetry";
    }
    CHECK(diag == 1);
    CHECK(ident == 2);
    CHECK(sym == 1);
  }
  SUBCASE("tolerance absorbs rounding in the triangle inequality") {
    CHECK(validate(FiniteMetricSpace({"a", "b", "c"},
                                     {{0, 1, 2 + 1e-12}, {1, 0, 1}, {2 + 1e-12, 1, 0}}))
              .ok);
  }
}

TEST_CASE("nearness of a point") {
  CHECK(nearness_point(p3(), "a") == 1);
  CHECK(nearness_point(p3(), "b") == 1);
  for (std::size_t i = 0; i < 5; ++i) CHECK(nearness_point(discrete_metric(5), i) == 1);

  const auto s = line({1, 0.5, 1.0 / 3, 0.25, 0.2}, {"1", "1/2", "1/3", "1/4", "1/5"});
  CHECK(nearness_point(s, "1/4") == doctest::Approx(1.0 / 20).epsilon(1e-12));
  CHECK_THROWS_AS(nearness_point(s, "1/6"), MetricError);
}

TEST_CASE("nearness, slack and diameter") {
  SUBCASE("P3") {
    const auto s = stats(p3());
    CHECK(s.nearness == 1);
    CHECK(s.slack == 1);
    CHECK(s.diameter == 2);
  }
  SUBCASE("discrete metric on 4 points") {
    const auto s = stats(discrete_metric(4));
    CHECK(s.nearness == 1);
    CHECK(s.slack == 1);
    CHECK(s.diameter == 1);
  }
  SUBCASE("first four points of the harmonic-offset set") {
    // Hand enumeration of the six gaps of {2.5, 3, 10/3, 3.5}:
    // 1/2, 5/6, 1, 1/3, 1/2, 1/6. Per-point nearness 1/2, 1/3, 1/6, 1/6.
    const std::vector<double> xs{2.5, 3.0, 10.0 / 3, 3.5};
    const auto s = stats(line(xs, {"2.5", "3", "10/3", "3.5"}));
    CHECK(s.nearness == doctest::Approx(1.0 / 6));
    CHECK(s.slack == doctest::Approx(0.5));
    CHECK(s.diameter == doctest::Approx(1.0));
    CHECK(s.nearness_per_point[1].second == doctest::Approx(1.0 / 3));
  }
}

TEST_CASE("open balls") {
  const auto s = p3();
  CHECK(ball(s, "b", 1.5) == std::vector<PointId>{"a", "b", "c"});
  CHECK(ball(s, "a", 1) == std::vector<PointId>{"a"});
  CHECK(ball(gravitational(s, 1), "a", 1) == std::vector<PointId>{"a"});
  CHECK(ball(s, "a", 1e-12) == std::vector<PointId>{"a"});
  CHECK_THROWS_AS(ball(s, "a", 0), MetricError);
  CHECK_THROWS_AS(ball(s, "z", 1), MetricError);
}

TEST_CASE("statistics order and closure under the constructions (random)") {
  RandomSpaces gen(20261018);
  for (int trial = 0; trial < 60; ++trial) {
    const auto m = gen.weighted_metric(gen.uniform(2, 7));
    const auto m2 = gen.weighted_metric(gen.uniform(2, 5));
    REQUIRE(validate(m).ok);

    const auto s = stats(m);
    CHECK(s.nearness > 0);
    for (const auto& [p, eta] : s.nearness_per_point) {
      CHECK(s.nearness <= eta);
      CHECK(eta <= s.slack);
    }
    CHECK(s.slack <= s.diameter);

    const double t = 0.25 * static_cast<double>(gen.uniform(1, 8));
    const auto mt = gravitational(m, t);
    CHECK(validate(mt).ok);
    CHECK(validate(lexicographic(m, m2).space()).ok);

    for (const auto& x : m.points()) {
      for (double eps : {0.1, 0.5, 1.0, 1.99}) {
        const double e = eps * t;  // in (0, 2t)
        CHECK(ball(m, x, e) == ball(mt, x, e));
      }
    }
  }
}
