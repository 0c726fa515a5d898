#include <doctest.h>

#include <cmath>
#include <sstream>

#include "snorm/catalog.hpp"
#include "snorm/geometry.hpp"

using namespace snorm;

namespace {

// Independent level functions for the two presets, written on raw coordinates.
double three_ellipse(double x, double y) {
  return std::hypot(x - 1, y - 1) + std::hypot(x, y) + std::hypot(x + 1, y + 1);
}

double example6_level(double x, double y) {
  const double ux = x - 1, uy = y - 1, vx = x, vy = y, wx = x + 1, wy = y + 1;
  return std::hypot(ux - 2 * vx - 2 * wx, uy - 2 * vy - 2 * wy) +
         std::hypot(vx - 2 * ux - 2 * wx, vy - 2 * uy - 2 * wy) +
         std::hypot(wx - 2 * vx - 2 * ux, wy - 2 * vy - 2 * uy);
}

}  // namespace

TEST_CASE("ball_value matches the 3-ellipse formula") {
  const auto s = make_sum_abs_snorm(2);
  const auto b = fig1a_ball();
  for (double x : {-3.0, -0.5, 0.0, 1.25, 4.0}) {
    for (double y : {-2.0, 0.0, 0.75, 3.0}) {
      CHECK(ball_value(s, b, vec({x, y})) == doctest::Approx(three_ellipse(x, y)).epsilon(1e-14));
    }
  }
}

TEST_CASE("fig1a boundary lies on the level set 5") {
  const auto poly = trace_boundary_2d(make_sum_abs_snorm(2), fig1a_ball(), 360);
  REQUIRE(poly.size() == 360);
  for (const auto& v : poly) CHECK(std::abs(three_ellipse(v.point.x(), v.point.y()) - 5.0) <= 1e-8);
  for (std::size_t k = 1; k < poly.size(); ++k) CHECK(poly[k].angle > poly[k - 1].angle);
  CHECK(inside_polyline(poly, Eigen::Vector2d(0, 0)));
  CHECK(!inside_polyline(poly, Eigen::Vector2d(3, 3)));
}

TEST_CASE("fig1b boundary lies on the level set 20") {
  const auto poly = trace_boundary_2d(make_example6_snorm(2), fig1b_ball(), 360);
  REQUIRE(poly.size() == 360);
  for (const auto& v : poly) CHECK(std::abs(example6_level(v.point.x(), v.point.y()) - 20.0) <= 1e-8);
}

TEST_CASE("membership spot checks") {
  const auto a = make_sum_abs_snorm(2);
  const auto b = make_example6_snorm(2);
  CHECK(ball_contains(a, fig1a_ball(), vec({0, 0})));
  CHECK(ball_contains(b, fig1b_ball(), vec({0, 0})));
  CHECK(!ball_contains(a, fig1a_ball(), vec({3, 3})));
  CHECK(!ball_contains(b, fig1b_ball(), vec({2, 2})));
  CHECK(example6_level(2, 2) >= 20.0);
}

TEST_CASE("open and closed balls differ only on the boundary") {
  const auto s = make_sum_abs_snorm(2);
  BallSpec b{vec({0, 0}), vec({0, 0}), vec({0, 0}), 3.0, false};
  const auto on = vec({1, 0});
  CHECK(ball_value(s, b, on) == 3.0);
  CHECK(!ball_contains(s, b, on));
  b.closed = true;
  CHECK(ball_contains(s, b, on));
}

TEST_CASE("coincident anchors give a circle") {
  const BallSpec b{vec({0, 0}), vec({0, 0}), vec({0, 0}), 3.0, false};
  for (const auto& v : trace_boundary_2d(make_sum_abs_snorm(2), b, 64)) {
    CHECK(v.point.norm() == doctest::Approx(1.0).epsilon(1e-11));
  }
}

TEST_CASE("tracing reports unusable inputs") {
  const auto s = make_sum_abs_snorm(2);
  BallSpec tiny = fig1a_ball();
  tiny.radius = 0.5;
  CHECK_THROWS_AS(trace_boundary_2d(s, tiny, 360), TraceError);
  CHECK_THROWS_AS(trace_boundary_2d(make_sum_abs_snorm(3), fig1a_ball(), 360), InvalidDimension);
  CHECK_THROWS_AS(trace_boundary_2d(s, fig1a_ball(), 4), InvalidArgument);
  BallSpec bad = fig1a_ball();
  bad.radius = -1;
  CHECK_THROWS_AS(ball_value(s, bad, vec({0, 0})), InvalidArgument);
  CHECK_THROWS_AS(ball_value(make_discrete_smetric(2), fig1a_ball(), vec({0, 0})), KindMismatch);
}

TEST_CASE("CSV and SVG output") {
  const auto poly = trace_boundary_2d(make_sum_abs_snorm(2), fig1a_ball(), 36);
  std::ostringstream csv;
  write_boundary_csv(csv, poly);
  std::istringstream lines(csv.str());
  std::string line;
  std::getline(lines, line);
  CHECK(line == "angle_rad,x,y");
  std::size_t rows = 0;
  while (std::getline(lines, line)) ++rows;
  CHECK(rows == 36);

  std::ostringstream svg;
  write_boundary_svg(svg, poly);
  const auto text = svg.str();
  CHECK(text.find("<svg") != std::string::npos);
  CHECK(text.find("viewBox") != std::string::npos);
  CHECK(text.find("<path") == text.rfind("<path"));
  CHECK(text.find("fill=\"none\"") != std::string::npos);
  CHECK(text.find('Z') != std::string::npos);
}
