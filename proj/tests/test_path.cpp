#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "sigkit/path.hpp"
#include "test_util.hpp"

using namespace sigkit;

namespace {

bool segments_close(const PiecewiseLinearPath& a, const PiecewiseLinearPath& b,
                    double tol = 1e-12) {
  const auto sa = a.segments();
  const auto sb = b.segments();
  if (sa.size() != sb.size()) return false;
  for (std::size_t i = 0; i < sa.size(); ++i)
    if (norm(vsub(sa[i], sb[i])) > tol) return false;
  return true;
}

// gamma_{(1+eps)e1} * gamma_{-2eps e1} * gamma_{(1+eps)e1}
PiecewiseLinearPath retracing_example(double eps) {
  return PiecewiseLinearPath::from_segments(
      1, {{1.0 + eps}, {-2.0 * eps}, {1.0 + eps}});
}

}  // namespace

TEST_CASE("constructor validation") {
  CHECK_THROWS_AS(PiecewiseLinearPath(1, 1.0, {0.0, 1.0}, {{0.5}, {1.0}}),
                  std::invalid_argument);  // not at origin
  CHECK_THROWS_AS(PiecewiseLinearPath(1, 1.0, {0.0, 0.5}, {{0.0}, {1.0}}),
                  std::invalid_argument);  // does not reach horizon
  CHECK_THROWS_AS(PiecewiseLinearPath(1, 1.0, {0.0, 0.5, 0.5, 1.0},
                                      {{0.0}, {1.0}, {1.0}, {2.0}}),
                  std::invalid_argument);  // times not strictly increasing
  CHECK_THROWS_AS(PiecewiseLinearPath(2, 1.0, {0.0, 1.0}, {{0.0, 0.0}, {1.0}}),
                  std::invalid_argument);  // point dimension mismatch
  CHECK_THROWS_AS(PiecewiseLinearPath(1, -1.0, {0.0}, {{0.0}}),
                  std::invalid_argument);
}

TEST_CASE("constant path") {
  const auto o = PiecewiseLinearPath::constant(2);
  CHECK(o.is_constant());
  CHECK(o.segment_count() == 0);
  CHECK(norm(o.at(0.37)) == 0.0);
  CHECK(one_variation(o) == 0.0);
}

TEST_CASE("line evaluation and length") {
  const auto z = line(Vec{0.0, 0.0});
  CHECK(norm(z.endpoint()) == 0.0);

  const auto g = line(Vec{1.0, 0.0});
  const auto mid = g.at(0.5);
  CHECK(mid[0] == doctest::Approx(0.5).epsilon(1e-15));
  CHECK(mid[1] == 0.0);
  CHECK(one_variation(g) == doctest::Approx(1.0).epsilon(1e-15));

  const auto h = line(Vec{3.0, 4.0}, 2.0);
  CHECK(h.horizon() == 2.0);
  CHECK(one_variation(h) == doctest::Approx(5.0).epsilon(1e-15));
  CHECK_THROWS_AS(line(Vec{1.0}, 0.0), std::invalid_argument);
}

TEST_CASE("concat basics") {
  const auto o = PiecewiseLinearPath::constant(2);
  CHECK(concat(o, o).is_constant());

  const auto g1 = line(Vec{1.0, 0.0});
  const auto g2 = line(Vec{0.0, 1.0});
  const auto l = concat(g1, g2);
  CHECK(l.segment_count() == 2);
  const auto corner = l.at(0.5);
  CHECK(corner[0] == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(corner[1] == doctest::Approx(0.0).epsilon(1e-15));
  CHECK(norm(vsub(l.endpoint(), Vec{1.0, 1.0})) == 0.0);

  CHECK(segments_close(concat(o, g1), g1));
  CHECK(segments_close(concat(g1, o), g1));

  std::mt19937_64 rng(10);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = testutil::random_path(rng, 3, 5);
    const auto y = testutil::random_path(rng, 3, 5);
    CHECK(norm(vsub(concat(x, y).endpoint(),
                    vadd(x.endpoint(), y.endpoint()))) < 1e-14);
  }
  CHECK_THROWS_AS(concat(g1, PiecewiseLinearPath::constant(3)),
                  std::invalid_argument);
}

TEST_CASE("concat is associative up to reparameterisation") {
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = testutil::random_path(rng, 2, 4);
    const auto y = testutil::random_path(rng, 2, 4);
    const auto z = testutil::random_path(rng, 2, 4);
    CHECK(segments_close(constant_speed_reparam(concat(concat(x, y), z)),
                         constant_speed_reparam(concat(x, concat(y, z)))));
  }
}

TEST_CASE("reverse") {
  CHECK(reverse(PiecewiseLinearPath::constant(1)).is_constant());

  const auto g = line(Vec{0.5, -1.0});
  CHECK(segments_close(reverse(g), line(Vec{-0.5, 1.0})));

  std::mt19937_64 rng(12);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = testutil::random_path(rng, 3, 6);
    const auto y = testutil::random_path(rng, 3, 6);
    CHECK(segments_close(reverse(reverse(x)), x));
    CHECK(segments_close(reverse(concat(x, y)),
                         concat(reverse(y), reverse(x))));
    for (double t : {0.0, 0.3, 1.0}) {
      const auto lhs = reverse(x).at(t);
      const auto rhs = vsub(x.at(x.horizon() - t), x.endpoint());
      CHECK(norm(vsub(lhs, rhs)) < 1e-12);
    }
  }
}

TEST_CASE("constant_speed_reparam") {
  const auto g = line(Vec{2.0, 0.0});
  CHECK(constant_speed_reparam(g).times() == g.times());

  // equal-length segments on unequal durations: breakpoint moves to 1/2
  const PiecewiseLinearPath uneven(
      2, 1.0, {0.0, 0.9, 1.0}, {{0.0, 0.0}, {1.0, 0.0}, {1.0, 1.0}});
  const auto even = constant_speed_reparam(uneven);
  REQUIRE(even.times().size() == 3);
  CHECK(even.times()[1] == doctest::Approx(0.5).epsilon(1e-15));

  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 20; ++trial) {
    const auto x = constant_speed_reparam(testutil::random_path(rng, 2, 8));
    const double total = one_variation(x);
    const double half = one_variation(restrict_path(x, 0.0, x.horizon() / 2));
    CHECK(half == doctest::Approx(total / 2).epsilon(1e-12));
  }

  CHECK(constant_speed_reparam(PiecewiseLinearPath::constant(2)).is_constant());
}

TEST_CASE("tree_reduce collapses the retracing example") {
  const auto reduced = tree_reduce(retracing_example(0.1));
  REQUIRE(reduced.segment_count() == 1);
  CHECK(reduced.endpoint()[0] == doctest::Approx(2.0).epsilon(1e-15));
}

TEST_CASE("tree_reduce cancels full retracings to the constant path") {
  for (double n : {1.0, 10.0, 100.0}) {
    const auto v = Vec{0.6 * n, 0.8 * n};
    CHECK(tree_reduce(concat(line(v), line(vscale(v, -1.0)))).is_constant());
  }
}

TEST_CASE("tree_reduce leaves axis paths alone and is idempotent") {
  const auto ax = axis_path({Vec{1.0, 0.0}, Vec{0.0, 1.0}});
  CHECK(segments_close(tree_reduce(ax), ax));

  std::mt19937_64 rng(14);
  for (int trial = 0; trial < 30; ++trial) {
    auto x = testutil::random_path(rng, 2, 6);
    // splice in a retraced spike so there is something to cancel
    const auto spike = testutil::random_vec(rng, 2);
    x = concat(concat(x, line(spike)), line(vscale(spike, -1.0)));
    const auto r = tree_reduce(x);
    CHECK(is_irreducible(r));
    CHECK(segments_close(tree_reduce(r), r));
    CHECK(one_variation(r) <= one_variation(x) + 1e-12);
  }
}

TEST_CASE("tree_reduce merges positively collinear segments") {
  const auto x = PiecewiseLinearPath::from_segments(
      2, {{1.0, 0.0}, {2.0, 0.0}, {0.0, 1.0}});
  const auto r = tree_reduce(x);
  REQUIRE(r.segment_count() == 2);
  CHECK(r.segments()[0][0] == doctest::Approx(3.0).epsilon(1e-15));
}

TEST_CASE("is_irreducible") {
  CHECK(is_irreducible(PiecewiseLinearPath::constant(2)));
  const auto v = Vec{1.0, 2.0};
  CHECK_FALSE(is_irreducible(concat(line(v), line(vscale(v, -1.0)))));
  CHECK(is_irreducible(axis_path({Vec{1.0, 0.0}, Vec{0.0, -2.0}})));
}

TEST_CASE("axis_path") {
  const auto l_shape = axis_path({Vec{1.0, 0.0}, Vec{0.0, 1.0}});
  CHECK(l_shape.segment_count() == 2);
  CHECK(norm(vsub(l_shape.endpoint(), Vec{1.0, 1.0})) == 0.0);
  // constant speed: corner sits at arc-length fraction 1/2
  CHECK(l_shape.times()[1] == doctest::Approx(0.5).epsilon(1e-15));

  CHECK_THROWS_AS(axis_path({Vec{1.0, 0.0}, Vec{1.0, 0.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(axis_path({Vec{0.0, 0.0}, Vec{0.0, 1.0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(axis_path({}), std::invalid_argument);

  const double n = 3.0, eps = 0.05;
  const auto z = axis_path(
      {Vec{0.0, eps}, Vec{n, 0.0}, Vec{0.0, -eps}, Vec{-n, 0.0}});
  CHECK(z.segment_count() == 4);
  CHECK(norm(z.endpoint()) < 1e-15);
}

TEST_CASE("restrict_path") {
  const auto x = concat(line(Vec{1.0, 0.0}), line(Vec{0.0, 1.0}));
  const auto mid = restrict_path(x, 0.25, 0.75);
  CHECK(norm(vsub(mid.endpoint(), Vec{0.5, 0.5})) < 1e-14);
  CHECK(norm(mid.at(0.0)) == 0.0);
  CHECK(restrict_path(x, 0.3, 0.3).is_constant());
  CHECK_THROWS_AS(restrict_path(x, 0.7, 0.2), std::invalid_argument);
}

TEST_CASE("from_segments drops zero segments") {
  const auto x = PiecewiseLinearPath::from_segments(
      2, {{1.0, 0.0}, {0.0, 0.0}, {0.0, 1.0}});
  CHECK(x.segment_count() == 2);
}
