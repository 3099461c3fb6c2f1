#pragma once

#include <vector>

#include "sigkit/vec.hpp"

namespace sigkit {

// Piecewise linear path in R^d starting at the origin. Breakpoint times are
// strictly increasing from 0 to the horizon. A single breakpoint encodes the
// constant path o.
class PiecewiseLinearPath {
 public:
  PiecewiseLinearPath(int dim, double horizon, std::vector<double> times,
                      std::vector<Vec> points);

  static PiecewiseLinearPath constant(int dim, double horizon = 1.0);
  // Constant-speed path through the given segment vectors, zero segments
  // dropped.
  static PiecewiseLinearPath from_segments(int dim,
                                           const std::vector<Vec>& segments,
                                           double horizon = 1.0);

  int dim() const { return dim_; }
  double horizon() const { return horizon_; }
  const std::vector<double>& times() const { return times_; }
  const std::vector<Vec>& points() const { return points_; }

  std::size_t segment_count() const { return points_.size() - 1; }
  bool is_constant() const;

  Vec at(double t) const;
  Vec endpoint() const { return points_.back(); }
  std::vector<Vec> segments() const;

 private:
  int dim_;
  double horizon_;
  std::vector<double> times_;
  std::vector<Vec> points_;
};

PiecewiseLinearPath line(const Vec& v, double horizon = 1.0);

// Concatenation: first half traverses X at double speed, second half Y
// translated by X's endpoint. Concatenation with the constant path returns
// the other operand.
PiecewiseLinearPath concat(const PiecewiseLinearPath& x,
                           const PiecewiseLinearPath& y);

// t -> x(T-t) - x(T), started at the origin.
PiecewiseLinearPath reverse(const PiecewiseLinearPath& x);

// Reparameterises so that 1-variation over [0,t] is (t/T) times the total;
// zero-length segments dropped. Constant paths returned unchanged.
PiecewiseLinearPath constant_speed_reparam(const PiecewiseLinearPath& x);

// Local rewriting to the irreducible representative: drops zero segments,
// merges positively-collinear and cancels anti-collinear adjacent segments
// until no adjacent pair has cosine within cos_tol of -1.
PiecewiseLinearPath tree_reduce(const PiecewiseLinearPath& x,
                                double cos_tol = 1e-9);

bool is_irreducible(const PiecewiseLinearPath& x, double cos_tol = 1e-9);

// Constant-speed concatenation of lines with pairwise-orthogonal consecutive
// directions; rejects zero or non-orthogonal consecutive vectors.
PiecewiseLinearPath axis_path(const std::vector<Vec>& vectors,
                              double horizon = 1.0);

// Sum of segment lengths.
double one_variation(const PiecewiseLinearPath& x);

// Restriction of X to [s,t], translated to start at the origin.
PiecewiseLinearPath restrict_path(const PiecewiseLinearPath& x, double s,
                                  double t);

}  // namespace sigkit
