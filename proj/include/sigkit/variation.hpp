#pragma once

#include <vector>

#include "sigkit/path.hpp"
#include "sigkit/report.hpp"

namespace sigkit {

// Ordered times within [0,T] including both endpoints.
struct Partition {
  std::vector<double> times;
};

struct VariationResult {
  double value = 0.0;
  Partition optimal_partition;
  bool exact = true;
  int refinement_level = 0;
};

// Exact p-variation of a piecewise linear path. The supremum over all
// partitions is attained on breakpoint subsets, so a dynamic program over
// the breakpoints computes it together with a maximising partition.
VariationResult p_variation(const PiecewiseLinearPath& x, double p);

VariationResult p_variation_interval(const PiecewiseLinearPath& x, double p,
                                     double s, double t);

// omega(s,t) = ||X||_{p-var;[s,t]}^p.
double control(const PiecewiseLinearPath& x, double p, double s, double t);

// p-variation of the level-N lift with increments measured by the
// homogeneous norm of the increment signature. Partitions are drawn from
// breakpoints plus a k-fold uniform refinement of each segment; for N >= 2
// this is a certified lower bound, monotone non-decreasing in k.
VariationResult p_variation_lift(const PiecewiseLinearPath& x, double p,
                                 int level, int refine);

// Level-wise p-variation distance between lifts. Both paths are
// reparameterised to constant speed on [0,1]. Level 1 is computed exactly as
// the p-variation of the difference path over merged breakpoints; levels
// >= 2 are approximated over the merged breakpoints plus refinement.
VariationResult p_var_distance(const PiecewiseLinearPath& x,
                               const PiecewiseLinearPath& y, double p,
                               int level, int refine);

// Reports ||X*Y||_{p-var} against ||X||_{p-var} + ||Y||_{p-var}.
VerificationReport subadditivity_check(const PiecewiseLinearPath& x,
                                       const PiecewiseLinearPath& y, double p);

// DP over an explicit point sequence; shared by the exact and lifted cases.
VariationResult p_variation_points(const std::vector<double>& times,
                                   const std::vector<Vec>& points, double p);

}  // namespace sigkit
