#pragma once

#include <vector>

#include "sigkit/path.hpp"
#include "sigkit/tensor.hpp"

namespace sigkit {

// Signature of the canonical lift, exact: the Chen product of the segment
// exponentials truncated at level N.
GroupElement signature(const PiecewiseLinearPath& x, int level);

// Partial signature S_{s,t} over the (possibly fractional) segments between
// s and t.
GroupElement signature_segment(const PiecewiseLinearPath& x, double s,
                               double t, int level);

// S_{0,t} for each mesh time; mesh must be sorted within [0,T].
std::vector<GroupElement> signature_trajectory(const PiecewiseLinearPath& x,
                                               int level,
                                               const std::vector<double>& mesh);

}  // namespace sigkit
