#pragma once

#include <iosfwd>
#include <string>

#include "sigkit/path.hpp"
#include "sigkit/tensor.hpp"

namespace sigkit {

// Textual tensor map, one word per line as "letters:coefficient" with the
// empty word spelled "()", e.g.
//   ():1
//   1,2:0.5
// Zero coefficients are omitted except for the scalar slot.
std::string tensor_to_text(const TruncatedTensor& t);
TruncatedTensor tensor_from_text(const std::string& text, int dim, int level);

// Path JSON: {"dim": d, "horizon": T, "times": [...], "points": [[...],...]}.
std::string path_to_json(const PiecewiseLinearPath& x);
PiecewiseLinearPath path_from_json(const std::string& text);

// CSV with header "t,x1,...,xd".
std::string path_to_csv(const PiecewiseLinearPath& x);
PiecewiseLinearPath path_from_csv(const std::string& text);

// Reads a path file, dispatching on extension (.json or .csv).
PiecewiseLinearPath load_path_file(const std::string& filename);
void save_path_file(const PiecewiseLinearPath& x, const std::string& filename);

}  // namespace sigkit
