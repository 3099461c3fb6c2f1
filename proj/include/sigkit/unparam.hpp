#pragma once

#include "sigkit/path.hpp"
#include "sigkit/signature.hpp"
#include "sigkit/tensor.hpp"
#include "sigkit/variation.hpp"

namespace sigkit {

// Tree-like equivalence class, represented by its tree-reduced constant-speed
// canonical path on [0,1] with the signature cached at level N.
class UnparamPath {
 public:
  UnparamPath(PiecewiseLinearPath canonical, GroupElement sig, double p,
              int level);

  const PiecewiseLinearPath& canonical() const { return canonical_; }
  const GroupElement& sig() const { return sig_; }
  double p() const { return p_; }
  int level() const { return level_; }

 private:
  PiecewiseLinearPath canonical_;
  GroupElement sig_;
  double p_;
  int level_;
};

UnparamPath canonicalize(const PiecewiseLinearPath& x, double p, int level);

// Level-N signature-equality certificate; not a proof of equivalence beyond
// level N.
bool equivalent(const PiecewiseLinearPath& x, const PiecewiseLinearPath& y,
                int level, double tol = 1e-10);

// p-variation distance between the canonical representatives.
double dist_d(const UnparamPath& a, const UnparamPath& b, int refine = 4);

// p-variation of the canonicalised concatenation X * reverse(Y); exact at
// level 1, homogeneous-norm gauge for N >= 2.
double dist_star(const UnparamPath& a, const UnparamPath& b, int refine = 4);

// Product-topology metric between the cached signatures.
double dist_sig(const UnparamPath& a, const UnparamPath& b);

}  // namespace sigkit
