#include "sigkit/unparam.hpp"

#include <cmath>
#include <stdexcept>

namespace sigkit {

namespace {

void check_context(const UnparamPath& a, const UnparamPath& b) {
  if (a.canonical().dim() != b.canonical().dim())
    throw std::invalid_argument("unparameterised path dimension mismatch");
  if (a.level() != b.level())
    throw std::invalid_argument("unparameterised path level mismatch");
  if (a.p() != b.p())
    throw std::invalid_argument("unparameterised path exponent mismatch");
}

}  // namespace

UnparamPath::UnparamPath(PiecewiseLinearPath canonical, GroupElement sig,
                         double p, int level)
    : canonical_(std::move(canonical)),
      sig_(std::move(sig)),
      p_(p),
      level_(level) {
  if (p_ < 1.0) throw std::invalid_argument("variation exponent needs p >= 1");
  if (!is_irreducible(canonical_))
    throw std::invalid_argument("canonical representative must be irreducible");
}

UnparamPath canonicalize(const PiecewiseLinearPath& x, double p, int level) {
  PiecewiseLinearPath reduced = tree_reduce(x);
  PiecewiseLinearPath canonical =
      reduced.is_constant()
          ? PiecewiseLinearPath::constant(x.dim(), 1.0)
          : PiecewiseLinearPath::from_segments(x.dim(), reduced.segments(),
                                               1.0);
  GroupElement sig = signature(canonical, level);
  return UnparamPath(std::move(canonical), std::move(sig), p, level);
}

bool equivalent(const PiecewiseLinearPath& x, const PiecewiseLinearPath& y,
                int level, double tol) {
  if (x.dim() != y.dim())
    throw std::invalid_argument("path dimension mismatch");
  const TruncatedTensor diff =
      sub(signature(x, level).tensor(), signature(y, level).tensor());
  for (int i = 1; i <= level; ++i)
    if (level_norm(diff, i) > tol) return false;
  return true;
}

double dist_d(const UnparamPath& a, const UnparamPath& b, int refine) {
  check_context(a, b);
  return p_var_distance(a.canonical(), b.canonical(), a.p(), a.level(), refine)
      .value;
}

double dist_star(const UnparamPath& a, const UnparamPath& b, int refine) {
  check_context(a, b);
  const PiecewiseLinearPath joined =
      concat(a.canonical(), reverse(b.canonical()));
  const PiecewiseLinearPath reduced = tree_reduce(joined);
  if (reduced.is_constant()) return 0.0;
  const PiecewiseLinearPath canonical = constant_speed_reparam(reduced);
  if (a.level() == 1) return p_variation(canonical, a.p()).value;
  return p_variation_lift(canonical, a.p(), a.level(), refine).value;
}

double dist_sig(const UnparamPath& a, const UnparamPath& b) {
  if (a.level() != b.level())
    throw std::invalid_argument("unparameterised path level mismatch");
  return product_metric_dist(a.sig(), b.sig());
}

}  // namespace sigkit
