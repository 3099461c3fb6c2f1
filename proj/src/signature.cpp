#include "sigkit/signature.hpp"

#include <stdexcept>

namespace sigkit {

namespace {

TruncatedTensor embed(const Vec& v, int level) {
  TruncatedTensor t(static_cast<int>(v.size()), level);
  if (level >= 1) t.level_data(1) = v;
  return t;
}

bool exactly_zero(const Vec& v) {
  for (double c : v)
    if (c != 0.0) return false;
  return true;
}

bool exact_negation(const Vec& a, const Vec& b) {
  for (std::size_t i = 0; i < a.size(); ++i)
    if (a[i] != -b[i]) return false;
  return true;
}

// Chen product of the segment exponentials. Adjacent segments that are exact
// negations contribute exp(v) exp(-v) = 1 and are cancelled symbolically, so
// exactly retraced pieces never enter the floating-point product.
GroupElement chen_product(const std::vector<Vec>& segments, int dim,
                          int level) {
  std::vector<Vec> reduced;
  for (const Vec& v : segments) {
    if (exactly_zero(v)) continue;
    if (!reduced.empty() && exact_negation(reduced.back(), v))
      reduced.pop_back();
    else
      reduced.push_back(v);
  }
  TruncatedTensor acc = TruncatedTensor::unit(dim, level);
  for (const Vec& v : reduced)
    acc = tensor_mul(acc, exp_trunc(embed(v, level)).tensor());
  return GroupElement(std::move(acc));
}

}  // namespace

GroupElement signature(const PiecewiseLinearPath& x, int level) {
  if (level < 1) throw std::invalid_argument("signature level must be >= 1");
  return chen_product(x.segments(), x.dim(), level);
}

GroupElement signature_segment(const PiecewiseLinearPath& x, double s,
                               double t, int level) {
  if (s > t) throw std::invalid_argument("signature_segment needs s <= t");
  if (level < 1) throw std::invalid_argument("signature level must be >= 1");
  if (s == t)
    return GroupElement(TruncatedTensor::unit(x.dim(), level));
  std::vector<Vec> segs;
  Vec prev = x.at(s);
  for (std::size_t i = 0; i < x.times().size(); ++i) {
    const double u = x.times()[i];
    if (u <= s || u >= t) continue;
    segs.push_back(vsub(x.points()[i], prev));
    prev = x.points()[i];
  }
  segs.push_back(vsub(x.at(t), prev));
  return chen_product(segs, x.dim(), level);
}

std::vector<GroupElement> signature_trajectory(const PiecewiseLinearPath& x,
                                               int level,
                                               const std::vector<double>& mesh) {
  for (std::size_t i = 1; i < mesh.size(); ++i)
    if (mesh[i] < mesh[i - 1])
      throw std::invalid_argument("trajectory mesh must be sorted");
  if (!mesh.empty() &&
      (mesh.front() < 0.0 || mesh.back() > x.horizon()))
    throw std::invalid_argument("trajectory mesh outside [0,T]");
  std::vector<GroupElement> out;
  out.reserve(mesh.size());
  for (double t : mesh) out.push_back(signature_segment(x, 0.0, t, level));
  return out;
}

}  // namespace sigkit
