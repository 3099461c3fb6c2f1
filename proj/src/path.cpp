#include "sigkit/path.hpp"

#include <algorithm>
#include <stdexcept>

namespace sigkit {

namespace {

constexpr double kZeroSegmentTol = 1e-14;

void check_dims(const PiecewiseLinearPath& x, const PiecewiseLinearPath& y) {
  if (x.dim() != y.dim()) throw std::invalid_argument("path dimension mismatch");
}

}  // namespace

PiecewiseLinearPath::PiecewiseLinearPath(int dim, double horizon,
                                         std::vector<double> times,
                                         std::vector<Vec> points)
    : dim_(dim),
      horizon_(horizon),
      times_(std::move(times)),
      points_(std::move(points)) {
  if (dim_ < 1) throw std::invalid_argument("path dim must be positive");
  if (horizon_ <= 0.0) throw std::invalid_argument("horizon must be positive");
  if (times_.empty() || times_.size() != points_.size())
    throw std::invalid_argument("times/points size mismatch");
  if (times_.front() != 0.0)
    throw std::invalid_argument("path must start at time 0");
  if (times_.size() > 1 && times_.back() != horizon_)
    throw std::invalid_argument("path must end at the horizon");
  for (std::size_t i = 1; i < times_.size(); ++i)
    if (times_[i] <= times_[i - 1])
      throw std::invalid_argument("breakpoint times must strictly increase");
  for (const Vec& p : points_)
    if (static_cast<int>(p.size()) != dim_)
      throw std::invalid_argument("point dimension mismatch");
  if (!is_zero(points_.front()))
    throw std::invalid_argument("path must start at the origin");
}

PiecewiseLinearPath PiecewiseLinearPath::constant(int dim, double horizon) {
  return PiecewiseLinearPath(dim, horizon, {0.0}, {Vec(dim, 0.0)});
}

PiecewiseLinearPath PiecewiseLinearPath::from_segments(
    int dim, const std::vector<Vec>& segments, double horizon) {
  std::vector<double> lengths;
  std::vector<Vec> kept;
  double total = 0.0;
  for (const Vec& v : segments) {
    const double len = norm(v);
    if (len <= kZeroSegmentTol) continue;
    kept.push_back(v);
    lengths.push_back(len);
    total += len;
  }
  if (kept.empty()) return constant(dim, horizon);

  std::vector<double> times{0.0};
  std::vector<Vec> points{Vec(dim, 0.0)};
  double acc = 0.0;
  for (std::size_t i = 0; i < kept.size(); ++i) {
    acc += lengths[i];
    times.push_back(i + 1 == kept.size() ? horizon : horizon * acc / total);
    points.push_back(vadd(points.back(), kept[i]));
  }
  return PiecewiseLinearPath(dim, horizon, std::move(times), std::move(points));
}

bool PiecewiseLinearPath::is_constant() const {
  for (const Vec& p : points_)
    if (!is_zero(p)) return false;
  return true;
}

Vec PiecewiseLinearPath::at(double t) const {
  if (points_.size() == 1) return points_.front();
  if (t <= times_.front()) return points_.front();
  if (t >= times_.back()) return points_.back();
  const auto it = std::upper_bound(times_.begin(), times_.end(), t);
  const std::size_t i = static_cast<std::size_t>(it - times_.begin());
  const double u = (t - times_[i - 1]) / (times_[i] - times_[i - 1]);
  return vadd(points_[i - 1], vscale(vsub(points_[i], points_[i - 1]), u));
}

std::vector<Vec> PiecewiseLinearPath::segments() const {
  std::vector<Vec> segs;
  segs.reserve(points_.size() - 1);
  for (std::size_t i = 1; i < points_.size(); ++i)
    segs.push_back(vsub(points_[i], points_[i - 1]));
  return segs;
}

PiecewiseLinearPath line(const Vec& v, double horizon) {
  if (horizon <= 0.0) throw std::invalid_argument("horizon must be positive");
  const int dim = static_cast<int>(v.size());
  return PiecewiseLinearPath(dim, horizon, {0.0, horizon}, {Vec(dim, 0.0), v});
}

PiecewiseLinearPath concat(const PiecewiseLinearPath& x,
                           const PiecewiseLinearPath& y) {
  check_dims(x, y);
  if (x.horizon() != y.horizon())
    throw std::invalid_argument("path horizon mismatch");
  if (x.is_constant()) return constant_speed_reparam(y);
  if (y.is_constant()) return constant_speed_reparam(x);

  const double T = x.horizon();
  std::vector<double> times;
  std::vector<Vec> points;
  for (std::size_t i = 0; i < x.times().size(); ++i) {
    times.push_back(x.times()[i] / 2.0);
    points.push_back(x.points()[i]);
  }
  const Vec offset = x.endpoint();
  for (std::size_t i = 1; i < y.times().size(); ++i) {
    times.push_back(T / 2.0 + y.times()[i] / 2.0);
    points.push_back(vadd(offset, y.points()[i]));
  }
  return PiecewiseLinearPath(x.dim(), T, std::move(times), std::move(points));
}

PiecewiseLinearPath reverse(const PiecewiseLinearPath& x) {
  if (x.points().size() == 1) return x;
  const double T = x.horizon();
  const Vec end = x.endpoint();
  const std::size_t n = x.points().size();
  std::vector<double> times;
  std::vector<Vec> points;
  times.reserve(n);
  points.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    times.push_back(T - x.times()[n - 1 - i]);
    points.push_back(vsub(x.points()[n - 1 - i], end));
  }
  times.front() = 0.0;
  times.back() = T;
  return PiecewiseLinearPath(x.dim(), T, std::move(times), std::move(points));
}

PiecewiseLinearPath constant_speed_reparam(const PiecewiseLinearPath& x) {
  if (x.is_constant())
    return PiecewiseLinearPath::constant(x.dim(), x.horizon());
  return PiecewiseLinearPath::from_segments(x.dim(), x.segments(),
                                            x.horizon());
}

PiecewiseLinearPath tree_reduce(const PiecewiseLinearPath& x, double cos_tol) {
  std::vector<Vec> stack;
  for (const Vec& v : x.segments()) {
    if (norm(v) <= kZeroSegmentTol) continue;
    stack.push_back(v);
    while (stack.size() >= 2) {
      const Vec& a = stack[stack.size() - 2];
      const Vec& b = stack.back();
      const double c = dot(a, b) / (norm(a) * norm(b));
      if (c <= -1.0 + cos_tol || c >= 1.0 - cos_tol) {
        Vec net = vadd(a, b);
        stack.pop_back();
        stack.pop_back();
        if (norm(net) > kZeroSegmentTol) stack.push_back(std::move(net));
      } else {
        break;
      }
    }
  }
  return PiecewiseLinearPath::from_segments(x.dim(), stack, x.horizon());
}

bool is_irreducible(const PiecewiseLinearPath& x, double cos_tol) {
  const std::vector<Vec> segs = x.segments();
  for (const Vec& v : segs)
    if (norm(v) <= kZeroSegmentTol) return false;
  for (std::size_t i = 1; i < segs.size(); ++i) {
    const double c = dot(segs[i - 1], segs[i]) /
                     (norm(segs[i - 1]) * norm(segs[i]));
    if (c <= -1.0 + cos_tol) return false;
  }
  return true;
}

PiecewiseLinearPath axis_path(const std::vector<Vec>& vectors, double horizon) {
  for (const Vec& v : vectors)
    if (norm(v) <= kZeroSegmentTol)
      throw std::invalid_argument("axis path vectors must be nonzero");
  for (std::size_t i = 1; i < vectors.size(); ++i) {
    const double c = std::abs(dot(vectors[i - 1], vectors[i])) /
                     (norm(vectors[i - 1]) * norm(vectors[i]));
    if (c > 1e-9)
      throw std::invalid_argument(
          "consecutive axis path vectors must be orthogonal");
  }
  if (vectors.empty()) throw std::invalid_argument("axis path needs vectors");
  return PiecewiseLinearPath::from_segments(
      static_cast<int>(vectors.front().size()), vectors, horizon);
}

double one_variation(const PiecewiseLinearPath& x) {
  double total = 0.0;
  for (const Vec& v : x.segments()) total += norm(v);
  return total;
}

PiecewiseLinearPath restrict_path(const PiecewiseLinearPath& x, double s,
                                  double t) {
  if (s > t) throw std::invalid_argument("restriction needs s <= t");
  if (s == t) return PiecewiseLinearPath::constant(x.dim());
  const Vec origin = x.at(s);
  std::vector<double> times{0.0};
  std::vector<Vec> points{Vec(x.dim(), 0.0)};
  for (std::size_t i = 0; i < x.times().size(); ++i) {
    const double u = x.times()[i];
    if (u > s && u < t) {
      times.push_back(u - s);
      points.push_back(vsub(x.points()[i], origin));
    }
  }
  times.push_back(t - s);
  points.push_back(vsub(x.at(t), origin));
  return PiecewiseLinearPath(x.dim(), t - s, std::move(times),
                             std::move(points));
}

}  // namespace sigkit
