#include "sigkit/harness.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <random>
#include <sstream>
#include <stdexcept>

#include "sigkit/signature.hpp"
#include "sigkit/unparam.hpp"
#include "sigkit/variation.hpp"

namespace sigkit {

namespace {

class Stopwatch {
 public:
  double elapsed_ms() const {
    return std::chrono::duration<double, std::milli>(
               std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_ =
      std::chrono::steady_clock::now();
};

void check_unit(const Vec& v, const char* name) {
  if (std::abs(norm(v) - 1.0) > 1e-9)
    throw std::invalid_argument(std::string(name) + " must be a unit vector");
}

void check_not_collinear_with_last(const PiecewiseLinearPath& x,
                                   const Vec& v) {
  const auto segs = x.segments();
  if (segs.empty()) return;
  const Vec& last = segs.back();
  const double c = std::abs(dot(last, v)) / (norm(last) * norm(v));
  if (c > 1.0 - 1e-9)
    throw std::invalid_argument(
        "family direction collinear with the last segment");
}

Vec unit_direction(std::mt19937_64& rng, int dim) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  Vec v(dim);
  double len = 0.0;
  while (len < 1e-6) {
    for (double& c : v) c = gauss(rng);
    len = norm(v);
  }
  return vscale(v, 1.0 / len);
}

PiecewiseLinearPath random_sample_path(std::mt19937_64& rng, int dim,
                                       int segments) {
  std::normal_distribution<double> gauss(0.0, 1.0);
  std::vector<Vec> segs(static_cast<std::size_t>(segments));
  for (Vec& v : segs) {
    v.resize(dim);
    for (double& c : v) c = gauss(rng);
  }
  return PiecewiseLinearPath::from_segments(dim, segs, 1.0);
}

Vec e(int dim, int axis) {
  Vec v(dim, 0.0);
  v[axis] = 1.0;
  return v;
}

}  // namespace

PiecewiseLinearPath family_Y(const PiecewiseLinearPath& x, double n,
                             double eps, const Vec& v1) {
  if (n <= 0.0 || eps <= 0.0)
    throw std::invalid_argument("family_Y needs n > 0 and eps > 0");
  check_unit(v1, "v1");
  check_not_collinear_with_last(x, v1);
  std::vector<Vec> segs = x.segments();
  segs.push_back(vscale(v1, n + eps));
  segs.push_back(vscale(v1, -(n + eps)));
  return PiecewiseLinearPath::from_segments(x.dim(), segs, 1.0);
}

PiecewiseLinearPath family_Z(const PiecewiseLinearPath& x, double n,
                             double eps, const Vec& v1, const Vec& v2) {
  if (n <= 0.0 || eps <= 0.0)
    throw std::invalid_argument("family_Z needs n > 0 and eps > 0");
  check_unit(v1, "v1");
  check_unit(v2, "v2");
  if (std::abs(dot(v1, v2)) > 1e-9)
    throw std::invalid_argument("family_Z needs v1 orthogonal to v2");
  check_not_collinear_with_last(x, v2);
  std::vector<Vec> segs = x.segments();
  segs.push_back(vscale(v2, eps));
  segs.push_back(vscale(v1, n));
  segs.push_back(vscale(v2, -eps));
  segs.push_back(vscale(v1, -n));
  return PiecewiseLinearPath::from_segments(x.dim(), segs, 1.0);
}

PiecewiseLinearPath family_X_eps(double eps, const Vec& v1, const Vec& v2,
                                 XEpsVariant variant) {
  if (!(eps > 0.0 && eps < 0.5))
    throw std::invalid_argument("family_X_eps needs 0 < eps < 1/2");
  check_unit(v1, "v1");
  check_unit(v2, "v2");
  if (std::abs(dot(v1, v2)) / (norm(v1) * norm(v2)) > 1.0 - 1e-9)
    throw std::invalid_argument("family_X_eps needs non-collinear directions");
  const Vec third = variant == XEpsVariant::ThirdSegmentV1
                        ? vscale(v1, -eps)
                        : vscale(v2, -eps);
  const std::vector<Vec> segs{vscale(v2, eps), vscale(v1, 0.5 - eps), third,
                              vscale(v1, -(0.5 - eps))};
  return PiecewiseLinearPath::from_segments(
      static_cast<int>(v1.size()), segs, 1.0);
}

VerificationReport verify_example_pvar(double eps, double p) {
  Stopwatch clock;
  VerificationReport report;
  report.check_name = "example_pvar";
  report.parameters["eps"] = eps;
  report.parameters["p"] = p;

  const Vec e1 = e(2, 0);
  const PiecewiseLinearPath gamma = concat(
      concat(line(vscale(e1, 1.0 + eps)), line(vscale(e1, -2.0 * eps))),
      line(vscale(e1, 1.0 + eps)));
  const VariationResult pv = p_variation(gamma, p);
  const PiecewiseLinearPath reduced = tree_reduce(gamma);

  report.computed_values["pvar"] = pv.value;
  report.computed_values["reduced_segments"] =
      static_cast<double>(reduced.segment_count());
  report.computed_values["reduced_endpoint_x1"] = reduced.endpoint()[0];
  report.bound = {"p-variation of the reduced example path", 2.0,
                        BoundDirection::Equal,
                        "three-segment retracing example, p in (1,2)"};
  report.passed = std::abs(pv.value - 2.0) <= 1e-12 &&
                  reduced.segment_count() == 1 &&
                  std::abs(reduced.endpoint()[0] - 2.0) <= 1e-12;
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_unbounded_balls(int n_max, double eps, double p) {
  Stopwatch clock;
  VerificationReport report;
  report.check_name = "unbounded_balls";
  report.parameters["n_max"] = n_max;
  report.parameters["eps"] = eps;
  report.parameters["p"] = p;

  const PiecewiseLinearPath base = PiecewiseLinearPath::constant(2);
  const Vec v1 = e(2, 0);
  const Vec v2 = e(2, 1);
  const GroupElement unit_sig(TruncatedTensor::unit(2, 4));

  bool passed = true;
  double worst_d1 = 0.0;
  double worst_margin = 1e300;
  for (int n = 1; n <= n_max; ++n) {
    const PiecewiseLinearPath y = family_Y(base, n, eps, v1);
    const PiecewiseLinearPath z = family_Z(base, n, eps, v1, v2);
    const double d1 = p_var_distance(y, z, 1.0, 1, 0).value;
    worst_d1 = std::max(worst_d1, d1);
    if (d1 > 4.0 * eps + 1e-9) passed = false;

    const double zp = std::pow(p_variation(z, p).value, p);
    const double bound = 2.0 * std::pow(eps, p) + 2.0 * std::pow(n, p);
    worst_margin = std::min(worst_margin, zp - bound);
    if (zp < bound - 1e-9) passed = false;

    if (product_metric_dist(signature(y, 4), unit_sig) > 1e-9) passed = false;
    if (!is_irreducible(z)) passed = false;
  }
  report.computed_values["max_d1"] = worst_d1;
  report.computed_values["min_pvar_margin"] = worst_margin;
  report.bound = {"4 eps", 4.0 * eps, BoundDirection::LessEqual,
                        "level-1 distance between the Y and Z families"};
  report.passed = passed;
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_dstar_separation(double p, int directions,
                                           std::uint64_t seed) {
  Stopwatch clock;
  VerificationReport report;
  report.check_name = "dstar_separation";
  report.parameters["p"] = p;
  report.parameters["directions"] = directions;

  std::mt19937_64 rng(seed);
  std::vector<UnparamPath> classes;
  classes.reserve(static_cast<std::size_t>(directions));
  for (int i = 0; i < directions; ++i)
    classes.push_back(canonicalize(line(unit_direction(rng, 2)), p, 1));

  double min_power = 1e300;
  for (std::size_t i = 0; i < classes.size(); ++i)
    for (std::size_t j = i + 1; j < classes.size(); ++j)
      min_power = std::min(
          min_power, std::pow(dist_star(classes[i], classes[j]), p));

  report.computed_values["min_dstar_pow_p"] = min_power;
  report.bound = {"2", 2.0, BoundDirection::GreaterEqual,
                        "super-additivity lower bound for distinct unit lines"};
  report.passed = min_power >= 2.0 - 1e-9;
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_cauchy_gap(const std::vector<double>& eps_sequence,
                                     double p, int level, XEpsVariant variant,
                                     std::vector<std::string>* csv_rows) {
  Stopwatch clock;
  VerificationReport report;
  report.check_name = variant == XEpsVariant::ThirdSegmentV2
                          ? "cauchy_gap"
                          : "cauchy_gap_printed_variant";
  report.parameters["p"] = p;
  report.parameters["N"] = level;

  const Vec v1 = e(2, 0);
  const Vec v2 = e(2, 1);
  const UnparamPath origin =
      canonicalize(PiecewiseLinearPath::constant(2), p, level);
  const double gap = std::pow(2.0, 1.0 / p - 1.0);

  bool passed = true;
  bool sig_monotone = true;
  double last_sig = 1e300;
  double final_sig = 0.0;
  double min_dd = 1e300;
  for (double eps : eps_sequence) {
    const UnparamPath cls =
        canonicalize(family_X_eps(eps, v1, v2, variant), p, level);
    const double ds = dist_sig(cls, origin);
    const double dd = dist_d(cls, origin);
    if (csv_rows) {
      std::ostringstream row;
      row.precision(12);
      row << eps << ',' << ds << ',' << dd;
      csv_rows->push_back(row.str());
    }
    if (!std::isfinite(ds) || !std::isfinite(dd)) passed = false;
    if (variant == XEpsVariant::ThirdSegmentV2 && dd < gap - 1e-6)
      passed = false;
    if (ds > last_sig) sig_monotone = false;
    last_sig = ds;
    final_sig = ds;
    min_dd = std::min(min_dd, dd);
  }
  if (variant == XEpsVariant::ThirdSegmentV2 && final_sig >= 1e-3)
    passed = false;

  report.computed_values["final_dist_sig"] = final_sig;
  report.computed_values["min_dist_d"] = min_dd;
  report.computed_values["sig_monotone"] = sig_monotone ? 1.0 : 0.0;
  report.bound = {"2^(1/p - 1)", gap, BoundDirection::GreaterEqual,
                        "persistent d-metric gap along the shrinking family"};
  report.passed = passed;
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_quotient_witness(
    int n_max, const std::vector<double>& delta_sequence, double p) {
  Stopwatch clock;
  VerificationReport report;
  report.check_name = "quotient_witness";
  report.parameters["n_max"] = n_max;
  report.parameters["p"] = p;

  const Vec v1 = e(2, 0);
  const Vec v2 = e(2, 1);

  bool passed = true;
  double prev_zvar = 0.0;
  double last_eps = 0.0;
  double last_dist = 0.0;
  for (int n = 1; n <= n_max; ++n) {
    const double delta =
        n <= static_cast<int>(delta_sequence.size())
            ? delta_sequence[static_cast<std::size_t>(n - 1)]
            : std::pow(2.0, -n);
    const PiecewiseLinearPath y = PiecewiseLinearPath::from_segments(
        2, {vscale(v1, n), vscale(v1, -n)}, 1.0);

    // The 4*eps level-1 bound gives the bisection bracket: eps = delta/4
    // already works, halve until the measured distance clears delta.
    double eps = delta / 4.0;
    double dist = 1e300;
    for (int iter = 0; iter < 60 && dist >= delta; ++iter) {
      const PiecewiseLinearPath z = PiecewiseLinearPath::from_segments(
          2,
          {vscale(v2, eps), vscale(v1, n - eps), vscale(v2, -eps),
           vscale(v1, -(n - eps))},
          1.0);
      dist = p_var_distance(z, y, 1.0, 1, 0).value;
      if (dist >= delta) eps /= 2.0;
    }
    if (dist >= delta) passed = false;

    const PiecewiseLinearPath z = PiecewiseLinearPath::from_segments(
        2,
        {vscale(v2, eps), vscale(v1, n - eps), vscale(v2, -eps),
         vscale(v1, -(n - eps))},
        1.0);
    const double zvar = p_variation(z, p).value;
    if (zvar <= prev_zvar) passed = false;
    prev_zvar = zvar;
    last_eps = eps;
    last_dist = dist;
  }
  report.computed_values["final_eps"] = last_eps;
  report.computed_values["final_distance"] = last_dist;
  report.computed_values["final_z_pvar"] = prev_zvar;
  report.bound = {"delta_n", 0.0, BoundDirection::LessEqual,
                        "bounded-distance witnesses with exploding p-variation"};
  report.passed = passed;
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

VerificationReport verify_constant_speed_closed(
    const std::vector<PiecewiseLinearPath>& samples,
    const std::vector<double>& t_grid) {
  Stopwatch clock;
  VerificationReport report;
  report.check_name = "constant_speed_closed";
  report.parameters["samples"] = static_cast<double>(samples.size());

  double worst = 0.0;
  for (const PiecewiseLinearPath& sample : samples) {
    const PiecewiseLinearPath x = constant_speed_reparam(sample);
    const double total = one_variation(x);
    for (double t : t_grid) {
      const double partial = p_variation_interval(x, 1.0, 0.0, t).value;
      worst = std::max(worst,
                       std::abs(partial - t / x.horizon() * total));
    }
  }
  report.computed_values["max_deviation"] = worst;
  report.bound = {"1e-9", 1e-9, BoundDirection::LessEqual,
                        "linear-control identity after reparameterisation"};
  report.passed = worst < 1e-9;
  report.runtime_ms = clock.elapsed_ms();
  return report;
}

std::vector<VerificationReport> run_all_checks(const HarnessOptions& options) {
  const double p_frac =
      (options.p > 1.0 && options.p < 2.0) ? options.p : 1.5;

  std::vector<double> eps_sequence;
  for (int j = 2; j <= 10; ++j) eps_sequence.push_back(std::pow(2.0, -j));
  std::vector<double> deltas;
  for (int n = 1; n <= 8; ++n) deltas.push_back(std::pow(2.0, -n));

  std::mt19937_64 rng(options.seed);
  std::vector<PiecewiseLinearPath> samples;
  for (int i = 0; i < 20; ++i)
    samples.push_back(random_sample_path(rng, 2, 10));
  std::vector<double> grid;
  for (int i = 0; i <= 100; ++i) grid.push_back(i / 100.0);

  std::vector<VerificationReport> reports;
  reports.push_back(verify_example_pvar(0.1, p_frac));
  reports.push_back(verify_unbounded_balls(8, 0.05, options.p));
  reports.push_back(
      verify_dstar_separation(options.p, 10, options.seed));
  reports.push_back(verify_cauchy_gap(eps_sequence, p_frac, options.level,
                                      XEpsVariant::ThirdSegmentV2));
  reports.push_back(verify_cauchy_gap(eps_sequence, p_frac, options.level,
                                      XEpsVariant::ThirdSegmentV1));
  reports.push_back(verify_quotient_witness(8, deltas, options.p));
  reports.push_back(verify_constant_speed_closed(samples, grid));

  std::sort(reports.begin(), reports.end(),
            [](const VerificationReport& a, const VerificationReport& b) {
              return a.check_name < b.check_name;
            });
  return reports;
}

std::vector<std::string> sweep_csv(const std::string& check,
                                   const HarnessOptions& options) {
  std::vector<std::string> rows;
  if (check == "cauchy_gap" || check == "cauchy_gap_printed_variant") {
    rows.push_back("eps,dist_sig,dist_d");
    std::vector<double> eps_sequence;
    for (int j = 2; j <= 10; ++j) eps_sequence.push_back(std::pow(2.0, -j));
    const double p_frac =
        (options.p > 1.0 && options.p < 2.0) ? options.p : 1.5;
    verify_cauchy_gap(eps_sequence, p_frac, options.level,
                      check == "cauchy_gap" ? XEpsVariant::ThirdSegmentV2
                                            : XEpsVariant::ThirdSegmentV1,
                      &rows);
    return rows;
  }
  if (check == "unbounded_balls") {
    rows.push_back("n,z_pvar,d1");
    const PiecewiseLinearPath base = PiecewiseLinearPath::constant(2);
    const Vec v1 = e(2, 0);
    const Vec v2 = e(2, 1);
    const double eps = 0.05;
    for (int n = 1; n <= 8; ++n) {
      const PiecewiseLinearPath y = family_Y(base, n, eps, v1);
      const PiecewiseLinearPath z = family_Z(base, n, eps, v1, v2);
      std::ostringstream row;
      row.precision(12);
      row << n << ',' << p_variation(z, options.p).value << ','
          << p_var_distance(y, z, 1.0, 1, 0).value;
      rows.push_back(row.str());
    }
    return rows;
  }
  throw std::invalid_argument("no sweep defined for check: " + check);
}

}  // namespace sigkit
