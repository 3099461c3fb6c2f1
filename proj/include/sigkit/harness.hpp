#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "sigkit/path.hpp"
#include "sigkit/report.hpp"

namespace sigkit {

// Counterexample families used by the verification checks. All results are
// constant-speed on [0,1].

// X * gamma_{(n+eps)v1} * gamma_{-(n+eps)v1}: stays in the class of X.
PiecewiseLinearPath family_Y(const PiecewiseLinearPath& x, double n,
                             double eps, const Vec& v1);

// X * gamma_{eps v2} * gamma_{n v1} * gamma_{-eps v2} * gamma_{-n v1}:
// tree-reduced, close to family_Y at level 1 but with exploding p-variation.
PiecewiseLinearPath family_Z(const PiecewiseLinearPath& x, double n,
                             double eps, const Vec& v1, const Vec& v2);

enum class XEpsVariant {
  ThirdSegmentV1,  // third segment -eps v1, as printed
  ThirdSegmentV2,  // third segment -eps v2, closing the loop
};

// Four-segment family gamma_{eps v2} * gamma_{(1/2-eps)v1} * (third segment)
// * gamma_{-(1/2-eps)v1} for 0 < eps < 1/2.
PiecewiseLinearPath family_X_eps(double eps, const Vec& v1, const Vec& v2,
                                 XEpsVariant variant);

struct HarnessOptions {
  double p = 1.5;
  int level = 4;
  int refine = 4;
  double tol = 1e-9;
  std::uint64_t seed = 42;
};

VerificationReport verify_example_pvar(double eps, double p);
VerificationReport verify_unbounded_balls(int n_max, double eps, double p);
VerificationReport verify_dstar_separation(double p, int directions,
                                           std::uint64_t seed);
VerificationReport verify_cauchy_gap(const std::vector<double>& eps_sequence,
                                     double p, int level,
                                     XEpsVariant variant,
                                     std::vector<std::string>* csv_rows = nullptr);
VerificationReport verify_quotient_witness(
    int n_max, const std::vector<double>& delta_sequence, double p);
VerificationReport verify_constant_speed_closed(
    const std::vector<PiecewiseLinearPath>& samples,
    const std::vector<double>& t_grid);

// Runs every check with the given options; reports are ordered by check
// name. Returns all reports (callers inspect passed flags).
std::vector<VerificationReport> run_all_checks(const HarnessOptions& options);

// CSV sweep data for a named check; header "param,value_1,...,value_m".
std::vector<std::string> sweep_csv(const std::string& check,
                                   const HarnessOptions& options);

}  // namespace sigkit
