#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "sigkit/harness.hpp"
#include "sigkit/path.hpp"
#include "sigkit/serialize.hpp"
#include "sigkit/signature.hpp"
#include "sigkit/unparam.hpp"
#include "sigkit/variation.hpp"

namespace {

using namespace sigkit;

std::string variation_to_text(const VariationResult& r) {
  std::ostringstream out;
  out << std::setprecision(15);
  out << "value: " << r.value << '\n';
  out << "exact: " << (r.exact ? "true" : "false") << '\n';
  out << "refinement_level: " << r.refinement_level << '\n';
  out << "optimal_partition:";
  for (double t : r.optimal_partition.times) out << ' ' << t;
  out << '\n';
  return out.str();
}

std::vector<std::string> read_corpus(const std::string& filename) {
  std::ifstream in(filename);
  if (!in)
    throw std::invalid_argument("cannot open corpus file: " + filename);
  std::vector<std::string> files;
  std::string line;
  while (std::getline(in, line))
    if (!line.empty()) files.push_back(line);
  return files;
}

int run(int argc, char** argv) {
  CLI::App app{
      "Signatures, p-variation metrics and verification checks for "
      "piecewise linear rough paths"};
  app.require_subcommand(1);
  app.fallthrough();

  double p = 1.5;
  int level = 4;
  int refine = 4;
  double tol = 1e-9;
  std::uint64_t seed = 42;
  if (const char* env_tol = std::getenv("SIGKIT_TOL"))
    tol = std::stod(env_tol);
  app.add_option("--p", p, "variation exponent")->capture_default_str();
  app.add_option("--level,-N", level, "truncation level")
      ->capture_default_str();
  app.add_option("--refine,-k", refine, "refinement for lifted levels")
      ->capture_default_str();
  app.add_option("--tol", tol, "tolerance override")->capture_default_str();
  app.add_option("--seed", seed, "seed for randomised sweeps")
      ->capture_default_str();

  std::string path_file;
  auto* sig_cmd = app.add_subcommand("sig", "print the signature tensor");
  sig_cmd->add_option("path", path_file, "path file (.json or .csv)")
      ->required();

  std::string pvar_file;
  auto* pvar_cmd = app.add_subcommand("pvar", "p-variation of a path");
  pvar_cmd->add_option("path", pvar_file, "path file")->required();

  std::string dist_a, dist_b, matrix_file, matrix_out, metric = "d";
  auto* dist_cmd =
      app.add_subcommand("dist", "distance between unparameterised paths");
  dist_cmd->add_option("first", dist_a, "first path file");
  dist_cmd->add_option("second", dist_b, "second path file");
  dist_cmd->add_option("--metric", metric, "metric: d, star or sig")
      ->capture_default_str();
  dist_cmd->add_option("--matrix", matrix_file,
                       "corpus file: one path file per line");
  dist_cmd->add_option("--csv", matrix_out, "matrix output file");

  std::string reduce_file, reduce_out;
  auto* reduce_cmd =
      app.add_subcommand("reduce", "print the irreducible representative");
  reduce_cmd->add_option("path", reduce_file, "path file")->required();
  reduce_cmd->add_option("-o,--out", reduce_out, "output file");

  std::string check = "all";
  auto* verify_cmd = app.add_subcommand("verify", "run verification checks");
  verify_cmd->add_option("check", check, "check name or 'all'");

  std::string sweep_check, sweep_out;
  auto* sweep_cmd = app.add_subcommand("sweep", "emit CSV sweep data");
  sweep_cmd->add_option("check", sweep_check, "check name")->required();
  sweep_cmd->add_option("--csv", sweep_out, "output CSV file")->required();

  CLI11_PARSE(app, argc, argv);

  if (*sig_cmd) {
    const PiecewiseLinearPath x = load_path_file(path_file);
    std::cout << tensor_to_text(signature(x, level).tensor());
    return 0;
  }

  if (*pvar_cmd) {
    const PiecewiseLinearPath x = load_path_file(pvar_file);
    const VariationResult r = level == 1
                                  ? p_variation(x, p)
                                  : p_variation_lift(x, p, level, refine);
    std::cout << variation_to_text(r);
    return 0;
  }

  if (*dist_cmd) {
    if (!matrix_file.empty()) {
      const std::vector<std::string> files = read_corpus(matrix_file);
      std::vector<UnparamPath> classes;
      for (const std::string& f : files)
        classes.push_back(canonicalize(load_path_file(f), p, level));
      std::ostringstream out;
      out << std::setprecision(12);
      out << "# metric=" << metric << " p=" << p << " N=" << level
          << " k=" << refine << '\n';
      out << "path";
      for (const std::string& f : files) out << ',' << f;
      out << '\n';
      for (std::size_t i = 0; i < classes.size(); ++i) {
        out << files[i];
        for (std::size_t j = 0; j < classes.size(); ++j) {
          double d = 0.0;
          if (metric == "d")
            d = dist_d(classes[i], classes[j], refine);
          else if (metric == "star")
            d = dist_star(classes[i], classes[j], refine);
          else if (metric == "sig")
            d = dist_sig(classes[i], classes[j]);
          else
            throw std::invalid_argument("unknown metric: " + metric);
          out << ',' << d;
        }
        out << '\n';
      }
      if (matrix_out.empty()) {
        std::cout << out.str();
      } else {
        std::ofstream f(matrix_out);
        f << out.str();
      }
      return 0;
    }
    if (dist_a.empty() || dist_b.empty())
      throw std::invalid_argument("dist needs two path files or --matrix");
    const UnparamPath a = canonicalize(load_path_file(dist_a), p, level);
    const UnparamPath b = canonicalize(load_path_file(dist_b), p, level);
    double d = 0.0;
    if (metric == "d")
      d = dist_d(a, b, refine);
    else if (metric == "star")
      d = dist_star(a, b, refine);
    else if (metric == "sig")
      d = dist_sig(a, b);
    else
      throw std::invalid_argument("unknown metric: " + metric);
    std::cout << std::setprecision(15) << d << '\n';
    return 0;
  }

  if (*reduce_cmd) {
    const PiecewiseLinearPath x = load_path_file(reduce_file);
    const PiecewiseLinearPath reduced =
        constant_speed_reparam(tree_reduce(x));
    if (reduce_out.empty())
      std::cout << path_to_json(reduced);
    else
      save_path_file(reduced, reduce_out);
    return 0;
  }

  if (*verify_cmd) {
    HarnessOptions options;
    options.p = p;
    options.level = level;
    options.refine = refine;
    options.tol = tol;
    options.seed = seed;
    std::vector<VerificationReport> reports;
    if (check == "all") {
      reports = run_all_checks(options);
    } else {
      for (VerificationReport& r : run_all_checks(options))
        if (r.check_name == check) reports.push_back(std::move(r));
      if (reports.empty())
        throw std::invalid_argument("unknown check: " + check);
    }
    bool all_passed = true;
    for (const VerificationReport& r : reports) {
      std::cout << r.to_text() << '\n';
      all_passed = all_passed && r.passed;
    }
    return all_passed ? 0 : 1;
  }

  if (*sweep_cmd) {
    HarnessOptions options;
    options.p = p;
    options.level = level;
    options.refine = refine;
    options.tol = tol;
    options.seed = seed;
    std::ofstream out(sweep_out);
    if (!out)
      throw std::invalid_argument("cannot write sweep file: " + sweep_out);
    for (const std::string& row : sweep_csv(sweep_check, options))
      out << row << '\n';
    return 0;
  }

  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  try {
    return run(argc, argv);
  } catch (const std::exception& err) {
    std::cerr << "error: " << err.what() << '\n';
    return 2;
  }
}
