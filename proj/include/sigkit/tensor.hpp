#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <vector>

namespace sigkit {

// Basis word over the alphabet {1..d}. The empty word indexes the scalar slot.
struct Word {
  std::vector<int> letters;

  Word() = default;
  explicit Word(std::vector<int> ls) : letters(std::move(ls)) {}

  std::size_t length() const { return letters.size(); }
  auto operator<=>(const Word&) const = default;
};

// Element of the truncated tensor algebra T^(N)(R^d). Dense storage per
// level: level i holds d^i coefficients, word (l_1..l_i) at index
// sum (l_j - 1) d^{i-j}.
class TruncatedTensor {
 public:
  TruncatedTensor(int dim, int level);

  static TruncatedTensor unit(int dim, int level);
  static TruncatedTensor basis(int dim, int level, const Word& w,
                               double coeff = 1.0);

  int dim() const { return dim_; }
  int level() const { return level_; }

  const std::vector<double>& level_data(int i) const { return levels_[i]; }
  std::vector<double>& level_data(int i) { return levels_[i]; }

  double coeff(const Word& w) const;
  void set_coeff(const Word& w, double c);

  double scalar() const { return levels_[0][0]; }

  static std::size_t word_index(int dim, const Word& w);
  static Word index_word(int dim, int length, std::size_t index);

 private:
  int dim_;
  int level_;
  std::vector<std::vector<double>> levels_;
};

// Group-like element: truncated tensor with scalar coefficient exactly 1.
class GroupElement {
 public:
  explicit GroupElement(TruncatedTensor t);

  const TruncatedTensor& tensor() const { return tensor_; }
  int dim() const { return tensor_.dim(); }
  int level() const { return tensor_.level(); }

 private:
  TruncatedTensor tensor_;
};

TruncatedTensor tensor_mul(const TruncatedTensor& a, const TruncatedTensor& b);
TruncatedTensor add(const TruncatedTensor& a, const TruncatedTensor& b);
TruncatedTensor sub(const TruncatedTensor& a, const TruncatedTensor& b);
TruncatedTensor scale(const TruncatedTensor& a, double factor);

// Truncated tensor exponential; requires zero scalar part.
GroupElement exp_trunc(const TruncatedTensor& x);

// Truncated tensor logarithm; inverse of exp_trunc up to level N.
TruncatedTensor log_trunc(const GroupElement& g);

GroupElement group_inverse(const GroupElement& g);

// pi_i: keep only words of length exactly i.
TruncatedTensor project_level(const TruncatedTensor& x, int i);
// pi^(n): keep words of length <= n, result truncated at level n.
TruncatedTensor truncate(const TruncatedTensor& x, int n);

// Euclidean norm of the level-i component.
double level_norm(const TruncatedTensor& x, int i);

// All interleavings of u and v preserving internal order, with multiplicity.
std::map<Word, long> shuffle_product(const Word& u, const Word& v);

// Shuffle-multiplicativity test: <g,u><g,v> = <g, u shuffle v> for all word
// pairs with len(u)+len(v) <= N.
bool is_group_like(const GroupElement& g, double tol = 1e-10);

// max_{1<=i<=N} ||pi_i(g)||^{1/i}.
double homogeneous_norm(const GroupElement& g);

// Metric inducing the product topology on truncations:
// sum_{n=1..N} 2^{-n} min(1, ||pi_n(g-h)||).
double product_metric_dist(const GroupElement& g, const GroupElement& h);

std::vector<Word> words_of_length(int dim, int length);

}  // namespace sigkit
