#include "sigkit/tensor.hpp"

#include <cmath>
#include <stdexcept>

namespace sigkit {

namespace {

std::size_t pow_size(int dim, int length) {
  std::size_t s = 1;
  for (int i = 0; i < length; ++i) s *= static_cast<std::size_t>(dim);
  return s;
}

void check_compatible(const TruncatedTensor& a, const TruncatedTensor& b) {
  if (a.dim() != b.dim())
    throw std::invalid_argument("tensor dimension mismatch");
  if (a.level() != b.level())
    throw std::invalid_argument("tensor truncation level mismatch");
}

}  // namespace

TruncatedTensor::TruncatedTensor(int dim, int level)
    : dim_(dim), level_(level) {
  if (dim < 1) throw std::invalid_argument("tensor dim must be positive");
  if (level < 0) throw std::invalid_argument("tensor level must be >= 0");
  levels_.resize(static_cast<std::size_t>(level) + 1);
  for (int i = 0; i <= level; ++i)
    levels_[i].assign(pow_size(dim, i), 0.0);
}

TruncatedTensor TruncatedTensor::unit(int dim, int level) {
  TruncatedTensor t(dim, level);
  t.levels_[0][0] = 1.0;
  return t;
}

TruncatedTensor TruncatedTensor::basis(int dim, int level, const Word& w,
                                       double coeff) {
  TruncatedTensor t(dim, level);
  t.set_coeff(w, coeff);
  return t;
}

std::size_t TruncatedTensor::word_index(int dim, const Word& w) {
  std::size_t idx = 0;
  for (int letter : w.letters) {
    if (letter < 1 || letter > dim)
      throw std::invalid_argument("word letter out of range");
    idx = idx * static_cast<std::size_t>(dim) +
          static_cast<std::size_t>(letter - 1);
  }
  return idx;
}

Word TruncatedTensor::index_word(int dim, int length, std::size_t index) {
  std::vector<int> letters(static_cast<std::size_t>(length));
  for (int j = length - 1; j >= 0; --j) {
    letters[static_cast<std::size_t>(j)] =
        static_cast<int>(index % static_cast<std::size_t>(dim)) + 1;
    index /= static_cast<std::size_t>(dim);
  }
  return Word(std::move(letters));
}

double TruncatedTensor::coeff(const Word& w) const {
  const int len = static_cast<int>(w.length());
  if (len > level_) throw std::invalid_argument("word longer than level");
  return levels_[len][word_index(dim_, w)];
}

void TruncatedTensor::set_coeff(const Word& w, double c) {
  const int len = static_cast<int>(w.length());
  if (len > level_) throw std::invalid_argument("word longer than level");
  levels_[len][word_index(dim_, w)] = c;
}

GroupElement::GroupElement(TruncatedTensor t) : tensor_(std::move(t)) {
  if (std::abs(tensor_.scalar() - 1.0) > 1e-9)
    throw std::invalid_argument("group element scalar coefficient must be 1");
  tensor_.level_data(0)[0] = 1.0;
}

TruncatedTensor tensor_mul(const TruncatedTensor& a, const TruncatedTensor& b) {
  check_compatible(a, b);
  const int d = a.dim();
  const int N = a.level();
  TruncatedTensor c(d, N);
  for (int n = 0; n <= N; ++n) {
    auto& out = c.level_data(n);
    for (int i = 0; i <= n; ++i) {
      const auto& la = a.level_data(i);
      const auto& lb = b.level_data(n - i);
      const std::size_t nb = lb.size();
      for (std::size_t ia = 0; ia < la.size(); ++ia) {
        if (la[ia] == 0.0) continue;
        const double va = la[ia];
        const std::size_t base = ia * nb;
        for (std::size_t ib = 0; ib < nb; ++ib)
          out[base + ib] += va * lb[ib];
      }
    }
  }
  return c;
}

TruncatedTensor add(const TruncatedTensor& a, const TruncatedTensor& b) {
  check_compatible(a, b);
  TruncatedTensor c = a;
  for (int i = 0; i <= a.level(); ++i) {
    auto& out = c.level_data(i);
    const auto& lb = b.level_data(i);
    for (std::size_t j = 0; j < out.size(); ++j) out[j] += lb[j];
  }
  return c;
}

TruncatedTensor sub(const TruncatedTensor& a, const TruncatedTensor& b) {
  return add(a, scale(b, -1.0));
}

TruncatedTensor scale(const TruncatedTensor& a, double factor) {
  TruncatedTensor c = a;
  for (int i = 0; i <= a.level(); ++i)
    for (double& v : c.level_data(i)) v *= factor;
  return c;
}

GroupElement exp_trunc(const TruncatedTensor& x) {
  if (x.scalar() != 0.0)
    throw std::invalid_argument("exp_trunc requires zero scalar part");
  const int N = x.level();
  TruncatedTensor result = TruncatedTensor::unit(x.dim(), N);
  TruncatedTensor term = result;  // x^k / k!
  for (int k = 1; k <= N; ++k) {
    term = scale(tensor_mul(term, x), 1.0 / k);
    result = add(result, term);
  }
  return GroupElement(std::move(result));
}

TruncatedTensor log_trunc(const GroupElement& g) {
  const TruncatedTensor& t = g.tensor();
  const int N = t.level();
  TruncatedTensor y = t;
  y.level_data(0)[0] = 0.0;  // g - 1
  TruncatedTensor result(t.dim(), N);
  TruncatedTensor pow = y;
  double sign = 1.0;
  for (int k = 1; k <= N; ++k) {
    result = add(result, scale(pow, sign / k));
    pow = tensor_mul(pow, y);
    sign = -sign;
  }
  return result;
}

GroupElement group_inverse(const GroupElement& g) {
  return exp_trunc(scale(log_trunc(g), -1.0));
}

TruncatedTensor project_level(const TruncatedTensor& x, int i) {
  if (i < 0 || i > x.level())
    throw std::invalid_argument("projection level out of range");
  TruncatedTensor c(x.dim(), x.level());
  c.level_data(i) = x.level_data(i);
  return c;
}

TruncatedTensor truncate(const TruncatedTensor& x, int n) {
  if (n < 0 || n > x.level())
    throw std::invalid_argument("truncation level out of range");
  TruncatedTensor c(x.dim(), n);
  for (int i = 0; i <= n; ++i) c.level_data(i) = x.level_data(i);
  return c;
}

double level_norm(const TruncatedTensor& x, int i) {
  if (i < 0 || i > x.level())
    throw std::invalid_argument("level out of range");
  double s = 0.0;
  for (double v : x.level_data(i)) s += v * v;
  return std::sqrt(s);
}

std::map<Word, long> shuffle_product(const Word& u, const Word& v) {
  if (u.letters.empty()) return {{v, 1}};
  if (v.letters.empty()) return {{u, 1}};

  Word u_rest(std::vector<int>(u.letters.begin() + 1, u.letters.end()));
  Word v_rest(std::vector<int>(v.letters.begin() + 1, v.letters.end()));

  std::map<Word, long> result;
  for (const auto& [w, m] : shuffle_product(u_rest, v)) {
    Word prefixed;
    prefixed.letters.reserve(w.length() + 1);
    prefixed.letters.push_back(u.letters.front());
    prefixed.letters.insert(prefixed.letters.end(), w.letters.begin(),
                            w.letters.end());
    result[prefixed] += m;
  }
  for (const auto& [w, m] : shuffle_product(u, v_rest)) {
    Word prefixed;
    prefixed.letters.reserve(w.length() + 1);
    prefixed.letters.push_back(v.letters.front());
    prefixed.letters.insert(prefixed.letters.end(), w.letters.begin(),
                            w.letters.end());
    result[prefixed] += m;
  }
  return result;
}

std::vector<Word> words_of_length(int dim, int length) {
  std::vector<Word> words;
  const std::size_t count = pow_size(dim, length);
  words.reserve(count);
  for (std::size_t idx = 0; idx < count; ++idx)
    words.push_back(TruncatedTensor::index_word(dim, length, idx));
  return words;
}

bool is_group_like(const GroupElement& g, double tol) {
  const TruncatedTensor& t = g.tensor();
  const int N = t.level();
  const int d = t.dim();
  for (int lu = 1; lu < N; ++lu) {
    for (int lv = 1; lu + lv <= N; ++lv) {
      for (const Word& u : words_of_length(d, lu)) {
        for (const Word& v : words_of_length(d, lv)) {
          double shuffled = 0.0;
          for (const auto& [w, m] : shuffle_product(u, v))
            shuffled += static_cast<double>(m) * t.coeff(w);
          if (std::abs(t.coeff(u) * t.coeff(v) - shuffled) > tol) return false;
        }
      }
    }
  }
  return true;
}

double homogeneous_norm(const GroupElement& g) {
  const TruncatedTensor& t = g.tensor();
  double result = 0.0;
  for (int i = 1; i <= t.level(); ++i) {
    const double n = std::pow(level_norm(t, i), 1.0 / i);
    if (n > result) result = n;
  }
  return result;
}

double product_metric_dist(const GroupElement& g, const GroupElement& h) {
  check_compatible(g.tensor(), h.tensor());
  const TruncatedTensor diff = sub(g.tensor(), h.tensor());
  double dist = 0.0;
  double weight = 1.0;
  for (int n = 1; n <= diff.level(); ++n) {
    weight *= 0.5;
    dist += weight * std::min(1.0, level_norm(diff, n));
  }
  return dist;
}

}  // namespace sigkit
