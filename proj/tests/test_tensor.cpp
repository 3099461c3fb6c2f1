#include <doctest.h>

#include <cmath>
#include <random>
#include <stdexcept>

#include "sigkit/tensor.hpp"
#include "test_util.hpp"

using namespace sigkit;

namespace {

Word w(std::vector<int> letters) { return Word(std::move(letters)); }

GroupElement random_group_element(std::mt19937_64& rng, int dim, int level) {
  return exp_trunc(testutil::random_tensor(rng, dim, level, true));
}

}  // namespace

TEST_CASE("word indexing round-trips") {
  const int dim = 3;
  for (int len = 0; len <= 3; ++len) {
    const auto words = words_of_length(dim, len);
    CHECK(words.size() == static_cast<std::size_t>(std::pow(dim, len)));
    for (std::size_t i = 0; i < words.size(); ++i) {
      CHECK(TruncatedTensor::word_index(dim, words[i]) == i);
      CHECK(TruncatedTensor::index_word(dim, len, i) == words[i]);
    }
  }
}

TEST_CASE("coeff access and constructor validation") {
  TruncatedTensor t(2, 3);
  t.set_coeff(w({1, 2}), 0.5);
  CHECK(t.coeff(w({1, 2})) == 0.5);
  CHECK(t.coeff(w({2, 1})) == 0.0);
  CHECK_THROWS_AS(t.coeff(w({1, 2, 1, 2})), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedTensor(0, 2), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedTensor(2, -1), std::invalid_argument);
  CHECK_THROWS_AS(TruncatedTensor::basis(2, 2, w({3})), std::invalid_argument);
}

TEST_CASE("tensor_mul multiplies degree-1 polynomials") {
  const auto unit = TruncatedTensor::unit(2, 2);
  const auto a = add(unit, TruncatedTensor::basis(2, 2, w({1})));
  const auto b = add(unit, TruncatedTensor::basis(2, 2, w({2})));
  const auto ab = tensor_mul(a, b);
  CHECK(ab.scalar() == 1.0);
  CHECK(ab.coeff(w({1})) == 1.0);
  CHECK(ab.coeff(w({2})) == 1.0);
  CHECK(ab.coeff(w({1, 2})) == 1.0);
  CHECK(ab.coeff(w({2, 1})) == 0.0);
  CHECK(ab.coeff(w({1, 1})) == 0.0);
}

TEST_CASE("tensor_mul identity and mismatch errors") {
  std::mt19937_64 rng(1);
  const auto g = testutil::random_tensor(rng, 2, 3);
  const auto one = TruncatedTensor::unit(2, 3);
  CHECK(testutil::max_coeff_diff(tensor_mul(g, one), g) == 0.0);
  CHECK(testutil::max_coeff_diff(tensor_mul(one, g), g) == 0.0);
  CHECK_THROWS_AS(tensor_mul(g, TruncatedTensor::unit(3, 3)),
                  std::invalid_argument);
  CHECK_THROWS_AS(tensor_mul(g, TruncatedTensor::unit(2, 2)),
                  std::invalid_argument);
}

TEST_CASE("exp(v) exp(-v) is the unit at level 4") {
  TruncatedTensor v(2, 4);
  v.set_coeff(w({1}), 1.0);
  v.set_coeff(w({2}), 1.0);
  const auto prod =
      tensor_mul(exp_trunc(v).tensor(), exp_trunc(scale(v, -1.0)).tensor());
  CHECK(testutil::max_coeff_diff(prod, TruncatedTensor::unit(2, 4)) < 1e-12);
}

TEST_CASE("add and scale act coefficient-wise") {
  const auto e1 = TruncatedTensor::basis(2, 2, w({1}));
  const auto e2 = TruncatedTensor::basis(2, 2, w({2}));
  const auto s = add(e1, e2);
  CHECK(s.coeff(w({1})) == 1.0);
  CHECK(s.coeff(w({2})) == 1.0);
  CHECK(testutil::max_coeff_diff(scale(e1, 0.0), TruncatedTensor(2, 2)) == 0.0);
  std::mt19937_64 rng(2);
  const auto g = testutil::random_tensor(rng, 2, 3);
  CHECK(testutil::max_coeff_diff(add(g, scale(g, -1.0)),
                                 TruncatedTensor(2, 3)) == 0.0);
  CHECK_THROWS_AS(add(e1, TruncatedTensor(3, 2)), std::invalid_argument);
}

TEST_CASE("exp_trunc series values") {
  TruncatedTensor v(2, 2);
  v.set_coeff(w({1}), 0.5);
  v.set_coeff(w({2}), -2.0);
  const auto g = exp_trunc(v).tensor();
  CHECK(g.scalar() == 1.0);
  CHECK(g.coeff(w({1})) == 0.5);
  CHECK(g.coeff(w({2})) == -2.0);
  CHECK(g.coeff(w({1, 1})) == doctest::Approx(0.125).epsilon(1e-14));
  CHECK(g.coeff(w({1, 2})) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(g.coeff(w({2, 2})) == doctest::Approx(2.0).epsilon(1e-14));

  const auto one = exp_trunc(TruncatedTensor(2, 3)).tensor();
  CHECK(testutil::max_coeff_diff(one, TruncatedTensor::unit(2, 3)) == 0.0);

  const auto ge1 = exp_trunc(TruncatedTensor::basis(1, 3, w({1}))).tensor();
  CHECK(ge1.coeff(w({1, 1, 1})) == doctest::Approx(1.0 / 6.0).epsilon(1e-15));

  TruncatedTensor bad(2, 2);
  bad.set_coeff(w({}), 0.5);
  CHECK_THROWS_AS(exp_trunc(bad), std::invalid_argument);
}

TEST_CASE("log_trunc inverts exp_trunc") {
  const auto zero = log_trunc(GroupElement(TruncatedTensor::unit(2, 3)));
  CHECK(testutil::max_coeff_diff(zero, TruncatedTensor(2, 3)) == 0.0);

  const auto e1 = TruncatedTensor::basis(2, 4, w({1}));
  CHECK(testutil::max_coeff_diff(log_trunc(exp_trunc(e1)), e1) < 1e-14);

  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 50; ++trial) {
    const auto x = testutil::random_tensor(rng, 3, 5, true);
    CHECK(testutil::max_coeff_diff(log_trunc(exp_trunc(x)), x) < 1e-12);
  }
}

TEST_CASE("log of exp(e1) exp(e2) matches the depth-2 bracket expansion") {
  const auto a = exp_trunc(TruncatedTensor::basis(2, 2, w({1})));
  const auto b = exp_trunc(TruncatedTensor::basis(2, 2, w({2})));
  const auto l = log_trunc(GroupElement(tensor_mul(a.tensor(), b.tensor())));
  CHECK(l.coeff(w({1})) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(l.coeff(w({2})) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(l.coeff(w({1, 2})) == doctest::Approx(0.5).epsilon(1e-14));
  CHECK(l.coeff(w({2, 1})) == doctest::Approx(-0.5).epsilon(1e-14));
  CHECK(l.coeff(w({1, 1})) == doctest::Approx(0.0).epsilon(1e-14));
  CHECK(l.coeff(w({2, 2})) == doctest::Approx(0.0).epsilon(1e-14));
}

TEST_CASE("group_inverse") {
  const GroupElement one(TruncatedTensor::unit(2, 3));
  CHECK(testutil::max_coeff_diff(group_inverse(one).tensor(), one.tensor()) ==
        0.0);

  TruncatedTensor v(2, 4);
  v.set_coeff(w({1}), 0.7);
  v.set_coeff(w({2}), -0.3);
  CHECK(testutil::max_coeff_diff(group_inverse(exp_trunc(v)).tensor(),
                                 exp_trunc(scale(v, -1.0)).tensor()) < 1e-14);

  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const auto g = random_group_element(rng, 2, 4);
    const auto prod = tensor_mul(g.tensor(), group_inverse(g).tensor());
    CHECK(testutil::max_coeff_diff(prod, TruncatedTensor::unit(2, 4)) < 1e-11);
  }
}

TEST_CASE("project_level and truncate") {
  std::mt19937_64 rng(5);
  const auto g = random_group_element(rng, 2, 3);
  const auto p0 = project_level(g.tensor(), 0);
  CHECK(p0.scalar() == 1.0);
  CHECK(level_norm(p0, 1) == 0.0);

  TruncatedTensor v(3, 2);
  v.set_coeff(w({2}), 1.5);
  const auto p1 = project_level(exp_trunc(v).tensor(), 1);
  CHECK(p1.coeff(w({2})) == 1.5);
  CHECK(p1.scalar() == 0.0);
  CHECK(level_norm(p1, 2) == 0.0);

  CHECK(testutil::max_coeff_diff(truncate(g.tensor(), 3), g.tensor()) == 0.0);
  const auto t2 = truncate(g.tensor(), 2);
  CHECK(t2.level() == 2);
  CHECK(t2.coeff(w({1})) == g.tensor().coeff(w({1})));
  CHECK_THROWS_AS(project_level(g.tensor(), 4), std::invalid_argument);
  CHECK_THROWS_AS(truncate(g.tensor(), 4), std::invalid_argument);
}

TEST_CASE("shuffle_product examples") {
  const auto s1 = shuffle_product(w({1}), w({2}));
  CHECK(s1.size() == 2);
  CHECK(s1.at(w({1, 2})) == 1);
  CHECK(s1.at(w({2, 1})) == 1);

  const auto s2 = shuffle_product(w({1}), w({1}));
  CHECK(s2.size() == 1);
  CHECK(s2.at(w({1, 1})) == 2);

  const auto s3 = shuffle_product(w({1, 2}), w({3}));
  CHECK(s3.size() == 3);
  CHECK(s3.at(w({1, 2, 3})) == 1);
  CHECK(s3.at(w({1, 3, 2})) == 1);
  CHECK(s3.at(w({3, 1, 2})) == 1);
}

TEST_CASE("shuffle symmetry and binomial total multiplicity") {
  const Word u({1, 2, 1});
  const Word v({2, 3});
  const auto uv = shuffle_product(u, v);
  const auto vu = shuffle_product(v, u);
  CHECK(uv == vu);
  long total = 0;
  for (const auto& [word, mult] : uv) {
    CHECK(word.length() == 5);
    total += mult;
  }
  CHECK(total == 10);  // binomial(5, 3)
}

TEST_CASE("is_group_like") {
  CHECK(is_group_like(GroupElement(TruncatedTensor::unit(2, 3))));

  auto t = TruncatedTensor::unit(2, 2);
  t.set_coeff(w({1}), 1.0);
  t.set_coeff(w({1, 1}), 1.0);  // should be 1/2
  CHECK_FALSE(is_group_like(GroupElement(t)));

  TruncatedTensor v(3, 4);
  v.set_coeff(w({1}), 0.3);
  v.set_coeff(w({2}), -1.1);
  v.set_coeff(w({3}), 0.4);
  CHECK(is_group_like(exp_trunc(v)));
}

TEST_CASE("homogeneous_norm") {
  CHECK(homogeneous_norm(GroupElement(TruncatedTensor::unit(2, 3))) == 0.0);

  const auto e1 = TruncatedTensor::basis(2, 2, w({1}));
  CHECK(homogeneous_norm(exp_trunc(e1)) == doctest::Approx(1.0).epsilon(1e-14));
  CHECK(homogeneous_norm(exp_trunc(scale(e1, 2.0))) ==
        doctest::Approx(2.0).epsilon(1e-14));

  std::mt19937_64 rng(6);
  for (int trial = 0; trial < 20; ++trial) {
    TruncatedTensor x(3, 3);
    const auto v = testutil::random_vec(rng, 3);
    for (int i = 1; i <= 3; ++i) x.set_coeff(w({i}), v[i - 1]);
    CHECK(homogeneous_norm(exp_trunc(x)) >= norm(v) - 1e-14);
  }
}

TEST_CASE("product_metric_dist values and metric axioms") {
  const GroupElement one1(TruncatedTensor::unit(1, 1));
  const auto ge1 = exp_trunc(TruncatedTensor::basis(1, 1, w({1})));
  CHECK(product_metric_dist(one1, ge1) == doctest::Approx(0.5).epsilon(1e-14));

  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    const auto a = random_group_element(rng, 2, 3);
    const auto b = random_group_element(rng, 2, 3);
    const auto c = random_group_element(rng, 2, 3);
    CHECK(product_metric_dist(a, a) == 0.0);
    CHECK(product_metric_dist(a, b) ==
          doctest::Approx(product_metric_dist(b, a)).epsilon(1e-14));
    CHECK(product_metric_dist(a, c) <=
          product_metric_dist(a, b) + product_metric_dist(b, c) + 1e-12);
    CHECK(product_metric_dist(a, b) <= 1.0);
    if (testutil::max_coeff_diff(a.tensor(), b.tensor()) > 1e-9)
      CHECK(product_metric_dist(a, b) > 0.0);
  }
  CHECK_THROWS_AS(
      product_metric_dist(GroupElement(TruncatedTensor::unit(2, 2)),
                          GroupElement(TruncatedTensor::unit(3, 2))),
      std::invalid_argument);
}

TEST_CASE("multiplication is associative") {
  std::mt19937_64 rng(8);
  for (int trial = 0; trial < 30; ++trial) {
    const auto a = testutil::random_tensor(rng, 3, 4);
    const auto b = testutil::random_tensor(rng, 3, 4);
    const auto c = testutil::random_tensor(rng, 3, 4);
    CHECK(testutil::max_coeff_diff(tensor_mul(tensor_mul(a, b), c),
                                   tensor_mul(a, tensor_mul(b, c))) < 1e-12);
  }
}

TEST_CASE("group element scalar slot must be 1") {
  auto t = TruncatedTensor::unit(2, 2);
  t.set_coeff(w({}), 1.5);
  CHECK_THROWS_AS(GroupElement{t}, std::invalid_argument);
}
