#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "norden/tensor.hpp"

#include <random>

using namespace norden;

namespace {

Tensor diagonal(std::initializer_list<Rational> values) {
  const int n = static_cast<int>(values.size());
  Tensor g(2, n);
  int i = 1;
  for (const auto& v : values) {
    g(i, i) = Polynomial(v);
    ++i;
  }
  return g;
}

TangentVector random_vector(std::mt19937_64& rng, int dim = 4) {
  std::uniform_int_distribution<int> num(-5, 5);
  std::uniform_int_distribution<int> den(1, 3);
  TangentVector v(dim);
  for (int i = 1; i <= dim; ++i) v[i] = Polynomial(Rational(num(rng), den(rng)));
  return v;
}

Tensor random_symmetric(std::mt19937_64& rng, int dim = 4) {
  std::uniform_int_distribution<int> num(-5, 5);
  Tensor t(2, dim);
  for (int i = 1; i <= dim; ++i)
    for (int j = i; j <= dim; ++j) {
      t(i, j) = Polynomial(num(rng));
      t(j, i) = t(i, j);
    }
  return t;
}

constexpr std::pair<int, int> kPairs2[] = {{1, 1}, {2, 2}};
constexpr std::pair<int, int> kPairs3[] = {{1, 1}, {2, 2}, {3, 3}};

}  // namespace

TEST_CASE("metric inversion on fixed matrices") {
  const Tensor paper = diagonal({1, 1, -1, -1});
  CHECK(metric_inverse(paper) == paper);

  const Tensor id = diagonal({1, 1, 1, 1});
  CHECK(metric_inverse(id) == id);

  CHECK(metric_inverse(diagonal({2, 1, -1, -1})) == diagonal({Rational(1, 2), 1, -1, -1}));

  // Off-diagonal case: [[0,-1],[-1,0]] is its own inverse.
  Tensor swap(2, 2);
  swap(1, 2) = -1;
  swap(2, 1) = -1;
  CHECK(metric_inverse(swap) == swap);
}

TEST_CASE("metric inversion rejects bad input") {
  CHECK_THROWS_AS(metric_inverse(diagonal({1, 1, 0, 1})), std::domain_error);
  Tensor dependent(2, 2);
  dependent(1, 1) = Polynomial::parameter(1);
  dependent(2, 2) = 1;
  CHECK_THROWS_AS(metric_inverse(dependent), std::invalid_argument);
  Tensor asym(2, 2);
  asym(1, 2) = 1;
  CHECK_THROWS_AS(metric_inverse(asym), std::invalid_argument);
}

TEST_CASE("metric inversion is an involution") {
  const Tensor paper = diagonal({1, 1, -1, -1});
  CHECK(metric_inverse(metric_inverse(paper)) == paper);
  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 25; ++trial) {
    Tensor g = random_symmetric(rng);
    bool singular = false;
    try {
      const Tensor inv = metric_inverse(g);
      CHECK(metric_inverse(inv) == g);
    } catch (const std::domain_error&) {
      singular = true;
    }
    (void)singular;
  }
}

TEST_CASE("pi1 on basis planes of the paper metric") {
  const Metric g = testutil::paper_metric();
  auto X = [](int i) { return TangentVector::basis(i, 4); };
  CHECK(pi1(X(1), X(2), X(2), X(1), g) == Polynomial(1));
  CHECK(pi1(X(1), X(4), X(4), X(1), g) == Polynomial(-1));
  CHECK(pi1(X(3), X(4), X(4), X(3), g) == Polynomial(1));
}

TEST_CASE("pi1 antisymmetries on random vectors") {
  const Metric g = testutil::paper_metric();
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 40; ++trial) {
    const TangentVector x = random_vector(rng), y = random_vector(rng), z = random_vector(rng),
                        u = random_vector(rng);
    CHECK(pi1(x, y, z, u, g) == -pi1(y, x, z, u, g));
    CHECK(pi1(x, y, z, u, g) == -pi1(x, y, u, z, g));
    CHECK(pi1(x, x, x, x, g).is_zero());
  }
}

TEST_CASE("psi1 of the metric is twice pi1") {
  const Metric g = testutil::paper_metric();
  CHECK(psi1(g.components(), g) == pi1_tensor(g) + pi1_tensor(g));
}

TEST_CASE("psi1 of zero vanishes and psi1 is linear") {
  const Metric g = testutil::paper_metric();
  CHECK(psi1(Tensor(2, 4), g).is_zero());

  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 20; ++trial) {
    const Tensor r1 = random_symmetric(rng);
    const Tensor r2 = random_symmetric(rng);
    std::uniform_int_distribution<int> num(-4, 4);
    const Rational a(num(rng), 1), b(num(rng), 3);
    const Tensor combined = r1.scaled(a) + r2.scaled(b);
    CHECK(psi1(combined, g) == psi1(r1, g).scaled(a) + psi1(r2, g).scaled(b));
  }
}

TEST_CASE("psi1 component against the hand expansion") {
  const Metric g = testutil::paper_metric();
  std::mt19937_64 rng(23);
  const Tensor rho = random_symmetric(rng);
  CHECK(psi1(rho, g)(1, 2, 2, 1) == rho(1, 1) + rho(2, 2));
}

TEST_CASE("full contraction traces the metric against its inverse") {
  const Metric g = testutil::paper_metric();
  const Polynomial trace =
      full_contract(g.components(), g.components(), g.inverse_components(), kPairs2);
  CHECK(trace == Polynomial(4));
}

TEST_CASE("full contraction of zero vanishes") {
  const Metric g = testutil::paper_metric();
  CHECK(full_contract(Tensor(3, 4), Tensor(3, 4), g.inverse_components(), kPairs3).is_zero());
}

TEST_CASE("full contraction reproduces the nabla-J norm from F") {
  const auto m = testutil::symbolic_family();
  const Connection conn = levi_civita(m.algebra(), m.metric());
  const Tensor f = F_tensor(m, conn);
  const Polynomial norm =
      full_contract(f, f, m.metric().inverse_components(), kPairs3);
  CHECK(norm == Polynomial(4) * testutil::cone_polynomial());
}

TEST_CASE("full contraction is bilinear") {
  const Metric g = testutil::paper_metric();
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 15; ++trial) {
    const Tensor a1 = random_symmetric(rng), a2 = random_symmetric(rng),
                 b = random_symmetric(rng);
    std::uniform_int_distribution<int> num(-4, 4);
    const Rational c1(num(rng), 1), c2(num(rng), 2);
    const Polynomial lhs =
        full_contract(a1.scaled(c1) + a2.scaled(c2), b, g.inverse_components(), kPairs2);
    const Polynomial rhs =
        Polynomial(c1) * full_contract(a1, b, g.inverse_components(), kPairs2) +
        Polynomial(c2) * full_contract(a2, b, g.inverse_components(), kPairs2);
    CHECK(lhs == rhs);
  }
}

TEST_CASE("full contraction validates shapes") {
  const Metric g = testutil::paper_metric();
  CHECK_THROWS_AS(full_contract(Tensor(3, 4), Tensor(2, 4), g.inverse_components(), kPairs3),
                  std::invalid_argument);
  constexpr std::pair<int, int> bad[] = {{1, 1}, {2, 2}, {2, 3}};
  CHECK_THROWS_AS(full_contract(Tensor(3, 4), Tensor(3, 4), g.inverse_components(), bad),
                  std::invalid_argument);
}

TEST_CASE("tensor indexing is one-based and bounds-checked") {
  Tensor t(2, 4);
  t(1, 1) = 7;
  CHECK(t(1, 1) == Polynomial(7));
  CHECK_THROWS_AS(t(0, 1), std::out_of_range);
  CHECK_THROWS_AS(t(1, 5), std::out_of_range);
  const std::array<int, 3> wrong{1, 1, 1};
  CHECK_THROWS_AS(t.at(wrong), std::invalid_argument);
}
