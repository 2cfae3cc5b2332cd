#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "norden/lie.hpp"

#include <random>

using namespace norden;

namespace {

Polynomial L(int k) { return Polynomial::parameter(k); }

TangentVector X(int i) { return TangentVector::basis(i, 4); }

TangentVector combo(std::initializer_list<Polynomial> coords) { return TangentVector(coords); }

std::array<Polynomial, 12> lambda12_at(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> num(-4, 4);
  std::uniform_int_distribution<int> den(1, 3);
  std::array<Polynomial, 12> out;
  for (auto& p : out) p = Polynomial(Rational(num(rng), den(rng)));
  return out;
}

Tensor evaluate_tensor(const Tensor& t, const Assignment& point) {
  Tensor out(t.rank(), t.dim());
  t.for_each_index([&](std::span<const int> idx) {
    out.at(idx) = Polynomial(t.at(idx).evaluate(point));
  });
  return out;
}

}  // namespace

TEST_CASE("brackets of the invariant family match the table") {
  const LieStructure fam = build_w3_killing(testutil::symbolic_lambda4());
  CHECK(fam.bracket(X(1), X(3)) == combo({0, L(2), 0, L(4)}));
  CHECK(fam.bracket(X(2), X(1)) == combo({0, 0, -L(2), L(1)}));
  CHECK(fam.bracket(X(3), X(4)) == combo({-L(4), L(3), 0, 0}));
  CHECK(fam.bracket(X(2), X(4)) == combo({L(1), 0, L(3), 0}));
}

TEST_CASE("bracket is antisymmetric and bilinear") {
  const LieStructure fam = build_w3_killing(testutil::symbolic_lambda4());
  std::mt19937_64 rng(3);
  std::uniform_int_distribution<int> num(-5, 5);
  for (int trial = 0; trial < 30; ++trial) {
    TangentVector x(4), y(4);
    for (int i = 1; i <= 4; ++i) {
      x[i] = Polynomial(num(rng));
      y[i] = Polynomial(num(rng));
    }
    CHECK(fam.bracket(x, x).is_zero());
    CHECK(fam.bracket(x, y) == TangentVector(4) - fam.bracket(y, x));
    const Rational c(num(rng), 2);
    CHECK(fam.bracket(x.scaled(Polynomial(c)), y) == fam.bracket(x, y).scaled(Polynomial(c)));
  }
}

TEST_CASE("construction rejects non-antisymmetric constants") {
  Tensor c(3, 2);
  c(1, 2, 1) = 1;  // missing the (2,1,1) = -1 completion
  CHECK_THROWS_AS(LieStructure(2, c), std::invalid_argument);
}

TEST_CASE("jacobi defect vanishes for abelian and the invariant family") {
  CHECK(jacobi_defect(LieStructure::abelian(4)).is_zero());
  CHECK(jacobi_defect(build_w3_killing(testutil::symbolic_lambda4())).is_zero());
}

TEST_CASE("jacobi defect detects a non-Lie bracket") {
  // dim 3, [X1,X2] = X1 and [X1,X3] = X2: the (1,2,3) cyclic sum equals
  // [X1,X3] = X2, so the defect at (i,j,s,l) = (1,2,3,2) is 1.
  Tensor c(3, 3);
  c(1, 2, 1) = 1;
  c(2, 1, 1) = -1;
  c(1, 3, 2) = 1;
  c(3, 1, 2) = -1;
  const LieStructure l(3, c);
  const Tensor defect = jacobi_defect(l);
  CHECK(!defect.is_zero());
  CHECK(defect(1, 2, 3, 2) == Polynomial(1));
}

TEST_CASE("invariance defect vanishes for the family and abelian") {
  const Metric g = testutil::paper_metric();
  CHECK(invariance_defect(build_w3_killing(testutil::symbolic_lambda4()), g).is_zero());
  CHECK(invariance_defect(LieStructure::abelian(4), g).is_zero());
}

TEST_CASE("invariance defect flags the general family") {
  const Metric g = testutil::paper_metric();
  std::array<Polynomial, 12> lambda{};
  lambda[4] = 1;  // l5 = 1, all others zero
  const LieStructure l = build_w3_general(lambda);
  const Tensor defect = invariance_defect(l, g);
  CHECK(!defect.is_zero());
  CHECK(defect(2, 3, 1) == Polynomial(1));
}

TEST_CASE("general builder with all parameters zero is abelian") {
  std::array<Polynomial, 12> zero{};
  CHECK(build_w3_general(zero).constants().is_zero());
  std::array<Polynomial, 4> zero4{};
  CHECK(build_w3_killing(zero4).constants().is_zero());
}

TEST_CASE("general builder at l5 = 1 has exactly the two expected brackets") {
  std::array<Polynomial, 12> lambda{};
  lambda[4] = 1;
  const LieStructure l = build_w3_general(lambda);
  CHECK(l.bracket(X(2), X(3)) == X(1));
  CHECK(l.bracket(X(4), X(1)) == X(1));
  CHECK(l.bracket(X(1), X(3)).is_zero());
  CHECK(l.bracket(X(2), X(4)).is_zero());
  CHECK(l.bracket(X(3), X(4)).is_zero());
  CHECK(l.bracket(X(2), X(1)).is_zero());
}

TEST_CASE("the invariant-metric relations reduce the general family") {
  const auto l4 = testutil::symbolic_lambda4();
  const LieStructure reduced =
      build_w3_general(testutil::killing_embedding(l4[0], l4[1], l4[2], l4[3]));
  CHECK(reduced.constants() == build_w3_killing(l4).constants());
}

TEST_CASE("killing builder at (1,0,0,0) has the three expected brackets") {
  const LieStructure l = build_w3_killing({Polynomial(1), 0, 0, 0});
  CHECK(l.bracket(X(2), X(4)) == X(1));
  CHECK(l.bracket(X(4), X(1)) == X(2));
  CHECK(l.bracket(X(2), X(1)) == X(4));
  CHECK(l.bracket(X(1), X(3)).is_zero());
  CHECK(l.bracket(X(2), X(3)).is_zero());
  CHECK(l.bracket(X(3), X(4)).is_zero());
}

TEST_CASE("symbolic jacobi defect specializes to the numeric one") {
  std::mt19937_64 rng(2024);
  const std::array<Polynomial, 12> symbolic = {
      L(1), L(2), L(3), L(4), L(5), L(6), L(7), L(8), L(9), L(10), L(11), L(12)};
  const Tensor symbolic_defect = jacobi_defect(build_w3_general(symbolic));
  CHECK(!symbolic_defect.is_zero());

  for (int trial = 0; trial < 10; ++trial) {
    const auto numeric_lambda = lambda12_at(rng);
    Assignment point;
    for (int k = 1; k <= 12; ++k) point.set(k, numeric_lambda[k - 1].constant_value());
    const Tensor numeric_defect = jacobi_defect(build_w3_general(numeric_lambda));
    CHECK(evaluate_tensor(symbolic_defect, point) == numeric_defect);
  }
}
