#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "helpers.hpp"
#include "norden/curvature.hpp"
#include "norden/norden.hpp"
#include "norden/parser.hpp"

#include <random>

using namespace norden;

namespace {

Polynomial L(int k) { return Polynomial::parameter(k); }

TangentVector X(int i) { return TangentVector::basis(i, 4); }

struct FEntry {
  int i, j, k;
  const char* value;
};

// The 40 nonzero components of F for the invariant family. Entries (2,1,1)
// and (2,3,3) carry full weight -l2: the cyclic-sum condition that defines
// the family forces F211 = -(F112 + F121) = -l2, and both norm computations
// depend on it.
constexpr FEntry kFTable[] = {
    {1, 2, 2, "-l1"},     {1, 4, 4, "-l1"},     {2, 1, 2, "1/2*l1"},  {2, 2, 1, "1/2*l1"},
    {2, 3, 4, "1/2*l1"},  {2, 4, 3, "1/2*l1"},  {4, 1, 4, "1/2*l1"},  {4, 2, 3, "-1/2*l1"},
    {4, 3, 2, "-1/2*l1"}, {4, 4, 1, "1/2*l1"},  {1, 1, 2, "1/2*l2"},  {1, 2, 1, "1/2*l2"},
    {1, 3, 4, "1/2*l2"},  {1, 4, 3, "1/2*l2"},  {2, 1, 1, "-l2"},     {2, 3, 3, "-l2"},
    {3, 1, 4, "-1/2*l2"}, {3, 2, 3, "1/2*l2"},  {3, 3, 2, "1/2*l2"},  {3, 4, 1, "-1/2*l2"},
    {2, 1, 4, "1/2*l3"},  {2, 2, 3, "-1/2*l3"}, {2, 3, 2, "-1/2*l3"}, {2, 4, 1, "1/2*l3"},
    {3, 2, 2, "l3"},      {3, 4, 4, "l3"},      {4, 1, 2, "-1/2*l3"}, {4, 2, 1, "-1/2*l3"},
    {4, 3, 4, "-1/2*l3"}, {4, 4, 3, "-1/2*l3"}, {1, 1, 4, "-1/2*l4"}, {1, 2, 3, "1/2*l4"},
    {1, 3, 2, "1/2*l4"},  {1, 4, 1, "-1/2*l4"}, {3, 1, 2, "-1/2*l4"}, {3, 2, 1, "-1/2*l4"},
    {3, 3, 4, "-1/2*l4"}, {3, 4, 3, "-1/2*l4"}, {4, 1, 1, "l4"},      {4, 3, 3, "l4"},
};

}  // namespace

TEST_CASE("the paper structure passes the Norden check") {
  const auto report = check_norden(testutil::symbolic_family());
  CHECK(report.ok);
  CHECK(report.j_square_defect.is_zero());
  CHECK(report.metric_defect.is_zero());
}

TEST_CASE("J = identity is not almost complex") {
  Tensor id(2, 4);
  for (int i = 1; i <= 4; ++i) id(i, i) = 1;
  const NordenManifold m(LieStructure::abelian(4), testutil::paper_metric(), id);
  const auto report = check_norden(m);
  CHECK(!report.ok);
  CHECK(!report.j_square_defect.is_zero());
  CHECK(report.j_square_defect(1, 1) == Polynomial(2));
}

TEST_CASE("the identity metric is not Norden for the paper J") {
  Tensor id(2, 4);
  for (int i = 1; i <= 4; ++i) id(i, i) = 1;
  const NordenManifold m(LieStructure::abelian(4), Metric(id), testutil::paper_J());
  const auto report = check_norden(m);
  CHECK(!report.ok);
  CHECK(report.j_square_defect.is_zero());
  CHECK(report.metric_defect(1, 1) == Polynomial(2));
}

TEST_CASE("associated metric of the paper structure") {
  const auto m = testutil::symbolic_family();
  const Tensor assoc = associated_metric(m);
  CHECK(assoc(1, 3) == Polynomial(-1));
  for (int i = 1; i <= 4; ++i) {
    CHECK(assoc(i, i).is_zero());
    for (int j = 1; j <= 4; ++j) CHECK(assoc(i, j) == assoc(j, i));
  }

  // (J, g~) is Norden again, and its own associated metric is -q.
  const NordenManifold twisted(m.algebra(), Metric(assoc), m.J());
  CHECK(check_norden(twisted).ok);
  const Tensor doubly = associated_metric(twisted);
  CHECK(doubly + m.metric().components() == Tensor(2, 4));
}

TEST_CASE("F components of the family match the corrected table") {
  const auto m = testutil::symbolic_family();
  const Connection conn = levi_civita(m.algebra(), m.metric());
  const Tensor f = F_tensor(m, conn);

  Tensor expected(3, 4);
  for (const auto& e : kFTable) expected(e.i, e.j, e.k) = parse_scalar(e.value);
  CHECK(f == expected);

  int nonzero = 0;
  f.for_each_index([&](std::span<const int> idx) {
    if (!f.at(idx).is_zero()) ++nonzero;
  });
  CHECK(nonzero == 40);
}

TEST_CASE("F of the abelian structure vanishes") {
  const NordenManifold m(LieStructure::abelian(4), testutil::paper_metric(), testutil::paper_J());
  const Connection conn = levi_civita(m.algebra(), m.metric());
  CHECK(F_tensor(m, conn).is_zero());
}

TEST_CASE("F symmetries hold identically for the general 12-parameter family") {
  const std::array<Polynomial, 12> lambda = {L(1), L(2), L(3),  L(4),  L(5),  L(6),
                                             L(7), L(8), L(9), L(10), L(11), L(12)};
  const NordenManifold m(build_w3_general(lambda), testutil::paper_metric(), testutil::paper_J());
  const Connection conn = levi_civita(m.algebra(), m.metric());
  const Tensor f = F_tensor(m, conn);

  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k) {
        CHECK(f(i, j, k) == f(i, k, j));
        // F(X, JY, JZ) expanded through the J matrix.
        Polynomial twisted;
        for (int a = 1; a <= 4; ++a)
          for (int b = 1; b <= 4; ++b) {
            if (m.J()(a, j).is_zero() || m.J()(b, k).is_zero()) continue;
            twisted += m.J()(a, j) * m.J()(b, k) * f(i, a, b);
          }
        CHECK(f(i, j, k) == twisted);
      }
}

TEST_CASE("cyclic sum of F equals the bracket expression for the general family") {
  const std::array<Polynomial, 12> lambda = {L(1), L(2), L(3),  L(4),  L(5),  L(6),
                                             L(7), L(8), L(9), L(10), L(11), L(12)};
  const NordenManifold m(build_w3_general(lambda), testutil::paper_metric(), testutil::paper_J());
  const Connection conn = levi_civita(m.algebra(), m.metric());
  const Tensor f = F_tensor(m, conn);

  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k) {
        const Polynomial cyclic = f(i, j, k) + f(j, k, i) + f(k, i, j);
        auto pair_term = [&](int a, int b, int c) {
          return m.metric().inner(
              m.algebra().bracket(X(a), m.J_basis(b)) + m.algebra().bracket(X(b), m.J_basis(a)),
              X(c));
        };
        const Polynomial brackets = pair_term(i, j, k) + pair_term(j, k, i) + pair_term(k, i, j);
        CHECK(cyclic == brackets);
        CHECK(cyclic.is_zero());
      }
}

TEST_CASE("the Lie form of the family vanishes") {
  const auto m = testutil::symbolic_family();
  const Connection conn = levi_civita(m.algebra(), m.metric());
  const Tensor f = F_tensor(m, conn);
  CHECK(lie_form(f, m.metric().inverse_components()).is_zero());
  CHECK(lie_form(Tensor(3, 4), m.metric().inverse_components()).is_zero());
}

TEST_CASE("the Lie form commutes with parameter evaluation") {
  std::array<Polynomial, 12> symbolic{};
  for (int k = 0; k < 12; ++k) symbolic[k] = L(k + 1);
  const NordenManifold m(build_w3_general(symbolic), testutil::paper_metric(),
                         testutil::paper_J());
  const Connection conn = levi_civita(m.algebra(), m.metric());
  const Tensor theta = lie_form(F_tensor(m, conn), m.metric().inverse_components());

  std::array<Polynomial, 12> numeric{};
  numeric[4] = 1;  // l5 = 1
  Assignment point;
  for (int k = 1; k <= 12; ++k) point.set(k, numeric[k - 1].constant_value());

  const NordenManifold mn(build_w3_general(numeric), testutil::paper_metric(),
                          testutil::paper_J());
  const Connection conn_n = levi_civita(mn.algebra(), mn.metric());
  const Tensor theta_n = lie_form(F_tensor(mn, conn_n), mn.metric().inverse_components());

  for (int k = 1; k <= 4; ++k) CHECK(theta(k).evaluate(point) == theta_n(k).constant_value());
}

TEST_CASE("classification of the symbolic family is proper W3") {
  const auto m = testutil::symbolic_family();
  const Connection conn = levi_civita(m.algebra(), m.metric());
  const Tensor f = F_tensor(m, conn);
  const Tensor theta = lie_form(f, m.metric().inverse_components());
  const auto flags = classify(m, f, theta);
  CHECK(flags.w3);
  CHECK(flags.theta_zero);
  CHECK(!flags.w0);
  CHECK(!flags.w1);
  CHECK(!flags.w2);
  CHECK(flags.principal_class() == "W3");
  CHECK(flags.defects.contains("w1"));
  CHECK(flags.defects.contains("w2"));
}

TEST_CASE("classification of the abelian structure is W0") {
  const NordenManifold m(LieStructure::abelian(4), testutil::paper_metric(), testutil::paper_J());
  const Connection conn = levi_civita(m.algebra(), m.metric());
  const Tensor f = F_tensor(m, conn);
  const Tensor theta = lie_form(f, m.metric().inverse_components());
  const auto flags = classify(m, f, theta);
  CHECK(flags.w0);
  CHECK(flags.w1);
  CHECK(flags.w2);
  CHECK(flags.w3);
  CHECK(flags.theta_zero);
  CHECK(flags.principal_class() == "W0");
  CHECK(flags.defects.empty());
}

TEST_CASE("classification at the point (1,0,0,0)") {
  const auto m = testutil::family_at(1, 0, 0, 0);
  const Connection conn = levi_civita(m.algebra(), m.metric());
  const Tensor f = F_tensor(m, conn);
  const Tensor theta = lie_form(f, m.metric().inverse_components());
  const auto flags = classify(m, f, theta);
  CHECK(flags.w3);
  CHECK(!flags.w1);
  CHECK(!flags.w2);
  CHECK(!flags.w0);
}

TEST_CASE("Nijenhuis components of the family") {
  const auto m = testutil::symbolic_family();
  const Tensor n = nijenhuis(m);

  const TangentVector n12 = {2 * L(4), -2 * L(3), 2 * L(2), -2 * L(1)};
  const TangentVector n14 = {2 * L(2), -2 * L(1), -2 * L(4), 2 * L(3)};
  for (int k = 1; k <= 4; ++k) {
    CHECK(n(1, 2, k) == n12[k]);
    CHECK(n(3, 4, k) == -n12[k]);
    CHECK(n(1, 4, k) == n14[k]);
    CHECK(n(2, 3, k) == -n14[k]);
    CHECK(n(1, 3, k).is_zero());
    CHECK(n(2, 4, k).is_zero());
  }

  // Antisymmetry in the argument slots.
  for (int i = 1; i <= 4; ++i)
    for (int j = 1; j <= 4; ++j)
      for (int k = 1; k <= 4; ++k) CHECK(n(i, j, k) == -n(j, i, k));
}

TEST_CASE("Nijenhuis tensor of the abelian structure vanishes") {
  const NordenManifold m(LieStructure::abelian(4), testutil::paper_metric(), testutil::paper_J());
  CHECK(nijenhuis(m).is_zero());
}

TEST_CASE("square norm of the Nijenhuis tensor") {
  const auto m = testutil::symbolic_family();
  const Tensor n = nijenhuis(m);
  CHECK(norm_nijenhuis(m, n) == Polynomial(-32) * testutil::cone_polynomial());

  const NordenManifold abelian(LieStructure::abelian(4), testutil::paper_metric(),
                               testutil::paper_J());
  CHECK(norm_nijenhuis(abelian, nijenhuis(abelian)).is_zero());

  const auto on_cone = testutil::family_at(1, 1, 1, 1);
  CHECK(norm_nijenhuis(on_cone, nijenhuis(on_cone)).is_zero());
}

TEST_CASE("square norm of nabla J both ways") {
  const auto m = testutil::symbolic_family();
  const Connection conn = levi_civita(m.algebra(), m.metric());
  const Tensor f = F_tensor(m, conn);
  const auto [direct, via_f] = norm_nabla_J(m, conn, f);
  CHECK(direct == via_f);
  CHECK(direct == Polynomial(4) * testutil::cone_polynomial());

  const NordenManifold abelian(LieStructure::abelian(4), testutil::paper_metric(),
                               testutil::paper_J());
  const Connection conn0 = levi_civita(abelian.algebra(), abelian.metric());
  const auto [d0, f0] = norm_nabla_J(abelian, conn0, F_tensor(abelian, conn0));
  CHECK(d0.is_zero());
  CHECK(f0.is_zero());

  const auto on_cone = testutil::family_at(3, 4, 5, 0);
  const Connection conn_c = levi_civita(on_cone.algebra(), on_cone.metric());
  const auto [dc, fc] = norm_nabla_J(on_cone, conn_c, F_tensor(on_cone, conn_c));
  CHECK(dc.is_zero());
  CHECK(fc.is_zero());
}

TEST_CASE("both norms agree identically and are proportional") {
  const auto m = testutil::symbolic_family();
  const Connection conn = levi_civita(m.algebra(), m.metric());
  const Tensor f = F_tensor(m, conn);
  const auto [nabla_norm, nabla_norm2] = norm_nabla_J(m, conn, f);
  const Polynomial nij_norm = norm_nijenhuis(m, nijenhuis(m));
  CHECK(nabla_norm == nabla_norm2);
  CHECK(nij_norm == Polynomial(-8) * nabla_norm);
}

TEST_CASE("isotropic flag") {
  const auto on_cone = testutil::family_at(1, 1, 1, 1);
  const Connection c1 = levi_civita(on_cone.algebra(), on_cone.metric());
  CHECK(is_isotropic_kahler(norm_nabla_J(on_cone, c1, F_tensor(on_cone, c1)).first));

  const auto off_cone = testutil::family_at(1, 0, 0, 0);
  const Connection c2 = levi_civita(off_cone.algebra(), off_cone.metric());
  const auto norms = norm_nabla_J(off_cone, c2, F_tensor(off_cone, c2));
  CHECK(!is_isotropic_kahler(norms.first));
  CHECK(norms.first == Polynomial(4));

  CHECK(is_isotropic_kahler(Polynomial{}));
}
