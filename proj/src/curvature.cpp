#include "norden/curvature.hpp"

#include <array>
#include <stdexcept>

namespace norden {

Tensor curvature_via_double_bracket(const LieStructure& L, const Metric& g) {
  const int n = L.dim();
  Tensor r(4, n);
  r.for_each_index([&](std::span<const int> idx) {
    const int i = idx[0], j = idx[1], k = idx[2], s = idx[3];
    const TangentVector inner =
        L.bracket(L.bracket_basis(i, j), TangentVector::basis(k, n));
    r.at(idx) = Rational(-1, 4) * g.inner(inner, TangentVector::basis(s, n));
  });
  return r;
}

Tensor curvature(const Connection& conn, const LieStructure& L, const Metric& g) {
  if (conn.dim() != L.dim() || L.dim() != g.dim())
    throw std::invalid_argument("dimension mismatch");
  const int n = L.dim();

  Tensor r(4, n);
  r.for_each_index([&](std::span<const int> idx) {
    const int i = idx[0], j = idx[1], k = idx[2], s = idx[3];
    Polynomial lowered;
    for (int a = 1; a <= n; ++a) {
      if (g.g(a, s).is_zero()) continue;
      Polynomial upper_a;  // coordinate a of R(X_i, X_j) X_k
      for (int m = 1; m <= n; ++m) {
        upper_a += conn.Gamma(j, k, m) * conn.Gamma(i, m, a);
        upper_a -= conn.Gamma(i, k, m) * conn.Gamma(j, m, a);
        upper_a -= L.C(i, j, m) * conn.Gamma(m, k, a);
      }
      lowered += upper_a * g.g(a, s);
    }
    r.at(idx) = lowered;
  });

  if (jacobi_defect(L).is_zero() && invariance_defect(L, g).is_zero()) {
    if (r != curvature_via_double_bracket(L, g))
      throw std::logic_error("curvature definition and double-bracket shortcut disagree");
  }
  return r;
}

Polynomial eval4(const Tensor& r, const TangentVector& x, const TangentVector& y,
                 const TangentVector& z, const TangentVector& u) {
  if (r.rank() != 4) throw std::invalid_argument("eval4 needs a rank-4 tensor");
  const int n = r.dim();
  if (x.dim() != n || y.dim() != n || z.dim() != n || u.dim() != n)
    throw std::invalid_argument("vector dimension mismatch");
  Polynomial total;
  for (int i = 1; i <= n; ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 1; j <= n; ++j) {
      if (y[j].is_zero()) continue;
      for (int k = 1; k <= n; ++k) {
        if (z[k].is_zero()) continue;
        for (int s = 1; s <= n; ++s) {
          if (u[s].is_zero() || r(i, j, k, s).is_zero()) continue;
          total += x[i] * y[j] * z[k] * u[s] * r(i, j, k, s);
        }
      }
    }
  }
  return total;
}

std::pair<Tensor, Polynomial> ricci_and_scalar(const Tensor& r, const Tensor& g_inv) {
  if (r.rank() != 4 || g_inv.rank() != 2 || r.dim() != g_inv.dim())
    throw std::invalid_argument("ricci contraction shape mismatch");
  const int n = r.dim();
  Tensor rho(2, n);
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      Polynomial sum;
      for (int i = 1; i <= n; ++i)
        for (int j = 1; j <= n; ++j) {
          if (g_inv(i, j).is_zero()) continue;
          sum += g_inv(i, j) * r(i, a, b, j);
        }
      rho(a, b) = sum;
    }
  Polynomial tau;
  for (int a = 1; a <= n; ++a)
    for (int b = 1; b <= n; ++b) {
      if (g_inv(a, b).is_zero()) continue;
      tau += g_inv(a, b) * rho(a, b);
    }
  return {std::move(rho), std::move(tau)};
}

Tensor weyl(const Tensor& r, const Tensor& rho, const Polynomial& tau, const Metric& g,
            int half_dim) {
  if (half_dim < 2) throw std::invalid_argument("the Weyl tensor needs dimension >= 4");
  if (2 * half_dim != g.dim()) throw std::invalid_argument("half dimension mismatch");
  const Rational outer(1, 2 * half_dim - 2);
  const Rational inner(1, 2 * half_dim - 1);
  const Tensor psi = psi1(rho, g);
  const Tensor pi = pi1_tensor(g);
  Tensor w = r;
  w.for_each_index([&](std::span<const int> idx) {
    w.at(idx) -= Polynomial(outer) * (psi.at(idx) - Polynomial(inner) * tau * pi.at(idx));
  });
  return w;
}

std::pair<Polynomial, Polynomial> sectional_curvature(const Tensor& r, const Metric& g,
                                                      const TangentPlane& plane) {
  const Polynomial denominator = pi1(plane.x, plane.y, plane.y, plane.x, g);
  if (denominator.is_zero()) throw std::domain_error("degenerate 2-plane");
  return {eval4(r, plane.x, plane.y, plane.y, plane.x), denominator};
}

std::string to_string(PlaneType type) {
  switch (type) {
    case PlaneType::holomorphic: return "holomorphic";
    case PlaneType::totally_real: return "totally_real";
    case PlaneType::neither: return "neither";
  }
  return "neither";
}

PlaneType classify_plane(const TangentPlane& plane, const Tensor& j, const Metric& g) {
  const int n = g.dim();
  if (plane.x.dim() != n || plane.y.dim() != n)
    throw std::invalid_argument("vector dimension mismatch");
  if (!plane.x.is_constant() || !plane.y.is_constant())
    throw std::invalid_argument("plane classification needs constant coordinates");

  auto apply = [&](const TangentVector& v) {
    TangentVector out(n);
    for (int col = 1; col <= n; ++col) {
      if (v[col].is_zero()) continue;
      for (int row = 1; row <= n; ++row) out[row] += j(row, col) * v[col];
    }
    return out;
  };
  const TangentVector jx = apply(plane.x);
  const TangentVector jy = apply(plane.y);

  const std::array<TangentVector, 2> base{plane.x, plane.y};
  if (span_rank(base) < 2) throw std::domain_error("degenerate 2-plane: vectors are dependent");

  const std::array<TangentVector, 4> extended{plane.x, plane.y, jx, jy};
  if (span_rank(extended) == 2) return PlaneType::holomorphic;

  const bool orthogonal = g.inner(plane.x, jx).is_zero() && g.inner(plane.x, jy).is_zero() &&
                          g.inner(plane.y, jx).is_zero() && g.inner(plane.y, jy).is_zero();
  return orthogonal ? PlaneType::totally_real : PlaneType::neither;
}

Polynomial holo_bisectional(const Tensor& r, const Metric& g, const Tensor& j,
                            const TangentVector& x, const TangentVector& y) {
  const int n = g.dim();
  auto apply = [&](const TangentVector& v) {
    TangentVector out(n);
    for (int col = 1; col <= n; ++col) {
      if (v[col].is_zero()) continue;
      for (int row = 1; row <= n; ++row) out[row] += j(row, col) * v[col];
    }
    return out;
  };
  const TangentVector jx = apply(x);
  const TangentVector jy = apply(y);

  const Polynomial rad_x = pi1(x, jx, x, jx, g);
  const Polynomial rad_y = pi1(y, jy, y, jy, g);
  if (!rad_x.is_constant() || !rad_y.is_constant())
    throw std::invalid_argument("bisectional curvature needs constant radicands");
  if (rad_x.is_zero() || rad_y.is_zero())
    throw std::domain_error("totally isotropic direction");

  const auto root = rational_sqrt(rad_x.constant_value() * rad_y.constant_value());
  if (!root) throw std::invalid_argument("irrational square root in bisectional curvature");
  return -eval4(r, x, jx, y, jy) * Polynomial(Rational(1) / *root);
}

Tensor covariant_derivative_R(const Tensor& r, const Connection& conn) {
  if (r.rank() != 4 || r.dim() != conn.dim())
    throw std::invalid_argument("covariant derivative shape mismatch");
  const int n = r.dim();
  Tensor out(5, n);
  out.for_each_index([&](std::span<const int> idx) {
    const int l = idx[0], i = idx[1], j = idx[2], k = idx[3], s = idx[4];
    Polynomial sum;
    for (int m = 1; m <= n; ++m) {
      sum -= conn.Gamma(l, i, m) * r(m, j, k, s);
      sum -= conn.Gamma(l, j, m) * r(i, m, k, s);
      sum -= conn.Gamma(l, k, m) * r(i, j, m, s);
      sum -= conn.Gamma(l, s, m) * r(i, j, k, m);
    }
    out.at(idx) = sum;
  });
  return out;
}

Tensor w3_identity_defect(const NordenManifold& m, const Tensor& r, const Connection& conn) {
  const int n = m.dim();
  const Tensor d = nabla_J(m, conn);
  auto dj = [&](int i, int j) {
    TangentVector out(n);
    for (int a = 1; a <= n; ++a) out[a] = d(i, j, a);
    return out;
  };

  Tensor defect(4, n);
  defect.for_each_index([&](std::span<const int> idx) {
    const int i = idx[0], j = idx[1], k = idx[2], s = idx[3];
    const TangentVector x = TangentVector::basis(i, n);
    const TangentVector y = TangentVector::basis(j, n);
    const TangentVector z = TangentVector::basis(k, n);
    const TangentVector u = TangentVector::basis(s, n);
    const TangentVector jx = m.J_basis(i);
    const TangentVector jy = m.J_basis(j);
    const TangentVector jz = m.J_basis(k);
    const TangentVector ju = m.J_basis(s);

    Polynomial lhs;
    lhs += eval4(r, x, jz, y, ju) + eval4(r, x, jy, u, jz) + eval4(r, x, jy, z, ju);
    lhs += eval4(r, x, jz, u, jy) + eval4(r, x, ju, y, jz) + eval4(r, x, ju, z, jy);
    lhs += eval4(r, jx, z, jy, u) + eval4(r, jx, y, ju, z) + eval4(r, jx, y, jz, u);
    lhs += eval4(r, jx, z, ju, y) + eval4(r, jx, u, jy, z) + eval4(r, jx, u, jz, y);

    auto pair_term = [&](int a, int b, int c, int e) {
      return m.metric().inner(dj(a, b) + dj(b, a), dj(c, e) + dj(e, c));
    };
    const Polynomial rhs =
        -(pair_term(i, j, k, s) + pair_term(j, k, i, s) + pair_term(k, i, j, s));

    defect.at(idx) = lhs - rhs;
  });
  return defect;
}

}  // namespace norden
