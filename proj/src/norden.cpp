#include "norden/norden.hpp"

#include <stdexcept>

namespace norden {

NordenManifold::NordenManifold(LieStructure algebra, Metric metric, Tensor j)
    : algebra_(std::move(algebra)), metric_(std::move(metric)), j_(std::move(j)) {
  if (j_.rank() != 2 || j_.dim() != metric_.dim() || algebra_.dim() != metric_.dim())
    throw std::invalid_argument("manifold pieces must share one dimension");
  j_.for_each_index([&](std::span<const int> idx) {
    if (!j_.at(idx).is_constant())
      throw std::invalid_argument("J must have constant rational entries");
  });
}

TangentVector NordenManifold::apply_J(const TangentVector& v) const {
  if (v.dim() != dim()) throw std::invalid_argument("vector dimension mismatch");
  TangentVector out(dim());
  for (int j = 1; j <= dim(); ++j) {
    if (v[j].is_zero()) continue;
    for (int i = 1; i <= dim(); ++i) {
      const Polynomial& entry = j_(i, j);
      if (!entry.is_zero()) out[i] += entry * v[j];
    }
  }
  return out;
}

TangentVector NordenManifold::J_basis(int j) const {
  TangentVector out(dim());
  for (int i = 1; i <= dim(); ++i) out[i] = j_(i, j);
  return out;
}

NordenCheckReport check_norden(const NordenManifold& m) {
  const int n = m.dim();
  NordenCheckReport report;
  report.j_square_defect = Tensor(2, n);
  report.metric_defect = Tensor(2, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Polynomial square;
      for (int k = 1; k <= n; ++k) square += m.J()(i, k) * m.J()(k, j);
      if (i == j) square += Polynomial(1);
      report.j_square_defect(i, j) = square;

      Polynomial paired = m.metric().inner(m.J_basis(i), m.J_basis(j)) + m.metric().g(i, j);
      report.metric_defect(i, j) = paired;
    }
  report.ok = report.j_square_defect.is_zero() && report.metric_defect.is_zero();
  return report;
}

Tensor associated_metric(const NordenManifold& m) {
  const int n = m.dim();
  Tensor assoc(2, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      Polynomial sum;
      for (int a = 1; a <= n; ++a) sum += m.metric().g(i, a) * m.J()(a, j);
      assoc(i, j) = sum;
    }
  return assoc;
}

Tensor nabla_J(const NordenManifold& m, const Connection& conn) {
  if (conn.dim() != m.dim()) throw std::invalid_argument("dimension mismatch");
  const int n = m.dim();
  Tensor d(3, n);
  d.for_each_index([&](std::span<const int> idx) {
    const int i = idx[0], j = idx[1], a = idx[2];
    Polynomial sum;
    for (int s = 1; s <= n; ++s) {
      sum += conn.Gamma(i, s, a) * m.J()(s, j);
      sum -= m.J()(a, s) * conn.Gamma(i, j, s);
    }
    d.at(idx) = sum;
  });
  return d;
}

Tensor F_tensor(const NordenManifold& m, const Connection& conn) {
  const Tensor d = nabla_J(m, conn);
  const int n = m.dim();
  Tensor f(3, n);
  f.for_each_index([&](std::span<const int> idx) {
    const int i = idx[0], j = idx[1], k = idx[2];
    Polynomial sum;
    for (int a = 1; a <= n; ++a) sum += d(i, j, a) * m.metric().g(a, k);
    f.at(idx) = sum;
  });
  return f;
}

Tensor lie_form(const Tensor& f, const Tensor& g_inv) {
  if (f.rank() != 3 || g_inv.rank() != 2 || f.dim() != g_inv.dim())
    throw std::invalid_argument("lie_form needs a rank-3 tensor and a matching inverse metric");
  const int n = f.dim();
  Tensor theta(1, n);
  for (int k = 1; k <= n; ++k) {
    Polynomial sum;
    for (int i = 1; i <= n; ++i)
      for (int j = 1; j <= n; ++j) sum += g_inv(i, j) * f(i, j, k);
    theta(k) = sum;
  }
  return theta;
}

std::string ClassificationFlags::principal_class() const {
  if (w0) return "W0";
  std::string out;
  if (w1) out += out.empty() ? "W1" : "+W1";
  if (w2) out += out.empty() ? "W2" : "+W2";
  if (w3) out += out.empty() ? "W3" : "+W3";
  return out.empty() ? "none" : out;
}

ClassificationFlags classify(const NordenManifold& m, const Tensor& f, const Tensor& theta) {
  const int n = m.dim();
  ClassificationFlags flags;
  flags.w0 = f.is_zero();
  flags.theta_zero = theta.is_zero();
  if (!flags.theta_zero) flags.defects.emplace("theta", theta);
  if (!flags.w0) flags.defects.emplace("w0", f);

  const Tensor assoc = associated_metric(m);
  auto theta_J = [&](int k) {
    Polynomial sum;
    for (int a = 1; a <= n; ++a) sum += m.J()(a, k) * theta(a);
    return sum;
  };

  // W1: F matches its closed form in g and theta, coefficient 1/(4n) = 1/(2 dim).
  const Rational w1_coeff(1, 2 * n);
  Tensor w1_defect(3, n);
  w1_defect.for_each_index([&](std::span<const int> idx) {
    const int i = idx[0], j = idx[1], k = idx[2];
    Polynomial closed = m.metric().g(i, j) * theta(k) + m.metric().g(i, k) * theta(j) +
                        assoc(i, j) * theta_J(k) + assoc(i, k) * theta_J(j);
    w1_defect.at(idx) = f(i, j, k) - w1_coeff * closed;
  });
  flags.w1 = w1_defect.is_zero();
  if (!flags.w1) flags.defects.emplace("w1", std::move(w1_defect));

  // W2: cyclic sum of F(x, y, Jz) vanishes and theta = 0.
  auto f_with_J_last = [&](int i, int j, int k) {
    Polynomial sum;
    for (int a = 1; a <= n; ++a) sum += m.J()(a, k) * f(i, j, a);
    return sum;
  };
  Tensor w2_defect(3, n);
  w2_defect.for_each_index([&](std::span<const int> idx) {
    const int i = idx[0], j = idx[1], k = idx[2];
    w2_defect.at(idx) = f_with_J_last(i, j, k) + f_with_J_last(j, k, i) + f_with_J_last(k, i, j);
  });
  flags.w2 = w2_defect.is_zero() && flags.theta_zero;
  if (!w2_defect.is_zero()) flags.defects.emplace("w2", std::move(w2_defect));

  // W3: cyclic sum of F vanishes.
  Tensor w3_defect(3, n);
  w3_defect.for_each_index([&](std::span<const int> idx) {
    const int i = idx[0], j = idx[1], k = idx[2];
    w3_defect.at(idx) = f(i, j, k) + f(j, k, i) + f(k, i, j);
  });
  flags.w3 = w3_defect.is_zero();
  if (!flags.w3) flags.defects.emplace("w3", std::move(w3_defect));

  return flags;
}

Tensor nijenhuis(const NordenManifold& m) {
  const int n = m.dim();
  Tensor nij(3, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      const TangentVector xi = TangentVector::basis(i, n);
      const TangentVector xj = TangentVector::basis(j, n);
      const TangentVector jxi = m.J_basis(i);
      const TangentVector jxj = m.J_basis(j);
      const TangentVector value = m.algebra().bracket(xi, xj) +
                                  m.apply_J(m.algebra().bracket(jxi, xj)) +
                                  m.apply_J(m.algebra().bracket(xi, jxj)) -
                                  m.algebra().bracket(jxi, jxj);
      for (int k = 1; k <= n; ++k) nij(i, j, k) = value[k];
    }
  return nij;
}

namespace {

/// Lowers the value index of a vector-valued rank-3 tensor with the metric.
Tensor lower_value_index(const Tensor& t, const Metric& g) {
  const int n = t.dim();
  Tensor out(3, n);
  out.for_each_index([&](std::span<const int> idx) {
    const int i = idx[0], j = idx[1], a = idx[2];
    Polynomial sum;
    for (int b = 1; b <= n; ++b) sum += t(i, j, b) * g.g(b, a);
    out.at(idx) = sum;
  });
  return out;
}

constexpr std::pair<int, int> kRank3Pairs[] = {{1, 1}, {2, 2}, {3, 3}};

}  // namespace

Polynomial norm_nijenhuis(const NordenManifold& m, const Tensor& n) {
  const Tensor lowered = lower_value_index(n, m.metric());
  return full_contract(lowered, lowered, m.metric().inverse_components(), kRank3Pairs);
}

std::pair<Polynomial, Polynomial> norm_nabla_J(const NordenManifold& m, const Connection& conn,
                                               const Tensor& f) {
  const int n = m.dim();
  const Tensor d = nabla_J(m, conn);

  // Route one: straight from the definition with nabla J vectors.
  Polynomial direct;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (m.metric().ginv(i, j).is_zero()) continue;
      for (int k = 1; k <= n; ++k)
        for (int l = 1; l <= n; ++l) {
          if (m.metric().ginv(k, l).is_zero()) continue;
          TangentVector dik(n), djl(n);
          for (int a = 1; a <= n; ++a) {
            dik[a] = d(i, k, a);
            djl[a] = d(j, l, a);
          }
          direct += m.metric().ginv(i, j) * m.metric().ginv(k, l) * m.metric().inner(dik, djl);
        }
    }

  // Route two: the all-F contraction.
  const Polynomial via_f =
      full_contract(f, f, m.metric().inverse_components(), kRank3Pairs);
  return {direct, via_f};
}

bool is_isotropic_kahler(const Polynomial& nabla_j_norm) { return nabla_j_norm.is_zero(); }

}  // namespace norden
