#pragma once

#include "norden/connection.hpp"

#include <map>
#include <string>
#include <utility>

namespace norden {

/// A Lie algebra with an invariant metric and an almost-complex structure
/// on the basis: the triple (G, J, g). J is stored as a matrix with
/// J X_j = J(i, j) X_i; entries are constant rationals.
class NordenManifold {
 public:
  NordenManifold(LieStructure algebra, Metric metric, Tensor j);

  int dim() const { return metric_.dim(); }
  const LieStructure& algebra() const { return algebra_; }
  const Metric& metric() const { return metric_; }
  const Tensor& J() const { return j_; }

  TangentVector apply_J(const TangentVector& v) const;
  TangentVector J_basis(int j) const;

 private:
  LieStructure algebra_;
  Metric metric_;
  Tensor j_;
};

/// Componentwise defects of the two structure identities J^2 = -id and
/// g(J.,J.) = -g(.,.). Both tensors vanish exactly when (J, g) is an
/// almost-complex structure with Norden metric.
struct NordenCheckReport {
  bool ok = false;
  Tensor j_square_defect;  // J^i_m J^m_j + delta^i_j
  Tensor metric_defect;    // g(J X_i, J X_j) + g(X_i, X_j)
};

NordenCheckReport check_norden(const NordenManifold& m);

/// The associated metric g~(X,Y) = g(X,JY); a Norden metric for the same J.
Tensor associated_metric(const NordenManifold& m);

/// (nabla_{X_i} J) X_j as a vector-valued rank-3 tensor D^a_{ij}, value
/// index last, with (nabla_X J)Y = nabla_X(JY) - J(nabla_X Y).
Tensor nabla_J(const NordenManifold& m, const Connection& conn);

/// F_{ijk} = g((nabla_{X_i} J) X_j, X_k).
Tensor F_tensor(const NordenManifold& m, const Connection& conn);

/// theta_k = g^{ij} F_{ijk}.
Tensor lie_form(const Tensor& f, const Tensor& g_inv);

/// Membership in the basic classes, with the defect tensor of every
/// condition that fails.
struct ClassificationFlags {
  bool w0 = false;
  bool w1 = false;
  bool w2 = false;
  bool w3 = false;
  bool theta_zero = false;
  std::map<std::string, Tensor> defects;

  std::string principal_class() const;
};

ClassificationFlags classify(const NordenManifold& m, const Tensor& f, const Tensor& theta);

/// N(X_i, X_j) = [X_i,X_j] + J[JX_i,X_j] + J[X_i,JX_j] - [JX_i,JX_j],
/// stored as N^k_{ij} with the value index last.
Tensor nijenhuis(const NordenManifold& m);

/// ||N|| = g^{ip} g^{jq} g(N(X_i,X_j), N(X_p,X_q)).
Polynomial norm_nijenhuis(const NordenManifold& m, const Tensor& n);

/// The square norm of nabla J computed two independent ways:
/// first g^{ij} g^{kl} g((nabla_{X_i}J)X_k, (nabla_{X_j}J)X_l), then
/// g^{ij} g^{kl} g^{pq} F_{ikp} F_{jlq}. The components must agree.
std::pair<Polynomial, Polynomial> norm_nabla_J(const NordenManifold& m, const Connection& conn,
                                               const Tensor& f);

/// Exact vanishing of the square norm. On a symbolic family the norm
/// polynomial itself is the defining condition of the isotropic cone.
bool is_isotropic_kahler(const Polynomial& nabla_j_norm);

}  // namespace norden
