#pragma once

#include "norden/lie.hpp"

namespace norden {

/// Connection coefficients on the invariant basis, nabla_{X_i} X_j =
/// Gamma^k_{ij} X_k, value index last.
class Connection {
 public:
  Connection() = default;
  explicit Connection(Tensor gamma);

  int dim() const { return gamma_.dim(); }
  const Tensor& coefficients() const { return gamma_; }
  const Polynomial& Gamma(int i, int j, int k) const { return gamma_(i, j, k); }

  /// nabla_{X_i} y for a vector with coordinates constant along the group.
  TangentVector derive_basis(int i, const TangentVector& y) const;

 private:
  Tensor gamma_;
};

/// Solves the Koszul formula for a metric constant on the invariant basis:
/// 2 g(nabla_{X_i} X_j, X_k) = g([X_i,X_j],X_k) + g([X_k,X_i],X_j)
///                           + g([X_k,X_j],X_i).
/// The result is torsion-free and metric-compatible; when the metric is
/// invariant it reduces to Gamma^k_{ij} = C^k_{ij} / 2.
Connection levi_civita(const LieStructure& L, const Metric& g);

}  // namespace norden
