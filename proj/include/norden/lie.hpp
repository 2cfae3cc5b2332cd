#pragma once

#include "norden/tensor.hpp"

#include <array>

namespace norden {

/// Structure constants of a bracket on the invariant basis:
/// [X_i, X_j] = C^k_{ij} X_k, stored with the value index last.
/// Antisymmetry in (i,j) is enforced at construction.
class LieStructure {
 public:
  LieStructure(int dim, Tensor structure_constants);

  static LieStructure abelian(int dim);

  int dim() const { return constants_.dim(); }
  const Tensor& constants() const { return constants_; }
  const Polynomial& C(int i, int j, int k) const { return constants_(i, j, k); }

  /// Bilinear antisymmetric extension of the structure constants.
  TangentVector bracket(const TangentVector& x, const TangentVector& y) const;
  TangentVector bracket_basis(int i, int j) const;

 private:
  Tensor constants_;
};

/// Left side of the Jacobi identity as components indexed (i, j, s, l):
/// sum_k [ C^k_{ij} C^l_{ks} + C^k_{js} C^l_{ki} + C^k_{si} C^l_{kj} ].
/// The structure is a Lie algebra exactly when this vanishes.
Tensor jacobi_defect(const LieStructure& L);

/// D_{ijk} = g([X_i,X_j],X_k) + g([X_i,X_k],X_j); zero exactly when the
/// metric is invariant (the Killing condition).
Tensor invariance_defect(const LieStructure& L, const Metric& g);

/// The 12-parameter bracket family on dim 4. Jacobi is not enforced here;
/// callers check jacobi_defect.
LieStructure build_w3_general(const std::array<Polynomial, 12>& lambda);

/// The 4-parameter invariant-metric subfamily on dim 4.
LieStructure build_w3_killing(const std::array<Polynomial, 4>& lambda);

}  // namespace norden
