#pragma once

#include "norden/norden.hpp"

namespace norden {

/// R(X,Y)Z = nabla_X nabla_Y Z - nabla_Y nabla_X Z - nabla_{[X,Y]} Z,
/// lowered to (0,4) components R_{ijks} = g(R(X_i,X_j)X_k, X_s).
/// When the structure satisfies Jacobi and the metric is invariant, the
/// double-bracket shortcut R_{ijks} = -g([[X_i,X_j],X_k],X_s)/4 is computed
/// as well and must agree; a mismatch throws std::logic_error.
Tensor curvature(const Connection& conn, const LieStructure& L, const Metric& g);

/// The invariant-metric shortcut alone.
Tensor curvature_via_double_bracket(const LieStructure& L, const Metric& g);

/// Multilinear evaluation of a rank-4 tensor on four vectors.
Polynomial eval4(const Tensor& r, const TangentVector& x, const TangentVector& y,
                 const TangentVector& z, const TangentVector& u);

/// rho_{ab} = g^{ij} R_{i a b j} and tau = g^{ab} rho_{ab}.
std::pair<Tensor, Polynomial> ricci_and_scalar(const Tensor& r, const Tensor& g_inv);

/// Weyl tensor of a 2n-dimensional metric (n >= 2):
/// W = R - ( psi_1(rho) - tau/(2n-1) * pi_1 ) / (2n-2).
/// Vanishes exactly on conformally flat metrics; annihilates R = c * pi_1.
Tensor weyl(const Tensor& r, const Tensor& rho, const Polynomial& tau, const Metric& g,
            int half_dim);

/// k(x,y) = R(x,y,y,x) / pi_1(x,y,y,x), returned unreduced as
/// (numerator, denominator). Throws std::domain_error when the plane is
/// degenerate (the denominator is identically zero).
std::pair<Polynomial, Polynomial> sectional_curvature(const Tensor& r, const Metric& g,
                                                      const TangentPlane& plane);

enum class PlaneType { holomorphic, totally_real, neither };

std::string to_string(PlaneType type);

/// holomorphic when J maps the span to itself, totally real when the span
/// is g-orthogonal to its J image. Requires constant coordinates and a
/// linearly independent pair.
PlaneType classify_plane(const TangentPlane& plane, const Tensor& j, const Metric& g);

/// h(x,y) = -R(x,Jx,y,Jy) / sqrt(pi_1(x,Jx,x,Jx) pi_1(y,Jy,y,Jy)).
/// Throws std::domain_error when a direction is totally isotropic (a
/// radicand vanishes) and std::invalid_argument when the square root is
/// irrational or a radicand is not constant.
Polynomial holo_bisectional(const Tensor& r, const Metric& g, const Tensor& j,
                            const TangentVector& x, const TangentVector& y);

/// (nabla_{X_l} R)_{ijks} for a curvature tensor with constant components,
/// indexed (l, i, j, k, s). Zero exactly when the space is locally
/// symmetric.
Tensor covariant_derivative_R(const Tensor& r, const Connection& conn);

/// Defect of the quasi-Kaehler curvature identity: the twelve J-twisted
/// curvature terms minus the cyclic nabla-J right side, on every basis
/// 4-tuple.
Tensor w3_identity_defect(const NordenManifold& m, const Tensor& r, const Connection& conn);

}  // namespace norden
