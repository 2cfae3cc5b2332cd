#pragma once

#include "norden/polynomial.hpp"

#include <functional>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

namespace norden {

/// Dense rank-r array of polynomials over a basis X_1..X_dim, addressed by
/// 1-based indices throughout, matching the index conventions of all I/O.
class Tensor {
 public:
  Tensor() = default;
  Tensor(int rank, int dim);

  int rank() const { return rank_; }
  int dim() const { return dim_; }

  const Polynomial& at(std::span<const int> index) const;
  Polynomial& at(std::span<const int> index);

  template <typename... I>
  const Polynomial& operator()(I... index) const {
    const std::array<int, sizeof...(I)> idx{static_cast<int>(index)...};
    return at(idx);
  }
  template <typename... I>
  Polynomial& operator()(I... index) {
    const std::array<int, sizeof...(I)> idx{static_cast<int>(index)...};
    return at(idx);
  }

  bool is_zero() const;
  bool operator==(const Tensor& other) const = default;

  Tensor operator-(const Tensor& other) const;
  Tensor operator+(const Tensor& other) const;
  Tensor scaled(const Rational& factor) const;

  /// Calls fn for every index tuple in odometer order (last index fastest).
  void for_each_index(const std::function<void(std::span<const int>)>& fn) const;

  const std::vector<Polynomial>& entries() const { return entries_; }

 private:
  std::size_t offset(std::span<const int> index) const;

  int rank_ = 0;
  int dim_ = 0;
  std::vector<Polynomial> entries_;
};

/// Coordinates of a tangent vector in the invariant basis.
class TangentVector {
 public:
  TangentVector() = default;
  explicit TangentVector(int dim) : coords_(dim) {}
  TangentVector(std::initializer_list<Polynomial> coords) : coords_(coords) {}

  static TangentVector basis(int i, int dim);

  int dim() const { return static_cast<int>(coords_.size()); }
  const Polynomial& operator[](int i) const { return coords_.at(i - 1); }
  Polynomial& operator[](int i) { return coords_.at(i - 1); }

  bool is_zero() const;
  bool is_constant() const;
  bool operator==(const TangentVector& other) const = default;

  TangentVector operator+(const TangentVector& other) const;
  TangentVector operator-(const TangentVector& other) const;
  TangentVector scaled(const Polynomial& factor) const;

 private:
  std::vector<Polynomial> coords_;
};

/// Span of two tangent vectors. Nondegeneracy is not an invariant here;
/// operations that need it check it themselves.
struct TangentPlane {
  TangentVector x;
  TangentVector y;
};

/// Exact inverse of a symmetric rank-2 tensor with constant entries.
/// Throws std::invalid_argument on parameter-dependent entries and
/// std::domain_error on a singular matrix.
Tensor metric_inverse(const Tensor& g);

/// Symmetric constant metric with its cached exact inverse.
class Metric {
 public:
  explicit Metric(Tensor g);

  int dim() const { return g_.dim(); }
  const Tensor& components() const { return g_; }
  const Tensor& inverse_components() const { return g_inv_; }
  const Polynomial& g(int i, int j) const { return g_(i, j); }
  const Polynomial& ginv(int i, int j) const { return g_inv_(i, j); }

  Polynomial inner(const TangentVector& x, const TangentVector& y) const;

 private:
  Tensor g_;
  Tensor g_inv_;
};

/// pi_1(x,y,z,u) = g(y,z)g(x,u) - g(x,z)g(y,u).
Polynomial pi1(const TangentVector& x, const TangentVector& y, const TangentVector& z,
               const TangentVector& u, const Metric& g);

/// Rank-4 components of pi_1 on the basis.
Tensor pi1_tensor(const Metric& g);

/// psi_1(rho)(x,y,z,u) = g(y,z)rho(x,u) - g(x,z)rho(y,u)
///                     + rho(y,z)g(x,u) - rho(x,z)g(y,u), componentwise.
Tensor psi1(const Tensor& rho, const Metric& g);

/// Full contraction of two rank-r tensors with one inverse-metric factor per
/// index pair. pairing[p] = (slot of a, slot of b), 1-based; every slot of
/// each tensor must appear exactly once.
Polynomial full_contract(const Tensor& a, const Tensor& b, const Tensor& g_inv,
                         std::span<const std::pair<int, int>> pairing);

/// Rank of a list of constant-coordinate vectors, by exact elimination.
int span_rank(std::span<const TangentVector> vectors);

}  // namespace norden
