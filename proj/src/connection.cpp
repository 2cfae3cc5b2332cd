#include "norden/connection.hpp"

#include <stdexcept>

namespace norden {

Connection::Connection(Tensor gamma) : gamma_(std::move(gamma)) {
  if (gamma_.rank() != 3) throw std::invalid_argument("connection coefficients must have rank 3");
}

TangentVector Connection::derive_basis(int i, const TangentVector& y) const {
  if (y.dim() != dim()) throw std::invalid_argument("vector dimension mismatch");
  TangentVector out(dim());
  for (int j = 1; j <= dim(); ++j) {
    if (y[j].is_zero()) continue;
    for (int k = 1; k <= dim(); ++k) {
      const Polynomial& gamma = gamma_(i, j, k);
      if (!gamma.is_zero()) out[k] += y[j] * gamma;
    }
  }
  return out;
}

Connection levi_civita(const LieStructure& L, const Metric& g) {
  if (L.dim() != g.dim()) throw std::invalid_argument("dimension mismatch");
  const int n = L.dim();

  // K_{ijl} = g(nabla_{X_i} X_j, X_l), read off the Koszul right side.
  Tensor k_lower(3, n);
  k_lower.for_each_index([&](std::span<const int> idx) {
    const int i = idx[0], j = idx[1], l = idx[2];
    Polynomial sum;
    for (int m = 1; m <= n; ++m) {
      sum += L.C(i, j, m) * g.g(m, l);
      sum += L.C(l, i, m) * g.g(m, j);
      sum += L.C(l, j, m) * g.g(m, i);
    }
    k_lower.at(idx) = Rational(1, 2) * sum;
  });

  Tensor gamma(3, n);
  gamma.for_each_index([&](std::span<const int> idx) {
    const int i = idx[0], j = idx[1], k = idx[2];
    Polynomial sum;
    for (int l = 1; l <= n; ++l) sum += g.ginv(l, k) * k_lower(i, j, l);
    gamma.at(idx) = sum;
  });
  return Connection(std::move(gamma));
}

}  // namespace norden
