#include "norden/tensor.hpp"

#include <cmath>
#include <stdexcept>

namespace norden {

namespace {

std::size_t pow_size(int dim, int rank) {
  std::size_t n = 1;
  for (int i = 0; i < rank; ++i) n *= static_cast<std::size_t>(dim);
  return n;
}

void require_same_shape(const Tensor& a, const Tensor& b) {
  if (a.rank() != b.rank() || a.dim() != b.dim())
    throw std::invalid_argument("tensor shape mismatch");
}

}  // namespace

Tensor::Tensor(int rank, int dim) : rank_(rank), dim_(dim), entries_(pow_size(dim, rank)) {
  if (rank < 0 || dim < 1) throw std::invalid_argument("invalid tensor shape");
}

std::size_t Tensor::offset(std::span<const int> index) const {
  if (static_cast<int>(index.size()) != rank_)
    throw std::invalid_argument("tensor index arity mismatch");
  std::size_t off = 0;
  for (int i : index) {
    if (i < 1 || i > dim_) throw std::out_of_range("tensor index out of range");
    off = off * static_cast<std::size_t>(dim_) + static_cast<std::size_t>(i - 1);
  }
  return off;
}

const Polynomial& Tensor::at(std::span<const int> index) const { return entries_[offset(index)]; }
Polynomial& Tensor::at(std::span<const int> index) { return entries_[offset(index)]; }

bool Tensor::is_zero() const {
  for (const auto& e : entries_)
    if (!e.is_zero()) return false;
  return true;
}

Tensor Tensor::operator-(const Tensor& other) const {
  require_same_shape(*this, other);
  Tensor out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] -= other.entries_[i];
  return out;
}

Tensor Tensor::operator+(const Tensor& other) const {
  require_same_shape(*this, other);
  Tensor out = *this;
  for (std::size_t i = 0; i < entries_.size(); ++i) out.entries_[i] += other.entries_[i];
  return out;
}

Tensor Tensor::scaled(const Rational& factor) const {
  Tensor out = *this;
  for (auto& e : out.entries_) e *= Polynomial(factor);
  return out;
}

void Tensor::for_each_index(const std::function<void(std::span<const int>)>& fn) const {
  std::vector<int> index(rank_, 1);
  if (rank_ == 0) {
    fn(index);
    return;
  }
  while (true) {
    fn(index);
    int slot = rank_ - 1;
    while (slot >= 0 && index[slot] == dim_) {
      index[slot] = 1;
      --slot;
    }
    if (slot < 0) return;
    ++index[slot];
  }
}

TangentVector TangentVector::basis(int i, int dim) {
  TangentVector v(dim);
  v[i] = 1;
  return v;
}

bool TangentVector::is_zero() const {
  for (const auto& c : coords_)
    if (!c.is_zero()) return false;
  return true;
}

bool TangentVector::is_constant() const {
  for (const auto& c : coords_)
    if (!c.is_constant()) return false;
  return true;
}

TangentVector TangentVector::operator+(const TangentVector& other) const {
  if (dim() != other.dim()) throw std::invalid_argument("vector dimension mismatch");
  TangentVector out = *this;
  for (int i = 1; i <= dim(); ++i) out[i] += other[i];
  return out;
}

TangentVector TangentVector::operator-(const TangentVector& other) const {
  if (dim() != other.dim()) throw std::invalid_argument("vector dimension mismatch");
  TangentVector out = *this;
  for (int i = 1; i <= dim(); ++i) out[i] -= other[i];
  return out;
}

TangentVector TangentVector::scaled(const Polynomial& factor) const {
  TangentVector out = *this;
  for (int i = 1; i <= dim(); ++i) out[i] *= factor;
  return out;
}

Tensor metric_inverse(const Tensor& g) {
  if (g.rank() != 2) throw std::invalid_argument("metric must have rank 2");
  const int n = g.dim();
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) {
      if (!g(i, j).is_constant())
        throw std::invalid_argument("metric inversion needs constant entries");
      if (g(i, j) != g(j, i)) throw std::invalid_argument("metric must be symmetric");
    }

  // Gauss-Jordan on [g | I] over exact rationals.
  std::vector<std::vector<Rational>> m(n, std::vector<Rational>(2 * n, Rational(0)));
  for (int i = 0; i < n; ++i) {
    for (int j = 0; j < n; ++j) m[i][j] = g(i + 1, j + 1).constant_value();
    m[i][n + i] = 1;
  }
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int row = col; row < n; ++row)
      if (m[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) throw std::domain_error("singular metric");
    std::swap(m[col], m[pivot]);
    const Rational lead = m[col][col];
    for (int j = 0; j < 2 * n; ++j) m[col][j] /= lead;
    for (int row = 0; row < n; ++row) {
      if (row == col || m[row][col] == 0) continue;
      const Rational factor = m[row][col];
      for (int j = 0; j < 2 * n; ++j) m[row][j] -= factor * m[col][j];
    }
  }

  Tensor inv(2, n);
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) inv(i, j) = Polynomial(m[i - 1][n + j - 1]);
  return inv;
}

Metric::Metric(Tensor g) : g_(std::move(g)), g_inv_(metric_inverse(g_)) {}

Polynomial Metric::inner(const TangentVector& x, const TangentVector& y) const {
  if (x.dim() != dim() || y.dim() != dim())
    throw std::invalid_argument("vector dimension mismatch");
  Polynomial out;
  for (int i = 1; i <= dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 1; j <= dim(); ++j) {
      if (g_(i, j).is_zero() || y[j].is_zero()) continue;
      out += x[i] * y[j] * g_(i, j);
    }
  }
  return out;
}

Polynomial pi1(const TangentVector& x, const TangentVector& y, const TangentVector& z,
               const TangentVector& u, const Metric& g) {
  return g.inner(y, z) * g.inner(x, u) - g.inner(x, z) * g.inner(y, u);
}

Tensor pi1_tensor(const Metric& g) {
  const int n = g.dim();
  Tensor out(4, n);
  out.for_each_index([&](std::span<const int> idx) {
    const int i = idx[0], j = idx[1], k = idx[2], s = idx[3];
    out.at(idx) = g.g(j, k) * g.g(i, s) - g.g(i, k) * g.g(j, s);
  });
  return out;
}

Tensor psi1(const Tensor& rho, const Metric& g) {
  if (rho.rank() != 2 || rho.dim() != g.dim())
    throw std::invalid_argument("psi1 needs a rank-2 tensor matching the metric dimension");
  const int n = g.dim();
  Tensor out(4, n);
  out.for_each_index([&](std::span<const int> idx) {
    const int i = idx[0], j = idx[1], k = idx[2], s = idx[3];
    out.at(idx) = g.g(j, k) * rho(i, s) - g.g(i, k) * rho(j, s) + rho(j, k) * g.g(i, s) -
                  rho(i, k) * g.g(j, s);
  });
  return out;
}

Polynomial full_contract(const Tensor& a, const Tensor& b, const Tensor& g_inv,
                         std::span<const std::pair<int, int>> pairing) {
  const int r = a.rank();
  if (b.rank() != r || static_cast<int>(pairing.size()) != r)
    throw std::invalid_argument("full_contract: pairing does not match tensor ranks");
  if (a.dim() != b.dim() || g_inv.dim() != a.dim())
    throw std::invalid_argument("full_contract: dimension mismatch");
  std::vector<bool> seen_a(r, false), seen_b(r, false);
  for (const auto& [pa, pb] : pairing) {
    if (pa < 1 || pa > r || pb < 1 || pb > r || seen_a[pa - 1] || seen_b[pb - 1])
      throw std::invalid_argument("full_contract: invalid pairing");
    seen_a[pa - 1] = seen_b[pb - 1] = true;
  }

  Polynomial total;
  a.for_each_index([&](std::span<const int> ia) {
    if (a.at(ia).is_zero()) return;
    std::vector<int> ia_copy(ia.begin(), ia.end());
    b.for_each_index([&](std::span<const int> ib) {
      if (b.at(ib).is_zero()) return;
      Polynomial weight = 1;
      for (const auto& [pa, pb] : pairing) {
        const Polynomial& w = g_inv(ia_copy[pa - 1], ib[pb - 1]);
        if (w.is_zero()) {
          weight = Polynomial{};
          break;
        }
        weight *= w;
      }
      if (weight.is_zero()) return;
      total += weight * a.at(ia_copy) * b.at(ib);
    });
  });
  return total;
}

int span_rank(std::span<const TangentVector> vectors) {
  if (vectors.empty()) return 0;
  const int n = vectors.front().dim();
  std::vector<std::vector<Rational>> rows;
  for (const auto& v : vectors) {
    if (v.dim() != n) throw std::invalid_argument("vector dimension mismatch");
    if (!v.is_constant())
      throw std::invalid_argument("rank test needs constant vector coordinates");
    std::vector<Rational> row(n);
    for (int i = 1; i <= n; ++i) row[i - 1] = v[i].constant_value();
    rows.push_back(std::move(row));
  }
  int rank = 0;
  for (int col = 0; col < n && rank < static_cast<int>(rows.size()); ++col) {
    int pivot = -1;
    for (int row = rank; row < static_cast<int>(rows.size()); ++row)
      if (rows[row][col] != 0) {
        pivot = row;
        break;
      }
    if (pivot < 0) continue;
    std::swap(rows[rank], rows[pivot]);
    for (int row = 0; row < static_cast<int>(rows.size()); ++row) {
      if (row == rank || rows[row][col] == 0) continue;
      const Rational factor = rows[row][col] / rows[rank][col];
      for (int j = col; j < n; ++j) rows[row][j] -= factor * rows[rank][j];
    }
    ++rank;
  }
  return rank;
}

}  // namespace norden
