#include "norden/lie.hpp"

#include <stdexcept>

namespace norden {

namespace {

/// Fills C from a list of upper-triangle brackets [X_i,X_j] (i < j) given as
/// coordinate vectors, completing antisymmetrically.
Tensor from_upper_brackets(
    int dim, std::span<const std::tuple<int, int, std::vector<Polynomial>>> brackets) {
  Tensor c(3, dim);
  for (const auto& [i, j, coords] : brackets) {
    if (i >= j) throw std::invalid_argument("bracket entries need i < j");
    if (static_cast<int>(coords.size()) != dim)
      throw std::invalid_argument("bracket coordinate count mismatch");
    for (int k = 1; k <= dim; ++k) {
      c(i, j, k) += coords[k - 1];
      c(j, i, k) -= coords[k - 1];
    }
  }
  return c;
}

}  // namespace

LieStructure::LieStructure(int dim, Tensor structure_constants)
    : constants_(std::move(structure_constants)) {
  if (constants_.rank() != 3 || constants_.dim() != dim)
    throw std::invalid_argument("structure constants must be a rank-3 tensor of the given dim");
  for (int i = 1; i <= dim; ++i)
    for (int j = i; j <= dim; ++j)
      for (int k = 1; k <= dim; ++k)
        if (constants_(i, j, k) != -constants_(j, i, k))
          throw std::invalid_argument("structure constants must be antisymmetric in (i, j)");
}

LieStructure LieStructure::abelian(int dim) { return LieStructure(dim, Tensor(3, dim)); }

TangentVector LieStructure::bracket(const TangentVector& x, const TangentVector& y) const {
  if (x.dim() != dim() || y.dim() != dim())
    throw std::invalid_argument("vector dimension mismatch");
  TangentVector out(dim());
  for (int i = 1; i <= dim(); ++i) {
    if (x[i].is_zero()) continue;
    for (int j = 1; j <= dim(); ++j) {
      if (y[j].is_zero()) continue;
      for (int k = 1; k <= dim(); ++k) {
        const Polynomial& c = constants_(i, j, k);
        if (!c.is_zero()) out[k] += x[i] * y[j] * c;
      }
    }
  }
  return out;
}

TangentVector LieStructure::bracket_basis(int i, int j) const {
  TangentVector out(dim());
  for (int k = 1; k <= dim(); ++k) out[k] = constants_(i, j, k);
  return out;
}

Tensor jacobi_defect(const LieStructure& L) {
  const int n = L.dim();
  Tensor defect(4, n);
  defect.for_each_index([&](std::span<const int> idx) {
    const int i = idx[0], j = idx[1], s = idx[2], l = idx[3];
    Polynomial sum;
    for (int k = 1; k <= n; ++k) {
      sum += L.C(i, j, k) * L.C(k, s, l);
      sum += L.C(j, s, k) * L.C(k, i, l);
      sum += L.C(s, i, k) * L.C(k, j, l);
    }
    defect.at(idx) = sum;
  });
  return defect;
}

Tensor invariance_defect(const LieStructure& L, const Metric& g) {
  if (L.dim() != g.dim()) throw std::invalid_argument("dimension mismatch");
  const int n = L.dim();
  Tensor defect(3, n);
  defect.for_each_index([&](std::span<const int> idx) {
    const int i = idx[0], j = idx[1], k = idx[2];
    Polynomial sum;
    for (int m = 1; m <= n; ++m) sum += L.C(i, j, m) * g.g(m, k) + L.C(i, k, m) * g.g(m, j);
    defect.at(idx) = sum;
  });
  return defect;
}

LieStructure build_w3_general(const std::array<Polynomial, 12>& l) {
  auto coords = [](Polynomial a, Polynomial b, Polynomial c, Polynomial d) {
    return std::vector<Polynomial>{std::move(a), std::move(b), std::move(c), std::move(d)};
  };
  const std::vector<std::tuple<int, int, std::vector<Polynomial>>> brackets = {
      {1, 3, coords(0, l[1], 0, l[3])},
      {2, 4, coords(l[0], 0, l[2], 0)},
      {2, 3, coords(l[4], l[5], l[6], l[7])},
      {3, 4, coords(l[8], l[9], l[10], l[11])},
      // [X_4,X_1] and [X_2,X_1] stored as their i < j opposites.
      {1, 4, coords(-(l[1] + l[4]), -(l[0] + l[5]), -(l[3] + l[6]), -(l[2] + l[7]))},
      {1, 2, coords(-(l[8] + l[3]), -(l[9] - l[2]), -(l[10] - l[1]), -(l[11] + l[0]))},
  };
  return LieStructure(4, from_upper_brackets(4, brackets));
}

LieStructure build_w3_killing(const std::array<Polynomial, 4>& l) {
  auto coords = [](Polynomial a, Polynomial b, Polynomial c, Polynomial d) {
    return std::vector<Polynomial>{std::move(a), std::move(b), std::move(c), std::move(d)};
  };
  const std::vector<std::tuple<int, int, std::vector<Polynomial>>> brackets = {
      {1, 3, coords(0, l[1], 0, l[3])},
      {2, 4, coords(l[0], 0, l[2], 0)},
      {2, 3, coords(-l[1], 0, 0, -l[2])},
      {3, 4, coords(-l[3], l[2], 0, 0)},
      {1, 4, coords(0, -l[0], -l[3], 0)},
      {1, 2, coords(0, 0, l[1], -l[0])},
  };
  return LieStructure(4, from_upper_brackets(4, brackets));
}

}  // namespace norden
