#pragma once

#include "norden/curvature.hpp"

#include <array>

namespace testutil {

inline norden::Metric paper_metric() {
  norden::Tensor g(2, 4);
  g(1, 1) = 1;
  g(2, 2) = 1;
  g(3, 3) = -1;
  g(4, 4) = -1;
  return norden::Metric(g);
}

inline norden::Tensor paper_J() {
  norden::Tensor j(2, 4);
  j(3, 1) = 1;
  j(4, 2) = 1;
  j(1, 3) = -1;
  j(2, 4) = -1;
  return j;
}

inline std::array<norden::Polynomial, 4> symbolic_lambda4() {
  using norden::Polynomial;
  return {Polynomial::parameter(1), Polynomial::parameter(2), Polynomial::parameter(3),
          Polynomial::parameter(4)};
}

/// The invariant-metric parameter relations embedded in the 12-parameter
/// space: (a, b, c, d, -b, 0, 0, -c, -d, c, 0, 0).
inline std::array<norden::Polynomial, 12> killing_embedding(norden::Polynomial a,
                                                            norden::Polynomial b,
                                                            norden::Polynomial c,
                                                            norden::Polynomial d) {
  return {a, b, c, d, -b, 0, 0, -c, -d, c, 0, 0};
}

inline norden::NordenManifold symbolic_family() {
  return norden::NordenManifold(norden::build_w3_killing(symbolic_lambda4()), paper_metric(),
                                paper_J());
}

inline norden::NordenManifold family_at(const norden::Rational& a, const norden::Rational& b,
                                        const norden::Rational& c, const norden::Rational& d) {
  using norden::Polynomial;
  return norden::NordenManifold(
      norden::build_w3_killing({Polynomial(a), Polynomial(b), Polynomial(c), Polynomial(d)}),
      paper_metric(), paper_J());
}

/// l1^2 + l2^2 - l3^2 - l4^2, the isotropic-cone polynomial.
inline norden::Polynomial cone_polynomial() {
  using norden::Polynomial;
  return Polynomial::parameter(1).pow(2) + Polynomial::parameter(2).pow(2) -
         Polynomial::parameter(3).pow(2) - Polynomial::parameter(4).pow(2);
}

}  // namespace testutil
