#pragma once

#include <string>
#include <vector>

#include "osculant/matrix.hpp"
#include "osculant/poly.hpp"

namespace osculant {

// Local parametrization of a k-dimensional variety in projective N-space:
// N coordinate functions of the parameters u_1..u_k, over an affine chart.
struct Parametrization {
  std::string name;
  int k = 0;
  int N = 0;
  std::vector<RatFunc> coords;

  bool polynomial() const;
  void validate() const;  // k >= 1, k <= N, coords.size() == N
};

Parametrization make_polynomial_parametrization(std::string name, int k, std::vector<Poly> coords);

// Substitute u -> A u for an invertible k x k rational matrix.
Parametrization reparametrized(const Parametrization& p,
                               const std::vector<std::vector<Rational>>& a);

// Apply an invertible (N+1) x (N+1) matrix to the homogeneous lift
// (1, x(u)) and re-chart on the locus where the new 0-th coordinate is
// nonzero. Coordinates generally become rational functions.
Parametrization projectively_transformed(const Parametrization& p, const MatrixQ& m);

}  // namespace osculant
