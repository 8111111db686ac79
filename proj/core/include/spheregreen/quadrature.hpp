#pragma once

#include <vector>

#include "spheregreen/sphere.hpp"

namespace spheregreen {

// Gauss rule for the weight (1-t)^alpha (1+t)^beta on (-1,1).
struct QuadratureRule {
  std::vector<double> nodes;
  std::vector<double> weights;
  int exactness = -1;  // highest polynomial degree integrated exactly
  double alpha = 0.0;
  double beta = 0.0;

  std::size_t size() const { return nodes.size(); }
  // Integral of the weight itself.
  double total_weight() const;
};

// Golub-Welsch on the Jacobi matrix of the orthonormal Jacobi polynomials.
QuadratureRule gauss_jacobi(int count, double alpha, double beta);

// Weight (1-t^2)^{lambda-1/2} of the zonal measure on S^n.
QuadratureRule gauss_gegenbauer(const SphereContext& ctx, int count);

// Smallest Gauss-Gegenbauer rule that is exact to the given degree.
QuadratureRule gauss_gegenbauer_for_degree(const SphereContext& ctx, int degree);

// Integral of (1-t)^alpha (1+t)^beta over (-1,1).
double jacobi_mu0(double alpha, double beta);

}  // namespace spheregreen
