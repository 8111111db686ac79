#include "spheregreen/quadrature.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <numeric>

#include "spheregreen/errors.hpp"

namespace spheregreen {

double QuadratureRule::total_weight() const { return std::accumulate(weights.begin(), weights.end(), 0.0); }

double jacobi_mu0(double alpha, double beta) {
  return std::exp((alpha + beta + 1.0) * std::log(2.0) + std::lgamma(alpha + 1.0) + std::lgamma(beta + 1.0) -
                  std::lgamma(alpha + beta + 2.0));
}

namespace {

// Recurrence t p_k = b_{k+1} p_{k+1} + a_k p_k + b_k p_{k-1} of the orthonormal family.
struct JacobiCoefficients {
  std::vector<double> diag;
  std::vector<double> off;  // off[k] = b_{k+1}
};

JacobiCoefficients jacobi_coefficients(int count, double alpha, double beta) {
  JacobiCoefficients c;
  c.diag.resize(count);
  c.off.resize(count);
  const double ab = alpha + beta;
  for (int k = 0; k < count; ++k) {
    const double s = 2.0 * k + ab;
    if (k == 0) {
      c.diag[k] = (beta - alpha) / (ab + 2.0);
    } else {
      c.diag[k] = (beta * beta - alpha * alpha) / (s * (s + 2.0));
    }
    const int m = k + 1;
    const double sm = 2.0 * m + ab;
    double b2;
    if (m == 1) {
      b2 = 4.0 * (1.0 + alpha) * (1.0 + beta) / ((2.0 + ab) * (2.0 + ab) * (3.0 + ab));
    } else {
      b2 = 4.0 * m * (m + alpha) * (m + beta) * (m + ab) / (sm * sm * (sm + 1.0) * (sm - 1.0));
    }
    c.off[k] = std::sqrt(b2);
  }
  return c;
}

}  // namespace

QuadratureRule gauss_jacobi(int count, double alpha, double beta) {
  if (count < 1) throw DomainError("quadrature needs at least one node");
  if (!(alpha > -1.0 && beta > -1.0)) throw DomainError("Jacobi exponents must exceed -1");
  const JacobiCoefficients c = jacobi_coefficients(count, alpha, beta);

  Eigen::VectorXd diag(count);
  Eigen::VectorXd sub(std::max(count - 1, 0));
  for (int k = 0; k < count; ++k) diag[k] = c.diag[k];
  for (int k = 0; k + 1 < count; ++k) sub[k] = c.off[k];
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> solver;
  solver.computeFromTridiagonal(diag, sub, Eigen::EigenvaluesOnly);
  if (solver.info() != Eigen::Success) throw ConvergenceError("tridiagonal eigensolver failed", NAN);

  QuadratureRule rule;
  rule.alpha = alpha;
  rule.beta = beta;
  rule.exactness = 2 * count - 1;
  rule.nodes.resize(count);
  rule.weights.resize(count);
  const double mu0 = jacobi_mu0(alpha, beta);
  // Christoffel numbers: w_i = 1 / sum_k p_k(t_i)^2 with p_0 = 1/sqrt(mu0).
  for (int i = 0; i < count; ++i) {
    const double x = solver.eigenvalues()[i];
    double pm1 = 0.0;
    double p = 1.0 / std::sqrt(mu0);
    double sum = p * p;
    for (int k = 0; k + 1 < count; ++k) {
      const double next = ((x - c.diag[k]) * p - (k > 0 ? c.off[k - 1] : 0.0) * pm1) / c.off[k];
      pm1 = p;
      p = next;
      sum += p * p;
    }
    rule.nodes[i] = x;
    rule.weights[i] = 1.0 / sum;
  }
  return rule;
}

QuadratureRule gauss_gegenbauer(const SphereContext& ctx, int count) {
  const double e = ctx.lambda() - 0.5;
  return gauss_jacobi(count, e, e);
}

QuadratureRule gauss_gegenbauer_for_degree(const SphereContext& ctx, int degree) {
  return gauss_gegenbauer(ctx, std::max(1, degree / 2 + 1));
}

}  // namespace spheregreen
