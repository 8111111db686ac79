#pragma once

// Reference computations that share no code with the library.

#include <boost/multiprecision/cpp_int.hpp>
#include <functional>
#include <map>
#include <random>
#include <vector>

namespace oracle {

using Rational = boost::multiprecision::cpp_rational;

// 2 pi^{(n+1)/2} / Gamma((n+1)/2) through boost's Gamma.
double sphere_measure(int n);

// C_l^lambda(t) by the recurrence in exact rational arithmetic.
Rational gegenbauer_exact(const Rational& lambda, int l, const Rational& t);
// C_l^lambda(1) = binom(l + 2 lambda - 1, l) through Gamma functions.
double gegenbauer_at_one(double lambda, int l);

// Adaptive Gauss-Kronrod on [a, b].
double integrate(const std::function<double(double)>& f, double a, double b, double tol = 1e-14);

// Gegenbauer coefficient c_l of a zonal f = sum c_l C_l^lambda on S^n, as the
// ratio of weighted integrals over (-1, 1) by tanh-sinh quadrature; f may have
// integrable endpoint singularities and is never evaluated at t = +-1.
double zonal_coefficient(int n, const std::function<double(double)>& f, int l);

// (1/Sigma_n) int_{S^n} f(x.y) g(y.e) dsigma(y) with x.e = t, reduced to
// a double integral over polar angles.
double sphere_convolution(int n, const std::function<double(double)>& f, const std::function<double(double)>& g,
                          double t);

// (1/Sigma_n) int_{S^n} f(x.e) g(x.e) dsigma(x).
double sphere_inner_product(int n, const std::function<double(double)>& f, const std::function<double(double)>& g);

// Sum_l c_l C_l^lambda(t) with C_l from std::legendre (lambda = 1/2) or the
// exact recurrence rounded to double.
double legendre(int l, double t);

std::mt19937_64 rng(std::uint64_t salt);
double uniform(std::mt19937_64& g, double lo, double hi);
int uniform_int(std::mt19937_64& g, int lo, int hi);

// Exact Gaussian elimination; throws on a singular system.
std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> A, std::vector<Rational> b);

Rational binomial(int n, int k);
Rational double_factorial(int m);  // (-1)!! = 0!! = 1

}  // namespace oracle
