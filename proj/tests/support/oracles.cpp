#include "oracles.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <boost/math/special_functions/gamma.hpp>
#include <cmath>
#include <stdexcept>

namespace oracle {

double sphere_measure(int n) {
  const double pi = boost::math::constants::pi<double>();
  return 2.0 * std::pow(pi, (n + 1) / 2.0) / boost::math::tgamma((n + 1) / 2.0);
}

Rational gegenbauer_exact(const Rational& lambda, int l, const Rational& t) {
  std::map<int, Rational> c;
  c[0] = 1;
  c[1] = 2 * lambda * t;
  for (int k = 2; k <= l; ++k) c[k] = (2 * (k + lambda - 1) * t * c[k - 1] - (k + 2 * lambda - 2) * c[k - 2]) / k;
  return c[l];
}

double gegenbauer_at_one(double lambda, int l) {
  return boost::math::tgamma(l + 2 * lambda) / (boost::math::tgamma(2 * lambda) * boost::math::tgamma(l + 1.0));
}

double integrate(const std::function<double(double)>& f, double a, double b, double tol) {
  return boost::math::quadrature::gauss_kronrod<double, 61>::integrate(f, a, b, 20, tol);
}

double zonal_coefficient(int n, const std::function<double(double)>& f, int l) {
  const double lam = (n - 1) / 2.0;
  auto c_l = [&](double t) {
    double prev = 1.0, cur = 2 * lam * t;
    if (l == 0) return prev;
    for (int k = 2; k <= l; ++k) {
      const double next = (2 * (k + lam - 1) * t * cur - (k + 2 * lam - 2) * prev) / k;
      prev = cur;
      cur = next;
    }
    return cur;
  };
  auto weight = [&](double x) { return std::pow((1 - x) * (1 + x), lam - 0.5); };
  // Interior panels by Gauss-Kronrod, the two end panels by tanh-sinh.
  boost::math::quadrature::tanh_sinh<double> ts;
  auto over = [&](const std::function<double(double)>& g) {
    auto safe = [&](double x) { return std::abs(x) >= 1.0 ? 0.0 : g(x) * weight(x); };
    double sum = ts.integrate(safe, -1.0, -0.9, 1e-13) + ts.integrate(safe, 0.9, 1.0, 1e-13);
    for (int k = 0; k < 36; ++k) {
      sum += boost::math::quadrature::gauss_kronrod<double, 61>::integrate(safe, -0.9 + 0.05 * k,
                                                                           -0.9 + 0.05 * (k + 1), 6, 1e-13);
    }
    return sum;
  };
  const double num = over([&](double x) { return f(x) * c_l(x); });
  const double den = over([&](double x) { return c_l(x) * c_l(x); });
  return num / den;
}

double sphere_convolution(int n, const std::function<double(double)>& f, const std::function<double(double)>& g,
                          double t) {
  const double pi = boost::math::constants::pi<double>();
  const double st = std::sqrt(std::max(0.0, 1.0 - t * t));
  // y = cos(th) x + sin(th) (cos(ph) x_perp + ...), y.e = cos(th) t + sin(th) cos(ph) sqrt(1-t^2)
  const double sigma_sub = n >= 2 ? sphere_measure(n - 2) : 0.0;
  auto outer = [&](double th) {
    const double c = std::cos(th), s = std::sin(th);
    auto inner = [&](double ph) { return g(c * t + s * std::cos(ph) * st) * std::pow(std::sin(ph), n - 2); };
    return f(c) * std::pow(s, n - 1) * integrate(inner, 0.0, pi, 1e-13);
  };
  const double s0 = n == 2 ? 2.0 : sigma_sub;  // S^0 has two points
  return s0 * integrate(outer, 0.0, pi, 1e-13) / sphere_measure(n);
}

double sphere_inner_product(int n, const std::function<double(double)>& f, const std::function<double(double)>& g) {
  const double pi = boost::math::constants::pi<double>();
  auto h = [&](double th) { return f(std::cos(th)) * g(std::cos(th)) * std::pow(std::sin(th), n - 1); };
  return sphere_measure(n - 1) * integrate(h, 0.0, pi) / sphere_measure(n);
}

double legendre(int l, double t) { return std::legendre(static_cast<unsigned>(l), t); }

std::mt19937_64 rng(std::uint64_t salt) { return std::mt19937_64(0x5eed2024ULL ^ (salt * 0x9e3779b97f4a7c15ULL)); }

double uniform(std::mt19937_64& g, double lo, double hi) { return std::uniform_real_distribution<double>(lo, hi)(g); }

int uniform_int(std::mt19937_64& g, int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(g); }

std::vector<Rational> solve_linear(std::vector<std::vector<Rational>> A, std::vector<Rational> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t piv = col;
    while (piv < n && A[piv][col] == 0) ++piv;
    if (piv == n) throw std::runtime_error("singular system");
    std::swap(A[piv], A[col]);
    std::swap(b[piv], b[col]);
    for (std::size_t r = 0; r < n; ++r) {
      if (r == col || A[r][col] == 0) continue;
      const Rational f = A[r][col] / A[col][col];
      for (std::size_t c = col; c < n; ++c) A[r][c] -= f * A[col][c];
      b[r] -= f * b[col];
    }
  }
  std::vector<Rational> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = b[i] / A[i][i];
  return x;
}

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  boost::multiprecision::cpp_int num = 1, den = 1;
  for (int i = 1; i <= k; ++i) {
    num *= n - k + i;
    den *= i;
  }
  return Rational(num, den);
}

Rational double_factorial(int m) {
  boost::multiprecision::cpp_int r = 1;
  for (int i = m; i >= 2; i -= 2) r *= i;
  return Rational(r);
}

}  // namespace oracle
