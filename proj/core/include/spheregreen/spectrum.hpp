#pragma once

#include <complex>
#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spheregreen/quadrature.hpp"
#include "spheregreen/sphere.hpp"

namespace spheregreen {

using Complex = std::complex<double>;

// Gegenbauer coefficients g(l), l = 0..l_max, of a zonal function.
struct ZonalSpectrum {
  SphereContext ctx;
  std::vector<Complex> coeffs;

  ZonalSpectrum(SphereContext c, std::vector<Complex> v) : ctx(c), coeffs(std::move(v)) {}
  ZonalSpectrum(SphereContext c, int l_max) : ctx(c), coeffs(static_cast<std::size_t>(l_max) + 1) {}

  int l_max() const { return static_cast<int>(coeffs.size()) - 1; }
  Complex operator[](int l) const { return l >= 0 && l <= l_max() ? coeffs[l] : Complex{}; }
  bool is_real() const;
};

ZonalSpectrum real_spectrum(const SphereContext& ctx, const std::vector<double>& coeffs);

// Order index k inside degree l; never interpreted by the library.
using OrderToken = std::string;
using DegreeOrder = std::pair<int, OrderToken>;

struct GeneralSpectrum {
  SphereContext ctx;
  std::map<DegreeOrder, Complex> entries;

  explicit GeneralSpectrum(SphereContext c) : ctx(c) {}
};

// f(l) = <C_l, f>_w / <C_l, C_l>_w, both inner products taken with the rule.
ZonalSpectrum analyze(const SphereContext& ctx, const std::function<double(double)>& samples, int l_max,
                      const QuadratureRule& rule);

Complex synthesize(const ZonalSpectrum& spec, double t);

// h(l) = lambda/(lambda+l) f(l) g(l).
ZonalSpectrum convolve(const ZonalSpectrum& f, const ZonalSpectrum& g);
GeneralSpectrum convolve(const GeneralSpectrum& f, const ZonalSpectrum& g);

// Multiplies degree l by -l(n+l-1).
ZonalSpectrum laplace_beltrami(const ZonalSpectrum& f);
GeneralSpectrum laplace_beltrami(const GeneralSpectrum& f);

double laplace_eigenvalue(const SphereContext& ctx, int l);

// (1/Sigma_n) (1-r^2) / (1-2rt+r^2)^{(n+1)/2}.
double poisson_kernel(const SphereContext& ctx, double r, double t);

// Coefficients r^l (lambda+l)/lambda of Sigma_n p_r.
ZonalSpectrum poisson_kernel_spectrum(const SphereContext& ctx, double r, int l_max);

// Normalized squared norm <C_l, C_l> = lambda/(lambda+l) C_l(1) of the zonal
// inner product <f,g> = (1/Sigma_n) int_{S^n} conj(f) g.
double gegenbauer_norm(const SphereContext& ctx, int l);

// Spectral <f, g> with the normalization above (antilinear in f).
Complex inner_product(const ZonalSpectrum& f, const ZonalSpectrum& g);
double l2_norm(const ZonalSpectrum& f);
double l2_norm(const GeneralSpectrum& f);

// (1/Sigma_n) int_{S^n} conj(f) g for zonal f, g given pointwise, reduced to
// the weighted integral over t and discretized with the rule.
Complex zonal_inner_product(const std::function<Complex(double)>& f, const std::function<Complex(double)>& g,
                            const QuadratureRule& rule);

}  // namespace spheregreen
