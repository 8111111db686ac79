#pragma once

#include <functional>
#include <string>
#include <vector>

#include "spheregreen/spectrum.hpp"

namespace spheregreen {

// Assigns to each scale rho > 0 the Gegenbauer coefficients of a zonal wavelet.
struct WaveletFamily {
  SphereContext ctx;
  std::function<Complex(double rho, int l)> hat;
  std::string tag;
};

// Discretization of int_0^inf ... d(rho)/rho by the trapezoid rule in u = ln rho.
struct ScaleGrid {
  double rho_min = 1e-4;
  double rho_max = 50.0;
  int count = 400;
  std::vector<double> nodes;
  std::vector<double> weights;

  friend bool operator==(const ScaleGrid& a, const ScaleGrid& b) {
    return a.rho_min == b.rho_min && a.rho_max == b.rho_max && a.count == b.count;
  }
};

ScaleGrid make_scale_grid(double rho_min = 1e-4, double rho_max = 50.0, int count = 400);

// (2^d / sqrt(Gamma(2d))) (rho l)^d e^{-rho l} (lambda+l)/lambda.
WaveletFamily poisson_wavelet(const SphereContext& ctx, int d);

struct AdmissibilityEntry {
  int l = 0;
  Complex integral;
  double target = 0.0;     // ((lambda+l)/lambda)^2, or 0 at l=0
  double deviation = 0.0;  // |integral - target|
  double low_tail = 0.0;   // integrand at rho_min relative to max(target,1)
  double high_tail = 0.0;  // integrand at rho_max relative to max(target,1)
};

struct AdmissibilityReport {
  std::vector<AdmissibilityEntry> entries;
  double max_deviation = 0.0;
};

// Throws TruncationError when a tail exceeds tail_tolerance.
AdmissibilityReport check_admissibility(const WaveletFamily& psi, const WaveletFamily& omega, int l_max,
                                        const ScaleGrid& grid, double tail_tolerance = 1e-12);

// alpha_l = (lambda/(lambda+l))^2 int |psi_rho(l)|^2 d(rho)/rho on the grid.
double admissibility_constant(const WaveletFamily& psi, int l, const ScaleGrid& grid);

// omega_rho(l) = psi_rho(l) / alpha_l; degrees above l_max are normalized on demand.
WaveletFamily reconstruction_wavelet(const WaveletFamily& psi, int l_max, const ScaleGrid& grid);

struct WaveletTransform {
  ScaleGrid grid;
  std::vector<ZonalSpectrum> per_scale;  // spectrum of f * conj(psi_rho) at each node
};

WaveletTransform wavelet_transform(const WaveletFamily& psi, const ZonalSpectrum& f, const ScaleGrid& grid);

// sum_i w_i (W(rho_i) * omega_rho_i); degree 0 is set to zero.
ZonalSpectrum inverse_transform(const WaveletFamily& omega, const WaveletTransform& w, const ScaleGrid& grid);

}  // namespace spheregreen
