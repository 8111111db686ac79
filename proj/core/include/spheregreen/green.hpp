#pragma once

#include <string>
#include <vector>

#include "spheregreen/spectrum.hpp"

namespace spheregreen {

// a together with the principal root L of a = L(n+L-1).
struct HelmholtzParameter {
  SphereContext ctx;
  double a = 0.0;
  bool real_root = true;  // false for a < -lambda^2
  double L = 0.0;         // principal root (L >= -lambda); NaN when complex
  int L0 = 0;             // max(floor(L), floor(-n-L+1))
  bool resonant = false;
  int L_res = -1;
  std::vector<int> near_resonant;  // degrees with a small but unflagged gap
};

inline constexpr double kResonanceTolerance = 1e-9;
inline constexpr double kNearResonanceTolerance = 1e-6;

HelmholtzParameter make_parameter(const SphereContext& ctx, double a);
// Either root may be passed; the principal one is stored.
HelmholtzParameter parameter_from_L(const SphereContext& ctx, double L);

// a - l(n+l-1)
double resonance_gap(const HelmholtzParameter& p, int l);

enum class GreenMode {
  kStrict,    // a pole at l throws ResonanceError
  kResonant,  // the resonant degree contributes 0
};

// (lambda+l) / (lambda (a - l(n+l-1))).
double green_coefficient(const HelmholtzParameter& p, int l, GreenMode mode = GreenMode::kStrict);
ZonalSpectrum green_spectrum(const HelmholtzParameter& p, int l_max);

struct SeriesEvaluation {
  double value = 0.0;
  long terms = 0;
  // Uniform bound from |C_l| <= (n+l-2)^{n-2}; +inf when the bound diverges.
  double tail_bound = 0.0;
  // Spread of the partial sums over the last tenth of the terms, or the
  // extrapolation error estimate for the Abel backend.
  double tail_estimate = 0.0;
  std::vector<std::string> warnings;
};

// Direct partial sum up to degree l_max.
SeriesEvaluation green_eval_series(const HelmholtzParameter& p, double t, int l_max);

struct AbelOptions {
  double eps0 = 0.1;   // largest 1-r
  int levels = 8;      // halvings of eps; extrapolation order is levels-1
  double cutoff = 60;  // terms up to degree cutoff/eps
};

// Abel means sum c_l r^l C_l(t) at r = 1 - eps, extrapolated to eps -> 0.
SeriesEvaluation green_eval_series_adaptive(const HelmholtzParameter& p, double t, const AbelOptions& opts = {});

struct IntegralOptions {
  double tolerance = 1e-11;       // relative target handed to tanh-sinh
  double failure_threshold = 1e-8;
};

struct IntegralEvaluation {
  double value = 0.0;
  double error_estimate = 0.0;
};

// Nested quadrature of the double-integral representation with the
// subtracted Poisson kernel.
IntegralEvaluation green_eval_integral(const HelmholtzParameter& p, double t, const IntegralOptions& opts = {});

// Registry lookup; throws UnsupportedError when no closed form is known.
double green_eval_closed(const HelmholtzParameter& p, double t);
bool has_closed_form(const HelmholtzParameter& p);

enum class GreenBackend { kSeries, kAbel, kIntegral, kClosed };

class GreenFunction {
 public:
  GreenFunction(HelmholtzParameter p, GreenBackend backend, int series_l_max = 4000);

  double operator()(double t) const;
  const HelmholtzParameter& parameter() const { return param_; }
  GreenBackend backend() const { return backend_; }
  std::string backend_name() const;

 private:
  HelmholtzParameter param_;
  GreenBackend backend_;
  int series_l_max_;
};

// Default t-range guard: t >= 1 - 1e-12 sits on the diagonal singularity.
double checked_green_argument(double t);

}  // namespace spheregreen
