#pragma once

#include <vector>

#include "spheregreen/green.hpp"
#include "spheregreen/spectrum_io.hpp"

namespace spheregreen {

struct SolveOptions {
  // Degree-L_res mass allowed relative to ||f||.
  double solvability_tolerance = 1e-8;
  // Permit resonant a with L_res > 0 (the a = 0 case is always handled).
  bool allow_resonant = false;
};

struct ConditionWarning {
  int l = 0;
  double gap = 0.0;  // |a - l(n+l-1)|
};

template <class Spectrum>
struct SolveReport {
  Spectrum u;
  double residual_norm = 0.0;
  std::vector<ConditionWarning> condition_warnings;
};

struct SolveRequest {
  HelmholtzParameter param;
  AnySpectrum f;
  SolveOptions options;
};

// u(l) = f(l) / (a - l(n+l-1)). A resonant a throws ResonanceError, except
// a = 0, which is solved with the zero-mean constraint.
SolveReport<ZonalSpectrum> solve_helmholtz(const HelmholtzParameter& p, const ZonalSpectrum& f,
                                           const SolveOptions& opts = {});
SolveReport<GeneralSpectrum> solve_helmholtz(const HelmholtzParameter& p, const GeneralSpectrum& f,
                                             const SolveOptions& opts = {});

// Unique solution orthogonal to degree L_res; throws SolvabilityError when f
// carries more than the tolerated mass there.
SolveReport<ZonalSpectrum> solve_resonant(const HelmholtzParameter& p, const ZonalSpectrum& f, int L_res,
                                          const SolveOptions& opts = {});
SolveReport<GeneralSpectrum> solve_resonant(const HelmholtzParameter& p, const GeneralSpectrum& f, int L_res,
                                            const SolveOptions& opts = {});

// Dispatches on the spectrum kind and on resonance.
SolveReport<AnySpectrum> solve(const SolveRequest& req);

struct ResidualEntry {
  int l = 0;
  OrderToken k;  // empty for zonal spectra
  Complex value;
};

struct ResidualReport {
  std::vector<ResidualEntry> entries;  // (a - l(n+l-1)) u - f, resonant degree omitted
  double norm = 0.0;
  double resonant_mass = 0.0;  // f-mass at L_res when the parameter is resonant
};

ResidualReport verify_solution(const HelmholtzParameter& p, const ZonalSpectrum& u, const ZonalSpectrum& f);
ResidualReport verify_solution(const HelmholtzParameter& p, const GeneralSpectrum& u, const GeneralSpectrum& f);

}  // namespace spheregreen
