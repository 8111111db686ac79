#include "spheregreen/green.hpp"

#include <cmath>
#include <limits>
#include <string>

#include "spheregreen/closed_forms.hpp"
#include "spheregreen/errors.hpp"
#include "spheregreen/spectrum_io.hpp"

namespace spheregreen {

namespace {

constexpr double kFloorSlack = 1e-9;

bool flags_resonance(double a, int l, int n, double tol) {
  const double gap = a - static_cast<double>(l) * (n + l - 1);
  return std::abs(gap) <= tol * (1.0 + std::abs(a));
}

HelmholtzParameter build(const SphereContext& ctx, double a, double L) {
  HelmholtzParameter p{ctx, 0.0, true, 0.0, 0, false, -1, {}};
  p.a = a;
  const int n = ctx.n();
  if (!std::isfinite(a)) throw DomainError("a must be finite");
  if (std::isnan(L)) {
    p.real_root = false;
    p.L = std::numeric_limits<double>::quiet_NaN();
    p.L0 = -1;
    return p;
  }
  p.L = L;
  p.L0 = std::max(static_cast<int>(std::floor(L + kFloorSlack)),
                  static_cast<int>(std::floor(-n - L + 1.0 + kFloorSlack)));
  if (L > -1.0) {
    const int lo = std::max(0, static_cast<int>(std::floor(L)));
    for (int l = lo; l <= lo + 1; ++l) {
      if (flags_resonance(a, l, n, kResonanceTolerance)) {
        p.resonant = true;
        p.L_res = l;
        p.L0 = l;
      } else if (flags_resonance(a, l, n, kNearResonanceTolerance)) {
        p.near_resonant.push_back(l);
      }
    }
  }
  return p;
}

}  // namespace

HelmholtzParameter make_parameter(const SphereContext& ctx, double a) {
  const double m = ctx.n() - 1.0;
  const double disc = m * m + 4.0 * a;
  if (disc < 0.0) return build(ctx, a, std::numeric_limits<double>::quiet_NaN());
  // 2a/(m + sqrt(disc)) avoids cancellation for small a.
  return build(ctx, a, 2.0 * a / (m + std::sqrt(disc)));
}

HelmholtzParameter parameter_from_L(const SphereContext& ctx, double L) {
  if (!std::isfinite(L)) throw DomainError("L must be finite");
  const double Lp = std::max(L, -ctx.n() - L + 1.0);
  return build(ctx, Lp * (ctx.n() + Lp - 1.0), Lp);
}

double resonance_gap(const HelmholtzParameter& p, int l) {
  return p.a - static_cast<double>(l) * (p.ctx.n() + l - 1);
}

double green_coefficient(const HelmholtzParameter& p, int l, GreenMode mode) {
  if (l < 0) throw DomainError("degree must be non-negative");
  const double lam = p.ctx.lambda();
  if (flags_resonance(p.a, l, p.ctx.n(), kResonanceTolerance)) {
    if (mode == GreenMode::kResonant) return 0.0;
    throw ResonanceError("a = " + format_number(p.a) + " is an eigenvalue at degree " + std::to_string(l), l);
  }
  return (lam + l) / (lam * resonance_gap(p, l));
}

ZonalSpectrum green_spectrum(const HelmholtzParameter& p, int l_max) {
  const GreenMode mode = p.resonant ? GreenMode::kResonant : GreenMode::kStrict;
  ZonalSpectrum s(p.ctx, l_max);
  for (int l = 0; l <= l_max; ++l) s.coeffs[l] = green_coefficient(p, l, mode);
  return s;
}

bool has_closed_form(const HelmholtzParameter& p) {
  return p.real_root && find_closed_form(p.ctx.n(), p.L) != nullptr;
}

double green_eval_closed(const HelmholtzParameter& p, double t) {
  const ClosedFormRow* row = p.real_root ? find_closed_form(p.ctx.n(), p.L) : nullptr;
  if (!row) {
    throw UnsupportedError("no closed form available for n=" + std::to_string(p.ctx.n()) +
                           ", a=" + format_number(p.a) + "; use the series or integral backend");
  }
  return row->eval(checked_green_argument(t));
}

double checked_green_argument(double t) {
  const double c = checked_argument(t);
  if (c >= 1.0 - 1e-12) throw DomainError("the Green function is singular at t = 1");
  return c;
}

GreenFunction::GreenFunction(HelmholtzParameter p, GreenBackend backend, int series_l_max)
    : param_(std::move(p)), backend_(backend), series_l_max_(series_l_max) {
  if (backend_ == GreenBackend::kClosed && !has_closed_form(param_)) {
    throw UnsupportedError("no closed form available for n=" + std::to_string(param_.ctx.n()) +
                           ", a=" + format_number(param_.a));
  }
  if (backend_ == GreenBackend::kIntegral && !param_.real_root) {
    throw UnsupportedError("the integral representation needs a real root L; use the series backend");
  }
  if (backend_ == GreenBackend::kSeries && series_l_max_ < 1) throw DomainError("series degree must be >= 1");
}

double GreenFunction::operator()(double t) const {
  switch (backend_) {
    case GreenBackend::kSeries:
      return green_eval_series(param_, t, series_l_max_).value;
    case GreenBackend::kAbel:
      return green_eval_series_adaptive(param_, t).value;
    case GreenBackend::kIntegral:
      return green_eval_integral(param_, t).value;
    case GreenBackend::kClosed:
      return green_eval_closed(param_, t);
  }
  return std::numeric_limits<double>::quiet_NaN();
}

std::string GreenFunction::backend_name() const {
  switch (backend_) {
    case GreenBackend::kSeries:
      return "series(L_max=" + std::to_string(series_l_max_) + ")";
    case GreenBackend::kAbel:
      return "series(abel)";
    case GreenBackend::kIntegral:
      return "double_integral";
    case GreenBackend::kClosed:
      return "closed_form(" + find_closed_form(param_.ctx.n(), param_.L)->table_id() + ")";
  }
  return "unknown";
}

}  // namespace spheregreen
