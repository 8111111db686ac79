#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "spheregreen/errors.hpp"
#include "spheregreen/green.hpp"

namespace spheregreen {

namespace {

GreenMode mode_for(const HelmholtzParameter& p) { return p.resonant ? GreenMode::kResonant : GreenMode::kStrict; }

double series_argument(const HelmholtzParameter& p, double t, std::vector<std::string>& warnings) {
  const double c = checked_argument(t);
  if (c >= 1.0 - 1e-12) {
    if (p.ctx.n() != 2) throw DomainError("the Green function is singular at t = 1");
    warnings.push_back("t = 1 lies on the logarithmic singularity; partial sums grow without bound");
  }
  return c;
}

// sum_{l <= l_max} coeff_l r^l C_l(t) accumulated in long double.
long double abel_sum(const HelmholtzParameter& p, double t, long double r, long l_max) {
  const long double lam = p.ctx.lambda();
  const long double x = t;
  const GreenMode mode = mode_for(p);
  long double c_prev = 1.0L;
  long double c_cur = 2.0L * lam * x;
  long double rp = 1.0L;
  long double s = green_coefficient(p, 0, mode) * c_prev;
  for (long l = 1; l <= l_max; ++l) {
    rp *= r;
    s += green_coefficient(p, static_cast<int>(l), mode) * rp * c_cur;
    const long double next = (2.0L * (l + lam) * x * c_cur - (l + 2.0L * lam - 1.0L) * c_prev) / (l + 1.0L);
    c_prev = c_cur;
    c_cur = next;
  }
  return s;
}

}  // namespace

SeriesEvaluation green_eval_series(const HelmholtzParameter& p, double t, int l_max) {
  if (l_max < 1) throw DomainError("series degree must be >= 1");
  SeriesEvaluation ev;
  const double x = series_argument(p, t, ev.warnings);
  const int n = p.ctx.n();
  const GreenMode mode = mode_for(p);
  std::vector<double> c(static_cast<std::size_t>(l_max) + 1);
  gegenbauer_fill(p.ctx.lambda(), x, c);

  const int window_start = l_max - std::max(1, l_max / 10);
  double s = 0.0;
  double lo = std::numeric_limits<double>::infinity();
  double hi = -lo;
  for (int l = 0; l <= l_max; ++l) {
    s += green_coefficient(p, l, mode) * c[l];
    if (l >= window_start) {
      lo = std::min(lo, s);
      hi = std::max(hi, s);
    }
  }
  for (int l : p.near_resonant) {
    if (l <= l_max) ev.warnings.push_back("degree " + std::to_string(l) + " is close to resonance");
  }
  ev.value = s;
  ev.terms = l_max + 1;
  // (lambda+l)/(lambda |gap|) (n+l-2)^{n-2} decays no faster than 1/l, so the
  // uniform bound over [-1,1] never converges.
  ev.tail_bound = std::numeric_limits<double>::infinity();
  ev.tail_estimate = hi - lo;
  if (n >= 3) ev.warnings.push_back("partial sums converge only conditionally; consider the Abel backend");
  return ev;
}

SeriesEvaluation green_eval_series_adaptive(const HelmholtzParameter& p, double t, const AbelOptions& opts) {
  if (opts.levels < 2 || !(opts.eps0 > 0.0 && opts.eps0 < 1.0) || !(opts.cutoff > 0.0)) {
    throw DomainError("invalid Abel options");
  }
  SeriesEvaluation ev;
  const double x = checked_green_argument(t);
  std::vector<long double> eps(opts.levels);
  std::vector<long double> val(opts.levels);
  for (int k = 0; k < opts.levels; ++k) {
    eps[k] = static_cast<long double>(opts.eps0) / (1L << k);
    const long terms = static_cast<long>(opts.cutoff / static_cast<double>(eps[k])) + 64;
    val[k] = abel_sum(p, x, 1.0L - eps[k], terms);
    ev.terms += terms + 1;
  }
  // Neville's scheme for the polynomial through (eps_k, val_k), evaluated at 0.
  std::vector<long double> tab = val;
  long double last_change = 0.0L;
  for (int m = 1; m < opts.levels; ++m) {
    for (int i = opts.levels - 1; i >= m; --i) {
      const long double updated = (eps[i - m] * tab[i] - eps[i] * tab[i - 1]) / (eps[i - m] - eps[i]);
      if (i == opts.levels - 1) last_change = updated - tab[i];
      tab[i] = updated;
    }
  }
  ev.value = static_cast<double>(tab[opts.levels - 1]);
  ev.tail_estimate = std::abs(static_cast<double>(last_change));
  ev.tail_bound = std::numeric_limits<double>::infinity();
  for (int l : p.near_resonant) ev.warnings.push_back("degree " + std::to_string(l) + " is close to resonance");
  return ev;
}

}  // namespace spheregreen
