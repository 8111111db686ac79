#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>
#include <string>
#include <vector>

#include "spheregreen/errors.hpp"
#include "spheregreen/green.hpp"
#include "spheregreen/spectrum_io.hpp"

namespace spheregreen {

namespace {

constexpr int kSeriesTerms = 200;
constexpr double kSeriesRadius = 0.5;

// K(r) / r^m0 where K(r) = Sigma_n p_r(t) - sum_{l<m0} r^l (lambda+l)/lambda C_l(t).
class ReducedKernel {
 public:
  ReducedKernel(const HelmholtzParameter& p, double t, int m0) : t_(t), m0_(m0), lam_(p.ctx.lambda()) {
    std::vector<double> c(static_cast<std::size_t>(m0 + kSeriesTerms) + 1);
    gegenbauer_fill(lam_, t, c);
    x_.resize(c.size());
    for (std::size_t l = 0; l < c.size(); ++l) x_[l] = (lam_ + l) / lam_ * c[l];
  }

  double operator()(double r) const {
    if (m0_ == 0 || r >= kSeriesRadius) return closed(r);
    // Horner on sum_{j>=0} x_{m0+j} r^j.
    double s = 0.0;
    for (int l = static_cast<int>(x_.size()) - 1; l >= m0_; --l) s = s * r + x_[l];
    return s;
  }

 private:
  double closed(double r) const {
    const double d = 1.0 - 2.0 * r * t_ + r * r;
    double k = (1.0 - r * r) / std::pow(d, lam_ + 1.0);
    double rp = 1.0;
    for (int l = 0; l < m0_; ++l) {
      k -= rp * x_[l];
      rp *= r;
    }
    return m0_ == 0 ? k : k / std::pow(r, m0_);
  }

  double t_;
  int m0_;
  double lam_;
  std::vector<double> x_;
};

}  // namespace

IntegralEvaluation green_eval_integral(const HelmholtzParameter& p, double t, const IntegralOptions& opts) {
  if (!p.real_root) throw UnsupportedError("the integral representation needs a real root L; use the series backend");
  const double x = checked_green_argument(t);
  const int n = p.ctx.n();
  const double L = p.L;
  const double lam = p.ctx.lambda();
  // Integer L >= 0 subtracts through degree L and corrects below L.
  const int L0 = p.L0;
  const int correction_top = p.resonant ? p.L_res - 1 : L0;
  const int m0 = std::max(L0 + 1, 0);
  const ReducedKernel kernel(p, x, m0);

  // With r = R s the double integral becomes
  //   -int_0^1 R^{m0-L-1} int_0^1 s^{n+L-2+m0} K~(R s) ds dR.
  const double outer_exp = m0 - L - 1.0;
  const double inner_exp = n + L - 2.0 + m0;
  boost::math::quadrature::tanh_sinh<double> inner_q;
  boost::math::quadrature::tanh_sinh<double> outer_q;
  double worst_inner = 0.0;

  auto inner = [&](double R) {
    auto f = [&](double s) { return std::pow(s, inner_exp) * kernel(R * s); };
    double err = 0.0;
    const double v = inner_q.integrate(f, 0.0, 1.0, opts.tolerance, &err);
    worst_inner = std::max(worst_inner, err);
    return v;
  };
  auto outer = [&](double R) { return std::pow(R, outer_exp) * inner(R); };

  double outer_err = 0.0;
  double l1 = 0.0;
  const double integral = outer_q.integrate(outer, 0.0, 1.0, opts.tolerance, &outer_err, &l1);

  double corr = 0.0;
  for (int l = 0; l <= correction_top; ++l) {
    corr += (lam + l) / (lam * resonance_gap(p, l)) * gegenbauer_value(lam, l, x);
  }
  IntegralEvaluation ev;
  ev.value = -integral + corr;
  ev.error_estimate = outer_err + worst_inner;
  if (!std::isfinite(ev.value) || ev.error_estimate > opts.failure_threshold * (1.0 + std::abs(ev.value))) {
    throw ConvergenceError("double integral did not converge at t=" + format_number(x) + ": estimated error " +
                               format_number(ev.error_estimate),
                           ev.error_estimate);
  }
  return ev;
}

}  // namespace spheregreen
