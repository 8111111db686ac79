#include "spheregreen/spectrum.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "spheregreen/errors.hpp"
#include "spheregreen/spectrum_io.hpp"

namespace spheregreen {

namespace {

void require_same(const SphereContext& a, const SphereContext& b) {
  if (!(a == b)) {
    throw ContextMismatch("spectra live on different spheres (n=" + std::to_string(a.n()) +
                          " vs n=" + std::to_string(b.n()) + ")");
  }
}

}  // namespace

bool ZonalSpectrum::is_real() const {
  return std::all_of(coeffs.begin(), coeffs.end(), [](Complex c) { return c.imag() == 0.0; });
}

ZonalSpectrum real_spectrum(const SphereContext& ctx, const std::vector<double>& coeffs) {
  std::vector<Complex> v(coeffs.begin(), coeffs.end());
  return ZonalSpectrum(ctx, std::move(v));
}

ZonalSpectrum analyze(const SphereContext& ctx, const std::function<double(double)>& samples, int l_max,
                      const QuadratureRule& rule) {
  if (l_max < 0) throw DomainError("negative L_max");
  const double e = ctx.lambda() - 0.5;
  if (std::abs(rule.alpha - e) > 1e-14 || std::abs(rule.beta - e) > 1e-14) {
    throw DomainError("quadrature weight does not match (1-t^2)^{lambda-1/2}");
  }
  if (rule.exactness < 2 * l_max + 1) {
    throw DomainError("quadrature exact to degree " + std::to_string(rule.exactness) + " cannot resolve L_max=" +
                      std::to_string(l_max) + " (needs " + std::to_string(2 * l_max + 1) + ")");
  }
  std::vector<double> num(l_max + 1, 0.0);
  std::vector<double> den(l_max + 1, 0.0);
  std::vector<double> c(l_max + 1);
  for (std::size_t i = 0; i < rule.size(); ++i) {
    const double t = rule.nodes[i];
    const double w = rule.weights[i];
    const double f = samples(t);
    if (!std::isfinite(f)) throw DomainError("non-finite sample at t=" + format_number(t));
    gegenbauer_fill(ctx.lambda(), t, c);
    for (int l = 0; l <= l_max; ++l) {
      num[l] += w * f * c[l];
      den[l] += w * c[l] * c[l];
    }
  }
  ZonalSpectrum out(ctx, l_max);
  for (int l = 0; l <= l_max; ++l) out.coeffs[l] = num[l] / den[l];
  return out;
}

Complex synthesize(const ZonalSpectrum& spec, double t) {
  const double x = checked_argument(t);
  std::vector<double> c(spec.coeffs.size());
  gegenbauer_fill(spec.ctx.lambda(), x, c);
  Complex s{};
  for (std::size_t l = 0; l < c.size(); ++l) s += spec.coeffs[l] * c[l];
  return s;
}

ZonalSpectrum convolve(const ZonalSpectrum& f, const ZonalSpectrum& g) {
  require_same(f.ctx, g.ctx);
  const int l_max = std::min(f.l_max(), g.l_max());
  const double lam = f.ctx.lambda();
  ZonalSpectrum h(f.ctx, l_max);
  for (int l = 0; l <= l_max; ++l) h.coeffs[l] = lam / (lam + l) * f.coeffs[l] * g.coeffs[l];
  return h;
}

GeneralSpectrum convolve(const GeneralSpectrum& f, const ZonalSpectrum& g) {
  require_same(f.ctx, g.ctx);
  const double lam = f.ctx.lambda();
  GeneralSpectrum h(f.ctx);
  for (const auto& [key, value] : f.entries) h.entries[key] = lam / (lam + key.first) * value * g[key.first];
  return h;
}

double laplace_eigenvalue(const SphereContext& ctx, int l) {
  return -static_cast<double>(l) * (ctx.n() + l - 1);
}

ZonalSpectrum laplace_beltrami(const ZonalSpectrum& f) {
  ZonalSpectrum out = f;
  for (int l = 0; l <= f.l_max(); ++l) out.coeffs[l] *= laplace_eigenvalue(f.ctx, l);
  return out;
}

GeneralSpectrum laplace_beltrami(const GeneralSpectrum& f) {
  GeneralSpectrum out = f;
  for (auto& [key, value] : out.entries) value *= laplace_eigenvalue(f.ctx, key.first);
  return out;
}

double poisson_kernel(const SphereContext& ctx, double r, double t) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("Poisson kernel needs 0 <= r < 1");
  const double x = checked_argument(t);
  const double d = 1.0 - 2.0 * r * x + r * r;
  return (1.0 - r * r) / std::pow(d, 0.5 * (ctx.n() + 1)) / ctx.sigma_n();
}

ZonalSpectrum poisson_kernel_spectrum(const SphereContext& ctx, double r, int l_max) {
  if (!(r >= 0.0 && r < 1.0)) throw DomainError("Poisson kernel needs 0 <= r < 1");
  ZonalSpectrum out(ctx, l_max);
  const double lam = ctx.lambda();
  double rl = 1.0;
  for (int l = 0; l <= l_max; ++l) {
    out.coeffs[l] = rl * (lam + l) / lam;
    rl *= r;
  }
  return out;
}

double gegenbauer_norm(const SphereContext& ctx, int l) {
  const double lam = ctx.lambda();
  return lam / (lam + l) * gegenbauer_at_one(lam, l);
}

Complex inner_product(const ZonalSpectrum& f, const ZonalSpectrum& g) {
  require_same(f.ctx, g.ctx);
  const int l_max = std::min(f.l_max(), g.l_max());
  Complex s{};
  for (int l = 0; l <= l_max; ++l) s += std::conj(f.coeffs[l]) * g.coeffs[l] * gegenbauer_norm(f.ctx, l);
  return s;
}

double l2_norm(const ZonalSpectrum& f) { return std::sqrt(std::max(0.0, inner_product(f, f).real())); }

double l2_norm(const GeneralSpectrum& f) {
  double s = 0.0;
  for (const auto& [key, value] : f.entries) s += std::norm(value);
  return std::sqrt(s);
}

Complex zonal_inner_product(const std::function<Complex(double)>& f, const std::function<Complex(double)>& g,
                            const QuadratureRule& rule) {
  Complex s{};
  for (std::size_t i = 0; i < rule.size(); ++i) s += rule.weights[i] * std::conj(f(rule.nodes[i])) * g(rule.nodes[i]);
  return s / rule.total_weight();
}

}  // namespace spheregreen
