#include "spheregreen/wavelets.hpp"

#include <cmath>
#include <memory>
#include <mutex>
#include <string>
#include <unordered_map>

#include "spheregreen/errors.hpp"
#include "spheregreen/spectrum_io.hpp"

namespace spheregreen {

ScaleGrid make_scale_grid(double rho_min, double rho_max, int count) {
  if (!(rho_min > 0.0 && rho_max > rho_min)) throw DomainError("scale grid needs 0 < rho_min < rho_max");
  if (count < 2) throw DomainError("scale grid needs at least two nodes");
  ScaleGrid g;
  g.rho_min = rho_min;
  g.rho_max = rho_max;
  g.count = count;
  g.nodes.resize(count);
  g.weights.resize(count);
  const double u0 = std::log(rho_min);
  const double h = (std::log(rho_max) - u0) / (count - 1);
  for (int i = 0; i < count; ++i) {
    g.nodes[i] = i == count - 1 ? rho_max : std::exp(u0 + i * h);
    g.weights[i] = (i == 0 || i == count - 1) ? 0.5 * h : h;
  }
  g.nodes[0] = rho_min;
  return g;
}

WaveletFamily poisson_wavelet(const SphereContext& ctx, int d) {
  if (d < 1) throw DomainError("Poisson wavelet order must be >= 1");
  const double lam = ctx.lambda();
  const double norm = std::pow(2.0, d) / std::sqrt(std::tgamma(2.0 * d));
  WaveletFamily w{ctx, nullptr, "poisson(d=" + std::to_string(d) + ")"};
  w.hat = [=](double rho, int l) -> Complex {
    if (l == 0) return 0.0;
    const double x = rho * l;
    return norm * std::pow(x, d) * std::exp(-x) * (lam + l) / lam;
  };
  return w;
}

namespace {

void require_grid(const ScaleGrid& g) {
  if (g.nodes.size() != static_cast<std::size_t>(g.count) || g.weights.size() != g.nodes.size()) {
    throw DomainError("scale grid not initialized; use make_scale_grid");
  }
}

double degree_target(double lam, int l) { return l == 0 ? 0.0 : ((lam + l) / lam) * ((lam + l) / lam); }

}  // namespace

AdmissibilityReport check_admissibility(const WaveletFamily& psi, const WaveletFamily& omega, int l_max,
                                        const ScaleGrid& grid, double tail_tolerance) {
  require_grid(grid);
  if (!(psi.ctx == omega.ctx)) throw ContextMismatch("wavelet families on different spheres");
  const double lam = psi.ctx.lambda();
  AdmissibilityReport rep;
  for (int l = 0; l <= l_max; ++l) {
    AdmissibilityEntry e;
    e.l = l;
    e.target = degree_target(lam, l);
    for (int i = 0; i < grid.count; ++i) {
      const double rho = grid.nodes[i];
      e.integral += grid.weights[i] * std::conj(psi.hat(rho, l)) * omega.hat(rho, l);
    }
    const double scale = std::max(e.target, 1.0);
    e.low_tail = std::abs(std::conj(psi.hat(grid.rho_min, l)) * omega.hat(grid.rho_min, l)) / scale;
    e.high_tail = std::abs(std::conj(psi.hat(grid.rho_max, l)) * omega.hat(grid.rho_max, l)) / scale;
    if (e.low_tail > tail_tolerance || e.high_tail > tail_tolerance) {
      throw TruncationError("scale grid [" + format_number(grid.rho_min) + ", " + format_number(grid.rho_max) +
                                "] too narrow at l=" + std::to_string(l) + ": tails " + format_number(e.low_tail) +
                                " / " + format_number(e.high_tail),
                            e.low_tail, e.high_tail);
    }
    e.deviation = std::abs(e.integral - e.target);
    rep.max_deviation = std::max(rep.max_deviation, e.deviation);
    rep.entries.push_back(e);
  }
  return rep;
}

double admissibility_constant(const WaveletFamily& psi, int l, const ScaleGrid& grid) {
  require_grid(grid);
  const double lam = psi.ctx.lambda();
  double s = 0.0;
  for (int i = 0; i < grid.count; ++i) s += grid.weights[i] * std::norm(psi.hat(grid.nodes[i], l));
  const double f = lam / (lam + l);
  return f * f * s;
}

WaveletFamily reconstruction_wavelet(const WaveletFamily& psi, int l_max, const ScaleGrid& grid) {
  require_grid(grid);
  auto alpha = std::make_shared<std::vector<double>>(static_cast<std::size_t>(std::max(l_max, 0)) + 1, 0.0);
  for (int l = 1; l <= l_max; ++l) {
    const double a = admissibility_constant(psi, l, grid);
    if (!(std::abs(a) > 1e-12)) {
      throw DomainError("admissibility constant vanishes at l=" + std::to_string(l));
    }
    (*alpha)[l] = a;
  }
  struct Extra {
    std::mutex m;
    std::unordered_map<int, double> values;
  };
  auto extra = std::make_shared<Extra>();
  WaveletFamily out{psi.ctx, nullptr, "reconstruction(" + psi.tag + ")"};
  out.hat = [psi, grid, alpha, extra, l_max](double rho, int l) -> Complex {
    if (l == 0) return 0.0;
    double a;
    if (l <= l_max) {
      a = (*alpha)[l];
    } else {
      std::lock_guard<std::mutex> lock(extra->m);
      auto it = extra->values.find(l);
      if (it == extra->values.end()) it = extra->values.emplace(l, admissibility_constant(psi, l, grid)).first;
      a = it->second;
    }
    if (!(std::abs(a) > 1e-12)) throw DomainError("admissibility constant vanishes at l=" + std::to_string(l));
    return psi.hat(rho, l) / a;
  };
  return out;
}

WaveletTransform wavelet_transform(const WaveletFamily& psi, const ZonalSpectrum& f, const ScaleGrid& grid) {
  require_grid(grid);
  if (!(psi.ctx == f.ctx)) throw ContextMismatch("wavelet and function on different spheres");
  const double lam = f.ctx.lambda();
  WaveletTransform w{grid, {}};
  w.per_scale.reserve(grid.count);
  for (int i = 0; i < grid.count; ++i) {
    ZonalSpectrum s(f.ctx, f.l_max());
    for (int l = 0; l <= f.l_max(); ++l) {
      s.coeffs[l] = lam / (lam + l) * f.coeffs[l] * std::conj(psi.hat(grid.nodes[i], l));
    }
    w.per_scale.push_back(std::move(s));
  }
  return w;
}

ZonalSpectrum inverse_transform(const WaveletFamily& omega, const WaveletTransform& w, const ScaleGrid& grid) {
  require_grid(grid);
  if (!(w.grid == grid) || w.per_scale.size() != static_cast<std::size_t>(grid.count)) {
    throw DomainError("transform was computed on a different scale grid");
  }
  if (w.per_scale.empty()) throw DomainError("empty transform");
  const SphereContext ctx = w.per_scale.front().ctx;
  if (!(omega.ctx == ctx)) throw ContextMismatch("reconstruction wavelet on a different sphere");
  const double lam = ctx.lambda();
  const int l_max = w.per_scale.front().l_max();
  ZonalSpectrum out(ctx, l_max);
  // Fixed node order keeps the reduction deterministic.
  for (int l = 1; l <= l_max; ++l) {
    Complex s{};
    for (int i = 0; i < grid.count; ++i) {
      s += grid.weights[i] * w.per_scale[i].coeffs[l] * omega.hat(grid.nodes[i], l);
    }
    out.coeffs[l] = lam / (lam + l) * s;
  }
  return out;
}

}  // namespace spheregreen
