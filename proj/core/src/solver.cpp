#include "spheregreen/solver.hpp"

#include <cmath>
#include <set>
#include <string>

#include "spheregreen/errors.hpp"
#include "spheregreen/spectrum_io.hpp"

namespace spheregreen {

namespace {

void require_context(const HelmholtzParameter& p, const SphereContext& c) {
  if (!(p.ctx == c)) throw ContextMismatch("parameter and spectrum live on different spheres");
}

std::vector<ConditionWarning> warnings_for(const HelmholtzParameter& p, int l_max) {
  std::vector<ConditionWarning> w;
  for (int l : p.near_resonant) {
    if (l <= l_max) w.push_back({l, std::abs(resonance_gap(p, l))});
  }
  return w;
}

int max_degree(const GeneralSpectrum& f) { return f.entries.empty() ? -1 : f.entries.rbegin()->first.first; }

double zonal_mass(const ZonalSpectrum& f, int l) {
  if (l > f.l_max()) return 0.0;
  return std::abs(f.coeffs[l]) * std::sqrt(gegenbauer_norm(f.ctx, l));
}

double general_mass(const GeneralSpectrum& f, int l) {
  double s = 0.0;
  for (const auto& [key, v] : f.entries) {
    if (key.first == l) s += std::norm(v);
  }
  return std::sqrt(s);
}

void check_solvable(double mass, double f_norm, int L_res, const SolveOptions& opts) {
  if (mass > opts.solvability_tolerance * f_norm || (f_norm == 0.0 && mass > 0.0)) {
    throw SolvabilityError("f has mass " + format_number(mass) + " at the resonant degree " +
                               std::to_string(L_res) + " (tolerance " +
                               format_number(opts.solvability_tolerance * f_norm) + ")",
                           mass);
  }
}

void require_resonance(const HelmholtzParameter& p, int L_res) {
  if (!p.resonant || p.L_res != L_res) {
    throw DomainError("a = " + format_number(p.a) + " is not resonant at degree " + std::to_string(L_res));
  }
}

}  // namespace

SolveReport<ZonalSpectrum> solve_resonant(const HelmholtzParameter& p, const ZonalSpectrum& f, int L_res,
                                          const SolveOptions& opts) {
  require_context(p, f.ctx);
  require_resonance(p, L_res);
  check_solvable(zonal_mass(f, L_res), l2_norm(f), L_res, opts);
  SolveReport<ZonalSpectrum> rep{ZonalSpectrum(f.ctx, f.l_max()), 0.0, {}};
  for (int l = 0; l <= f.l_max(); ++l) {
    rep.u.coeffs[l] = l == L_res ? Complex{} : f.coeffs[l] / resonance_gap(p, l);
  }
  rep.residual_norm = verify_solution(p, rep.u, f).norm;
  rep.condition_warnings = warnings_for(p, f.l_max());
  return rep;
}

SolveReport<GeneralSpectrum> solve_resonant(const HelmholtzParameter& p, const GeneralSpectrum& f, int L_res,
                                            const SolveOptions& opts) {
  require_context(p, f.ctx);
  require_resonance(p, L_res);
  check_solvable(general_mass(f, L_res), l2_norm(f), L_res, opts);
  SolveReport<GeneralSpectrum> rep{GeneralSpectrum(f.ctx), 0.0, {}};
  for (const auto& [key, v] : f.entries) {
    rep.u.entries[key] = key.first == L_res ? Complex{} : v / resonance_gap(p, key.first);
  }
  rep.residual_norm = verify_solution(p, rep.u, f).norm;
  rep.condition_warnings = warnings_for(p, max_degree(f));
  return rep;
}

SolveReport<ZonalSpectrum> solve_helmholtz(const HelmholtzParameter& p, const ZonalSpectrum& f,
                                           const SolveOptions& opts) {
  require_context(p, f.ctx);
  if (p.resonant) {
    if (p.L_res == 0) return solve_resonant(p, f, 0, opts);
    throw ResonanceError("a = " + format_number(p.a) + " is resonant at degree " + std::to_string(p.L_res) +
                             "; use the resonant solve",
                         p.L_res);
  }
  SolveReport<ZonalSpectrum> rep{ZonalSpectrum(f.ctx, f.l_max()), 0.0, {}};
  for (int l = 0; l <= f.l_max(); ++l) rep.u.coeffs[l] = f.coeffs[l] / resonance_gap(p, l);
  rep.residual_norm = verify_solution(p, rep.u, f).norm;
  rep.condition_warnings = warnings_for(p, f.l_max());
  return rep;
}

SolveReport<GeneralSpectrum> solve_helmholtz(const HelmholtzParameter& p, const GeneralSpectrum& f,
                                             const SolveOptions& opts) {
  require_context(p, f.ctx);
  if (p.resonant) {
    if (p.L_res == 0) return solve_resonant(p, f, 0, opts);
    throw ResonanceError("a = " + format_number(p.a) + " is resonant at degree " + std::to_string(p.L_res) +
                             "; use the resonant solve",
                         p.L_res);
  }
  SolveReport<GeneralSpectrum> rep{GeneralSpectrum(f.ctx), 0.0, {}};
  for (const auto& [key, v] : f.entries) rep.u.entries[key] = v / resonance_gap(p, key.first);
  rep.residual_norm = verify_solution(p, rep.u, f).norm;
  rep.condition_warnings = warnings_for(p, max_degree(f));
  return rep;
}

SolveReport<AnySpectrum> solve(const SolveRequest& req) {
  const auto& p = req.param;
  const bool resonant_path = p.resonant && p.L_res > 0;
  if (resonant_path && !req.options.allow_resonant) {
    throw ResonanceError("a = " + format_number(p.a) + " is resonant at degree " + std::to_string(p.L_res) +
                             "; the resonant solve must be requested explicitly",
                         p.L_res);
  }
  return std::visit(
      [&](const auto& f) -> SolveReport<AnySpectrum> {
        auto r = resonant_path ? solve_resonant(p, f, p.L_res, req.options) : solve_helmholtz(p, f, req.options);
        return {AnySpectrum(std::move(r.u)), r.residual_norm, std::move(r.condition_warnings)};
      },
      req.f);
}

ResidualReport verify_solution(const HelmholtzParameter& p, const ZonalSpectrum& u, const ZonalSpectrum& f) {
  require_context(p, u.ctx);
  require_context(p, f.ctx);
  ResidualReport rep;
  const int l_max = std::max(u.l_max(), f.l_max());
  double s = 0.0;
  for (int l = 0; l <= l_max; ++l) {
    if (p.resonant && l == p.L_res) {
      rep.resonant_mass = zonal_mass(f, l);
      continue;
    }
    const Complex r = resonance_gap(p, l) * u[l] - f[l];
    rep.entries.push_back({l, {}, r});
    s += std::norm(r) * gegenbauer_norm(p.ctx, l);
  }
  rep.norm = std::sqrt(s);
  return rep;
}

ResidualReport verify_solution(const HelmholtzParameter& p, const GeneralSpectrum& u, const GeneralSpectrum& f) {
  require_context(p, u.ctx);
  require_context(p, f.ctx);
  ResidualReport rep;
  std::set<DegreeOrder> keys;
  for (const auto& e : u.entries) keys.insert(e.first);
  for (const auto& e : f.entries) keys.insert(e.first);
  double s = 0.0;
  for (const auto& key : keys) {
    if (p.resonant && key.first == p.L_res) continue;
    const auto iu = u.entries.find(key);
    const auto jf = f.entries.find(key);
    const Complex uv = iu == u.entries.end() ? Complex{} : iu->second;
    const Complex fv = jf == f.entries.end() ? Complex{} : jf->second;
    const Complex r = resonance_gap(p, key.first) * uv - fv;
    rep.entries.push_back({key.first, key.second, r});
    s += std::norm(r);
  }
  if (p.resonant) rep.resonant_mass = general_mass(f, p.L_res);
  rep.norm = std::sqrt(s);
  return rep;
}

}  // namespace spheregreen
