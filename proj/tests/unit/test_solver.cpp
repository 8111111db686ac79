#include <gtest/gtest.h>

#include <cmath>
#include <map>

#include "oracles.hpp"
#include "spheregreen/closed_forms.hpp"
#include "spheregreen/errors.hpp"
#include "spheregreen/solver.hpp"

using namespace spheregreen;

namespace {

HelmholtzParameter param(int n, double a) { return make_parameter(make_context(n), a); }

ZonalSpectrum random_spectrum(const SphereContext& ctx, int l_max, std::mt19937_64& g) {
  ZonalSpectrum f(ctx, l_max);
  for (auto& c : f.coeffs) c = {oracle::uniform(g, -1, 1), oracle::uniform(g, -1, 1)};
  return f;
}

double non_resonant_a(int n, std::mt19937_64& g) {
  for (;;) {
    const double a = oracle::uniform(g, -10.0, 50.0);
    if (!make_parameter(make_context(n), a).resonant) return a;
  }
}

}  // namespace

TEST(Solve, Examples) {
  const auto c2 = make_context(2);
  const auto f = real_spectrum(c2, {0, 0, 1});
  const auto r = solve_helmholtz(param(2, 0.0), f);
  EXPECT_NEAR(r.u[2].real(), -1.0 / 6.0, 1e-16);
  EXPECT_LE(r.residual_norm, 1e-16);

  const auto zero = solve_helmholtz(param(4, 1.7), ZonalSpectrum(make_context(4), 10));
  EXPECT_EQ(l2_norm(zero.u), 0.0);

  const auto r3 = solve_helmholtz(param(3, -0.75), real_spectrum(make_context(3), {1.0}));
  EXPECT_NEAR(r3.u[0].real(), -4.0 / 3.0, 1e-15);
}

TEST(Solve, PoissonRequiresZeroMean) {
  const auto c3 = make_context(3);
  try {
    solve_helmholtz(param(3, 0.0), real_spectrum(c3, {0.5, 1.0}));
    FAIL();
  } catch (const SolvabilityError& e) {
    EXPECT_NEAR(e.offending_mass(), 0.5, 1e-15);
  }
  const auto r = solve_helmholtz(param(3, 0.0), real_spectrum(c3, {0.0, 1.0}));
  EXPECT_EQ(r.u[0], Complex{});
  EXPECT_NEAR(r.u[1].real(), -1.0 / 3.0, 1e-15);
}

TEST(Solve, ResonantGuard) {
  const auto f = real_spectrum(make_context(2), {0, 1, 1});
  try {
    solve_helmholtz(param(2, 2.0), f);
    FAIL();
  } catch (const ResonanceError& e) {
    EXPECT_EQ(e.degree(), 1);
  }
  SolveRequest req{param(2, 2.0), f, {}};
  EXPECT_THROW(solve(req), ResonanceError);
  req.options.allow_resonant = true;
  EXPECT_THROW(solve(req), SolvabilityError);
}

TEST(SolveResonant, Examples) {
  const auto c2 = make_context(2);
  const auto r = solve_resonant(param(2, 2.0), real_spectrum(c2, {0, 0, 1}), 1);
  EXPECT_NEAR(r.u[2].real(), -0.25, 1e-16);
  EXPECT_EQ(r.u[1], Complex{});
  EXPECT_THROW(solve_resonant(param(2, 2.0), real_spectrum(c2, {0, 1}), 1), SolvabilityError);
  EXPECT_THROW(solve_resonant(param(2, 2.5), real_spectrum(c2, {0, 1}), 1), DomainError);

  const auto c3 = make_context(3);
  const auto rule = gauss_gegenbauer(c3, 10);
  const auto f = analyze(c3, [&](double t) { return gegenbauer(c3, 2, t); }, 6, rule);
  const auto r3 = solve_resonant(param(3, 3.0), f, 1);
  EXPECT_NEAR(r3.u[2].real(), -0.2, 1e-12);
  EXPECT_LE(r3.residual_norm, 1e-12);
}

TEST(SolveResonant, ContractOnRandomInputs) {
  auto g = oracle::rng(51);
  for (int n = 2; n <= 6; ++n)
    for (int L = 0; L <= 4; ++L) {
      const auto p = param(n, static_cast<double>(L) * (n + L - 1));
      auto f = random_spectrum(p.ctx, 32, g);
      f.coeffs[L] = {};
      SolveRequest req{p, f, {}};
      req.options.allow_resonant = true;
      const auto rep = solve(req);
      const auto& u = std::get<ZonalSpectrum>(rep.u);
      EXPECT_EQ(u[L], Complex{});
      const auto check = verify_solution(p, u, f);
      EXPECT_LE(check.norm, 1e-10 * l2_norm(f));
      EXPECT_EQ(check.resonant_mass, 0.0);
      f.coeffs[L] = {1e-3, 0.0};
      req.f = f;
      EXPECT_THROW(solve(req), SolvabilityError) << n << ' ' << L;
    }
}

TEST(Solve, RandomResidual) {
  auto g = oracle::rng(52);
  for (int n = 2; n <= 6; ++n)
    for (int trial = 0; trial < 20; ++trial) {
      const auto p = param(n, non_resonant_a(n, g));
      const auto f = random_spectrum(p.ctx, 32, g);
      const auto r = solve_helmholtz(p, f);
      EXPECT_LE(r.residual_norm, 1e-10 * l2_norm(f));
      EXPECT_LE(verify_solution(p, r.u, f).norm, 1e-10 * l2_norm(f));
    }
}

TEST(Solve, Linearity) {
  auto g = oracle::rng(53);
  for (int n : {2, 4, 6}) {
    const auto p = param(n, non_resonant_a(n, g));
    const auto f = random_spectrum(p.ctx, 20, g), h = random_spectrum(p.ctx, 20, g);
    const Complex a(1.5, -0.5), b(-2.0, 0.25);
    ZonalSpectrum comb(p.ctx, 20);
    for (int l = 0; l <= 20; ++l) comb.coeffs[l] = a * f[l] + b * h[l];
    const auto uf = solve_helmholtz(p, f).u, uh = solve_helmholtz(p, h).u, uc = solve_helmholtz(p, comb).u;
    for (int l = 0; l <= 20; ++l) {
      const Complex ref = a * uf[l] + b * uh[l];
      EXPECT_NEAR(std::abs(uc[l] - ref), 0.0, 1e-14 * std::max(1.0, std::abs(ref)));
    }
  }
}

TEST(Solve, GeneralSpectra) {
  const auto p = param(3, 1.3);
  GeneralSpectrum f(p.ctx);
  f.entries[{0, "0"}] = {2.0, 0.0};
  f.entries[{2, "a"}] = {1.0, 1.0};
  f.entries[{2, "b"}] = {-0.5, 0.0};
  f.entries[{5, "q"}] = {0.0, 3.0};
  const auto r = solve_helmholtz(p, f);
  for (const auto& [key, v] : f.entries) {
    EXPECT_NEAR(std::abs(r.u.entries.at(key) - v / resonance_gap(p, key.first)), 0.0, 1e-15);
  }
  EXPECT_LE(r.residual_norm, 1e-14);

  const auto pr = param(3, 3.0);
  GeneralSpectrum fr(pr.ctx);
  fr.entries[{2, "a"}] = {1.0, 0.0};
  const auto rr = solve_resonant(pr, fr, 1);
  EXPECT_NEAR(rr.u.entries.at({2, "a"}).real(), -0.2, 1e-15);
  fr.entries[{1, "x"}] = {1.0, 0.0};
  EXPECT_THROW(solve_resonant(pr, fr, 1), SolvabilityError);
  EXPECT_THROW(solve_helmholtz(param(4, 0.5), f), ContextMismatch);
}

TEST(Verify, Perturbation) {
  const auto p = param(2, 0.0);
  const auto f = real_spectrum(p.ctx, {0, 0, 1});
  auto u = solve_helmholtz(p, f).u;
  EXPECT_LE(verify_solution(p, u, f).norm, 1e-12 * l2_norm(f));
  u.coeffs[2] += 1e-3;
  const auto rep = verify_solution(p, u, f);
  for (const auto& e : rep.entries) {
    if (e.l == 2) {
      EXPECT_NEAR(e.value.real(), -6e-3, 1e-15);
    } else {
      EXPECT_EQ(e.value, Complex{});
    }
  }
}

TEST(Solve, ConditionWarnings) {
  const auto p = param(3, 3.0 + 1e-7);
  const auto r = solve_helmholtz(p, real_spectrum(p.ctx, {0, 1, 1}));
  ASSERT_EQ(r.condition_warnings.size(), 1u);
  EXPECT_EQ(r.condition_warnings[0].l, 1);
  EXPECT_NEAR(r.condition_warnings[0].gap, 1e-7, 1e-12);
}

// u = f * G through the tabulated kernel: its coefficients come from
// quadrature of the closed form, then the convolution formula.
TEST(Solve, TwoPathAgreementOnEveryTableRow) {
  auto g = oracle::rng(54);
  for (const auto& row : closed_form_registry()) {
    const auto ctx = make_context(row.n);
    const auto p = parameter_from_L(ctx, row.L());
    ZonalSpectrum G(ctx, 16);
    for (int l = 0; l <= 16; ++l) G.coeffs[l] = oracle::zonal_coefficient(row.n, [&](double t) { return row.eval(t); }, l);
    ZonalSpectrum f(ctx, 16);
    for (int l = 0; l <= 16; ++l) f.coeffs[l] = oracle::uniform(g, -1, 1);
    if (p.resonant) f.coeffs[p.L_res] = {};
    const auto spectral = p.resonant ? solve_resonant(p, f, p.L_res).u : solve_helmholtz(p, f).u;
    const auto pointwise = convolve(f, G);
    for (int l = 0; l <= 16; ++l) {
      EXPECT_NEAR(std::abs(pointwise[l] - spectral[l]), 0.0, 1e-8 * std::max(1.0, std::abs(spectral[l])))
          << row.table_id() << " n=" << row.n << " L=" << row.L_num << '/' << row.L_den << " l=" << l;
    }
  }
}
