#include <gtest/gtest.h>

#include <cmath>
#include <numbers>

#include "oracles.hpp"
#include "spheregreen/errors.hpp"
#include "spheregreen/spectrum.hpp"

using namespace spheregreen;

namespace {

ZonalSpectrum random_spectrum(const SphereContext& ctx, int l_max, std::mt19937_64& g, bool complex = false) {
  ZonalSpectrum s(ctx, l_max);
  for (auto& c : s.coeffs) c = {oracle::uniform(g, -1, 1), complex ? oracle::uniform(g, -1, 1) : 0.0};
  return s;
}

// Real zonal function with decaying coefficients, scaled so that the
// pointwise values stay O(1).
ZonalSpectrum smooth_random(const SphereContext& ctx, int l_max, std::mt19937_64& g) {
  ZonalSpectrum s(ctx, l_max);
  for (int l = 0; l <= l_max; ++l) s.coeffs[l] = oracle::uniform(g, -1, 1) / gegenbauer_at_one(ctx.lambda(), l);
  return s;
}

}  // namespace

TEST(Analyze, Examples) {
  for (int n : {2, 3, 6}) {
    const auto ctx = make_context(n);
    const auto rule = gauss_gegenbauer(ctx, 40);
    const auto c3 = analyze(ctx, [&](double t) { return gegenbauer(ctx, 3, t); }, 20, rule);
    for (int l = 0; l <= 20; ++l) EXPECT_NEAR(c3[l].real(), l == 3 ? 1.0 : 0.0, 1e-12) << n << ' ' << l;
    const auto one = analyze(ctx, [](double) { return 1.0; }, 20, rule);
    for (int l = 0; l <= 20; ++l) EXPECT_NEAR(one[l].real(), l == 0 ? 1.0 : 0.0, 1e-12);
  }
}

TEST(Analyze, PoissonKernel) {
  for (int n = 2; n <= 6; ++n) {
    const auto ctx = make_context(n);
    const auto rule = gauss_gegenbauer(ctx, 120);
    const auto s = analyze(ctx, [&](double t) { return ctx.sigma_n() * poisson_kernel(ctx, 0.5, t); }, 40, rule);
    for (int l = 0; l <= 40; ++l) {
      const double ref = std::pow(0.5, l) * (ctx.lambda() + l) / ctx.lambda();
      EXPECT_NEAR(s[l].real(), ref, 1e-12 * std::max(1.0, ref)) << n << ' ' << l;
    }
  }
}

TEST(Analyze, RejectsAliasing) {
  const auto ctx = make_context(3);
  const auto rule = gauss_gegenbauer(ctx, 10);  // exact to degree 19
  EXPECT_NO_THROW(analyze(ctx, [](double) { return 1.0; }, 9, rule));
  EXPECT_THROW(analyze(ctx, [](double) { return 1.0; }, 10, rule), DomainError);
  EXPECT_THROW(analyze(make_context(4), [](double) { return 1.0; }, 3, rule), DomainError);
  EXPECT_THROW(analyze(ctx, [](double) { return NAN; }, 3, rule), DomainError);
}

TEST(Synthesize, Examples) {
  const auto c2 = make_context(2);
  EXPECT_EQ(synthesize(real_spectrum(c2, {1.0}), 0.77).real(), 1.0);
  EXPECT_NEAR(synthesize(real_spectrum(c2, {0.0, 0.0, 2.0}), 0.5).real(), -0.25, 1e-15);
  const auto p = poisson_kernel_spectrum(c2, 0.5, 200);
  const double closed = (1 - 0.25) / std::pow(1 - 2 * 0.5 * 0.3 + 0.25, 1.5);
  EXPECT_NEAR(synthesize(p, 0.3).real(), closed, 1e-10 * closed);
  EXPECT_THROW(synthesize(p, 1.5), DomainError);
}

TEST(Spectrum, AnalyzeSynthesizeRoundTrip) {
  auto g = oracle::rng(21);
  for (int n = 2; n <= 8; ++n) {
    const auto ctx = make_context(n);
    const auto rule = gauss_gegenbauer(ctx, 33);  // exactness 65
    const auto f = smooth_random(ctx, 32, g);
    const auto back = analyze(ctx, [&](double t) { return synthesize(f, t).real(); }, 32, rule);
    for (int l = 0; l <= 32; ++l) EXPECT_NEAR(back[l].real(), f[l].real(), 1e-10 * l2_norm(f) + 1e-10 * std::abs(f[l]));
  }
}

TEST(Convolve, Examples) {
  const auto c2 = make_context(2);
  const auto d2 = real_spectrum(c2, {0, 0, 1});
  EXPECT_NEAR(convolve(d2, d2)[2].real(), 0.2, 1e-15);

  auto g = oracle::rng(22);
  for (int n : {2, 4, 7}) {
    const auto ctx = make_context(n);
    const auto f = random_spectrum(ctx, 25, g, true);
    const auto h = convolve(f, poisson_kernel_spectrum(ctx, 0.6, 25));
    for (int l = 0; l <= 25; ++l) EXPECT_NEAR(std::abs(h[l] - std::pow(0.6, l) * f[l]), 0.0, 1e-14);
    const auto z = convolve(f, ZonalSpectrum(ctx, 25));
    for (int l = 0; l <= 25; ++l) EXPECT_EQ(z[l], Complex{});
  }
  EXPECT_EQ(convolve(ZonalSpectrum(c2, 10), ZonalSpectrum(c2, 4)).l_max(), 4);
  EXPECT_THROW(convolve(d2, real_spectrum(make_context(3), {1})), ContextMismatch);
}

TEST(Convolve, GeneralSpectrum) {
  const auto ctx = make_context(3);
  GeneralSpectrum f(ctx);
  f.entries[{2, "k=(1,0)"}] = {1.0, -2.0};
  f.entries[{2, "k=(2,1)"}] = {0.5, 0.0};
  f.entries[{7, "x"}] = {3.0, 0.0};
  const auto g = real_spectrum(ctx, {0, 0, 4.0});
  const auto h = convolve(f, g);
  const double s = ctx.lambda() / (ctx.lambda() + 2) * 4.0;
  EXPECT_NEAR(std::abs(h.entries.at({2, "k=(1,0)"}) - s * Complex(1.0, -2.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(h.entries.at({2, "k=(2,1)"}) - s * 0.5), 0.0, 1e-15);
  // degree beyond g's support is annihilated
  EXPECT_TRUE(!h.entries.count({7, "x"}) || h.entries.at({7, "x"}) == Complex{});
  EXPECT_THROW(convolve(f, real_spectrum(make_context(2), {1})), ContextMismatch);
}

TEST(Convolve, CommutativeAndAssociative) {
  auto g = oracle::rng(23);
  for (int n = 2; n <= 6; ++n) {
    const auto ctx = make_context(n);
    const auto a = random_spectrum(ctx, 30, g, true), b = random_spectrum(ctx, 30, g, true),
               c = random_spectrum(ctx, 30, g, true);
    const auto ab = convolve(a, b), ba = convolve(b, a);
    const auto l = convolve(convolve(a, b), c), r = convolve(a, convolve(b, c));
    for (int k = 0; k <= 30; ++k) {
      EXPECT_NEAR(std::abs(ab[k] - ba[k]), 0.0, 1e-16);
      EXPECT_NEAR(std::abs(l[k] - r[k]), 0.0, 1e-15);
    }
  }
}

TEST(Convolve, MatchesSphericalQuadrature) {
  auto g = oracle::rng(24);
  for (int n : {2, 3, 4, 6}) {
    const auto ctx = make_context(n);
    const auto f = smooth_random(ctx, 32, g), h = smooth_random(ctx, 32, g);
    const auto conv = convolve(f, h);
    auto fv = [&](double t) { return synthesize(f, std::clamp(t, -1.0, 1.0)).real(); };
    auto hv = [&](double t) { return synthesize(h, std::clamp(t, -1.0, 1.0)).real(); };
    for (double t : {-0.83, 0.1, 0.64}) {
      const double direct = oracle::sphere_convolution(n, fv, hv, t);
      EXPECT_NEAR(synthesize(conv, t).real(), direct, 1e-8) << n << ' ' << t;
    }
  }
}

TEST(InnerProduct, NormalizationMatchesSphereIntegral) {
  for (int n = 2; n <= 7; ++n) {
    const auto ctx = make_context(n);
    for (int l : {0, 1, 4, 9}) {
      auto c = [&](double t) { return gegenbauer(ctx, l, std::clamp(t, -1.0, 1.0)); };
      const double ref = oracle::sphere_inner_product(n, c, c);
      EXPECT_NEAR(gegenbauer_norm(ctx, l), ref, 1e-11 * ref) << n << ' ' << l;
      const auto rule = gauss_gegenbauer(ctx, 12);
      const auto q = zonal_inner_product([&](double t) { return Complex(c(t)); },
                                         [&](double t) { return Complex(c(t)); }, rule);
      EXPECT_NEAR(q.real(), ref, 1e-11 * ref);
    }
  }
}

TEST(InnerProduct, SpectralMatchesPointwise) {
  auto g = oracle::rng(25);
  for (int n : {2, 5}) {
    const auto ctx = make_context(n);
    const auto f = random_spectrum(ctx, 12, g, true), h = random_spectrum(ctx, 12, g, true);
    const auto rule = gauss_gegenbauer(ctx, 20);
    const auto pw = zonal_inner_product([&](double t) { return synthesize(f, t); },
                                        [&](double t) { return synthesize(h, t); }, rule);
    const auto sp = inner_product(f, h);
    EXPECT_NEAR(std::abs(pw - sp), 0.0, 1e-10 * std::abs(sp));
    EXPECT_NEAR(l2_norm(f) * l2_norm(f), inner_product(f, f).real(), 1e-12 * l2_norm(f) * l2_norm(f));
  }
}

TEST(Laplace, Examples) {
  const auto c2 = make_context(2);
  const auto d = laplace_beltrami(real_spectrum(c2, {5.0, 0, 1.0}));
  EXPECT_EQ(d[2].real(), -6.0);
  EXPECT_EQ(d[0].real(), 0.0);
  EXPECT_EQ(laplace_eigenvalue(make_context(5), 3), -21.0);
  GeneralSpectrum f(make_context(5));
  f.entries[{3, "a"}] = {1.0, 1.0};
  EXPECT_EQ(laplace_beltrami(f).entries.at({3, "a"}), Complex(-21.0, -21.0));
}

TEST(Laplace, SelfAdjoint) {
  auto g = oracle::rng(26);
  for (int n = 2; n <= 8; ++n) {
    const auto ctx = make_context(n);
    const auto f = random_spectrum(ctx, 32, g, true), h = random_spectrum(ctx, 32, g, true);
    const auto lhs = inner_product(laplace_beltrami(f), h), rhs = inner_product(f, laplace_beltrami(h));
    EXPECT_NEAR(std::abs(lhs - rhs), 0.0, 1e-12 * std::abs(lhs));
  }
}

TEST(PoissonKernel, Examples) {
  for (int n : {2, 3, 8}) {
    const auto ctx = make_context(n);
    for (double t : {-1.0, 0.2, 1.0}) EXPECT_NEAR(poisson_kernel(ctx, 0.0, t), 1 / ctx.sigma_n(), 1e-16);
  }
  const auto c2 = make_context(2);
  EXPECT_NEAR(poisson_kernel(c2, 0.5, 1.0), 0.75 / (4 * std::numbers::pi * 0.125), 1e-14);
  EXPECT_NEAR(poisson_kernel(c2, 0.5, 1.0), 0.477465, 1e-6);
  EXPECT_NEAR(synthesize(poisson_kernel_spectrum(c2, 0.5, 500), 1.0).real() / c2.sigma_n(),
              poisson_kernel(c2, 0.5, 1.0), 1e-13);
  const auto c3 = make_context(3);
  const double closed = poisson_kernel(c3, 0.7, -0.2);
  EXPECT_NEAR(synthesize(poisson_kernel_spectrum(c3, 0.7, 300), -0.2).real() / c3.sigma_n(), closed,
              1e-10 * closed);
  EXPECT_THROW(poisson_kernel(c2, 1.0, 0.0), DomainError);
  EXPECT_THROW(poisson_kernel_spectrum(c2, -0.1, 3), DomainError);
}
