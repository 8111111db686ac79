#include <gtest/gtest.h>

#include <boost/math/special_functions/gamma.hpp>
#include <cmath>

#include "oracles.hpp"
#include "spheregreen/errors.hpp"
#include "spheregreen/wavelets.hpp"

using namespace spheregreen;

namespace {

// Poisson wavelet coefficient from the defining formula with boost's Gamma.
double poisson_hat(double lambda, int d, double rho, int l) {
  const double x = rho * l;
  return std::pow(2.0, d) / std::sqrt(boost::math::tgamma(2.0 * d)) * std::pow(x, d) * std::exp(-x) *
         (lambda + l) / lambda;
}

ZonalSpectrum zero_mean_random(const SphereContext& ctx, int l_max, std::mt19937_64& g) {
  ZonalSpectrum f(ctx, l_max);
  for (int l = 1; l <= l_max; ++l) f.coeffs[l] = {oracle::uniform(g, -1, 1), oracle::uniform(g, -1, 1)};
  return f;
}

double relative_error(const ZonalSpectrum& a, const ZonalSpectrum& b) {
  ZonalSpectrum d = a;
  for (int l = 0; l <= d.l_max(); ++l) d.coeffs[l] -= b[l];
  return l2_norm(d) / l2_norm(b);
}

const ScaleGrid& wide_grid() {
  static const ScaleGrid g = make_scale_grid(1e-9, 60.0, 400);
  return g;
}

}  // namespace

TEST(ScaleGrid, LogMeasure) {
  for (auto [lo, hi, count] : {std::tuple{1e-4, 50.0, 400}, {0.1, 3.0, 7}, {1e-9, 60.0, 2}}) {
    const auto g = make_scale_grid(lo, hi, count);
    double s = 0.0;
    for (double w : g.weights) s += w;
    EXPECT_NEAR(s, std::log(hi / lo), 1e-10);
    EXPECT_EQ(g.nodes.front(), lo);
    EXPECT_EQ(g.nodes.back(), hi);
  }
  EXPECT_THROW(make_scale_grid(1.0, 0.5, 10), DomainError);
  EXPECT_THROW(make_scale_grid(0.0, 0.5, 10), DomainError);
  EXPECT_THROW(make_scale_grid(0.1, 0.5, 1), DomainError);
}

TEST(PoissonWavelet, Examples) {
  const auto w1 = poisson_wavelet(make_context(2), 1);
  EXPECT_NEAR(w1.hat(1.0, 1).real(), 6.0 * std::exp(-1.0), 1e-15);
  EXPECT_NEAR(w1.hat(1.0, 1).real(), 2.207277, 1e-6);
  for (int d = 1; d <= 3; ++d) EXPECT_EQ(poisson_wavelet(make_context(5), d).hat(0.7, 0), Complex{});
  const auto w2 = poisson_wavelet(make_context(3), 2);
  EXPECT_NEAR(w2.hat(0.5, 2).real(), poisson_hat(1.0, 2, 0.5, 2), 1e-14);
  EXPECT_NEAR(w2.hat(0.5, 2).real(), 4 / std::sqrt(6.0) * std::exp(-1.0) * 3, 1e-15);
  EXPECT_NEAR(w2.hat(0.5, 2).real(), 1.802234, 1e-6);
  EXPECT_THROW(poisson_wavelet(make_context(2), 0), DomainError);
}

TEST(PoissonWavelet, MatchesFormula) {
  auto g = oracle::rng(31);
  for (int trial = 0; trial < 200; ++trial) {
    const int n = oracle::uniform_int(g, 2, 8), d = oracle::uniform_int(g, 1, 4), l = oracle::uniform_int(g, 0, 40);
    const double rho = std::exp(oracle::uniform(g, -8, 3));
    const double ref = poisson_hat((n - 1) / 2.0, d, rho, l);
    EXPECT_NEAR(poisson_wavelet(make_context(n), d).hat(rho, l).real(), ref, 1e-13 * std::max(1.0, ref));
  }
}

TEST(Admissibility, Examples) {
  const auto c2 = make_context(2);
  const auto w1 = poisson_wavelet(c2, 1);
  const auto rep = check_admissibility(w1, w1, 3, wide_grid());
  EXPECT_EQ(rep.entries[0].integral, Complex{});
  EXPECT_EQ(rep.entries[0].target, 0.0);
  EXPECT_NEAR(rep.entries[1].integral.real(), 9.0, 1e-6);
  for (int n : {2, 4, 7}) {
    const auto w2 = poisson_wavelet(make_context(n), 2);
    EXPECT_LE(check_admissibility(w2, w2, 3, wide_grid()).entries[3].deviation, 1e-6);
  }
}

TEST(Admissibility, PoissonFamiliesAllDegrees) {
  for (int n = 2; n <= 8; ++n)
    for (int d = 1; d <= 3; ++d) {
      const auto w = poisson_wavelet(make_context(n), d);
      const auto rep = check_admissibility(w, w, 32, wide_grid());
      EXPECT_LE(rep.max_deviation, 1e-6) << n << ' ' << d;
      for (const auto& e : rep.entries) EXPECT_LE(e.deviation, 1e-6 * std::max(1.0, e.target));
    }
}

TEST(Admissibility, NarrowGridIsReported) {
  const auto w = poisson_wavelet(make_context(3), 1);
  try {
    check_admissibility(w, w, 5, make_scale_grid(1e-2, 5.0, 100));
    FAIL() << "expected a truncation error";
  } catch (const TruncationError& e) {
    EXPECT_GT(std::max(e.low_tail(), e.high_tail()), 1e-12);
  }
}

TEST(Reconstruction, PoissonIsSelfDual) {
  const auto psi = poisson_wavelet(make_context(2), 1);
  const auto omega = reconstruction_wavelet(psi, 32, wide_grid());
  for (double rho : {1e-3, 0.1, 1.0, 7.5})
    for (int l = 0; l <= 40; ++l) EXPECT_NEAR(std::abs(omega.hat(rho, l) - psi.hat(rho, l)), 0.0, 1e-6);
}

TEST(Reconstruction, UnnormalizedFamily) {
  const auto ctx = make_context(3);
  WaveletFamily psi{ctx, [](double rho, int l) { return Complex(rho * l * std::exp(-rho * l)); }, "raw"};
  const auto omega = reconstruction_wavelet(psi, 20, wide_grid());
  const double lam = ctx.lambda();
  for (int l : {1, 5, 20}) {
    // int (rho l)^2 e^{-2 rho l} d rho / rho = 1/4
    const double alpha = std::pow(lam / (lam + l), 2) * 0.25;
    EXPECT_NEAR(admissibility_constant(psi, l, wide_grid()), alpha, 1e-9 * alpha);
    EXPECT_NEAR(omega.hat(0.3, l).real(), psi.hat(0.3, l).real() / alpha, 1e-7 * std::abs(omega.hat(0.3, l)));
  }
  EXPECT_LE(check_admissibility(psi, omega, 20, wide_grid()).max_deviation, 1e-6);
}

TEST(Reconstruction, VanishingDegreeIsNamed) {
  const auto base = poisson_wavelet(make_context(2), 1);
  WaveletFamily psi{base.ctx, [base](double rho, int l) { return l == 5 ? Complex{} : base.hat(rho, l); }, "hole"};
  try {
    reconstruction_wavelet(psi, 10, wide_grid());
    FAIL() << "expected an error";
  } catch (const DomainError& e) {
    EXPECT_NE(std::string(e.what()).find("l=5"), std::string::npos) << e.what();
  }
}

TEST(Transform, Examples) {
  const auto c2 = make_context(2);
  const auto psi = poisson_wavelet(c2, 1);
  const auto grid = make_scale_grid(0.5, 2.0, 3);  // middle node is rho = 1
  ASSERT_NEAR(grid.nodes[1], 1.0, 1e-15);
  const auto w = wavelet_transform(psi, real_spectrum(c2, {0, 1}), grid);
  EXPECT_NEAR(w.per_scale[1][1].real(), 2 * std::exp(-1.0), 1e-15);
  const auto z = wavelet_transform(psi, ZonalSpectrum(c2, 8), grid);
  for (const auto& s : z.per_scale)
    for (const auto& c : s.coeffs) EXPECT_EQ(c, Complex{});
}

TEST(Transform, DecaysLikeFirstOrderWavelet) {
  const auto ctx = make_context(4);
  auto g = oracle::rng(32);
  const auto f = zero_mean_random(ctx, 16, g);
  const auto grid = make_scale_grid(1e-3, 10.0, 50);
  const auto w = wavelet_transform(poisson_wavelet(ctx, 1), f, grid);
  const double lam = ctx.lambda();
  for (int i = 0; i < grid.count; ++i)
    for (int l = 1; l <= 16; ++l) {
      const double rho = grid.nodes[i];
      const Complex ref = lam / (lam + l) * f[l] * (2.0 * rho * l * std::exp(-rho * l)) * (lam + l) / lam;
      EXPECT_NEAR(std::abs(w.per_scale[i][l] - ref), 0.0, 1e-14 * std::max(1.0, std::abs(ref)));
    }
}

TEST(Transform, Linearity) {
  const auto ctx = make_context(3);
  auto g = oracle::rng(33);
  const auto f = zero_mean_random(ctx, 12, g), h = zero_mean_random(ctx, 12, g);
  const Complex a(0.3, -1.2), b(2.5, 0.0);
  ZonalSpectrum comb(ctx, 12);
  for (int l = 0; l <= 12; ++l) comb.coeffs[l] = a * f[l] + b * h[l];
  const auto grid = make_scale_grid(1e-3, 20.0, 40);
  const auto psi = poisson_wavelet(ctx, 2);
  const auto wf = wavelet_transform(psi, f, grid), wh = wavelet_transform(psi, h, grid),
             wc = wavelet_transform(psi, comb, grid);
  for (int i = 0; i < grid.count; ++i)
    for (int l = 0; l <= 12; ++l) {
      const Complex ref = a * wf.per_scale[i][l] + b * wh.per_scale[i][l];
      EXPECT_NEAR(std::abs(wc.per_scale[i][l] - ref), 0.0, 1e-14 * std::max(1.0, std::abs(ref)));
    }
}

TEST(Inverse, RoundTripSingleDegree) {
  const auto c2 = make_context(2);
  const auto psi = poisson_wavelet(c2, 1);
  const auto grid = make_scale_grid();
  const auto back = inverse_transform(psi, wavelet_transform(psi, real_spectrum(c2, {0, 0, 1}), grid), grid);
  EXPECT_NEAR(back[2].real(), 1.0, 1e-4);
  EXPECT_NEAR(std::abs(back[1]), 0.0, 1e-15);
  const auto zero = inverse_transform(psi, wavelet_transform(psi, ZonalSpectrum(c2, 5), grid), grid);
  EXPECT_EQ(l2_norm(zero), 0.0);
}

TEST(Inverse, RandomRoundTripAndRefinement) {
  auto g = oracle::rng(34);
  const std::vector<ScaleGrid> grids = {make_scale_grid(1e-2, 20.0, 100), make_scale_grid(1e-3, 30.0, 200),
                                        make_scale_grid(1e-4, 50.0, 400), make_scale_grid(1e-5, 60.0, 800)};
  for (int n : {2, 3, 5, 8})
    for (int d : {1, 2}) {
      const auto ctx = make_context(n);
      const auto psi = poisson_wavelet(ctx, d);
      const auto f = zero_mean_random(ctx, 32, g);
      double previous = INFINITY;
      for (std::size_t k = 0; k < grids.size(); ++k) {
        const double err = relative_error(inverse_transform(psi, wavelet_transform(psi, f, grids[k]), grids[k]), f);
        if (k == 2) {
          EXPECT_LE(err, 1e-3) << n << ' ' << d;
        }
        EXPECT_LT(err, previous) << n << ' ' << d << ' ' << k;
        previous = err;
      }
    }
}

TEST(Inverse, GridMismatch) {
  const auto ctx = make_context(2);
  const auto psi = poisson_wavelet(ctx, 1);
  const auto w = wavelet_transform(psi, real_spectrum(ctx, {0, 1}), make_scale_grid(1e-3, 10, 20));
  EXPECT_THROW(inverse_transform(psi, w, make_scale_grid(1e-3, 10, 21)), DomainError);
  EXPECT_THROW(wavelet_transform(psi, real_spectrum(make_context(3), {0, 1}), make_scale_grid()), ContextMismatch);
}
