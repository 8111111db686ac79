#include "spheregreen/sphere.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <string>

#include "spheregreen/errors.hpp"
#include "spheregreen/spectrum_io.hpp"

namespace spheregreen {

namespace {

constexpr double kClampSlack = 1e-12;

// Shared by the single and batch entry points so both produce identical bits.
template <class Sink>
void run_recurrence(double lambda, double t, int l_max, Sink&& sink) {
  double prev2 = 1.0;
  sink(0, prev2);
  if (l_max == 0) return;
  double prev1 = 2.0 * lambda * t;
  sink(1, prev1);
  for (int l = 2; l <= l_max; ++l) {
    const double cur = (2.0 * (l + lambda - 1.0) * t * prev1 - (l + 2.0 * lambda - 2.0) * prev2) / l;
    sink(l, cur);
    prev2 = prev1;
    prev1 = cur;
  }
}

}  // namespace

double surface_measure(int m) {
  if (m < 0) throw DomainError("surface measure needs m >= 0");
  const double h = 0.5 * (m + 1);
  return 2.0 * std::pow(std::numbers::pi, h) / std::tgamma(h);
}

SphereContext::SphereContext(int n) : n_(n), lambda_(0.5 * (n - 1)), sigma_(0.0) {
  if (n < 2) throw DomainError("sphere dimension must be >= 2, got " + std::to_string(n));
  sigma_ = surface_measure(n);
}

SphereContext make_context(int n) { return SphereContext(n); }

double checked_argument(double t) {
  if (!(t >= -1.0 - kClampSlack && t <= 1.0 + kClampSlack)) {
    throw DomainError("argument t=" + format_number(t) + " outside [-1,1]");
  }
  return std::clamp(t, -1.0, 1.0);
}

void gegenbauer_fill(double lambda, double t, std::span<double> out) {
  if (out.empty()) return;
  run_recurrence(lambda, t, static_cast<int>(out.size()) - 1, [&](int l, double v) { out[l] = v; });
}

double gegenbauer_value(double lambda, int l, double t) {
  if (l < 0) throw DomainError("negative Gegenbauer degree");
  double last = 0.0;
  run_recurrence(lambda, t, l, [&](int, double v) { last = v; });
  return last;
}

double gegenbauer(const SphereContext& ctx, int l, double t) {
  return gegenbauer_value(ctx.lambda(), l, checked_argument(t));
}

std::vector<double> gegenbauer_batch(const SphereContext& ctx, int l_max, double t) {
  if (l_max < 0) throw DomainError("negative Gegenbauer degree");
  std::vector<double> out(static_cast<std::size_t>(l_max) + 1);
  gegenbauer_fill(ctx.lambda(), checked_argument(t), out);
  return out;
}

double gegenbauer_at_one(double lambda, int l) {
  double v = 1.0;
  for (int k = 1; k <= l; ++k) v *= (k + 2.0 * lambda - 1.0) / k;
  return v;
}

}  // namespace spheregreen
