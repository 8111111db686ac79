#pragma once

#include <span>
#include <vector>

namespace spheregreen {

// Dimension bookkeeping for the unit sphere S^n in R^{n+1}.
class SphereContext {
 public:
  explicit SphereContext(int n);

  int n() const { return n_; }
  double lambda() const { return lambda_; }
  // Total surface measure 2 pi^{(n+1)/2} / Gamma((n+1)/2).
  double sigma_n() const { return sigma_; }

  friend bool operator==(const SphereContext& a, const SphereContext& b) { return a.n_ == b.n_; }

 private:
  int n_;
  double lambda_;
  double sigma_;
};

SphereContext make_context(int n);

// Surface measure of S^m, valid for m >= 0 (S^0 is two points).
double surface_measure(int m);

// C_l^lambda(t) by the forward three-term recurrence.
double gegenbauer(const SphereContext& ctx, int l, double t);
std::vector<double> gegenbauer_batch(const SphereContext& ctx, int l_max, double t);

// Same recurrence for an arbitrary order lambda > 0; fills out[0..size-1].
void gegenbauer_fill(double lambda, double t, std::span<double> out);
double gegenbauer_value(double lambda, int l, double t);

// C_l^lambda(1) = binom(l + 2 lambda - 1, l).
double gegenbauer_at_one(double lambda, int l);

// Clamps roundoff excursions outside [-1,1]; throws DomainError otherwise.
double checked_argument(double t);

}  // namespace spheregreen
