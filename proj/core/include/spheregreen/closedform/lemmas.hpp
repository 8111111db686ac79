#pragma once

#include <map>
#include <string>
#include <utility>
#include <vector>

#include "spheregreen/closedform/expression.hpp"

namespace spheregreen::closedform {

// Exact coefficient families. Scalars are stored as constant polynomials;
// Q_j is a polynomial in tt = 1 - t^2, pi_j and q in t.
struct RecurrenceTable {
  using Index = std::pair<std::string, std::vector<int>>;

  std::string family;
  std::map<Index, Poly> entries;

  bool empty() const { return entries.empty(); }
  bool contains(const std::string& name, const std::vector<int>& idx) const;
  const Poly& at(const std::string& name, const std::vector<int>& idx) const;
};

Rational double_factorial(int m);  // m!! with (-1)!! = 1
Rational binomial(int n, int k);   // 0 outside 0 <= k <= n

// Q_0..Q_{lambda-3/2} for half-integer lambda; empty for lambda = 1/2.
RecurrenceTable q_polynomials(const Rational& lambda);

// a^{kappa,J+1/2} and a_iota^{kappa,J+1/2}, iota = 0..kappa-1.
Rational inverse_power_log_coefficient(int kappa, int J);
std::vector<Rational> inverse_power_coefficients(int kappa, int J);
RecurrenceTable inverse_power_table(int kappa, int J);

// alpha_{kappa,iota}, beta_{kappa,iota}, gamma_{kappa,iota}, mu_kappa for R^L / D^{J+1/2}.
RecurrenceTable shifted_power_table(int L, int J);

// pi_j^k (j = 0..k-1) and q_k.
RecurrenceTable log_moment_table(int k);

// int RR^k / (tt + RR^2)^{J+1/2} dRR.
BoldExpression integral_I_expression(int k, int J);
double integral_I(int k, int J, double tb, double Rb);

// int R^L / (1 - 2tR + R^2)^{J+1/2} dR, built from the A/B coefficient recurrence.
BoldExpression integral_script_I_expression(int L, int J);
double integral_script_I(int L, int J, double t, double R);
// Same antiderivative as sum_k binom(L,k) t^{L-k} I_{k,J+1/2}.
BoldExpression integral_script_I_by_binomial(int L, int J);

// int R^k ln(1 - tR + sqrt(1 - 2tR + R^2)) dR for k >= 0.
RationalLogExpression log_integral_expression(int k);
double log_integral(int k, double t, double R);

// int [(1 - r^2) / (r D^{lambda+1}) - 1/r] dr for half-integer lambda, in the
// variable R.
RationalLogExpression kernel_antiderivative_expression(const Rational& lambda);
double kernel_antiderivative(const Rational& lambda, double t, double r);

}  // namespace spheregreen::closedform
