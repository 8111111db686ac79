#include "spheregreen/closedform/lemmas.hpp"

#include <cmath>
#include <mutex>

#include "spheregreen/errors.hpp"

namespace spheregreen::closedform {

namespace {

Poly constant(const Rational& c) { return Poly(c); }

int half_index(const Rational& lambda) {
  // lambda = m + 1/2 with m >= 0
  const Rational twice = lambda * 2;
  if (denominator(twice) != 1 || numerator(twice) % 2 == 0 || lambda <= 0) {
    throw DomainError("lambda must be a positive half-integer");
  }
  return static_cast<int>((numerator(twice) - 1) / 2);
}

Rational sign(int e) { return e % 2 == 0 ? 1 : -1; }

}  // namespace

bool RecurrenceTable::contains(const std::string& name, const std::vector<int>& idx) const {
  return entries.count({name, idx}) > 0;
}

const Poly& RecurrenceTable::at(const std::string& name, const std::vector<int>& idx) const {
  auto it = entries.find({name, idx});
  if (it == entries.end()) throw DomainError("index outside the recurrence table " + family);
  return it->second;
}

Rational double_factorial(int m) {
  Rational r = 1;
  for (int i = m; i > 1; i -= 2) r *= i;
  return r;
}

Rational binomial(int n, int k) {
  if (k < 0 || n < 0 || k > n) return 0;
  Rational r = 1;
  for (int i = 0; i < k; ++i) r = r * (n - i) / (i + 1);
  return r;
}

RecurrenceTable q_polynomials(const Rational& lambda) {
  const int m = half_index(lambda);  // j runs to lambda - 3/2 = m - 1
  RecurrenceTable tab{"Q", {}};
  std::vector<Poly> q;
  for (int j = 0; j <= m - 1; ++j) {
    Poly v;
    if (j == 0) {
      v = constant(1 / (2 * (lambda - 1)));
    } else {
      Poly lin(std::vector<Rational>{2 * lambda - 2 * j - 1, 2 * (lambda - j)});
      v = lin * q[j - 1];
      if (j >= 2) v -= Poly::monomial(1, 2 * lambda - 2 * j + 1) * q[j - 2];
      v *= 1 / (2 * (lambda - j - 1));
    }
    tab.entries[{"Q", {j}}] = v;
    q.push_back(std::move(v));
  }
  return tab;
}

Rational inverse_power_log_coefficient(int kappa, int J) {
  if (kappa < J) return 0;
  const int d = kappa - J;
  Rational pow2 = 1;
  for (int i = 0; i < d; ++i) pow2 *= 2;
  Rational fact = 1;
  for (int i = 2; i <= d; ++i) fact *= i;
  return sign(d) * double_factorial(2 * kappa - 1) / (pow2 * fact * double_factorial(2 * J - 1));
}

std::vector<Rational> inverse_power_coefficients(int kappa, int J) {
  const Rational a = inverse_power_log_coefficient(kappa, J);
  std::vector<Rational> out;
  Rational prev = 0;  // a_{-1}
  for (int i = 0; i < kappa; ++i) {
    const Rational v = (2 * Rational(J - i) * prev - a * binomial(J, i)) / (2 * i + 1);
    out.push_back(v);
    prev = v;
  }
  return out;
}

RecurrenceTable inverse_power_table(int kappa, int J) {
  RecurrenceTable tab{"a", {}};
  tab.entries[{"a", {}}] = constant(inverse_power_log_coefficient(kappa, J));
  const auto ai = inverse_power_coefficients(kappa, J);
  for (int i = 0; i < static_cast<int>(ai.size()); ++i) tab.entries[{"a_iota", {i}}] = constant(ai[i]);
  return tab;
}

RecurrenceTable shifted_power_table(int L, int J) {
  RecurrenceTable tab{"alpha/beta/gamma/mu", {}};
  for (int k = 0; k <= J - 1; ++k) {
    for (int i = 0; i <= J - k - 1; ++i) {
      tab.entries[{"alpha", {k, i}}] =
          constant(binomial(L, 2 * k) * binomial(J - k - 1, i) * sign(J - k - i - 1) / (2 * (J - i) - 1));
    }
  }
  for (int k = J; k <= L / 2; ++k) {
    const auto ai = inverse_power_coefficients(k, J);
    for (int i = 0; i <= k - 1; ++i) tab.entries[{"beta", {k, i}}] = constant(binomial(L, 2 * k) * ai[i]);
    tab.entries[{"mu", {k}}] = constant(binomial(L, 2 * k) * inverse_power_log_coefficient(k, J));
  }
  if (L >= 1) {
    for (int k = 0; k <= (L - 1) / 2; ++k) {
      for (int i = 0; i <= k; ++i) {
        tab.entries[{"gamma", {k, i}}] =
            constant(binomial(L, 2 * k + 1) * binomial(k, i) * sign(k - i + 1) / (2 * (J - i) - 1));
      }
    }
  }
  return tab;
}

RecurrenceTable log_moment_table(int k) {
  if (k < 0) throw DomainError("log integral needs k >= 0");
  RecurrenceTable tab{"pi", {}};
  if (k == 0) {
    tab.entries[{"q", {}}] = Poly(1);
    return tab;
  }
  std::vector<Poly> pi(static_cast<std::size_t>(k) + 2);  // pi_k = pi_{k+1} = 0
  pi[k - 1] = constant(Rational(1, k * (k + 1)));
  for (int j = k - 2; j >= 0; --j) {
    pi[j] = Poly::monomial(1, 2 * j + 3) * pi[j + 1] - pi[j + 2] * Rational(j + 2);
    pi[j] *= frac(1, j + 1);
  }
  for (int j = 0; j < k; ++j) tab.entries[{"pi", {j}}] = pi[j];
  tab.entries[{"q", {}}] = Poly::x() * pi[0] - pi[1];
  return tab;
}

BoldExpression integral_I_expression(int k, int J) {
  if (k < 0 || J < 0) throw DomainError("integral_I needs k, J >= 0");
  BoldExpression e;
  if (k % 2 == 1) {
    const int kappa = (k - 1) / 2;
    for (int i = 0; i <= kappa; ++i) {
      e.add(-(2 * (J - i) - 1), false, {0, kappa - i, 0},
            binomial(kappa, i) * sign(kappa - i + 1) / (2 * (J - i) - 1));
    }
    return e;
  }
  const int kappa = k / 2;
  if (kappa < J) {
    for (int i = 0; i <= J - kappa - 1; ++i) {
      e.add(-(2 * (J - i) - 1), false, {0, kappa - J, 2 * J - 2 * i - 1},
            binomial(J - kappa - 1, i) * sign(J - kappa - i - 1) / (2 * (J - i) - 1));
    }
    return e;
  }
  const auto ai = inverse_power_coefficients(kappa, J);
  for (int i = 0; i < kappa; ++i) e.add(-(2 * J - 1), false, {0, kappa - i - 1, 2 * i + 1}, ai[i]);
  e.add(0, true, {0, kappa - J, 0}, inverse_power_log_coefficient(kappa, J));
  return e;
}

double integral_I(int k, int J, double tb, double Rb) {
  if (tb == 0.0) throw DomainError("integral_I requires tt != 0");
  if (tb + Rb * Rb <= 0.0) throw DomainError("tt + RR^2 must be positive");
  return static_cast<double>(integral_I_expression(k, J).eval(0.0L, tb, Rb));
}

BoldExpression integral_script_I_expression(int L, int J) {
  if (L < 0 || J < 0) throw DomainError("integral_script_I needs L, J >= 0");
  const RecurrenceTable tab = shifted_power_table(L, J);
  BoldExpression e;
  for (const auto& [key, v] : tab.entries) {
    const auto& [name, idx] = key;
    const Rational c = v[0];
    if (name == "alpha") {
      const int k = idx[0], i = idx[1];
      e.add(2 * i - 2 * J + 1, false, {L - 2 * k, k - J, 2 * J - 2 * i - 1}, c);
    } else if (name == "beta") {
      const int k = idx[0], i = idx[1];
      e.add(1 - 2 * J, false, {L - 2 * k, k - i - 1, 2 * i + 1}, c);
    } else if (name == "gamma") {
      const int k = idx[0], i = idx[1];
      e.add(2 * i - 2 * J + 1, false, {L - 2 * k - 1, k - i, 0}, c);
    } else if (name == "mu") {
      const int k = idx[0];
      e.add(0, true, {L - 2 * k, k - J, 0}, c);
    }
  }
  return e;
}

BoldExpression integral_script_I_by_binomial(int L, int J) {
  BoldExpression e;
  for (int k = 0; k <= L; ++k) {
    const BoldExpression ik = integral_I_expression(k, J);
    for (const auto& [key, bucket] : ik.terms()) {
      for (const auto& [m, c] : bucket) {
        e.add(key.first, key.second, {m.t_pow + L - k, m.tb_pow, m.rb_pow}, c * binomial(L, k));
      }
    }
  }
  return e;
}

double integral_script_I(int L, int J, double t, double R) {
  if (std::abs(t) >= 1.0) throw DomainError("integral_script_I requires |t| < 1");
  if (1.0 - 2.0 * t * R + R * R <= 0.0) throw DomainError("1 - 2tR + R^2 must be positive");
  return static_cast<double>(integral_script_I_expression(L, J).eval(t, 1.0L - t * t, R - t));
}

RationalLogExpression log_integral_expression(int k) {
  const RecurrenceTable tab = log_moment_table(k);
  RationalLogExpression e;
  RPoly p;
  for (int j = 0; j < k; ++j) p.add(j, TCoef(tab.at("pi", {j})));
  e.add(1, LogKind::kNone, p);
  e.add(0, LogKind::kShift, RPoly(TCoef(tab.at("q", {}))));
  e.add(0, LogKind::kOneMinus, RPoly::monomial(k + 1, frac(1, k + 1)));
  e.add(0, LogKind::kNone, RPoly::monomial(k + 1, Rational(-1, (k + 1) * (k + 1))));
  return e;
}

double log_integral(int k, double t, double R) {
  const double d = 1.0 - 2.0 * t * R + R * R;
  if (d <= 0.0 || 1.0 - t * R + std::sqrt(d) <= 0.0 || R - t + std::sqrt(d) <= 0.0) {
    throw DomainError("log arguments must be positive");
  }
  return static_cast<double>(log_integral_expression(k).eval(t, R));
}

RationalLogExpression kernel_antiderivative_expression(const Rational& lambda) {
  const int m = half_index(lambda);  // j = 1..m
  const RecurrenceTable q = q_polynomials(lambda);
  const Poly tb(std::vector<Rational>{1, 0, -1});
  const int two_lambda = 2 * m + 1;
  RationalLogExpression e;
  e.add(-two_lambda, LogKind::kNone, RPoly(TCoef(1 / lambda)));
  for (int j = 1; j <= m; ++j) {
    e.add(-(two_lambda - 2 * j), LogKind::kNone, RPoly(TCoef(1 / (2 * (lambda - j)))));
    const Poly qt = q.at("Q", {j - 1}).compose(tb);
    const TCoef c = TCoef(Poly::x() * qt).times_factors(-j, -j);
    e.add(-(two_lambda - 2 * j), LogKind::kNone, RPoly::shifted_power(1) * c);
  }
  e.add(0, LogKind::kOneMinus, RPoly(TCoef(-1)));
  return e;
}

double kernel_antiderivative(const Rational& lambda, double t, double r) {
  if (std::abs(t) >= 1.0) throw DomainError("kernel_antiderivative requires |t| < 1");
  return static_cast<double>(kernel_antiderivative_expression(lambda).eval(t, r));
}

}  // namespace spheregreen::closedform
