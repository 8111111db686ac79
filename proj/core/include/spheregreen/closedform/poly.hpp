#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <map>
#include <string>
#include <vector>

namespace spheregreen::closedform {

using Rational = boost::multiprecision::cpp_rational;

// p/q for any non-zero q; cpp_rational rejects negative denominators.
inline Rational frac(long long p, long long q) { return q < 0 ? Rational(-p, -q) : Rational(p, q); }

long double to_long_double(const Rational& r);
std::string rational_text(const Rational& r);

// Dense univariate polynomial with exact rational coefficients.
class Poly {
 public:
  Poly() = default;
  Poly(Rational c);  // NOLINT(google-explicit-constructor)
  Poly(int c) : Poly(Rational(c)) {}  // NOLINT(google-explicit-constructor)
  explicit Poly(std::vector<Rational> coeffs);

  static Poly x();
  static Poly monomial(int degree, const Rational& c = 1);

  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  Rational operator[](int i) const { return i >= 0 && i <= degree() ? c_[i] : Rational(0); }
  const std::vector<Rational>& coeffs() const { return c_; }

  Poly& operator+=(const Poly& o);
  Poly& operator-=(const Poly& o);
  Poly& operator*=(const Poly& o);
  Poly& operator*=(const Rational& s);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend Poly operator*(Poly a, const Rational& s) { return a *= s; }
  friend Poly operator*(const Rational& s, Poly a) { return a *= s; }
  Poly operator-() const;
  friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

  Poly pow(int e) const;
  Poly derivative() const;
  Poly compose(const Poly& inner) const;
  // Quotient by (x - root); the remainder is returned through rem.
  Poly divide_linear(const Rational& root, Rational* rem) const;

  Rational eval(const Rational& x) const;
  long double eval(long double x) const;

  // "3 - 7t + t^2" style; LaTeX uses "t^{2}".
  std::string to_string(const std::string& var, bool latex = false) const;

 private:
  void trim();
  std::vector<Rational> c_;
};

// N(t) / ((1-t)^a (1+t)^b) with N not divisible by the displayed factors.
class TCoef {
 public:
  TCoef() = default;
  TCoef(Poly num, int a = 0, int b = 0);  // NOLINT(google-explicit-constructor)
  TCoef(const Rational& c) : TCoef(Poly(c)) {}  // NOLINT(google-explicit-constructor)
  TCoef(int c) : TCoef(Poly(c)) {}  // NOLINT(google-explicit-constructor)

  const Poly& num() const { return num_; }
  int pow_one_minus() const { return a_; }
  int pow_one_plus() const { return b_; }
  bool is_zero() const { return num_.is_zero(); }

  TCoef& operator+=(const TCoef& o);
  TCoef& operator-=(const TCoef& o);
  TCoef& operator*=(const TCoef& o);
  friend TCoef operator+(TCoef a, const TCoef& b) { return a += b; }
  friend TCoef operator-(TCoef a, const TCoef& b) { return a -= b; }
  friend TCoef operator*(TCoef a, const TCoef& b) { return a *= b; }
  TCoef operator-() const;
  friend bool operator==(const TCoef& x, const TCoef& y) {
    return x.num_ == y.num_ && x.a_ == y.a_ && x.b_ == y.b_;
  }

  // Multiplies by (1-t)^p (1+t)^q; negative exponents divide.
  TCoef times_factors(int p, int q) const;

  long double eval(long double t) const;
  std::string to_string(bool latex = false) const;

 private:
  void normalize();
  Poly num_;
  int a_ = 0;
  int b_ = 0;
};

// Laurent polynomial in R with TCoef coefficients.
class RPoly {
 public:
  RPoly() = default;
  RPoly(TCoef c) { add(0, c); }  // NOLINT(google-explicit-constructor)
  static RPoly monomial(int k, const TCoef& c = 1);
  // (R - t)^m expanded in R.
  static RPoly shifted_power(int m);
  // (1 - 2tR + R^2)^m, m >= 0.
  static RPoly d_power(int m);

  const std::map<int, TCoef>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  void add(int k, const TCoef& c);
  TCoef coefficient(int k) const;
  int min_power() const { return terms_.empty() ? 0 : terms_.begin()->first; }
  int max_power() const { return terms_.empty() ? 0 : terms_.rbegin()->first; }

  RPoly& operator+=(const RPoly& o);
  RPoly& operator-=(const RPoly& o);
  friend RPoly operator+(RPoly a, const RPoly& b) { return a += b; }
  friend RPoly operator-(RPoly a, const RPoly& b) { return a -= b; }
  friend RPoly operator*(const RPoly& a, const RPoly& b);
  friend RPoly operator*(const RPoly& a, const TCoef& s);
  RPoly shifted(int k) const;  // times R^k
  friend bool operator==(const RPoly& a, const RPoly& b) { return a.terms_ == b.terms_; }

  long double eval(long double t, long double R) const;

 private:
  std::map<int, TCoef> terms_;
};

// C_k^mu(t) for any rational mu, by the three-term recurrence.
std::vector<Poly> gegenbauer_polys(const Rational& mu, int k_max);

}  // namespace spheregreen::closedform
