#pragma once

#include <compare>
#include <map>
#include <string>

#include "spheregreen/closedform/poly.hpp"

namespace spheregreen::closedform {

// Logarithmic factor of a term; D = 1 - 2tR + R^2.
enum class LogKind {
  kNone,
  kShift,     // ln(R - t + sqrt D)
  kOneMinus,  // ln(1 - tR + sqrt D)
  kLnR,       // ln R
  kLn1mt,     // ln(1 - t)
  kLn2,       // ln 2
};

struct TermKey {
  int d_half = 0;  // power of D in halves
  LogKind log = LogKind::kNone;
  auto operator<=>(const TermKey&) const = default;
};

// Sum of c(t,R) D^{d_half/2} log-factor with exact coefficients.
class RationalLogExpression {
 public:
  const std::map<TermKey, RPoly>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }

  void add(int d_half, LogKind log, const RPoly& c);
  void add(const TermKey& k, const RPoly& c) { add(k.d_half, k.log, c); }
  RationalLogExpression& operator+=(const RationalLogExpression& o);
  RationalLogExpression& operator-=(const RationalLogExpression& o);
  friend RationalLogExpression operator+(RationalLogExpression a, const RationalLogExpression& b) { return a += b; }
  friend RationalLogExpression operator-(RationalLogExpression a, const RationalLogExpression& b) { return a -= b; }
  // Multiplies every coefficient by p.
  RationalLogExpression times(const RPoly& p) const;
  friend bool operator==(const RationalLogExpression& a, const RationalLogExpression& b) {
    return a.terms_ == b.terms_;
  }

  long double eval(long double t, long double R) const;
  std::string to_string() const;

 private:
  std::map<TermKey, RPoly> terms_;
};

// Atoms of a function of t alone after setting R = 1; W = sqrt(2 - 2t).
enum class Atom { kOne, kW, kLn1mt, kLn2, kLnW };

class ClosedExpression {
 public:
  void add(Atom a, const TCoef& c);
  TCoef coefficient(Atom a) const;
  const std::map<Atom, TCoef>& terms() const { return c_; }
  ClosedExpression& operator+=(const ClosedExpression& o);
  ClosedExpression& operator-=(const ClosedExpression& o);
  friend ClosedExpression operator+(ClosedExpression a, const ClosedExpression& b) { return a += b; }
  friend ClosedExpression operator-(ClosedExpression a, const ClosedExpression& b) { return a -= b; }
  ClosedExpression scaled(const TCoef& s) const;
  friend bool operator==(const ClosedExpression& a, const ClosedExpression& b) { return a.c_ == b.c_; }

  long double eval(long double t) const;
  // c ln(1-t) - c ln 2 is shown as c ln((1-t)/2).
  std::string to_string() const;
  std::string to_latex() const;

 private:
  std::string render(bool latex) const;
  std::map<Atom, TCoef> c_;
};

// Monomial t^i tt^j RR^k in the shifted variables tt = 1 - t^2, RR = R - t.
struct BoldMonomial {
  int t_pow = 0;
  int tb_pow = 0;
  int rb_pow = 0;
  auto operator<=>(const BoldMonomial&) const = default;
};

// Sum of monomials times (tt + RR^2)^{d_half/2}, optionally times ln(RR + sqrt(tt + RR^2)).
class BoldExpression {
 public:
  using Key = std::pair<int, bool>;  // (d_half, has log)

  void add(int d_half, bool log, const BoldMonomial& m, const Rational& c);
  const std::map<Key, std::map<BoldMonomial, Rational>>& terms() const { return terms_; }
  BoldExpression& operator+=(const BoldExpression& o);

  // tt and RR are free here; t only enters through explicit t powers.
  long double eval(long double t, long double tb, long double Rb) const;
  // Substitutes tt = 1 - t^2 and RR = R - t.
  RationalLogExpression to_rational_log() const;
  std::string to_string() const;

 private:
  std::map<Key, std::map<BoldMonomial, Rational>> terms_;
};

}  // namespace spheregreen::closedform
