#include "spheregreen/closedform/poly.hpp"

#include <boost/integer/common_factor.hpp>
#include <cmath>
#include <sstream>

namespace spheregreen::closedform {

using boost::multiprecision::cpp_int;

long double to_long_double(const Rational& r) { return r.convert_to<long double>(); }

std::string rational_text(const Rational& r) {
  std::ostringstream os;
  os << numerator(r);
  if (denominator(r) != 1) os << "/" << denominator(r);
  return os.str();
}

Poly::Poly(Rational c) {
  if (c != 0) c_.push_back(std::move(c));
}

Poly::Poly(std::vector<Rational> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::x() { return monomial(1); }

Poly Poly::monomial(int degree, const Rational& c) {
  std::vector<Rational> v(static_cast<std::size_t>(degree) + 1);
  v[degree] = c;
  return Poly(std::move(v));
}

void Poly::trim() {
  while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

Poly& Poly::operator+=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator-=(const Poly& o) {
  if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
  for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
  trim();
  return *this;
}

Poly& Poly::operator*=(const Poly& o) {
  if (is_zero() || o.is_zero()) {
    c_.clear();
    return *this;
  }
  std::vector<Rational> r(c_.size() + o.c_.size() - 1);
  for (std::size_t i = 0; i < c_.size(); ++i) {
    if (c_[i] == 0) continue;
    for (std::size_t j = 0; j < o.c_.size(); ++j) r[i + j] += c_[i] * o.c_[j];
  }
  c_ = std::move(r);
  trim();
  return *this;
}

Poly& Poly::operator*=(const Rational& s) {
  if (s == 0) {
    c_.clear();
    return *this;
  }
  for (auto& v : c_) v *= s;
  return *this;
}

Poly Poly::operator-() const {
  Poly r = *this;
  for (auto& v : r.c_) v = -v;
  return r;
}

Poly Poly::pow(int e) const {
  Poly r(1);
  Poly b = *this;
  while (e > 0) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

Poly Poly::derivative() const {
  std::vector<Rational> r;
  for (int i = 1; i <= degree(); ++i) r.push_back(c_[i] * i);
  return Poly(std::move(r));
}

Poly Poly::compose(const Poly& inner) const {
  Poly r;
  for (int i = degree(); i >= 0; --i) {
    r *= inner;
    r += Poly(c_[i]);
  }
  return r;
}

Poly Poly::divide_linear(const Rational& root, Rational* rem) const {
  if (is_zero()) {
    if (rem) *rem = 0;
    return {};
  }
  std::vector<Rational> q(c_.size() - 1);
  Rational carry = 0;
  for (int i = degree(); i >= 0; --i) {
    const Rational v = c_[i] + carry * root;
    if (i == 0) {
      if (rem) *rem = v;
    } else {
      q[i - 1] = v;
    }
    carry = v;
  }
  return Poly(std::move(q));
}

Rational Poly::eval(const Rational& x) const {
  Rational s = 0;
  for (int i = degree(); i >= 0; --i) s = s * x + c_[i];
  return s;
}

long double Poly::eval(long double x) const {
  long double s = 0;
  for (int i = degree(); i >= 0; --i) s = s * x + to_long_double(c_[i]);
  return s;
}

std::string Poly::to_string(const std::string& var, bool latex) const {
  if (is_zero()) return "0";
  std::string out;
  bool first = true;
  for (int i = 0; i <= degree(); ++i) {
    if (c_[i] == 0) continue;
    Rational a = abs(c_[i]);
    const bool neg = c_[i] < 0;
    if (first) {
      if (neg) out += "-";
    } else {
      out += neg ? " - " : " + ";
    }
    first = false;
    std::string coef;
    if (i == 0 || a != 1) {
      if (latex && denominator(a) != 1) {
        std::ostringstream os;
        os << "\\frac{" << numerator(a) << "}{" << denominator(a) << "}";
        coef = os.str();
      } else {
        coef = rational_text(a);
      }
    }
    out += coef;
    if (i >= 1) out += var;
    if (i >= 2) out += latex ? "^{" + std::to_string(i) + "}" : "^" + std::to_string(i);
  }
  return out;
}

// ---------------------------------------------------------------------------

TCoef::TCoef(Poly num, int a, int b) : num_(std::move(num)), a_(a), b_(b) { normalize(); }

void TCoef::normalize() {
  if (num_.is_zero()) {
    a_ = b_ = 0;
    return;
  }
  if (a_ < 0) {
    num_ *= Poly(std::vector<Rational>{1, -1}).pow(-a_);
    a_ = 0;
  }
  if (b_ < 0) {
    num_ *= Poly(std::vector<Rational>{1, 1}).pow(-b_);
    b_ = 0;
  }
  Rational rem;
  while (a_ > 0) {
    Poly q = num_.divide_linear(1, &rem);
    if (rem != 0) break;
    num_ = -q;  // N = q (t-1) = -q (1-t)
    --a_;
  }
  while (b_ > 0) {
    Poly q = num_.divide_linear(-1, &rem);
    if (rem != 0) break;
    num_ = q;
    --b_;
  }
}

TCoef& TCoef::operator+=(const TCoef& o) {
  if (o.is_zero()) return *this;
  if (is_zero()) return *this = o;
  const int A = std::max(a_, o.a_);
  const int B = std::max(b_, o.b_);
  const Poly one_minus(std::vector<Rational>{1, -1});
  const Poly one_plus(std::vector<Rational>{1, 1});
  Poly n1 = num_ * one_minus.pow(A - a_) * one_plus.pow(B - b_);
  n1 += o.num_ * one_minus.pow(A - o.a_) * one_plus.pow(B - o.b_);
  num_ = std::move(n1);
  a_ = A;
  b_ = B;
  normalize();
  return *this;
}

TCoef& TCoef::operator-=(const TCoef& o) { return *this += -o; }

TCoef& TCoef::operator*=(const TCoef& o) {
  num_ *= o.num_;
  a_ += o.a_;
  b_ += o.b_;
  normalize();
  return *this;
}

TCoef TCoef::operator-() const {
  TCoef r = *this;
  r.num_ = -r.num_;
  return r;
}

TCoef TCoef::times_factors(int p, int q) const { return TCoef(num_, a_ - p, b_ - q); }

long double TCoef::eval(long double t) const {
  long double v = num_.eval(t);
  if (a_) v /= std::pow(1.0L - t, a_);
  if (b_) v /= std::pow(1.0L + t, b_);
  return v;
}

std::string TCoef::to_string(bool latex) const {
  if (is_zero()) return "0";
  // Split N into content c and a primitive integer polynomial N'.
  cpp_int den_lcm = 1;
  for (const auto& v : num_.coeffs()) {
    if (v != 0) den_lcm = boost::integer::lcm(den_lcm, denominator(v));
  }
  cpp_int g = 0;
  std::vector<Rational> ints;
  for (const auto& v : num_.coeffs()) {
    Rational w = v * den_lcm;
    ints.push_back(w);
    if (w != 0) g = boost::integer::gcd(g, abs(numerator(w)));
  }
  Rational c = Rational(g) / Rational(den_lcm);
  for (auto& v : ints) v /= Rational(g);
  Poly prim(ints);
  int first = 0;
  while (prim[first] == 0) ++first;
  if (prim[first] < 0) {
    prim = -prim;
    c = -c;
  }
  const bool neg = c < 0;
  c = abs(c);
  const bool single = prim.degree() == first;  // one monomial
  std::string numtxt;
  if (prim == Poly(1)) {
    numtxt = rational_text(numerator(c));
  } else {
    const bool bare = single || (latex && numerator(c) == 1 && (denominator(c) != 1 || a_ || b_));
    numtxt = bare ? prim.to_string("t", latex) : "(" + prim.to_string("t", latex) + ")";
    if (numerator(c) != 1) numtxt = rational_text(numerator(c)) + numtxt;
  }
  std::string dentxt;
  if (denominator(c) != 1) dentxt += rational_text(denominator(c));
  auto factor = [&](const char* base, int e) {
    if (e == 0) return;
    dentxt += base;
    if (e > 1) dentxt += latex ? "^{" + std::to_string(e) + "}" : "^" + std::to_string(e);
  };
  factor("(1 - t)", a_);
  factor("(1 + t)", b_);
  std::string out = neg ? "-" : "";
  if (dentxt.empty()) return out + numtxt;
  if (latex) return out + "\\frac{" + numtxt + "}{" + dentxt + "}";
  const bool wrap = denominator(c) != 1 ? (a_ || b_) : ((a_ > 0) + (b_ > 0) > 1);
  return out + numtxt + "/" + (wrap ? "(" + dentxt + ")" : dentxt);
}

// ---------------------------------------------------------------------------

RPoly RPoly::monomial(int k, const TCoef& c) {
  RPoly r;
  r.add(k, c);
  return r;
}

RPoly RPoly::shifted_power(int m) {
  // sum_j binom(m,j) R^j (-t)^{m-j}
  RPoly r;
  Rational binom = 1;
  for (int j = 0; j <= m; ++j) {
    const Rational sign = ((m - j) % 2) ? -1 : 1;
    r.add(j, TCoef(Poly::monomial(m - j, binom * sign)));
    binom = binom * (m - j) / (j + 1);
  }
  return r;
}

RPoly RPoly::d_power(int m) {
  RPoly base;
  base.add(0, 1);
  base.add(1, TCoef(Poly::monomial(1, -2)));
  base.add(2, 1);
  RPoly r(1);
  for (int i = 0; i < m; ++i) r = r * base;
  return r;
}

void RPoly::add(int k, const TCoef& c) {
  if (c.is_zero()) return;
  auto it = terms_.find(k);
  if (it == terms_.end()) {
    terms_.emplace(k, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

TCoef RPoly::coefficient(int k) const {
  auto it = terms_.find(k);
  return it == terms_.end() ? TCoef() : it->second;
}

RPoly& RPoly::operator+=(const RPoly& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

RPoly& RPoly::operator-=(const RPoly& o) {
  for (const auto& [k, c] : o.terms_) add(k, -c);
  return *this;
}

RPoly operator*(const RPoly& a, const RPoly& b) {
  RPoly r;
  for (const auto& [i, x] : a.terms_) {
    for (const auto& [j, y] : b.terms_) r.add(i + j, x * y);
  }
  return r;
}

RPoly operator*(const RPoly& a, const TCoef& s) {
  RPoly r;
  if (s.is_zero()) return r;
  for (const auto& [k, c] : a.terms_) r.add(k, c * s);
  return r;
}

RPoly RPoly::shifted(int k) const {
  RPoly r;
  for (const auto& [i, c] : terms_) r.terms_.emplace(i + k, c);
  return r;
}

long double RPoly::eval(long double t, long double R) const {
  long double s = 0;
  for (const auto& [k, c] : terms_) s += c.eval(t) * std::pow(R, k);
  return s;
}

std::vector<Poly> gegenbauer_polys(const Rational& mu, int k_max) {
  std::vector<Poly> c;
  c.emplace_back(1);
  if (k_max >= 1) c.push_back(Poly::monomial(1, 2 * mu));
  for (int k = 2; k <= k_max; ++k) {
    Poly next = Poly::monomial(1, 2 * (k + mu - 1)) * c[k - 1] - c[k - 2] * Rational(k + 2 * mu - 2);
    next *= frac(1, k);
    c.push_back(std::move(next));
  }
  return c;
}

}  // namespace spheregreen::closedform
