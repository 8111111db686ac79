#include "spheregreen/closedform/expression.hpp"

#include <cmath>
#include <sstream>

namespace spheregreen::closedform {

namespace {

long double log_factor(LogKind k, long double t, long double R, long double sq) {
  switch (k) {
    case LogKind::kNone:
      return 1.0L;
    case LogKind::kShift:
      return std::log(R - t + sq);
    case LogKind::kOneMinus:
      return std::log(1.0L - t * R + sq);
    case LogKind::kLnR:
      return std::log(R);
    case LogKind::kLn1mt:
      return std::log(1.0L - t);
    case LogKind::kLn2:
      return std::log(2.0L);
  }
  return 0.0L;
}

const char* log_text(LogKind k) {
  switch (k) {
    case LogKind::kNone:
      return "";
    case LogKind::kShift:
      return " ln(R - t + sqrt D)";
    case LogKind::kOneMinus:
      return " ln(1 - tR + sqrt D)";
    case LogKind::kLnR:
      return " ln R";
    case LogKind::kLn1mt:
      return " ln(1 - t)";
    case LogKind::kLn2:
      return " ln 2";
  }
  return "";
}

}  // namespace

void RationalLogExpression::add(int d_half, LogKind log, const RPoly& c) {
  if (c.is_zero()) return;
  const TermKey key{d_half, log};
  auto it = terms_.find(key);
  if (it == terms_.end()) {
    terms_.emplace(key, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

RationalLogExpression& RationalLogExpression::operator+=(const RationalLogExpression& o) {
  for (const auto& [k, c] : o.terms_) add(k, c);
  return *this;
}

RationalLogExpression& RationalLogExpression::operator-=(const RationalLogExpression& o) {
  for (const auto& [k, c] : o.terms_) add(k, c * TCoef(-1));
  return *this;
}

RationalLogExpression RationalLogExpression::times(const RPoly& p) const {
  RationalLogExpression r;
  for (const auto& [k, c] : terms_) r.add(k, c * p);
  return r;
}

long double RationalLogExpression::eval(long double t, long double R) const {
  const long double d = 1.0L - 2.0L * t * R + R * R;
  const long double sq = std::sqrt(d);
  long double s = 0.0L;
  for (const auto& [k, c] : terms_) {
    const long double dp = k.d_half % 2 == 0 ? std::pow(d, k.d_half / 2) : std::pow(sq, k.d_half);
    s += c.eval(t, R) * dp * log_factor(k.log, t, R, sq);
  }
  return s;
}

std::string RationalLogExpression::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (const auto& [k, c] : terms_) {
    if (!out.empty()) out += "\n + ";
    out += "[";
    bool first = true;
    for (const auto& [p, tc] : c.terms()) {
      if (!first) out += " + ";
      first = false;
      out += "(" + tc.to_string() + ")";
      if (p != 0) out += " R^" + std::to_string(p);
    }
    out += "]";
    if (k.d_half != 0) out += " D^(" + std::to_string(k.d_half) + "/2)";
    out += log_text(k.log);
  }
  return out;
}

// ---------------------------------------------------------------------------

void ClosedExpression::add(Atom a, const TCoef& c) {
  if (c.is_zero()) return;
  auto it = c_.find(a);
  if (it == c_.end()) {
    c_.emplace(a, c);
    return;
  }
  it->second += c;
  if (it->second.is_zero()) c_.erase(it);
}

TCoef ClosedExpression::coefficient(Atom a) const {
  auto it = c_.find(a);
  return it == c_.end() ? TCoef() : it->second;
}

ClosedExpression& ClosedExpression::operator+=(const ClosedExpression& o) {
  for (const auto& [a, c] : o.c_) add(a, c);
  return *this;
}

ClosedExpression& ClosedExpression::operator-=(const ClosedExpression& o) {
  for (const auto& [a, c] : o.c_) add(a, -c);
  return *this;
}

ClosedExpression ClosedExpression::scaled(const TCoef& s) const {
  ClosedExpression r;
  for (const auto& [a, c] : c_) r.add(a, c * s);
  return r;
}

long double ClosedExpression::eval(long double t) const {
  const long double w = std::sqrt(2.0L - 2.0L * t);
  long double s = 0.0L;
  for (const auto& [a, c] : c_) {
    long double v = c.eval(t);
    switch (a) {
      case Atom::kOne:
        break;
      case Atom::kW:
        v *= w;
        break;
      case Atom::kLn1mt:
        v *= std::log(1.0L - t);
        break;
      case Atom::kLn2:
        v *= std::log(2.0L);
        break;
      case Atom::kLnW:
        v *= std::log(1.0L - t + w);
        break;
    }
    s += v;
  }
  return s;
}

std::string ClosedExpression::render(bool latex) const {
  std::vector<std::string> parts;
  auto with_factor = [&](const TCoef& c, const std::string& f) {
    std::string ct = c.to_string(latex);
    std::string sign;
    if (ct.front() == '-') {
      sign = "-";
      ct.erase(0, 1);
    }
    if (ct == "1") return sign + f;
    if (latex) return sign + ct + "\\," + f;
    const bool simple = ct.find_first_of("+/ ") == std::string::npos || (ct.front() == '(' && ct.back() == ')');
    return sign + (simple ? ct : "(" + ct + ")") + " " + f;
  };
  const std::string w = latex ? "\\sqrt{2-2t}" : "sqrt(2 - 2t)";
  if (auto it = c_.find(Atom::kOne); it != c_.end()) parts.push_back(it->second.to_string(latex));
  if (auto it = c_.find(Atom::kW); it != c_.end()) parts.push_back(with_factor(it->second, w));
  const TCoef l1 = coefficient(Atom::kLn1mt);
  const TCoef l2 = coefficient(Atom::kLn2);
  if (!l1.is_zero() && l1 == -l2) {
    parts.push_back(with_factor(l1, latex ? "\\ln\\left(\\frac{1-t}{2}\\right)" : "ln((1 - t)/2)"));
  } else {
    if (!l1.is_zero()) parts.push_back(with_factor(l1, latex ? "\\ln(1-t)" : "ln(1 - t)"));
    if (!l2.is_zero()) parts.push_back(with_factor(l2, latex ? "\\ln 2" : "ln 2"));
  }
  if (auto it = c_.find(Atom::kLnW); it != c_.end()) {
    parts.push_back(with_factor(it->second, latex ? "\\ln\\left(1-t+" + w + "\\right)" : "ln(1 - t + " + w + ")"));
  }
  if (parts.empty()) return "0";
  std::string out = parts.front();
  for (std::size_t i = 1; i < parts.size(); ++i) {
    if (parts[i].front() == '-') {
      out += " - " + parts[i].substr(1);
    } else {
      out += " + " + parts[i];
    }
  }
  return out;
}

std::string ClosedExpression::to_string() const { return render(false); }
std::string ClosedExpression::to_latex() const { return render(true); }

// ---------------------------------------------------------------------------

void BoldExpression::add(int d_half, bool log, const BoldMonomial& m, const Rational& c) {
  if (c == 0) return;
  auto& bucket = terms_[{d_half, log}];
  auto it = bucket.find(m);
  if (it == bucket.end()) {
    bucket.emplace(m, c);
  } else {
    it->second += c;
    if (it->second == 0) bucket.erase(it);
  }
  if (bucket.empty()) terms_.erase({d_half, log});
}

BoldExpression& BoldExpression::operator+=(const BoldExpression& o) {
  for (const auto& [k, bucket] : o.terms_) {
    for (const auto& [m, c] : bucket) add(k.first, k.second, m, c);
  }
  return *this;
}

long double BoldExpression::eval(long double t, long double tb, long double Rb) const {
  const long double d = tb + Rb * Rb;
  const long double sq = std::sqrt(d);
  long double s = 0.0L;
  for (const auto& [k, bucket] : terms_) {
    long double inner = 0.0L;
    for (const auto& [m, c] : bucket) {
      inner += to_long_double(c) * std::pow(t, m.t_pow) * std::pow(tb, m.tb_pow) * std::pow(Rb, m.rb_pow);
    }
    const long double dp = k.first % 2 == 0 ? std::pow(d, k.first / 2) : std::pow(sq, k.first);
    s += inner * dp * (k.second ? std::log(Rb + sq) : 1.0L);
  }
  return s;
}

RationalLogExpression BoldExpression::to_rational_log() const {
  RationalLogExpression out;
  for (const auto& [k, bucket] : terms_) {
    RPoly sum;
    for (const auto& [m, c] : bucket) {
      // t^i (1-t)^j (1+t)^j (R-t)^k
      const TCoef tc = TCoef(Poly::monomial(m.t_pow, c)).times_factors(m.tb_pow, m.tb_pow);
      sum += RPoly::shifted_power(m.rb_pow) * tc;
    }
    out.add(k.first, k.second ? LogKind::kShift : LogKind::kNone, sum);
  }
  return out;
}

std::string BoldExpression::to_string() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  bool first_group = true;
  for (const auto& [k, bucket] : terms_) {
    if (!first_group) os << " + ";
    first_group = false;
    os << "[";
    bool first = true;
    for (const auto& [m, c] : bucket) {
      if (!first) os << " + ";
      first = false;
      os << "(" << rational_text(c) << ")";
      if (m.t_pow) os << " t^" << m.t_pow;
      if (m.tb_pow) os << " tt^" << m.tb_pow;
      if (m.rb_pow) os << " RR^" << m.rb_pow;
    }
    os << "]";
    if (k.first) os << " (tt + RR^2)^(" << k.first << "/2)";
    if (k.second) os << " ln(RR + sqrt(tt + RR^2))";
  }
  return os.str();
}

}  // namespace spheregreen::closedform
