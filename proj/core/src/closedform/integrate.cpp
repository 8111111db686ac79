#include "spheregreen/closedform/integrate.hpp"

#include <mutex>
#include <tuple>

#include "spheregreen/closedform/lemmas.hpp"
#include "spheregreen/errors.hpp"

namespace spheregreen::closedform {

namespace {

[[noreturn]] void unsupported(int k, int d, const char* what) {
  throw UnsupportedError("no antiderivative rule for R^" + std::to_string(k) + " D^(" + std::to_string(d) + "/2) " +
                         what);
}

RationalLogExpression single(int d, LogKind log, const RPoly& c) {
  RationalLogExpression e;
  e.add(d, log, c);
  return e;
}

// int R^k with the log factor carried along unchanged (constant logs only).
RationalLogExpression power_rule(int k, LogKind carried) {
  if (k == -1) {
    if (carried != LogKind::kNone) unsupported(k, 0, "times a constant logarithm");
    return single(0, LogKind::kLnR, RPoly(1));
  }
  return single(0, carried, RPoly::monomial(k + 1, frac(1, k + 1)));
}

RationalLogExpression compute(int k, int d, LogKind log) {
  switch (log) {
    case LogKind::kNone: {
      if (d % 2 == 0) {
        if (d < 0) unsupported(k, d, "(rational part)");
        RationalLogExpression out;
        const RPoly dp = RPoly::d_power(d / 2);
        for (const auto& [j, c] : dp.terms()) out += power_rule(k + j, LogKind::kNone).times(c);
        return out;
      }
      if (d < 0) {
        const int J = (-d - 1) / 2;
        if (k >= 0) return integral_script_I_expression(k, J).to_rational_log();
        // R = 1/s turns R^{-m} D^{-(J+1/2)} dR into -s^{m+2J-1} D^{-(J+1/2)} ds.
        const int m = -k;
        RationalLogExpression out;
        out -= substitute_reciprocal(integral_script_I_expression(m + 2 * J - 1, J).to_rational_log());
        return out;
      }
      RationalLogExpression out;
      const RPoly dp = RPoly::d_power((d + 1) / 2);
      for (const auto& [j, c] : dp.terms()) {
        out += antiderivative_monomial(k + j, -1, LogKind::kNone).times(c);
      }
      return out;
    }
    case LogKind::kShift: {
      if (d != 0) unsupported(k, d, "ln(R - t + sqrt D)");
      if (k >= 0) {
        // d/dR ln(R - t + sqrt D) = D^{-1/2}
        RationalLogExpression out = single(0, LogKind::kShift, RPoly::monomial(k + 1, frac(1, k + 1)));
        out -= antiderivative_monomial(k + 1, -1, LogKind::kNone).times(RPoly(frac(1, k + 1)));
        return out;
      }
      if (k == -1) unsupported(k, d, "ln(R - t + sqrt D)");
      // R = 1/s: ln(R - t + sqrt D(R)) = ln(1 - ts + sqrt D(s)) - ln s.
      const int j = -k - 2;
      RationalLogExpression in_s = log_integral_expression(j);
      in_s -= antiderivative_monomial(j, 0, LogKind::kLnR);
      RationalLogExpression out;
      out -= substitute_reciprocal(in_s);
      return out;
    }
    case LogKind::kOneMinus: {
      if (d != 0) unsupported(k, d, "ln(1 - tR + sqrt D)");
      if (k >= 0) return log_integral_expression(k);
      if (k == -1) unsupported(k, d, "ln(1 - tR + sqrt D)");
      // R = 1/s: ln(1 - tR + sqrt D(R)) = ln(s - t + sqrt D(s)) - ln s.
      const int j = -k - 2;
      RationalLogExpression in_s = antiderivative_monomial(j, 0, LogKind::kShift);
      in_s -= antiderivative_monomial(j, 0, LogKind::kLnR);
      RationalLogExpression out;
      out -= substitute_reciprocal(in_s);
      return out;
    }
    case LogKind::kLnR: {
      if (d != 0 || k == -1) unsupported(k, d, "ln R");
      RationalLogExpression out = single(0, LogKind::kLnR, RPoly::monomial(k + 1, frac(1, k + 1)));
      out.add(0, LogKind::kNone, RPoly::monomial(k + 1, Rational(-1, (k + 1) * (k + 1))));
      return out;
    }
    case LogKind::kLn1mt:
    case LogKind::kLn2:
      if (d != 0) unsupported(k, d, "times a constant logarithm");
      return power_rule(k, log);
  }
  unsupported(k, d, "");
}

}  // namespace

const RationalLogExpression& antiderivative_monomial(int k, int d_half, LogKind log) {
  using Key = std::tuple<int, int, LogKind>;
  static std::recursive_mutex mu;
  static std::map<Key, RationalLogExpression> cache;
  std::lock_guard<std::recursive_mutex> lock(mu);
  const Key key{k, d_half, log};
  if (auto it = cache.find(key); it != cache.end()) return it->second;
  RationalLogExpression v = compute(k, d_half, log);
  return cache.emplace(key, std::move(v)).first->second;
}

RationalLogExpression antiderivative(const RationalLogExpression& e) {
  RationalLogExpression out;
  for (const auto& [key, c] : e.terms()) {
    for (const auto& [k, tc] : c.terms()) out += antiderivative_monomial(k, key.d_half, key.log).times(RPoly(tc));
  }
  return out;
}

RationalLogExpression substitute_reciprocal(const RationalLogExpression& e) {
  RationalLogExpression out;
  for (const auto& [key, c] : e.terms()) {
    // c(1/R) D(1/R)^{d/2} = c(1/R) D(R)^{d/2} R^{-d}
    RPoly r;
    for (const auto& [j, tc] : c.terms()) r.add(-j - key.d_half, tc);
    const RPoly neg = r * TCoef(-1);
    switch (key.log) {
      case LogKind::kNone:
      case LogKind::kLn1mt:
      case LogKind::kLn2:
        out.add(key.d_half, key.log, r);
        break;
      case LogKind::kShift:
        out.add(key.d_half, LogKind::kOneMinus, r);
        out.add(key.d_half, LogKind::kLnR, neg);
        break;
      case LogKind::kOneMinus:
        out.add(key.d_half, LogKind::kShift, r);
        out.add(key.d_half, LogKind::kLnR, neg);
        break;
      case LogKind::kLnR:
        out.add(key.d_half, LogKind::kLnR, neg);
        break;
    }
  }
  return out;
}

namespace {

// Power series of D^{d/2} in R up to R^order.
RPoly d_series(int d_half, int order) {
  const auto polys = gegenbauer_polys(frac(-d_half, 2), order);
  RPoly s;
  for (int k = 0; k <= order; ++k) s.add(k, TCoef(polys[k]));
  return s;
}

}  // namespace

ClosedExpression finite_part_at_zero(const RationalLogExpression& e) {
  ClosedExpression out;
  for (const auto& [key, c] : e.terms()) {
    if (key.log == LogKind::kLnR) continue;
    const int order = std::max(0, -c.min_power());
    const RPoly base = c * d_series(key.d_half, order);
    const TCoef c0 = base.coefficient(0);
    switch (key.log) {
      case LogKind::kNone:
        out.add(Atom::kOne, c0);
        break;
      case LogKind::kLn1mt:
        out.add(Atom::kLn1mt, c0);
        break;
      case LogKind::kLn2:
        out.add(Atom::kLn2, c0);
        break;
      case LogKind::kShift: {
        // ln(1-t) + sum_{k>=0} C_k^{1/2} R^{k+1}/(k+1)
        out.add(Atom::kLn1mt, c0);
        const auto g = gegenbauer_polys(frac(1, 2), order);
        RPoly tail;
        for (int k = 0; k + 1 <= order; ++k) tail.add(k + 1, TCoef(g[k] * frac(1, k + 1)));
        out.add(Atom::kOne, (base * tail).coefficient(0));
        break;
      }
      case LogKind::kOneMinus: {
        // ln 2 - sum_{k>=1} C_k^{1/2} R^k / k
        out.add(Atom::kLn2, c0);
        const auto g = gegenbauer_polys(frac(1, 2), order);
        RPoly tail;
        for (int k = 1; k <= order; ++k) tail.add(k, TCoef(g[k] * frac(-1, k)));
        out.add(Atom::kOne, (base * tail).coefficient(0));
        break;
      }
      case LogKind::kLnR:
        break;
    }
  }
  return out;
}

ClosedExpression evaluate_at_one(const RationalLogExpression& e) {
  ClosedExpression out;
  for (const auto& [key, c] : e.terms()) {
    if (key.log == LogKind::kLnR) continue;
    TCoef v;
    for (const auto& [k, tc] : c.terms()) v += tc;
    // D(1) = 2(1-t)
    const int even = key.d_half % 2 == 0 ? key.d_half : key.d_half - 1;
    Rational two_pow = 1;
    for (int i = 0; i < std::abs(even / 2); ++i) two_pow *= 2;
    if (even < 0) two_pow = 1 / two_pow;
    v = (v * TCoef(two_pow)).times_factors(even / 2, 0);
    const bool with_w = key.d_half % 2 != 0;
    if (with_w && key.log != LogKind::kNone) {
      throw UnsupportedError("product of sqrt(2-2t) and a logarithm at R = 1");
    }
    switch (key.log) {
      case LogKind::kNone:
        out.add(with_w ? Atom::kW : Atom::kOne, v);
        break;
      case LogKind::kShift:
      case LogKind::kOneMinus:
        out.add(Atom::kLnW, v);
        break;
      case LogKind::kLn1mt:
        out.add(Atom::kLn1mt, v);
        break;
      case LogKind::kLn2:
        out.add(Atom::kLn2, v);
        break;
      case LogKind::kLnR:
        break;
    }
  }
  return out;
}

RationalLogExpression as_constant(const ClosedExpression& c) {
  RationalLogExpression out;
  for (const auto& [a, v] : c.terms()) {
    switch (a) {
      case Atom::kOne:
        out.add(0, LogKind::kNone, RPoly(v));
        break;
      case Atom::kLn1mt:
        out.add(0, LogKind::kLn1mt, RPoly(v));
        break;
      case Atom::kLn2:
        out.add(0, LogKind::kLn2, RPoly(v));
        break;
      case Atom::kW:
      case Atom::kLnW:
        throw UnsupportedError("sqrt(2-2t) terms have no R-independent form here");
    }
  }
  return out;
}

}  // namespace spheregreen::closedform
