#include "spheregreen/closedform/assemble.hpp"

#include <map>
#include <mutex>

#include "spheregreen/closedform/integrate.hpp"
#include "spheregreen/closedform/lemmas.hpp"
#include "spheregreen/errors.hpp"
#include "spheregreen/green.hpp"

namespace spheregreen::closedform {

namespace {

// (lambda+l)/lambda C_l^lambda(t) for l = 0..top.
std::vector<Poly> scaled_gegenbauer(const Rational& lambda, int top) {
  std::vector<Poly> out;
  if (top < 0) return out;
  const auto c = gegenbauer_polys(lambda, top);
  for (int l = 0; l <= top; ++l) out.push_back(c[l] * ((lambda + l) / lambda));
  return out;
}

// Sigma_n p_r(t) - sum_{l<=top} r^l (lambda+l)/lambda C_l(t), times r^p.
RationalLogExpression weighted_kernel(int n, int p, const std::vector<Poly>& subtracted) {
  RationalLogExpression k;
  RPoly num = RPoly::monomial(p, 1);
  num.add(p + 2, -1);
  k.add(-(n + 1), LogKind::kNone, num);
  RPoly poly;
  for (int l = 0; l < static_cast<int>(subtracted.size()); ++l) poly.add(p + l, TCoef(-subtracted[l]));
  k.add(0, LogKind::kNone, poly);
  return k;
}

ClosedExpression definite_0_1(const RationalLogExpression& antider) {
  return evaluate_at_one(antider) - finite_part_at_zero(antider);
}

ClosedExpression nested(int n, int L) {
  const Rational lambda(n - 1, 2);
  const Rational a = Rational(L) * (n + L - 1);
  const bool resonant = L >= 0;
  const int L0 = std::max(L, -n - L + 1);
  const int subtract_top = resonant ? L : L0;
  const int corr_top = resonant ? L - 1 : L0;
  const auto cl = scaled_gegenbauer(lambda, std::max(subtract_top, corr_top));

  const std::vector<Poly> sub(cl.begin(), cl.begin() + std::max(subtract_top + 1, 0));
  const RationalLogExpression inner = antiderivative(weighted_kernel(n, n + L - 2, sub));
  RationalLogExpression fd = inner - as_constant(finite_part_at_zero(inner));
  const RationalLogExpression outer = antiderivative(fd.times(RPoly::monomial(-(n + 2 * L), 1)));

  ClosedExpression g = definite_0_1(outer).scaled(TCoef(-1));
  for (int l = 0; l <= corr_top; ++l) {
    g.add(Atom::kOne, TCoef(cl[l] * (1 / (a - Rational(l) * (n + l - 1)))));
  }
  return g;
}

ClosedExpression via_kernel_antiderivative(int n) {
  const Rational lambda(n - 1, 2);
  // G = -(1/(n-1)) int_0^1 (r^{-1} - r^{n-2}) K(r) dr with K = Sigma_n p_r - 1.
  const ClosedExpression gamma = definite_0_1(kernel_antiderivative_expression(lambda));
  const ClosedExpression rest = definite_0_1(antiderivative(weighted_kernel(n, n - 2, {Poly(1)})));
  return (gamma - rest).scaled(TCoef(frac(-1, n - 1)));
}

}  // namespace

bool n2family_supported(int n, int L) { return n % 2 == 0 && n >= 2 && n <= 10 && 2 * L >= -(n - 2) && L <= 6; }

Derivation derive_green_n2family(int n, int L, DerivationRoute route) {
  if (!n2family_supported(n, L)) {
    throw UnsupportedError("symbolic derivation covers even n in 2..10 and integer L in [-(n-2)/2, 6]; got n=" +
                           std::to_string(n) + ", L=" + std::to_string(L));
  }
  if (route == DerivationRoute::kKernel && L != 0) throw UnsupportedError("the half-integer route needs L = 0");
  Derivation d;
  d.n = n;
  d.L = L;
  d.route = route;
  d.G = route == DerivationRoute::kNested ? nested(n, L) : via_kernel_antiderivative(n);
  return d;
}

AssembledValue assemble_green_n2family(int n, int L, double t) {
  AssembledValue v;
  if (!n2family_supported(n, L)) {
    v.notice = "no symbolic derivation for n=" + std::to_string(n) + ", L=" + std::to_string(L) +
               "; value from the double integral";
    v.value = green_eval_integral(parameter_from_L(SphereContext(n), L), t).value;
    return v;
  }
  static std::mutex mu;
  static std::map<std::pair<int, int>, ClosedExpression> cache;
  ClosedExpression g;
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find({n, L});
    if (it == cache.end()) it = cache.emplace(std::make_pair(n, L), derive_green_n2family(n, L).G).first;
    g = it->second;
  }
  const double x = checked_green_argument(t);
  v.value = static_cast<double>(g.eval(x));
  v.symbolic = true;
  return v;
}

}  // namespace spheregreen::closedform
