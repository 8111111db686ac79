#include "commands.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <iostream>
#include <map>
#include <numbers>
#include <set>
#include <sstream>
#include <thread>

#include "spheregreen/closed_forms.hpp"
#include "spheregreen/closedform/assemble.hpp"
#include "spheregreen/green.hpp"
#include "spheregreen/solver.hpp"
#include "spheregreen/spectrum_io.hpp"
#include "spheregreen/wavelets.hpp"

#ifndef SPHEREGREEN_VERSION_STRING
#define SPHEREGREEN_VERSION_STRING "unknown"
#endif

namespace spheregreen::cli {

const char* version() { return SPHEREGREEN_VERSION_STRING; }

namespace {

std::string num(double x) { return format_number(x); }

void emit(const std::string& path, const std::string& text, std::ostream& out) {
  if (path.empty()) {
    out << text;
  } else {
    write_file_atomically(path, text);
  }
}

HelmholtzParameter parameter(const JobConfig& c, const SphereContext& ctx) {
  if (c.a && c.L) throw UsageError("give either --a or --L, not both");
  if (c.a) return make_parameter(ctx, *c.a);
  if (c.L) return parameter_from_L(ctx, *c.L);
  throw UsageError("missing --a or --L");
}

std::string parameter_text(const HelmholtzParameter& p) {
  std::string s = "n=" + std::to_string(p.ctx.n()) + " a=" + num(p.a);
  if (p.real_root) {
    s += " L=" + num(p.L) + " L0=" + std::to_string(p.L0);
  } else {
    s += " L=complex";
  }
  if (p.resonant) s += " resonant_degree=" + std::to_string(p.L_res);
  return s;
}

// Backend a pointwise Green function would use for this parameter.
std::string green_backend_label(const HelmholtzParameter& p) {
  if (has_closed_form(p)) return GreenFunction(p, GreenBackend::kClosed).backend_name();
  if (p.real_root) return "double_integral";
  return "series(abel)";
}

std::optional<int> integer_L(const HelmholtzParameter& p) {
  if (!p.real_root) return std::nullopt;
  const double r = std::round(p.L);
  if (std::abs(p.L - r) > 1e-9) return std::nullopt;
  return static_cast<int>(r);
}

std::vector<std::string> split_list(const std::string& s) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item.erase(0, item.find_first_not_of(' '));
    item.erase(item.find_last_not_of(' ') + 1);
    if (!item.empty()) out.push_back(item);
  }
  return out;
}

SphereContext context_of(const AnySpectrum& s) {
  return std::visit([](const auto& x) { return x.ctx; }, s);
}

void check_n(const JobConfig& c, const SphereContext& ctx) {
  if (c.n && *c.n != ctx.n()) {
    throw ContextMismatch("--n " + std::to_string(*c.n) + " does not match the input spectrum (n=" +
                          std::to_string(ctx.n()) + ")");
  }
}

// ---------------------------------------------------------------------------
// solve

std::string solve_report(const JobConfig& c, const HelmholtzParameter& p, const SolveReport<AnySpectrum>& rep,
                         double f_norm) {
  std::ostringstream r;
  r << "# spheregreen " << version() << " solve\n";
  r << "n = " << p.ctx.n() << '\n';
  r << "a = " << num(p.a) << '\n';
  r << "L = " << (p.real_root ? num(p.L) : std::string("complex")) << '\n';
  r << "green_backend = " << green_backend_label(p) << '\n';
  if (p.resonant) r << "resonant_degree = " << p.L_res << '\n';
  r << "solvability_tolerance = " << num(c.tol) << '\n';
  r << "f_norm = " << num(f_norm) << '\n';
  r << "residual_norm = " << num(rep.residual_norm) << '\n';
  r << "relative_residual = " << num(f_norm > 0 ? rep.residual_norm / f_norm : 0.0) << '\n';
  for (const auto& w : rep.condition_warnings) {
    r << "condition_warning = degree " << w.l << " gap " << num(w.gap) << '\n';
  }
  if (!c.out.empty()) r << "output = " << c.out << '\n';
  return r.str();
}

// ---------------------------------------------------------------------------
// green

std::vector<double> sample_points(const JobConfig& c, const std::string& mode) {
  std::vector<double> ts;
  if (mode == "eval") {
    if (c.t.empty()) throw UsageError("green eval needs --t");
    ts = c.t;
  } else {
    if (c.grid < 1) throw UsageError("--grid must be positive");
    if (!(c.t_min < c.t_max) && c.grid > 1) throw UsageError("--t-min must be below --t-max");
    for (int i = 0; i < c.grid; ++i) {
      ts.push_back(c.grid == 1 ? c.t_min : c.t_min + (c.t_max - c.t_min) * i / (c.grid - 1));
    }
  }
  for (double t : ts) checked_green_argument(t);
  return ts;
}

int green_derive(const JobConfig& c, std::ostream& out) {
  if (!c.n) throw UsageError("green derive needs --n");
  const SphereContext ctx(*c.n);
  const HelmholtzParameter p = parameter(c, ctx);
  const auto L = integer_L(p);
  if (!L) throw UnsupportedError("symbolic derivation needs an integer L; got a=" + num(p.a));
  closedform::DerivationRoute route;
  if (c.route == "nested") {
    route = closedform::DerivationRoute::kNested;
  } else if (c.route == "kernel") {
    route = closedform::DerivationRoute::kKernel;
  } else {
    throw UsageError("--route must be nested or kernel");
  }
  const closedform::Derivation d = closedform::derive_green_n2family(*c.n, *L, route);

  std::ostringstream os;
  os << "# spheregreen " << version() << " green derive\n";
  os << "# " << parameter_text(p) << " route=" << c.route << '\n';
  if (const ClosedFormRow* row = find_closed_form(*c.n, p.L)) {
    double dev = 0.0;
    for (int k = 0; k < 100; ++k) {
      const double t = -0.95 + 1.9 * k / 99;
      dev = std::max(dev, std::abs(static_cast<double>(d.G.eval(t)) - row->eval(t)));
    }
    os << "# " << row->table_id() << " row: " << row->text() << '\n';
    os << "# max deviation from the row over 100 points in [-0.95, 0.95] = " << num(dev) << '\n';
  }
  os << "G(t) = " << (c.latex ? d.G.to_latex() : d.G.to_string()) << '\n';
  emit(c.out, os.str(), out);
  return kExitOk;
}

struct Column {
  std::string name;
  std::vector<double> values;
};

// ---------------------------------------------------------------------------
// verify

struct RowCheck {
  const ClosedFormRow* row = nullptr;
  double series_dev = 0.0;
  double integral_dev = 0.0;
  double symbolic_dev = -1.0;  // negative: no symbolic derivation for this row
  std::string failure;
};

constexpr double kSeriesTolerance = 1e-4;
constexpr double kIntegralTolerance = 1e-6;
constexpr double kSymbolicTolerance = 1e-10;

RowCheck check_row(const ClosedFormRow& row, const IntegralOptions& iopt) {
  RowCheck rc;
  rc.row = &row;
  try {
    const HelmholtzParameter p = parameter_from_L(SphereContext(row.n), row.L());
    const bool symbolic = row.L_den == 1 && closedform::n2family_supported(row.n, row.L_num);
    if (symbolic) rc.symbolic_dev = 0.0;
    for (int k = 0; k < 20; ++k) {
      const double t = -0.95 + 1.9 * k / 19;
      const double c = row.eval(t);
      const double scale = 1.0 + std::abs(c);
      rc.series_dev = std::max(rc.series_dev, std::abs(c - green_eval_series_adaptive(p, t).value) / scale);
      rc.integral_dev = std::max(rc.integral_dev, std::abs(c - green_eval_integral(p, t, iopt).value) / scale);
      if (symbolic) {
        const double s = closedform::assemble_green_n2family(row.n, row.L_num, t).value;
        rc.symbolic_dev = std::max(rc.symbolic_dev, std::abs(c - s) / scale);
      }
    }
  } catch (const Error& e) {
    rc.failure = e.what();
  }
  return rc;
}

}  // namespace

int cmd_solve(const JobConfig& c, std::ostream& out, std::ostream& err) {
  if (c.in.empty()) throw UsageError("solve needs --in <spectrum file>");
  const AnySpectrum f = read_spectrum_file(c.in);
  const SphereContext ctx = context_of(f);
  check_n(c, ctx);
  const HelmholtzParameter p = parameter(c, ctx);
  if (p.resonant && p.L_res > 0 && !c.resonant) {
    throw ResonanceError("a = " + num(p.a) + " is the eigenvalue l(n+l-1) of degree l = " +
                             std::to_string(p.L_res) +
                             "; rerun with --resonant for the solution orthogonal to that degree",
                         p.L_res);
  }
  SolveRequest req{p, f, SolveOptions{}};
  req.options.solvability_tolerance = c.tol;
  req.options.allow_resonant = c.resonant;
  const SolveReport<AnySpectrum> rep = solve(req);
  const double f_norm = std::visit([](const auto& s) { return l2_norm(s); }, f);

  const std::vector<std::string> comments = {
      "spheregreen " + std::string(version()) + " solve",
      parameter_text(p),
      "green_backend=" + green_backend_label(p) + " solvability_tolerance=" + num(c.tol),
  };
  std::ostringstream spec;
  std::visit([&](const auto& u) { write_spectrum(spec, u, comments); }, rep.u);
  const std::string report = solve_report(c, p, rep, f_norm);
  if (c.out.empty()) {
    out << spec.str();
    err << report;
  } else {
    write_file_atomically(c.out, spec.str());
    out << report;
  }
  if (!c.report.empty()) write_file_atomically(c.report, report);
  for (const auto& w : rep.condition_warnings) {
    err << "warning: degree " << w.l << " is close to resonance (gap " << num(w.gap) << ")\n";
  }
  return kExitOk;
}

int cmd_green(const JobConfig& c, std::ostream& out, std::ostream& err) {
  const std::string mode = c.mode.empty() ? (c.t.empty() ? "table" : "eval") : c.mode;
  if (mode == "derive") return green_derive(c, out);
  if (mode != "eval" && mode != "table") throw UsageError("green mode must be eval, table or derive");
  if (!c.n) throw UsageError("green needs --n");
  const SphereContext ctx(*c.n);
  const HelmholtzParameter p = parameter(c, ctx);
  const std::vector<double> ts = sample_points(c, mode);

  std::vector<std::string> wanted = split_list(c.backend);
  const bool all = wanted.size() == 1 && wanted[0] == "all";
  if (all) wanted = {"closed", "series", "integral"};
  if (wanted.empty()) throw UsageError("--backend lists no backend");

  IntegralOptions iopt;
  iopt.tolerance = c.quad_tol;
  std::vector<std::string> notes;
  std::map<std::string, std::string> labels;
  std::vector<Column> cols;
  std::set<std::string> warnings;
  double series_tail = 0.0;
  double series_bound = 0.0;
  double integral_err = 0.0;

  for (const auto& b : wanted) {
    Column col{b, {}};
    if (b == "closed") {
      const auto L = integer_L(p);
      if (has_closed_form(p)) {
        labels[b] = GreenFunction(p, GreenBackend::kClosed).backend_name();
        for (double t : ts) col.values.push_back(green_eval_closed(p, t));
      } else if (L && closedform::n2family_supported(*c.n, *L)) {
        labels[b] = "closed_form(derived)";
        notes.push_back("closed: no table row; values from the symbolic derivation");
        for (double t : ts) col.values.push_back(closedform::assemble_green_n2family(*c.n, *L, t).value);
      } else if (p.real_root) {
        labels[b] = "double_integral";
        notes.push_back("closed: no closed form for " + parameter_text(p) + "; column holds double_integral values");
        for (double t : ts) col.values.push_back(green_eval_integral(p, t, iopt).value);
      } else {
        labels[b] = "series(abel)";
        notes.push_back("closed: no closed form for " + parameter_text(p) + "; column holds series(abel) values");
        for (double t : ts) col.values.push_back(green_eval_series_adaptive(p, t).value);
      }
    } else if (b == "series") {
      labels[b] = c.l_max ? "series(L_max=" + std::to_string(*c.l_max) + ")" : "series(abel)";
      for (double t : ts) {
        const SeriesEvaluation ev = c.l_max ? green_eval_series(p, t, *c.l_max) : green_eval_series_adaptive(p, t);
        col.values.push_back(ev.value);
        series_tail = std::max(series_tail, ev.tail_estimate);
        series_bound = std::max(series_bound, ev.tail_bound);
        warnings.insert(ev.warnings.begin(), ev.warnings.end());
      }
    } else if (b == "integral") {
      if (!p.real_root) {
        if (!all) throw UnsupportedError("the double integral needs a real L (a >= -lambda^2)");
        notes.push_back("integral: skipped, L is complex");
        continue;
      }
      labels[b] = "double_integral";
      for (double t : ts) {
        const IntegralEvaluation ev = green_eval_integral(p, t, iopt);
        col.values.push_back(ev.value);
        integral_err = std::max(integral_err, ev.error_estimate);
      }
    } else {
      throw UsageError("unknown backend '" + b + "' (expected closed, series, integral or all)");
    }
    cols.push_back(std::move(col));
  }

  std::ostringstream os;
  os << "# spheregreen " << version() << " green " << mode << '\n';
  os << "# " << parameter_text(p) << '\n';
  os << "# backends:";
  for (const auto& col : cols) os << ' ' << col.name << '=' << labels[col.name];
  os << '\n';
  os << "# tolerances: quad_tol=" << num(c.quad_tol) << '\n';
  if (labels.count("series")) {
    os << "# series tail estimate (max over rows) = " << num(series_tail);
    if (c.l_max) os << ", tail bound = " << num(series_bound);
    os << '\n';
  }
  if (labels.count("integral")) os << "# integral error estimate (max over rows) = " << num(integral_err) << '\n';
  for (const auto& n : notes) os << "# " << n << '\n';
  os << "t,theta";
  for (const auto& col : cols) os << ',' << col.name;
  os << '\n';
  for (std::size_t i = 0; i < ts.size(); ++i) {
    os << num(ts[i]) << ',' << num(std::acos(ts[i]));
    for (const auto& col : cols) os << ',' << num(col.values[i]);
    os << '\n';
  }
  emit(c.out, os.str(), out);
  for (const auto& w : warnings) err << "warning: " << w << '\n';
  return kExitOk;
}

int cmd_wavelet(const JobConfig& c, std::ostream& out, std::ostream& /*err*/) {
  const std::string mode = c.mode.empty() ? "roundtrip" : c.mode;
  if (c.d < 1) throw DomainError("Poisson wavelet order must be at least 1");

  if (mode == "admissibility") {
    if (!c.n) throw UsageError("wavelet admissibility needs --n");
    const SphereContext ctx(*c.n);
    // The l = 1 integrand only falls below 1e-12 far into the small scales.
    const ScaleGrid grid = make_scale_grid(c.rho_min.value_or(1e-9), c.rho_max.value_or(60.0), c.rho_count.value_or(400));
    const WaveletFamily psi = poisson_wavelet(ctx, c.d);
    const AdmissibilityReport rep = check_admissibility(psi, psi, c.wavelet_l_max, grid);
    std::ostringstream os;
    os << "# spheregreen " << version() << " wavelet admissibility\n";
    os << "# n=" << ctx.n() << " d=" << c.d << " l_max=" << c.wavelet_l_max << '\n';
    os << "# grid: rho in [" << num(grid.rho_min) << ", " << num(grid.rho_max) << "], " << grid.count
       << " log nodes; tail tolerance 1e-12\n";
    os << "# max deviation = " << num(rep.max_deviation) << '\n';
    os << "l,integral,target,deviation\n";
    for (const auto& e : rep.entries) {
      os << e.l << ',' << num(e.integral.real()) << ',' << num(e.target) << ',' << num(e.deviation) << '\n';
    }
    emit(c.out, os.str(), out);
    return kExitOk;
  }
  if (mode != "forward" && mode != "roundtrip") {
    throw UsageError("wavelet mode must be forward, roundtrip or admissibility");
  }
  if (c.in.empty()) throw UsageError("wavelet " + mode + " needs --in <zonal spectrum file>");
  const AnySpectrum any = read_spectrum_file(c.in);
  if (!std::holds_alternative<ZonalSpectrum>(any)) throw DomainError("the wavelet transform takes zonal spectra");
  const ZonalSpectrum& f = std::get<ZonalSpectrum>(any);
  check_n(c, f.ctx);
  const ScaleGrid grid = make_scale_grid(c.rho_min.value_or(1e-4), c.rho_max.value_or(50.0), c.rho_count.value_or(400));
  const WaveletFamily psi = poisson_wavelet(f.ctx, c.d);
  const std::string grid_text = "# grid: rho in [" + num(grid.rho_min) + ", " + num(grid.rho_max) + "], " +
                                std::to_string(grid.count) + " log nodes\n";

  if (mode == "forward") {
    const WaveletTransform w = wavelet_transform(psi, f, grid);
    std::ostringstream os;
    os << "# spheregreen " << version() << " wavelet forward\n";
    os << "# n=" << f.ctx.n() << " d=" << c.d << " l_max=" << f.l_max() << '\n' << grid_text;
    os << "rho,l,re,im\n";
    for (std::size_t i = 0; i < w.per_scale.size(); ++i) {
      const ZonalSpectrum& s = w.per_scale[i];
      for (int l = 0; l <= s.l_max(); ++l) {
        os << num(grid.nodes[i]) << ',' << l << ',' << num(s[l].real()) << ',' << num(s[l].imag()) << '\n';
      }
    }
    emit(c.out, os.str(), out);
    return kExitOk;
  }

  const double norm = l2_norm(f);
  if (std::abs(f[0]) > 1e-12 * std::max(norm, 1.0)) {
    throw DomainError("the round trip needs a zero-mean input; f(0) = " + num(std::abs(f[0])));
  }
  // Poisson wavelets satisfy alpha_l = 1 exactly, so they reconstruct themselves.
  const WaveletTransform w = wavelet_transform(psi, f, grid);
  const ZonalSpectrum g = inverse_transform(psi, w, grid);
  ZonalSpectrum diff(f.ctx, f.l_max());
  for (int l = 0; l <= f.l_max(); ++l) diff.coeffs[l] = g[l] - f[l];
  const double rel = norm > 0 ? l2_norm(diff) / norm : l2_norm(g);

  std::ostringstream os;
  os << "# spheregreen " << version() << " wavelet roundtrip\n";
  os << "# n=" << f.ctx.n() << " d=" << c.d << " l_max=" << f.l_max() << " reconstruction=psi\n" << grid_text;
  os << "relative_l2_error = " << num(rel) << '\n';
  out << os.str();
  if (!c.out.empty()) {
    std::ostringstream spec;
    write_spectrum(spec, g,
                   {"spheregreen " + std::string(version()) + " wavelet roundtrip d=" + std::to_string(c.d),
                    "relative_l2_error=" + num(rel)});
    write_file_atomically(c.out, spec.str());
  }
  return kExitOk;
}

int cmd_verify(const JobConfig& c, std::ostream& out, std::ostream& /*err*/) {
  std::vector<const ClosedFormRow*> rows;
  for (const auto& r : closed_form_registry()) {
    if (!c.n || r.n == *c.n) rows.push_back(&r);
  }
  if (rows.empty()) throw UsageError("no table rows for n=" + std::to_string(*c.n));
  IntegralOptions iopt;
  iopt.tolerance = c.quad_tol;

  std::vector<RowCheck> results(rows.size());
  std::atomic<std::size_t> next{0};
  const unsigned workers = std::max(1u, std::min<unsigned>(std::thread::hardware_concurrency(), rows.size()));
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&] {
      for (std::size_t i = next++; i < rows.size(); i = next++) results[i] = check_row(*rows[i], iopt);
    });
  }
  for (auto& th : pool) th.join();

  int failed = 0;
  std::ostringstream body;
  for (const auto& rc : results) {
    bool ok = rc.failure.empty() && rc.series_dev <= kSeriesTolerance && rc.integral_dev <= kIntegralTolerance &&
              rc.symbolic_dev <= kSymbolicTolerance;
    if (!ok) ++failed;
    const ClosedFormRow& r = *rc.row;
    body << r.table_id() << ',' << r.n << ',' << r.L_num << (r.L_den != 1 ? "/" + std::to_string(r.L_den) : "")
         << ',' << num(r.a()) << ',' << num(rc.series_dev) << ',' << num(rc.integral_dev) << ','
         << (rc.symbolic_dev < 0 ? std::string("") : num(rc.symbolic_dev)) << ',' << (ok ? "PASS" : "FAIL")
         << (rc.failure.empty() ? "" : " (" + rc.failure + ")") << '\n';
  }
  std::ostringstream os;
  os << "# spheregreen " << version() << " verify\n";
  os << "# closed vs series(abel) <= " << num(kSeriesTolerance) << ", closed vs double_integral <= "
     << num(kIntegralTolerance) << ", closed vs derived <= " << num(kSymbolicTolerance)
     << " (relative to 1+|closed|, 20 points in [-0.95, 0.95])\n";
  os << "# rows=" << results.size() << " failed=" << failed << '\n';
  os << "table,n,L,a,series_dev,integral_dev,derived_dev,status\n" << body.str();
  emit(c.out, os.str(), out);
  return failed == 0 ? kExitOk : kExitNumeric;
}

int dispatch(const JobConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    if (cfg.command == "solve") return cmd_solve(cfg, out, err);
    if (cfg.command == "green") return cmd_green(cfg, out, err);
    if (cfg.command == "wavelet") return cmd_wavelet(cfg, out, err);
    if (cfg.command == "verify") return cmd_verify(cfg, out, err);
    throw UsageError(cfg.command.empty() ? "no command given" : "unknown command '" + cfg.command + "'");
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ResonanceError& e) {
    err << "resonance: " << e.what() << '\n';
    return kExitResonance;
  } catch (const SolvabilityError& e) {
    err << "not solvable: " << e.what() << " (offending mass " << num(e.offending_mass()) << ")\n";
    return kExitDomain;
  } catch (const DomainError& e) {
    err << "domain error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const UnsupportedError& e) {
    err << "unsupported: " << e.what() << '\n';
    return kExitDomain;
  } catch (const ConvergenceError& e) {
    err << "no convergence: " << e.what() << " (achieved " << num(e.achieved_error()) << ")\n";
    return kExitNumeric;
  } catch (const TruncationError& e) {
    err << "scale grid too narrow: " << e.what() << " (tails " << num(e.low_tail()) << ", " << num(e.high_tail())
        << ")\n";
    return kExitNumeric;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  }
}

}  // namespace spheregreen::cli
