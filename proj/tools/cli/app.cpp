#include <CLI11.hpp>

#include <iostream>
#include <map>

#include "commands.hpp"

namespace spheregreen::cli {

namespace {

// Flags of one subcommand, kept as raw text until the config file is loaded.
struct Bindings {
  std::map<std::string, std::string> text;
  std::map<std::string, bool> flags;
  std::vector<std::pair<CLI::Option*, std::string>> options;

  void value(CLI::App* app, const std::string& flag, const std::string& key, const std::string& help) {
    options.emplace_back(app->add_option(flag, text[key], help), key);
  }
  void flag(CLI::App* app, const std::string& flag, const std::string& key, const std::string& help) {
    options.emplace_back(app->add_flag(flag, flags[key], help), key);
  }
  void apply(JobConfig& cfg) const {
    for (const auto& [opt, key] : options) {
      if (opt->count() == 0) continue;
      auto it = flags.find(key);
      cfg.set(key, it != flags.end() ? (it->second ? "true" : "false") : text.at(key));
    }
  }
};

void parameter_options(Bindings& b, CLI::App* app) {
  b.value(app, "--n", "n", "sphere dimension (S^n)");
  b.value(app, "--a", "a", "Helmholtz parameter a, decimal or p/q");
  b.value(app, "--L", "L", "root of a = L(n+L-1), decimal or p/q");
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Spectral solver and Green functions for Helmholtz equations on the n-sphere", "spheregreen"};
  app.set_version_flag("--version", version());
  app.require_subcommand(0, 1);
  app.fallthrough();
  std::string config_path;
  bool dump_config = false;
  app.add_option("--config", config_path, "flat key = value job file; command-line flags override it");
  app.add_flag("--dump-config", dump_config, "print the effective configuration instead of running");

  std::map<std::string, Bindings> bind;

  CLI::App* solve = app.add_subcommand("solve", "solve Delta* u + a u = f in coefficient space");
  parameter_options(bind["solve"], solve);
  bind["solve"].value(solve, "--in", "in", "input spectrum file");
  bind["solve"].value(solve, "--out", "out", "output spectrum file (stdout when omitted)");
  bind["solve"].value(solve, "--report", "report", "also write the report to this file");
  bind["solve"].flag(solve, "--resonant", "resonant", "solve a resonant problem orthogonally to the resonant degree");
  bind["solve"].value(solve, "--tol", "tol", "solvability tolerance relative to ||f||");

  CLI::App* green = app.add_subcommand("green", "evaluate, tabulate or derive Green functions");
  auto& gb = bind["green"];
  gb.value(green, "mode", "mode", "eval | table | derive");
  parameter_options(gb, green);
  gb.value(green, "--backend", "backend", "comma list of closed, series, integral, or all");
  gb.value(green, "--l-max", "l_max", "truncate the series at this degree instead of Abel extrapolation");
  gb.value(green, "--t", "t", "comma-separated sample points");
  gb.value(green, "--grid", "grid", "number of equispaced points in [t-min, t-max]");
  gb.value(green, "--t-min", "t_min", "first grid point");
  gb.value(green, "--t-max", "t_max", "last grid point");
  gb.value(green, "--quad-tol", "quad_tol", "relative tolerance of the nested quadrature");
  gb.value(green, "--out", "out", "output file (stdout when omitted)");
  gb.flag(green, "--latex", "latex", "derive: emit LaTeX");
  gb.value(green, "--route", "route", "derive: nested | kernel");

  CLI::App* wavelet = app.add_subcommand("wavelet", "Poisson wavelet transform, round trip and admissibility");
  auto& wb = bind["wavelet"];
  wb.value(wavelet, "mode", "mode", "forward | roundtrip | admissibility");
  wb.value(wavelet, "--n", "n", "sphere dimension (admissibility)");
  wb.value(wavelet, "--d", "d", "Poisson wavelet order");
  wb.value(wavelet, "--in", "in", "zonal input spectrum");
  wb.value(wavelet, "--out", "out", "output file");
  wb.value(wavelet, "--rho-min", "rho_min", "smallest scale");
  wb.value(wavelet, "--rho-max", "rho_max", "largest scale");
  wb.value(wavelet, "--rho-count", "rho_count", "number of log-spaced scales");
  wb.value(wavelet, "--l-max", "wavelet_l_max", "admissibility: highest degree");

  CLI::App* verify = app.add_subcommand("verify", "cross-check every tabulated Green function against the backends");
  auto& vb = bind["verify"];
  vb.value(verify, "--n", "n", "restrict to one dimension");
  vb.value(verify, "--quad-tol", "quad_tol", "relative tolerance of the nested quadrature");
  vb.value(verify, "--out", "out", "output file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  JobConfig cfg;
  try {
    if (!config_path.empty()) cfg = load_job_config(config_path);
    for (CLI::App* sub : app.get_subcommands()) {
      cfg.command = sub->get_name();
      bind[cfg.command].apply(cfg);
    }
  } catch (const Error& e) {
    err << "parse error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (dump_config) {
    out << cfg.to_text();
    return kExitOk;
  }
  if (cfg.command.empty()) {
    out << app.help();
    return kExitUsage;
  }
  return dispatch(cfg, out, err);
}

}  // namespace spheregreen::cli
