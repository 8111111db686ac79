#pragma once

#include <optional>
#include <string>
#include <vector>

namespace spheregreen::cli {

// Everything a run needs; round-trips through flat "key = value" text.
struct JobConfig {
  std::string command;  // solve | green | wavelet | verify
  std::string mode;     // green: eval/table/derive; wavelet: forward/roundtrip/admissibility

  std::optional<int> n;
  std::optional<double> a;
  std::optional<double> L;

  std::string backend = "all";  // green: comma list of closed, series, integral
  std::optional<int> l_max;     // series truncation; unset means Abel extrapolation

  std::vector<double> t;  // explicit sample points
  int grid = 21;
  double t_min = -0.95;
  double t_max = 0.95;
  double quad_tol = 1e-11;

  int d = 1;
  // Scale grid; unset values take the per-mode defaults.
  std::optional<double> rho_min;
  std::optional<double> rho_max;
  std::optional<int> rho_count;
  int wavelet_l_max = 32;

  std::string in;
  std::string out;
  std::string report;

  bool resonant = false;
  double tol = 1e-8;  // solvability tolerance
  bool latex = false;
  std::string route = "nested";

  // Throws spheregreen::ParseError for unknown keys or malformed values.
  void set(const std::string& key, const std::string& value);
  std::string to_text() const;
};

JobConfig parse_job_config(const std::string& text);
JobConfig load_job_config(const std::string& path);

// "p/q" or a decimal literal.
double parse_real(const std::string& s);
std::string real_text(double x);

}  // namespace spheregreen::cli
