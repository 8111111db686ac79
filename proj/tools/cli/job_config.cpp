#include "job_config.hpp"

#include <charconv>
#include <fstream>
#include <sstream>

#include "spheregreen/errors.hpp"

namespace spheregreen::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

double parse_plain(const std::string& s) {
  double v = 0.0;
  const auto res = std::from_chars(s.data(), s.data() + s.size(), v);
  if (res.ec != std::errc() || res.ptr != s.data() + s.size()) throw ParseError("not a number: '" + s + "'");
  return v;
}

int parse_int(const std::string& s) {
  int v = 0;
  const std::string t = trim(s);
  const auto res = std::from_chars(t.data(), t.data() + t.size(), v);
  if (res.ec != std::errc() || res.ptr != t.data() + t.size()) throw ParseError("not an integer: '" + s + "'");
  return v;
}

bool parse_bool(const std::string& s) {
  const std::string t = trim(s);
  if (t == "true" || t == "1" || t == "yes" || t == "on") return true;
  if (t == "false" || t == "0" || t == "no" || t == "off") return false;
  throw ParseError("not a boolean: '" + s + "'");
}

std::vector<double> parse_list(const std::string& s) {
  std::vector<double> out;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    item = trim(item);
    if (!item.empty()) out.push_back(parse_real(item));
  }
  return out;
}

}  // namespace

double parse_real(const std::string& text) {
  const std::string s = trim(text);
  if (s.empty()) throw ParseError("empty number");
  const auto slash = s.find('/');
  if (slash == std::string::npos) return parse_plain(s);
  const double num = parse_plain(trim(s.substr(0, slash)));
  const double den = parse_plain(trim(s.substr(slash + 1)));
  if (den == 0.0) throw ParseError("zero denominator in '" + s + "'");
  return num / den;
}

// Shortest text that reads back to the same double.
std::string real_text(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

void JobConfig::set(const std::string& key, const std::string& raw) {
  const std::string v = trim(raw);
  if (key == "command") {
    command = v;
  } else if (key == "mode") {
    mode = v;
  } else if (key == "n") {
    n = parse_int(v);
  } else if (key == "a") {
    a = parse_real(v);
  } else if (key == "L") {
    L = parse_real(v);
  } else if (key == "backend") {
    backend = v;
  } else if (key == "l_max") {
    l_max = parse_int(v);
  } else if (key == "t") {
    t = parse_list(v);
  } else if (key == "grid") {
    grid = parse_int(v);
  } else if (key == "t_min") {
    t_min = parse_real(v);
  } else if (key == "t_max") {
    t_max = parse_real(v);
  } else if (key == "quad_tol") {
    quad_tol = parse_real(v);
  } else if (key == "d") {
    d = parse_int(v);
  } else if (key == "rho_min") {
    rho_min = parse_real(v);
  } else if (key == "rho_max") {
    rho_max = parse_real(v);
  } else if (key == "rho_count") {
    rho_count = parse_int(v);
  } else if (key == "wavelet_l_max") {
    wavelet_l_max = parse_int(v);
  } else if (key == "in") {
    in = v;
  } else if (key == "out") {
    out = v;
  } else if (key == "report") {
    report = v;
  } else if (key == "resonant") {
    resonant = parse_bool(v);
  } else if (key == "tol") {
    tol = parse_real(v);
  } else if (key == "latex") {
    latex = parse_bool(v);
  } else if (key == "route") {
    route = v;
  } else {
    throw ParseError("unknown config key '" + key + "'");
  }
}

std::string JobConfig::to_text() const {
  std::ostringstream os;
  auto line = [&](const char* k, const std::string& v) { os << k << " = " << v << '\n'; };
  if (!command.empty()) line("command", command);
  if (!mode.empty()) line("mode", mode);
  if (n) line("n", std::to_string(*n));
  if (a) line("a", real_text(*a));
  if (L) line("L", real_text(*L));
  line("backend", backend);
  if (l_max) line("l_max", std::to_string(*l_max));
  if (!t.empty()) {
    std::string s;
    for (std::size_t i = 0; i < t.size(); ++i) s += (i ? "," : "") + real_text(t[i]);
    line("t", s);
  }
  line("grid", std::to_string(grid));
  line("t_min", real_text(t_min));
  line("t_max", real_text(t_max));
  line("quad_tol", real_text(quad_tol));
  line("d", std::to_string(d));
  if (rho_min) line("rho_min", real_text(*rho_min));
  if (rho_max) line("rho_max", real_text(*rho_max));
  if (rho_count) line("rho_count", std::to_string(*rho_count));
  line("wavelet_l_max", std::to_string(wavelet_l_max));
  if (!in.empty()) line("in", in);
  if (!out.empty()) line("out", out);
  if (!report.empty()) line("report", report);
  line("resonant", resonant ? "true" : "false");
  line("tol", real_text(tol));
  line("latex", latex ? "true" : "false");
  line("route", route);
  return os.str();
}

JobConfig parse_job_config(const std::string& text) {
  JobConfig cfg;
  std::istringstream in(text);
  std::string raw;
  int lineno = 0;
  while (std::getline(in, raw)) {
    ++lineno;
    const std::string s = trim(raw.substr(0, raw.find('#')));
    if (s.empty()) continue;
    const auto eq = s.find('=');
    if (eq == std::string::npos) throw ParseError("config line " + std::to_string(lineno) + ": expected key = value");
    try {
      cfg.set(trim(s.substr(0, eq)), s.substr(eq + 1));
    } catch (const ParseError& e) {
      throw ParseError("config line " + std::to_string(lineno) + ": " + e.what());
    }
  }
  return cfg;
}

JobConfig load_job_config(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open config file " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_job_config(ss.str());
}

}  // namespace spheregreen::cli
