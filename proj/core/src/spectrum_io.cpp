#include "spheregreen/spectrum_io.hpp"

#include <charconv>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <istream>
#include <ostream>
#include <sstream>

#include "spheregreen/errors.hpp"

namespace spheregreen {

std::string format_number(double x) {
  if (x == 0.0) x = 0.0;  // drop the sign of -0
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x, std::chars_format::general, 12);
  return std::string(buf, res.ptr);
}

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r\n");
  if (b == std::string::npos) return {};
  const auto e = s.find_last_not_of(" \t\r\n");
  return s.substr(b, e - b + 1);
}

// Reads "key=value" tokens from a header line.
int header_int(const std::string& line, const std::string& key, bool required) {
  const std::string pat = key + "=";
  const auto pos = line.find(pat);
  if (pos == std::string::npos) {
    if (required) throw ParseError("spectrum header lacks " + key + ": " + line);
    return -1;
  }
  int v = 0;
  const char* b = line.c_str() + pos + pat.size();
  const auto res = std::from_chars(b, line.c_str() + line.size(), v);
  if (res.ec != std::errc()) throw ParseError("bad " + key + " in spectrum header: " + line);
  return v;
}

double parse_double(const std::string& tok, int line_no) {
  double v = 0.0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size()) {
    throw ParseError("line " + std::to_string(line_no) + ": not a number '" + tok + "'");
  }
  return v;
}

int parse_degree(const std::string& tok, int line_no) {
  int v = 0;
  const auto res = std::from_chars(tok.data(), tok.data() + tok.size(), v);
  if (res.ec != std::errc() || res.ptr != tok.data() + tok.size() || v < 0) {
    throw ParseError("line " + std::to_string(line_no) + ": bad degree '" + tok + "'");
  }
  return v;
}

std::vector<std::string> split_fields(const std::string& line) {
  std::vector<std::string> out;
  std::istringstream ss(line);
  std::string tok;
  while (ss >> tok) out.push_back(tok);
  return out;
}

}  // namespace

AnySpectrum read_spectrum(std::istream& in) {
  std::string line;
  int line_no = 0;
  std::string header;
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty()) continue;
    header = line;
    break;
  }
  if (header.rfind("#", 0) != 0) throw ParseError("spectrum file must start with a '# zonal' or '# general' header");
  const bool zonal = header.find("zonal") != std::string::npos;
  const bool general = header.find("general") != std::string::npos;
  if (zonal == general) throw ParseError("unrecognized spectrum header: " + header);
  const int n = header_int(header, "n", true);
  SphereContext ctx(n);

  if (zonal) {
    const int l_max = header_int(header, "Lmax", true);
    if (l_max < 0) throw ParseError("Lmax must be non-negative");
    ZonalSpectrum s(ctx, l_max);
    while (std::getline(in, line)) {
      ++line_no;
      line = trim(line);
      if (line.empty() || line[0] == '#') continue;
      const auto f = split_fields(line);
      if (f.size() < 2 || f.size() > 3) throw ParseError("line " + std::to_string(line_no) + ": expected l re [im]");
      const int l = parse_degree(f[0], line_no);
      if (l > l_max) throw ParseError("line " + std::to_string(line_no) + ": degree exceeds Lmax");
      const double re = parse_double(f[1], line_no);
      const double im = f.size() == 3 ? parse_double(f[2], line_no) : 0.0;
      s.coeffs[l] = Complex(re, im);
    }
    return s;
  }

  GeneralSpectrum s(ctx);
  while (std::getline(in, line)) {
    ++line_no;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    const auto f = split_fields(line);
    if (f.size() != 4) throw ParseError("line " + std::to_string(line_no) + ": expected l k re im");
    const int l = parse_degree(f[0], line_no);
    s.entries[{l, f[1]}] = Complex(parse_double(f[2], line_no), parse_double(f[3], line_no));
  }
  return s;
}

AnySpectrum read_spectrum_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open spectrum file " + path);
  return read_spectrum(in);
}

ZonalSpectrum read_zonal_spectrum(std::istream& in) {
  AnySpectrum s = read_spectrum(in);
  if (auto* z = std::get_if<ZonalSpectrum>(&s)) return *z;
  throw ParseError("expected a zonal spectrum");
}

void write_spectrum(std::ostream& out, const ZonalSpectrum& s, const std::vector<std::string>& comments) {
  out << "# zonal n=" << s.ctx.n() << " Lmax=" << s.l_max() << '\n';
  for (const auto& c : comments) out << "# " << c << '\n';
  const bool real = s.is_real();
  for (int l = 0; l <= s.l_max(); ++l) {
    out << l << '\t' << format_number(s.coeffs[l].real());
    if (!real) out << '\t' << format_number(s.coeffs[l].imag());
    out << '\n';
  }
}

void write_spectrum(std::ostream& out, const GeneralSpectrum& s, const std::vector<std::string>& comments) {
  out << "# general n=" << s.ctx.n() << '\n';
  for (const auto& c : comments) out << "# " << c << '\n';
  for (const auto& [key, value] : s.entries) {
    out << key.first << '\t' << key.second << '\t' << format_number(value.real()) << '\t'
        << format_number(value.imag()) << '\n';
  }
}

void write_file_atomically(const std::string& path, const std::string& contents) {
  namespace fs = std::filesystem;
  const fs::path target(path);
  fs::path tmp = target;
  tmp += ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw Error("cannot write " + tmp.string());
    out << contents;
    out.flush();
    if (!out) throw Error("write failed for " + tmp.string());
  }
  std::error_code ec;
  fs::rename(tmp, target, ec);
  if (ec) {
    fs::remove(tmp);
    throw Error("cannot move " + tmp.string() + " to " + path + ": " + ec.message());
  }
}

}  // namespace spheregreen
