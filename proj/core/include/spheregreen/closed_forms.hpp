#pragma once

#include <functional>
#include <string>
#include <vector>

namespace spheregreen {

// One tabulated Green function G(t) for given n and L = L_num/L_den.
struct ClosedFormRow {
  int table = 0;  // 1: Poisson, 2: positive integer L, 3: positive rational a, 4: negative a
  int n = 0;
  int L_num = 0;
  int L_den = 1;
  std::string published_text;
  std::function<double(double)> published;
  // Set for rows whose published expression disagrees with the series;
  // corrected_text/corrected then hold the verified replacement.
  std::string corrected_text;
  std::function<double(double)> corrected;
  std::string erratum;

  double L() const { return static_cast<double>(L_num) / L_den; }
  double a() const { return L() * (n + L() - 1.0); }
  bool is_corrected() const { return static_cast<bool>(corrected); }
  double eval(double t) const { return corrected ? corrected(t) : published(t); }
  const std::string& text() const { return corrected ? corrected_text : published_text; }
  std::string table_id() const { return "table" + std::to_string(table); }
};

const std::vector<ClosedFormRow>& closed_form_registry();

// Row with matching n and L (within 1e-9), or nullptr.
const ClosedFormRow* find_closed_form(int n, double L);

}  // namespace spheregreen
