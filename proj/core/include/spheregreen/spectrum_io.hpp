#pragma once

#include <iosfwd>
#include <string>
#include <variant>
#include <vector>

#include "spheregreen/spectrum.hpp"

namespace spheregreen {

// Text format:
//   # zonal n=<n> Lmax=<L>          then lines  l <tab> re [<tab> im]
//   # general n=<n>                  then lines  l <tab> k-token <tab> re <tab> im
// Further lines starting with '#' are comments.
using AnySpectrum = std::variant<ZonalSpectrum, GeneralSpectrum>;

AnySpectrum read_spectrum(std::istream& in);
AnySpectrum read_spectrum_file(const std::string& path);
ZonalSpectrum read_zonal_spectrum(std::istream& in);

void write_spectrum(std::ostream& out, const ZonalSpectrum& s, const std::vector<std::string>& comments = {});
void write_spectrum(std::ostream& out, const GeneralSpectrum& s, const std::vector<std::string>& comments = {});

// 12 significant digits, shortest form, '.' decimal separator.
std::string format_number(double x);

// Writes through a temporary file in the same directory and renames it into place.
void write_file_atomically(const std::string& path, const std::string& contents);

}  // namespace spheregreen
