#pragma once

// CSV dialect: comma separated, '.' decimal point, mandatory header row,
// LF line endings, no quoting. Numbers are written with 17 significant
// digits; a write/read cycle loses at most the rounding of the GHz/Hz scaling.

#include <iosfwd>
#include <string>
#include <vector>

#include "fluxbcs/curve.hpp"
#include "fluxbcs/fitkit.hpp"

namespace fluxbcs::cli {

std::string format_number(double v);

/// Reads `mu_ext,f_ghz[,sigma_ghz]`. Throws ParseError naming the source and
/// the 1-based line number of the first bad row.
std::vector<fit::ResonancePoint> read_resonance_csv(std::istream& in, const std::string& source);
std::vector<fit::ResonancePoint> read_resonance_csv(const std::string& path);

/// Writes the same format; the sigma column appears when the first point has one.
void write_resonance_csv(std::ostream& out, const std::vector<fit::ResonancePoint>& data);

/// One row per x; every series must share the x samples of the first.
void write_curves_csv(std::ostream& out, const std::vector<CurveSeries>& curves);

}  // namespace fluxbcs::cli
