#pragma once

// Shared file formats.
//
// Coefficient file (JSON), fields in this order:
//   {"kind": "taylor" | "laurent" | "harmonic_beltrami",
//    "offset": <index of the first coefficient>,
//    "re": [...], "im": [...]}
//
// Beltrami grid (CSV): header "x,y,weight,re,im", one row per quadrature node
// in the unit disk carrying its area weight and the sample nu(x + iy).

#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

#include "wpnum/diff.hpp"
#include "wpnum/quad.hpp"
#include "wpnum/series.hpp"

namespace wpnum {

enum class CoefficientKind { taylor, laurent, harmonic_beltrami };

std::string to_string(CoefficientKind kind);

struct CoefficientFile {
  CoefficientKind kind = CoefficientKind::taylor;
  int offset = 0;
  std::vector<Complex> coeffs;
};

CoefficientFile parse_coefficient_json(std::string_view text);
CoefficientFile read_coefficient_file(const std::filesystem::path& path);
std::string to_json(const CoefficientFile& file);
void write_coefficient_file(const std::filesystem::path& path, const CoefficientFile& file);

CoefficientFile coefficient_file(const PowerSeries& s);
CoefficientFile coefficient_file(const LaurentSeries& s);
CoefficientFile coefficient_file(const HarmonicBeltrami& h);

/// Requires kind taylor (or harmonic_beltrami for phi) and offset >= 0; leading
/// indices below the offset are zero.
PowerSeries to_power_series(const CoefficientFile& file);
LaurentSeries to_laurent_series(const CoefficientFile& file, double inner = 1.0,
                                double outer = std::numeric_limits<double>::infinity());
HarmonicBeltrami to_harmonic_beltrami(const CoefficientFile& file);

struct SampledGrid {
  QuadratureRule rule;
  std::vector<Complex> values;
};

SampledGrid parse_grid_csv(std::string_view text);
SampledGrid read_grid_csv(const std::filesystem::path& path);
std::string to_csv(const QuadratureRule& rule, std::span<const Complex> values);

}  // namespace wpnum
