#pragma once

#include <cstdint>
#include <ostream>
#include <string>
#include <vector>

#include "noneq/signal.hpp"

namespace noneq::cli {

inline constexpr const char* kArtifactVersion = "noneq-spectra 0.1.0";

struct OutputTable {
  std::vector<std::string> headers;
  std::vector<std::vector<double>> rows;
  std::string scenario;
  std::uint64_t hash = 0;

  // throws std::invalid_argument when ragged or non-finite
  void validate() const;
};

// Header row, ',' separated values with 17 significant digits, '\n' line
// endings, then '#' provenance lines (scenario name and hash, version).
void write_csv(std::ostream& out, const OutputTable& t);
std::string to_csv(const OutputTable& t);

struct Series {
  std::string label;
  std::vector<double> x, y;
};

// Self-contained SVG renderings.
std::string svg_line_plot(const std::vector<Series>& series,
                          const std::string& title, const std::string& xlabel,
                          const std::string& ylabel);
// z[j][i] at (x[i], y[j]), colored by value
std::string svg_heatmap(const std::vector<double>& x,
                        const std::vector<double>& y,
                        const std::vector<std::vector<double>>& z,
                        const std::string& title, const std::string& xlabel,
                        const std::string& ylabel);

}  // namespace noneq::cli
