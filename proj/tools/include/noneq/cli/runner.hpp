#pragma once

#include <filesystem>
#include <optional>
#include <ostream>
#include <string>
#include <utility>
#include <vector>

#include "noneq/cli/output.hpp"
#include "noneq/cli/scenario.hpp"

namespace noneq::cli {

enum ExitCode : int { kOk = 0, kParse = 2, kNumerical = 3, kIo = 4 };

// Spectra of one scenario. values[c][p] is component c at sweep point p
// (a single point when the scenario is not swept).
struct Result {
  std::vector<std::string> components;
  std::vector<double> omega;
  std::optional<Axis> axis;
  std::vector<double> axis_values;
  std::vector<std::vector<std::vector<double>>> values;
  std::vector<CMatrix> steady;  // driven scenarios, one per point
};

// Runs the scenario (its [sweep] block when present). Sweep points are
// spread over `threads` workers; the result does not depend on the count.
Result compute(const Scenario& s, unsigned threads = 1);

// file name -> table, in output order
std::vector<std::pair<std::string, OutputTable>> tables(const Scenario& s,
                                                        const Result& r);
// file name and SVG text
std::pair<std::string, std::string> render_svg(const Scenario& s,
                                               const Result& r);

struct RunOptions {
  std::filesystem::path output_dir = ".";
  bool svg = false;
  bool dry_run = false;
  unsigned threads = 1;
  std::optional<SweepSpec> sweep;  // replaces the scenario's [sweep]
};

// --threads, else NONEQ_SPECTRA_THREADS, else the hardware concurrency
unsigned resolve_threads(std::optional<unsigned> flag);

// Full command: load, compute, write. Returns an ExitCode; diagnostics go to
// err, the list of written files to out.
int run(const std::filesystem::path& scenario, const RunOptions& opt,
        std::ostream& out, std::ostream& err);

}  // namespace noneq::cli
