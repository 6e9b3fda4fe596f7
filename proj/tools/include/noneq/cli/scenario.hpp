#pragma once

#include <cstddef>
#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "noneq/density_matrix.hpp"
#include "noneq/level_system.hpp"
#include "noneq/pulse.hpp"
#include "noneq/response.hpp"
#include "noneq/types.hpp"

namespace noneq::cli {

enum class Kind { Linear, Fwm, Driven };
enum class Axis { Phi2, Omega, Omega0 };
enum class StateType { Thermal, Population, Coherent, Matrix, Steady };
enum class FwmMethod { Pathway, Chi3 };

std::string_view to_string(Kind k);
std::string_view to_string(Axis a);
std::string_view to_string(StateType t);
std::string_view to_string(FwmMethod m);
std::optional<Axis> parse_axis(std::string_view s);

struct DipoleSpec {
  std::string lower, upper;
  cplx value;
};

struct RateSpec {
  std::string from, to;  // downward
  double rate;
};

struct SystemSpec {
  std::vector<std::string> labels;
  std::vector<double> energies;
  std::vector<DipoleSpec> dipoles;
  std::vector<RateSpec> rates;
  std::optional<double> temperature;
};

struct StateSpec {
  StateType type = StateType::Thermal;
  std::vector<std::string> levels;  // population: 1, coherent: 2
  std::vector<std::vector<cplx>> matrix;
};

struct PulseSpec {
  double E0 = 1.0;
  double T0_fs = 0.0;
  double carrier = 0.0;
  double phi2 = 0.0;
  double phi0 = 0.0;
};

struct ModeSpec {
  cplx amplitude = 1.0;
  double frequency = 0.0;
  int sign = +1;
};

struct ProbeSpec {
  double sigma = 0.0;
  double center = 0.0;
};

struct DriveSpec {
  double Omega = 0.0;
  double omega0 = 0.0;
};

struct GridSpec {
  double min = 0.0, max = 0.0;
  std::size_t points = 0;
};

struct SweepSpec {
  Axis axis = Axis::Phi2;
  double min = 0.0, max = 0.0;
  std::size_t points = 0;
};

// Declarative description of one computation. T0 is kept in fs as written;
// conversion to eV^-1 happens when the pulse is built.
struct Scenario {
  std::string name;
  Kind kind = Kind::Linear;
  SystemSpec system;
  StateSpec state;
  std::optional<PulseSpec> pulse;
  std::vector<ModeSpec> modes;
  std::optional<ProbeSpec> probe;
  std::optional<DriveSpec> drive;
  double eta = 0.0;
  GridSpec grid;
  response::Preparation preparation = response::Preparation::Nonequilibrium;
  FwmMethod method = FwmMethod::Pathway;
  std::optional<SweepSpec> sweep;
};

// Parses and validates. Throws ParseError with the position of the
// offending key or value.
Scenario parse_scenario(std::string_view text);
// Throws std::system_error when the file cannot be read.
Scenario load_scenario(const std::filesystem::path& path);

// Canonical text form: fixed section and key order, 17 significant digits.
std::string serialize(const Scenario& s);
// FNV-1a of the canonical form
std::uint64_t scenario_hash(const Scenario& s);

// Semantic checks shared by the parser and programmatic edits.
// Throws ConfigurationError.
void validate(const Scenario& s);

LevelSystem build_system(const Scenario& s);
// all state types except Steady
DensityMatrix build_state(const Scenario& s, const LevelSystem& sys);
fields::ChirpedGaussianPulse build_pulse(const Scenario& s);

// copy with the sweep axis set to value
Scenario with_axis_value(const Scenario& s, Axis axis, double value);

}  // namespace noneq::cli
