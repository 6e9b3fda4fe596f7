#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>
#include <sstream>
#include <string>

#include "doctest.h"
#include "noneq/cli/ini.hpp"
#include "noneq/cli/output.hpp"
#include "noneq/cli/runner.hpp"
#include "noneq/cli/scenario.hpp"
#include "support.hpp"

using namespace noneq;
using namespace noneq::cli;
namespace fs = std::filesystem;

namespace {

const fs::path kScenarios = NONEQ_SCENARIO_DIR;

struct TempDir {
  fs::path path;
  TempDir() {
    std::random_device rd;
    path = fs::temp_directory_path() /
           ("noneq-cli-" + std::to_string(rd()) + std::to_string(rd()));
    fs::create_directories(path);
  }
  ~TempDir() {
    std::error_code ec;
    fs::remove_all(path, ec);
  }
};

std::string slurp(const fs::path& p) {
  std::ifstream f(p, std::ios::binary);
  std::ostringstream s;
  s << f.rdbuf();
  return s.str();
}

void write(const fs::path& p, const std::string& text) {
  std::ofstream f(p, std::ios::binary);
  f << text;
}

int run_quiet(const fs::path& scenario, const RunOptions& opt,
              std::string* err = nullptr) {
  std::ostringstream o, e;
  const int code = run(scenario, opt, o, e);
  if (err) *err = e.str();
  return code;
}

// columns of a CSV written by the tool, skipping header and footer
std::vector<std::vector<double>> read_csv(const fs::path& p) {
  std::istringstream in(slurp(p));
  std::string line;
  std::getline(in, line);
  std::vector<std::vector<double>> rows;
  while (std::getline(in, line)) {
    if (line.empty() || line[0] == '#') continue;
    std::vector<double> row;
    std::istringstream ls(line);
    std::string cell;
    while (std::getline(ls, cell, ',')) row.push_back(std::stod(cell));
    rows.push_back(row);
  }
  return rows;
}

const char* kMinimal = R"([scenario]
name = mini
kind = linear

[system]
labels = g, e
energies = 0, 1

[dipoles]
g-e = 1

[state]
type = population
level = g

[pulse]
T0_fs = 5
carrier = 1

[numerics]
eta = 0.01
grid_min = 0.9
grid_max = 1.1
grid_points = 21
)";

std::size_t error_line(const std::string& text) {
  try {
    parse_scenario(text);
  } catch (const ParseError& e) {
    return e.line();
  }
  return 0;
}

std::string replace(std::string s, const std::string& from,
                    const std::string& to) {
  const auto pos = s.find(from);
  REQUIRE(pos != std::string::npos);
  return s.replace(pos, from.size(), to);
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("ini reader") {
  const auto doc = parse_ini(
      "# comment\n[one]\nx = 1   ; trailing\n  y=two words\n\n[two-b]\nz = a#b\n");
  REQUIRE(doc.sections.size() == 3);
  const auto* one = doc.find("one");
  REQUIRE(one);
  CHECK(one->line == 2);
  REQUIRE(one->find("x"));
  CHECK(one->find("x")->value == "1");
  CHECK(one->find("x")->value_column == 5);
  CHECK(one->find("y")->value == "two words");
  CHECK(one->find("y")->key_column == 3);
  CHECK(doc.find("two-b")->find("z")->value == "a#b");

  auto where = [](const char* text) {
    try {
      parse_ini(text);
    } catch (const ParseError& e) {
      return std::make_pair(e.line(), e.column());
    }
    return std::make_pair<std::size_t, std::size_t>(0, 0);
  };
  CHECK(where("[a]\nkey value\n") == std::make_pair<std::size_t, std::size_t>(2, 5));
  CHECK(where("[a\n") == std::make_pair<std::size_t, std::size_t>(1, 3));
  CHECK(where("[a]\nk = 1\nk = 2\n") == std::make_pair<std::size_t, std::size_t>(3, 1));
  CHECK(where("[a]\n[a]\n") == std::make_pair<std::size_t, std::size_t>(2, 1));
  CHECK(where("[a]\nk =\n") == std::make_pair<std::size_t, std::size_t>(2, 4));
  CHECK(where("[a]\n  =3\n") == std::make_pair<std::size_t, std::size_t>(2, 3));
}

TEST_CASE("scenario parsing") {
  const Scenario s = parse_scenario(kMinimal);
  CHECK(s.name == "mini");
  CHECK(s.kind == Kind::Linear);
  CHECK(s.system.labels == std::vector<std::string>{"g", "e"});
  CHECK(s.state.type == StateType::Population);
  CHECK(s.pulse->E0 == 1.0);
  CHECK(s.pulse->T0_fs == 5.0);
  CHECK(s.grid.points == 21);
  CHECK_FALSE(s.sweep);

  SUBCASE("complex dipoles") {
    const auto c = parse_scenario(replace(kMinimal, "g-e = 1", "g-e = 0.6-0.8i"));
    CHECK(c.system.dipoles[0].value == cplx(0.6, -0.8));
    const auto d = parse_scenario(replace(kMinimal, "g-e = 1", "g-e = -2e-1+1e+0i"));
    CHECK(d.system.dipoles[0].value == cplx(-0.2, 1.0));
    const auto e = parse_scenario(replace(kMinimal, "g-e = 1", "g-e = i"));
    CHECK(e.system.dipoles[0].value == cplx(0.0, 1.0));
  }
  SUBCASE("errors carry positions") {
    auto pos = [](const std::string& text) {
      try {
        parse_scenario(text);
      } catch (const ParseError& e) {
        return std::make_pair(e.line(), e.column());
      }
      return std::make_pair<std::size_t, std::size_t>(0, 0);
    };
    CHECK(pos(replace(kMinimal, "level = g", "level = x")) ==
          std::make_pair<std::size_t, std::size_t>(14, 9));
    CHECK(pos(replace(kMinimal, "g-e = 1", "g-x = 1")) ==
          std::make_pair<std::size_t, std::size_t>(10, 3));
    CHECK(pos(replace(kMinimal, "energies = 0, 1", "energies = 0, 1x")) ==
          std::make_pair<std::size_t, std::size_t>(7, 15));
    CHECK(pos(replace(kMinimal, "T0_fs = 5", "T0 = 5")) ==
          std::make_pair<std::size_t, std::size_t>(17, 1));
    CHECK(pos(replace(kMinimal, "eta = 0.01", "eta = 0")) ==
          std::make_pair<std::size_t, std::size_t>(21, 7));
    CHECK(pos(replace(kMinimal, "grid_points = 21", "grid_points = -3")) ==
          std::make_pair<std::size_t, std::size_t>(24, 15));
  }
  SUBCASE("semantic checks") {
    CHECK(error_line(replace(kMinimal, "kind = linear", "kind = quadratic")) == 3);
    CHECK(error_line(replace(kMinimal, "[numerics]", "[sweep]\naxis = Omega\nmin = 0\nmax = 1\npoints = 3\n\n[numerics]")) > 0);
    CHECK(error_line(replace(kMinimal, "[numerics]", "[sweep]\naxis = chirp\nmin = 0\nmax = 1\npoints = 3\n\n[numerics]")) > 0);
    CHECK(error_line(replace(kMinimal, "[numerics]", "[extra]\n\n[numerics]")) > 0);
    CHECK(error_line(replace(kMinimal, "g-e = 1", "e-g = 1")) == 10);
    CHECK(error_line(replace(kMinimal, "energies = 0, 1", "energies = 0, 1, 2")) == 7);
    // thermal state without a temperature fails when the state is built
    CHECK(error_line(replace(kMinimal, "type = population\nlevel = g", "type = thermal")) > 0);
    // explicit matrix must be a valid density matrix
    CHECK(error_line(replace(kMinimal, "type = population\nlevel = g",
                             "type = matrix\nrow1 = 0.5, 0\nrow2 = 0, 0.4")) > 0);
    CHECK_NOTHROW(parse_scenario(replace(kMinimal, "type = population\nlevel = g",
                                         "type = matrix\nrow1 = 0.5, 0.1i\nrow2 = -0.1i, 0.5")));
  }
}

TEST_CASE("canonical form") {
  for (const auto& entry : fs::directory_iterator(kScenarios)) {
    CAPTURE(entry.path().string());
    const Scenario a = load_scenario(entry.path());
    const std::string text = serialize(a);
    const Scenario b = parse_scenario(text);
    CHECK(serialize(b) == text);
    CHECK(scenario_hash(a) == scenario_hash(b));
  }
  Scenario s = parse_scenario(kMinimal);
  const auto h = scenario_hash(s);
  s.pulse->phi2 = 1e-9;
  CHECK(scenario_hash(s) != h);
  // comments and layout do not change the hash
  const auto spaced = "# header\n" + replace(kMinimal, "eta = 0.01", "eta   =   0.01   # broadening");
  CHECK(scenario_hash(parse_scenario(spaced)) == h);
}

TEST_CASE("csv and svg writers") {
  OutputTable t;
  t.headers = {"omega_eV", "signal"};
  t.rows = {{0.1, 1.0 / 3.0}, {0.2, -2e-300}};
  t.scenario = "demo";
  t.hash = 0xabcULL;
  const std::string csv = to_csv(t);
  CHECK(csv ==
        "omega_eV,signal\n"
        "0.10000000000000001,0.33333333333333331\n"
        "0.20000000000000001,-2.0000000000000001e-300\n"
        "# scenario demo hash 0000000000000abc\n"
        "# noneq-spectra 0.1.0\n");
  t.rows.push_back({1.0});
  CHECK_THROWS_AS(to_csv(t), std::invalid_argument);
  t.rows.back() = {1.0, std::nan("")};
  CHECK_THROWS_AS(to_csv(t), std::invalid_argument);

  const std::string line = svg_line_plot({{"a", {0, 1, 2}, {0, 1, 0}}, {"b", {0, 2}, {1, 1}}},
                                         "t", "x", "y");
  CHECK(line.rfind("<svg", 0) == 0);
  CHECK(line.find("</svg>") != std::string::npos);
  std::size_t n = 0;
  for (auto p = line.find("<polyline"); p != std::string::npos; p = line.find("<polyline", p + 1)) ++n;
  CHECK(n == 2);
  const std::string heat = svg_heatmap({0, 1, 2}, {0, 1}, {{0, 1, 2}, {3, 4, 5}}, "t", "x", "y");
  n = 0;
  for (auto p = heat.find("fill=\"#"); p != std::string::npos; p = heat.find("fill=\"#", p + 1)) ++n;
  CHECK(n == 6 + 21);
}

TEST_CASE("bundled linear scenario") {
  TempDir tmp;
  RunOptions opt;
  opt.output_dir = tmp.path;
  opt.svg = true;
  REQUIRE(run_quiet(kScenarios / "fig1.ini", opt) == kOk);
  for (const char* c : {"pop", "coh", "total"})
    CHECK(fs::exists(tmp.path / (std::string("fig1_") + c + ".csv")));
  CHECK(fs::exists(tmp.path / "fig1.svg"));

  const auto rows = read_csv(tmp.path / "fig1_total.csv");
  REQUIRE(rows.size() == 601);
  SignalTrace t;
  for (const auto& r : rows) {
    t.omega.push_back(r[0]);
    t.values.push_back(r[1]);
  }
  const auto peaks = noneq::testing::find_peaks(t, 0.2);
  REQUIRE(!peaks.empty());
  bool at_ca = false, at_cb = false;
  for (const auto& p : peaks) {
    at_ca |= std::abs(p.omega - 0.8) <= 0.008;
    at_cb |= std::abs(p.omega - 0.7) <= 0.008;
  }
  CHECK(at_ca);
  CHECK(at_cb);
}

TEST_CASE("bundled fwm scenario") {
  TempDir tmp;
  RunOptions opt;
  opt.output_dir = tmp.path;
  REQUIRE(run_quiet(kScenarios / "fig2.ini", opt) == kOk);
  const auto rows = read_csv(tmp.path / "fig2_total.csv");
  REQUIRE(rows.size() == 601);
  SignalTrace t;
  for (const auto& r : rows) {
    t.omega.push_back(r[0]);
    t.values.push_back(r[1]);
  }
  // Delta = 0 resonance at 1.35 eV
  bool found = false;
  for (const auto& p : noneq::testing::find_peaks(t, 0.2))
    found |= std::abs(p.omega - 1.35) <= 0.004;
  CHECK(found);
  for (const char* c : {"a1", "a2", "a3", "a4"})
    CHECK(fs::exists(tmp.path / (std::string("fig2_") + c + ".csv")));
}

TEST_CASE("determinism") {
  TempDir a, b;
  RunOptions opt;
  opt.output_dir = a.path;
  opt.threads = 1;
  REQUIRE(run_quiet(kScenarios / "fig10.ini", opt) == kOk);
  opt.output_dir = b.path;
  opt.threads = 4;
  REQUIRE(run_quiet(kScenarios / "fig10.ini", opt) == kOk);
  for (const char* c : {"pop", "coh", "total", "steady"}) {
    const std::string name = std::string("fig10_") + c + ".csv";
    CHECK(slurp(a.path / name) == slurp(b.path / name));
  }
}

TEST_CASE("sweeps") {
  TempDir tmp;
  SUBCASE("axis-major driven sweep rebuilds the steady state per point") {
    const Scenario s = load_scenario(kScenarios / "fig10.ini");
    Scenario small = s;
    small.grid = {0.95, 1.05, 11};
    small.sweep = SweepSpec{Axis::Omega0, 0.03, 0.05, 3};
    const Result r = compute(small, 2);
    REQUIRE(r.axis_values.size() == 3);
    const auto tabs = tables(small, r);
    const auto& total = tabs[2].second;
    CHECK(tabs[2].first == "fig10_total.csv");
    CHECK(total.headers == std::vector<std::string>{"omega_eV", "omega0", "signal"});
    REQUIRE(total.rows.size() == 33);
    CHECK(total.rows[0][1] == 0.03);
    CHECK(total.rows[10][1] == 0.03);
    CHECK(total.rows[11][1] == doctest::Approx(0.04));
    for (std::size_t p = 0; p < 3; ++p) {
      Scenario single = with_axis_value(small, Axis::Omega0, r.axis_values[p]);
      single.sweep.reset();
      const Result one = compute(single);
      for (std::size_t i = 0; i < 11; ++i)
        CHECK(one.values[2][0][i] == total.rows[p * 11 + i][2]);
      CHECK(one.steady[0].isApprox(r.steady[p], 0.0));
    }
    const auto& steady = tabs[3].second;
    CHECK(tabs[3].first == "fig10_steady.csv");
    CHECK(steady.rows.size() == 3);
    CHECK(std::abs(steady.rows[2][4]) < 1e-6);  // Re rho_ab at omega0 = w_ba
  }
  SUBCASE("single-point sweep matches run") {
    RunOptions opt;
    opt.output_dir = tmp.path / "run";
    REQUIRE(run_quiet(kScenarios / "fig1.ini", opt) == kOk);
    opt.output_dir = tmp.path / "sweep";
    opt.sweep = SweepSpec{Axis::Phi2, 0.0, 0.0, 1};
    REQUIRE(run_quiet(kScenarios / "fig1.ini", opt) == kOk);
    const auto r1 = read_csv(tmp.path / "run" / "fig1_total.csv");
    const auto r2 = read_csv(tmp.path / "sweep" / "fig1_total.csv");
    REQUIRE(r1.size() == r2.size());
    for (std::size_t i = 0; i < r1.size(); ++i) {
      CHECK(r2[i][0] == r1[i][0]);
      CHECK(r2[i][1] == 0.0);
      CHECK(r2[i][2] == r1[i][1]);
    }
  }
  SUBCASE("sweep axis must fit the kind") {
    RunOptions opt;
    opt.output_dir = tmp.path;
    opt.sweep = SweepSpec{Axis::Omega, 0.0, 0.1, 3};
    CHECK(run_quiet(kScenarios / "fig1.ini", opt) == kParse);
    CHECK(run_quiet(kScenarios / "fig2.ini", opt) == kParse);
    CHECK(fs::is_empty(tmp.path));
  }
}

TEST_CASE("exit codes") {
  TempDir tmp;
  RunOptions opt;
  opt.output_dir = tmp.path / "out";
  std::string err;

  SUBCASE("dry run writes nothing") {
    opt.dry_run = true;
    for (const auto& entry : fs::directory_iterator(kScenarios))
      CHECK(run_quiet(entry.path(), opt) == kOk);
    CHECK_FALSE(fs::exists(opt.output_dir));
  }
  SUBCASE("parse error") {
    write(tmp.path / "bad.ini", replace(kMinimal, "level = g", "level = q"));
    CHECK(run_quiet(tmp.path / "bad.ini", opt, &err) == kParse);
    CHECK(err.find("bad.ini:14:9: error: unknown state label 'q'") != std::string::npos);
  }
  SUBCASE("missing scenario") {
    CHECK(run_quiet(tmp.path / "missing.ini", opt) == kIo);
  }
  SUBCASE("unwritable output") {
    write(tmp.path / "file", "x");
    opt.output_dir = tmp.path / "file";
    CHECK(run_quiet(kScenarios / "fig1.ini", opt) == kIo);
  }
  SUBCASE("numerical failure") {
    // no dissipation and no drive: the steady state is not unique
    std::string text = slurp(kScenarios / "fig5a.ini");
    text = replace(text, "b-a = 0.004\nc-a = 0.0001\nc-b = 0.0002", "b-a = 0\nc-a = 0\nc-b = 0");
    write(tmp.path / "degenerate.ini", text);
    CHECK(run_quiet(tmp.path / "degenerate.ini", opt, &err) == kNumerical);
    CHECK(err.find("numerical failure") != std::string::npos);
  }
}

TEST_CASE("thread count resolution") {
  CHECK(resolve_threads(3u) == 3);
  ::setenv("NONEQ_SPECTRA_THREADS", "5", 1);
  CHECK(resolve_threads(std::nullopt) == 5);
  CHECK(resolve_threads(2u) == 2);
  ::setenv("NONEQ_SPECTRA_THREADS", "zero", 1);
  CHECK(resolve_threads(std::nullopt) >= 1);
  ::unsetenv("NONEQ_SPECTRA_THREADS");
  CHECK(resolve_threads(std::nullopt) >= 1);
}

}  // TEST_SUITE
