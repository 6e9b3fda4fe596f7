#include "noneq/cli/runner.hpp"

#include <fmt/format.h>

#include <atomic>
#include <cstdlib>
#include <exception>
#include <fstream>
#include <system_error>
#include <thread>

#include "noneq/cli/ini.hpp"
#include "noneq/driven.hpp"
#include "noneq/errors.hpp"
#include "noneq/response.hpp"
#include "noneq/wavemixing.hpp"

namespace noneq::cli {

namespace {

struct Point {
  std::vector<std::vector<double>> values;  // per component
  CMatrix steady;
};

std::vector<std::string> component_names(const Scenario& s) {
  switch (s.kind) {
    case Kind::Linear:
    case Kind::Driven: return {"pop", "coh", "total"};
    case Kind::Fwm:
      if (s.method == FwmMethod::Chi3) return {"total"};
      return {"a1", "a2", "a3", "a4", "total"};
  }
  return {};
}

Point compute_point(const Scenario& s, const std::vector<double>& grid) {
  const LevelSystem sys = build_system(s);
  Point p;
  switch (s.kind) {
    case Kind::Linear: {
      const auto r = response::linear_signal(sys, build_state(s, sys),
                                             build_pulse(s), grid, s.eta,
                                             s.preparation);
      p.values = {r.pop.values, r.coh.values, r.total.values};
      break;
    }
    case Kind::Fwm: {
      std::array<fields::CWField, 3> modes = {
          fields::CWField(s.modes[0].amplitude, s.modes[0].frequency, s.modes[0].sign),
          fields::CWField(s.modes[1].amplitude, s.modes[1].frequency, s.modes[1].sign),
          fields::CWField(s.modes[2].amplitude, s.modes[2].frequency, s.modes[2].sign)};
      const wavemixing::FWMScenario sc{
          sys, build_state(s, sys), modes,
          fields::GaussianProbe(s.probe->sigma, s.probe->center), s.eta};
      if (s.method == FwmMethod::Chi3) {
        p.values = {wavemixing::fwm_signal_from_chi3(
                        sc, grid, wavemixing::default_filter_window(sc))
                        .values};
      } else {
        const auto r = wavemixing::chi3_pathway_fwm(sc, grid, s.preparation);
        for (const auto& f : r.family) p.values.push_back(f.values);
        p.values.push_back(r.total.values);
      }
      break;
    }
    case Kind::Driven: {
      const auto d = driven::make_driven(sys, s.drive->Omega, s.drive->omega0);
      const auto r = driven::driven_signal(d, build_pulse(s), grid, s.eta);
      p.values = {r.pop.values, r.coh.values, r.total.values};
      p.steady = r.steady.matrix();
      break;
    }
  }
  return p;
}

}  // namespace

Result compute(const Scenario& s, unsigned threads) {
  Result r;
  r.components = component_names(s);
  r.omega = uniform_grid(s.grid.min, s.grid.max, s.grid.points);
  std::vector<Scenario> runs;
  if (s.sweep) {
    r.axis = s.sweep->axis;
    r.axis_values = uniform_grid(s.sweep->min, s.sweep->max, s.sweep->points);
    for (double v : r.axis_values) runs.push_back(with_axis_value(s, *r.axis, v));
  } else {
    runs.push_back(s);
  }

  std::vector<Point> points(runs.size());
  std::vector<std::exception_ptr> errors(runs.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i = next++; i < runs.size(); i = next++) {
      try {
        points[i] = compute_point(runs[i], r.omega);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  const unsigned n = std::max(1u, std::min<unsigned>(
                                      threads, static_cast<unsigned>(runs.size())));
  if (n == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);

  r.values.assign(r.components.size(), {});
  for (auto& p : points) {
    for (std::size_t c = 0; c < r.components.size(); ++c)
      r.values[c].push_back(std::move(p.values[c]));
    if (s.kind == Kind::Driven) r.steady.push_back(std::move(p.steady));
  }
  return r;
}

std::vector<std::pair<std::string, OutputTable>> tables(const Scenario& s,
                                                        const Result& r) {
  const std::uint64_t hash = scenario_hash(s);
  std::vector<std::pair<std::string, OutputTable>> out;
  auto table = [&](std::vector<std::string> headers) {
    OutputTable t;
    t.headers = std::move(headers);
    t.scenario = s.name;
    t.hash = hash;
    return t;
  };

  for (std::size_t c = 0; c < r.components.size(); ++c) {
    OutputTable t;
    if (!r.axis) {
      t = table({"omega_eV", "signal"});
      for (std::size_t i = 0; i < r.omega.size(); ++i)
        t.rows.push_back({r.omega[i], r.values[c][0][i]});
    } else {
      t = table({"omega_eV", std::string(to_string(*r.axis)), "signal"});
      for (std::size_t p = 0; p < r.axis_values.size(); ++p)
        for (std::size_t i = 0; i < r.omega.size(); ++i)
          t.rows.push_back({r.omega[i], r.axis_values[p], r.values[c][p][i]});
    }
    out.emplace_back(fmt::format("{}_{}.csv", s.name, r.components[c]),
                     std::move(t));
  }

  if (!r.steady.empty()) {
    const auto& l = s.system.labels;
    OutputTable t;
    if (!r.axis) {
      t = table({"row", "col", "re", "im"});
      const CMatrix& m = r.steady[0];
      for (Eigen::Index i = 0; i < m.rows(); ++i)
        for (Eigen::Index j = 0; j < m.cols(); ++j)
          t.rows.push_back({static_cast<double>(i), static_cast<double>(j),
                            m(i, j).real(), m(i, j).imag()});
    } else {
      t = table({std::string(to_string(*r.axis)), "rho_" + l[0] + l[0],
                 "rho_" + l[1] + l[1], "rho_" + l[2] + l[2],
                 "re_rho_" + l[0] + l[1], "im_rho_" + l[0] + l[1]});
      for (std::size_t p = 0; p < r.axis_values.size(); ++p) {
        const CMatrix& m = r.steady[p];
        t.rows.push_back({r.axis_values[p], m(0, 0).real(), m(1, 1).real(),
                          m(2, 2).real(), m(0, 1).real(), m(0, 1).imag()});
      }
    }
    out.emplace_back(s.name + "_steady.csv", std::move(t));
  }
  return out;
}

std::pair<std::string, std::string> render_svg(const Scenario& s,
                                               const Result& r) {
  const std::string title = fmt::format("{} ({})", s.name, to_string(s.kind));
  if (!r.axis) {
    std::vector<Series> series;
    for (std::size_t c = 0; c < r.components.size(); ++c)
      series.push_back({r.components[c], r.omega, r.values[c][0]});
    return {s.name + ".svg",
            svg_line_plot(series, title, "omega (eV)", "signal (arb. units)")};
  }
  const auto& total = r.values.back();
  std::vector<std::vector<double>> z(total.size());
  for (std::size_t p = 0; p < total.size(); ++p)
    for (double v : total[p]) z[p].push_back(std::abs(v));
  return {s.name + ".svg",
          svg_heatmap(r.omega, r.axis_values, z, title + " |S_total|",
                      "omega (eV)", std::string(to_string(*r.axis)))};
}

unsigned resolve_threads(std::optional<unsigned> flag) {
  if (flag && *flag > 0) return *flag;
  if (const char* env = std::getenv("NONEQ_SPECTRA_THREADS")) {
    char* end = nullptr;
    const long v = std::strtol(env, &end, 10);
    if (end != env && *end == '\0' && v > 0) return static_cast<unsigned>(v);
  }
  return std::max(1u, std::thread::hardware_concurrency());
}

namespace {

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path, std::ios::binary | std::ios::trunc);
  if (!f)
    throw std::system_error(errno ? errno : EIO, std::generic_category(),
                            "cannot open " + path.string() + " for writing");
  f << text;
  f.close();
  if (!f)
    throw std::system_error(EIO, std::generic_category(),
                            "cannot write " + path.string());
}

}  // namespace

int run(const std::filesystem::path& path, const RunOptions& opt,
        std::ostream& out, std::ostream& err) {
  Scenario s;
  try {
    s = load_scenario(path);
    if (opt.sweep) {
      s.sweep = opt.sweep;
      validate(s);
    }
  } catch (const ParseError& e) {
    err << fmt::format("{}:{}:{}: error: {}\n", path.string(), e.line(),
                       e.column(), e.message());
    return kParse;
  } catch (const Error& e) {
    err << fmt::format("{}: error: {}\n", path.string(), e.what());
    return kParse;
  } catch (const std::system_error& e) {
    err << fmt::format("error: {}\n", e.what());
    return kIo;
  }

  if (opt.dry_run) {
    const std::size_t points = s.sweep ? s.sweep->points : 1;
    out << fmt::format("scenario {} ({}), hash {:016x}\n", s.name,
                       to_string(s.kind), scenario_hash(s));
    out << fmt::format("grid {} points, {} sweep point(s)\n", s.grid.points,
                       points);
    return kOk;
  }

  Result r;
  try {
    r = compute(s, opt.threads);
  } catch (const NumericalError& e) {
    err << fmt::format("{}: numerical failure: {}\n", path.string(), e.what());
    return kNumerical;
  } catch (const DomainError& e) {
    err << fmt::format("{}: numerical failure: {}\n", path.string(), e.what());
    return kNumerical;
  } catch (const Error& e) {
    err << fmt::format("{}: error: {}\n", path.string(), e.what());
    return kParse;
  }

  try {
    std::filesystem::create_directories(opt.output_dir);
    for (const auto& [name, table] : tables(s, r)) {
      write_file(opt.output_dir / name, to_csv(table));
      out << (opt.output_dir / name).string() << '\n';
    }
    if (opt.svg) {
      const auto [name, text] = render_svg(s, r);
      write_file(opt.output_dir / name, text);
      out << (opt.output_dir / name).string() << '\n';
    }
  } catch (const std::system_error& e) {
    err << fmt::format("error: {}\n", e.what());
    return kIo;
  } catch (const std::invalid_argument& e) {
    err << fmt::format("{}: numerical failure: {}\n", path.string(), e.what());
    return kNumerical;
  }
  return kOk;
}

}  // namespace noneq::cli
