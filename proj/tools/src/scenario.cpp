#include "noneq/cli/scenario.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <fstream>
#include <set>
#include <sstream>
#include <system_error>

#include "noneq/cli/ini.hpp"
#include "noneq/driven.hpp"
#include "noneq/errors.hpp"

namespace noneq::cli {

std::string_view to_string(Kind k) {
  switch (k) {
    case Kind::Linear: return "linear";
    case Kind::Fwm: return "fwm";
    case Kind::Driven: return "driven";
  }
  return "";
}

std::string_view to_string(Axis a) {
  switch (a) {
    case Axis::Phi2: return "phi2";
    case Axis::Omega: return "Omega";
    case Axis::Omega0: return "omega0";
  }
  return "";
}

std::string_view to_string(StateType t) {
  switch (t) {
    case StateType::Thermal: return "thermal";
    case StateType::Population: return "population";
    case StateType::Coherent: return "maximally_coherent";
    case StateType::Matrix: return "matrix";
    case StateType::Steady: return "driven_steady_state";
  }
  return "";
}

std::string_view to_string(FwmMethod m) {
  return m == FwmMethod::Pathway ? "pathway" : "chi3";
}

std::optional<Axis> parse_axis(std::string_view s) {
  for (Axis a : {Axis::Phi2, Axis::Omega, Axis::Omega0})
    if (s == to_string(a)) return a;
  return std::nullopt;
}

namespace {

using Entry = IniEntry;

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

// comma separated items with their column offsets inside the value
std::vector<std::pair<std::string_view, std::size_t>> split_list(
    std::string_view v) {
  std::vector<std::pair<std::string_view, std::size_t>> out;
  std::size_t pos = 0;
  while (true) {
    const std::size_t comma = std::min(v.find(',', pos), v.size());
    std::string_view item = v.substr(pos, comma - pos);
    std::size_t off = pos;
    while (!item.empty() && (item.front() == ' ' || item.front() == '\t')) {
      item.remove_prefix(1);
      ++off;
    }
    out.emplace_back(trim(item), off);
    if (comma == v.size()) break;
    pos = comma + 1;
  }
  return out;
}

bool to_double(std::string_view s, double& out) {
  if (!s.empty() && s.front() == '+') s.remove_prefix(1);
  const auto r = std::from_chars(s.data(), s.data() + s.size(), out);
  return r.ec == std::errc{} && r.ptr == s.data() + s.size() &&
         std::isfinite(out);
}

// x, x+yi, x-yi, yi, i, -i
bool to_complex(std::string_view s, cplx& out) {
  if (s.empty()) return false;
  if (s.back() != 'i' && s.back() != 'j') {
    double re;
    if (!to_double(s, re)) return false;
    out = re;
    return true;
  }
  std::string_view body = s.substr(0, s.size() - 1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = body.size(); k-- > 1;)
    if ((body[k] == '+' || body[k] == '-') && body[k - 1] != 'e' &&
        body[k - 1] != 'E') {
      split = k;
      break;
    }
  double re = 0.0, im = 0.0;
  std::string_view ims = body;
  if (split != std::string_view::npos) {
    if (!to_double(body.substr(0, split), re)) return false;
    ims = body.substr(split);
  }
  if (ims.empty() || ims == "+") im = 1.0;
  else if (ims == "-") im = -1.0;
  else if (!to_double(ims, im)) return false;
  out = {re, im};
  return true;
}

struct Reader {
  const IniDocument& doc;

  const IniSection* section(std::string_view name) const {
    return doc.find(name);
  }

  [[noreturn]] static void fail(const Entry& e, const std::string& msg,
                                std::size_t offset = 0) {
    throw ParseError(msg, e.line, e.value_column + offset);
  }

  const Entry& require(const IniSection& sec, std::string_view key) const {
    if (const Entry* e = sec.find(key)) return *e;
    throw ParseError(fmt::format("missing key '{}' in [{}]", key, sec.name),
                     sec.line, 1);
  }

  static double number(const Entry& e) {
    double v;
    if (!to_double(trim(e.value), v))
      fail(e, fmt::format("'{}' is not a finite number", e.value));
    return v;
  }

  static cplx complex(const Entry& e) {
    cplx v;
    if (!to_complex(trim(e.value), v))
      fail(e, fmt::format("'{}' is not a number (use x, x+yi)", e.value));
    return v;
  }

  static std::size_t count(const Entry& e) {
    std::size_t v = 0;
    const std::string_view s = trim(e.value);
    const auto r = std::from_chars(s.data(), s.data() + s.size(), v);
    if (r.ec != std::errc{} || r.ptr != s.data() + s.size() || v == 0)
      fail(e, fmt::format("'{}' is not a positive integer", e.value));
    return v;
  }

  static std::vector<double> numbers(const Entry& e) {
    std::vector<double> out;
    for (auto [item, off] : split_list(e.value)) {
      double v;
      if (!to_double(item, v))
        fail(e, fmt::format("'{}' is not a finite number", item), off);
      out.push_back(v);
    }
    return out;
  }

  static std::vector<std::string> names(const Entry& e) {
    std::vector<std::string> out;
    for (auto [item, off] : split_list(e.value)) {
      if (item.empty()) fail(e, "empty list item", off);
      out.emplace_back(item);
    }
    return out;
  }

  void check_keys(const IniSection& sec,
                  std::initializer_list<std::string_view> allowed) const {
    for (const auto& e : sec.entries)
      if (std::find(allowed.begin(), allowed.end(), e.key) == allowed.end())
        throw ParseError(
            fmt::format("unknown key '{}' in [{}]", e.key,
                        sec.name.empty() ? "top level" : sec.name),
            e.line, e.key_column);
  }
};

void check_label(const SystemSpec& sys, const std::string& label,
                 const Entry& e, std::size_t column) {
  if (std::find(sys.labels.begin(), sys.labels.end(), label) ==
      sys.labels.end())
    throw ParseError(fmt::format("unknown state label '{}'", label), e.line,
                     column);
}

// "x-y" key of the dipole and rate sections
std::pair<std::string, std::string> pair_key(const Entry& e) {
  const auto dash = e.key.find('-');
  if (dash == std::string::npos || dash == 0 || dash + 1 == e.key.size() ||
      e.key.find('-', dash + 1) != std::string::npos)
    throw ParseError(
        fmt::format("key '{}' must name two states as <from>-<to>", e.key),
        e.line, e.key_column);
  return {e.key.substr(0, dash), e.key.substr(dash + 1)};
}

std::string fmt_num(double v) { return fmt::format("{:.17g}", v); }

std::string fmt_cplx(cplx v) {
  if (v.imag() == 0.0) return fmt_num(v.real());
  return fmt::format("{:.17g}{}{:.17g}i", v.real(), v.imag() < 0 ? "" : "+",
                     v.imag());
}

template <class Range, class F>
std::string join(const Range& r, F f) {
  std::string out;
  for (const auto& x : r) {
    if (!out.empty()) out += ", ";
    out += f(x);
  }
  return out;
}

}  // namespace

Scenario parse_scenario(std::string_view text) {
  const IniDocument doc = parse_ini(text);
  const Reader rd{doc};
  Scenario s;

  for (const auto& sec : doc.sections) {
    static const std::set<std::string> known = {
        "", "scenario", "system", "dipoles", "rates", "state", "pulse",
        "mode1", "mode2", "mode3", "probe", "drive", "numerics", "sweep"};
    if (!known.count(sec.name))
      throw ParseError(fmt::format("unknown section [{}]", sec.name), sec.line,
                       1);
  }
  if (const auto* top = rd.section(""); top && !top->entries.empty())
    throw ParseError("keys must follow a section header",
                     top->entries.front().line, top->entries.front().key_column);

  const IniSection* scen = rd.section("scenario");
  if (!scen) throw ParseError("missing [scenario] section", 1, 1);
  rd.check_keys(*scen, {"name", "kind"});
  {
    const Entry& e = rd.require(*scen, "name");
    s.name = std::string(trim(e.value));
    for (std::size_t i = 0; i < s.name.size(); ++i) {
      const char c = s.name[i];
      if (!(std::isalnum(static_cast<unsigned char>(c)) || c == '_' ||
            c == '-' || c == '.'))
        Reader::fail(e, "scenario name may only contain letters, digits, "
                        "'_', '-' and '.'", i);
    }
    const Entry& k = rd.require(*scen, "kind");
    const auto kv = trim(k.value);
    if (kv == "linear") s.kind = Kind::Linear;
    else if (kv == "fwm") s.kind = Kind::Fwm;
    else if (kv == "driven") s.kind = Kind::Driven;
    else Reader::fail(k, "kind must be linear, fwm or driven");
  }

  const IniSection* sys = rd.section("system");
  if (!sys) throw ParseError("missing [system] section", 1, 1);
  rd.check_keys(*sys, {"labels", "energies", "temperature"});
  s.system.labels = Reader::names(rd.require(*sys, "labels"));
  {
    const Entry& e = rd.require(*sys, "energies");
    s.system.energies = Reader::numbers(e);
    if (s.system.energies.size() != s.system.labels.size())
      Reader::fail(e, fmt::format("{} energies for {} labels",
                                  s.system.energies.size(),
                                  s.system.labels.size()));
    std::set<std::string> seen;
    for (const auto& l : s.system.labels)
      if (!seen.insert(l).second)
        throw ParseError(fmt::format("duplicate state label '{}'", l),
                         rd.require(*sys, "labels").line,
                         rd.require(*sys, "labels").value_column);
  }
  if (const Entry* e = sys->find("temperature")) {
    s.system.temperature = Reader::number(*e);
    if (*s.system.temperature <= 0.0) Reader::fail(*e, "temperature must be > 0");
  }

  auto index_of = [&](const std::string& l) {
    return static_cast<std::size_t>(
        std::find(s.system.labels.begin(), s.system.labels.end(), l) -
        s.system.labels.begin());
  };

  if (const IniSection* dip = rd.section("dipoles")) {
    for (const auto& e : dip->entries) {
      auto [lo, up] = pair_key(e);
      check_label(s.system, lo, e, e.key_column);
      check_label(s.system, up, e, e.key_column + lo.size() + 1);
      if (!(s.system.energies[index_of(lo)] < s.system.energies[index_of(up)]))
        throw ParseError(
            fmt::format("dipole '{}' must go from a lower to a higher state",
                        e.key),
            e.line, e.key_column);
      s.system.dipoles.push_back({lo, up, Reader::complex(e)});
    }
  }
  if (const IniSection* rt = rd.section("rates")) {
    for (const auto& e : rt->entries) {
      auto [from, to] = pair_key(e);
      check_label(s.system, from, e, e.key_column);
      check_label(s.system, to, e, e.key_column + from.size() + 1);
      const double r = Reader::number(e);
      if (r < 0.0) Reader::fail(e, "rates must be >= 0");
      s.system.rates.push_back({from, to, r});
    }
  }

  const IniSection* st = rd.section("state");
  if (st) {
    rd.check_keys(*st, {"type", "level", "levels", "row1", "row2", "row3",
                        "row4", "row5", "row6", "row7", "row8"});
    const Entry& e = rd.require(*st, "type");
    const auto t = trim(e.value);
    if (t == "thermal") s.state.type = StateType::Thermal;
    else if (t == "population") s.state.type = StateType::Population;
    else if (t == "maximally_coherent") s.state.type = StateType::Coherent;
    else if (t == "matrix") s.state.type = StateType::Matrix;
    else if (t == "driven_steady_state") s.state.type = StateType::Steady;
    else
      Reader::fail(e, "state type must be thermal, population, "
                      "maximally_coherent, matrix or driven_steady_state");
    if (s.state.type == StateType::Population) {
      const Entry& l = rd.require(*st, "level");
      s.state.levels = {std::string(trim(l.value))};
      check_label(s.system, s.state.levels[0], l, l.value_column);
    } else if (s.state.type == StateType::Coherent) {
      const Entry& l = rd.require(*st, "levels");
      s.state.levels = Reader::names(l);
      const auto items = split_list(l.value);
      if (s.state.levels.size() != 2)
        Reader::fail(l, "maximally_coherent needs two levels");
      for (std::size_t k = 0; k < 2; ++k)
        check_label(s.system, s.state.levels[k], l,
                    l.value_column + items[k].second);
      if (s.state.levels[0] == s.state.levels[1])
        Reader::fail(l, "maximally_coherent needs two distinct levels");
    } else if (s.state.type == StateType::Matrix) {
      const std::size_t n = s.system.labels.size();
      for (std::size_t r = 0; r < n; ++r) {
        const std::string key = fmt::format("row{}", r + 1);
        const Entry& row = rd.require(*st, key);
        std::vector<cplx> vals;
        for (auto [item, off] : split_list(row.value)) {
          cplx v;
          if (!to_complex(item, v))
            Reader::fail(row, fmt::format("'{}' is not a number", item), off);
          vals.push_back(v);
        }
        if (vals.size() != n)
          Reader::fail(row, fmt::format("row has {} entries, expected {}",
                                        vals.size(), n));
        s.state.matrix.push_back(std::move(vals));
      }
    }
  } else if (s.kind == Kind::Driven) {
    s.state.type = StateType::Steady;
  } else {
    throw ParseError("missing [state] section", 1, 1);
  }

  if (const IniSection* p = rd.section("pulse")) {
    rd.check_keys(*p, {"E0", "T0_fs", "carrier", "phi2", "phi0"});
    PulseSpec ps;
    if (const Entry* e = p->find("E0")) ps.E0 = Reader::number(*e);
    const Entry& t0 = rd.require(*p, "T0_fs");
    ps.T0_fs = Reader::number(t0);
    if (ps.T0_fs <= 0.0) Reader::fail(t0, "T0_fs must be > 0");
    ps.carrier = Reader::number(rd.require(*p, "carrier"));
    if (const Entry* e = p->find("phi2")) ps.phi2 = Reader::number(*e);
    if (const Entry* e = p->find("phi0")) ps.phi0 = Reader::number(*e);
    s.pulse = ps;
  }

  for (int m = 1; m <= 3; ++m) {
    const IniSection* ms = rd.section(fmt::format("mode{}", m));
    if (!ms) break;
    rd.check_keys(*ms, {"amplitude", "frequency", "sign"});
    ModeSpec mode;
    if (const Entry* e = ms->find("amplitude")) mode.amplitude = Reader::complex(*e);
    mode.frequency = Reader::number(rd.require(*ms, "frequency"));
    if (const Entry* e = ms->find("sign")) {
      const auto v = trim(e->value);
      if (v == "+1" || v == "1" || v == "+") mode.sign = 1;
      else if (v == "-1" || v == "-") mode.sign = -1;
      else Reader::fail(*e, "sign must be +1 or -1");
    }
    s.modes.push_back(mode);
  }

  if (const IniSection* p = rd.section("probe")) {
    rd.check_keys(*p, {"sigma", "center"});
    const Entry& e = rd.require(*p, "sigma");
    s.probe = ProbeSpec{Reader::number(e),
                        Reader::number(rd.require(*p, "center"))};
    if (s.probe->sigma <= 0.0) Reader::fail(e, "sigma must be > 0");
  }

  if (const IniSection* d = rd.section("drive")) {
    rd.check_keys(*d, {"Omega", "omega0"});
    const Entry& a = rd.require(*d, "Omega");
    const Entry& b = rd.require(*d, "omega0");
    s.drive = DriveSpec{Reader::number(a), Reader::number(b)};
    if (s.drive->Omega < 0.0) Reader::fail(a, "Omega must be >= 0");
    if (s.drive->omega0 < 0.0) Reader::fail(b, "omega0 must be >= 0");
  }

  const IniSection* num = rd.section("numerics");
  if (!num) throw ParseError("missing [numerics] section", 1, 1);
  rd.check_keys(*num, {"eta", "grid_min", "grid_max", "grid_points",
                       "preparation", "method"});
  {
    if (const Entry* e = num->find("eta")) {
      s.eta = Reader::number(*e);
      if (s.eta < 0.0 || (s.kind != Kind::Driven && s.eta == 0.0))
        Reader::fail(*e, s.kind == Kind::Driven ? "eta must be >= 0"
                                                : "eta must be > 0");
    } else if (s.kind != Kind::Driven) {
      throw ParseError("missing key 'eta' in [numerics]", num->line, 1);
    }
    const Entry& lo = rd.require(*num, "grid_min");
    const Entry& hi = rd.require(*num, "grid_max");
    const Entry& np = rd.require(*num, "grid_points");
    s.grid = {Reader::number(lo), Reader::number(hi), Reader::count(np)};
    if (s.grid.points > 1 && !(s.grid.max > s.grid.min))
      Reader::fail(hi, "grid_max must exceed grid_min");
    if (const Entry* e = num->find("preparation")) {
      const auto v = trim(e->value);
      if (v == "nonequilibrium") s.preparation = response::Preparation::Nonequilibrium;
      else if (v == "stationary") s.preparation = response::Preparation::Stationary;
      else Reader::fail(*e, "preparation must be nonequilibrium or stationary");
    }
    if (const Entry* e = num->find("method")) {
      const auto v = trim(e->value);
      if (v == "pathway") s.method = FwmMethod::Pathway;
      else if (v == "chi3") s.method = FwmMethod::Chi3;
      else Reader::fail(*e, "method must be pathway or chi3");
    }
  }

  if (const IniSection* sw = rd.section("sweep")) {
    rd.check_keys(*sw, {"axis", "min", "max", "points"});
    const Entry& a = rd.require(*sw, "axis");
    const auto axis = parse_axis(trim(a.value));
    if (!axis) Reader::fail(a, "axis must be phi2, Omega or omega0");
    SweepSpec sp;
    sp.axis = *axis;
    sp.min = Reader::number(rd.require(*sw, "min"));
    const Entry& hi = rd.require(*sw, "max");
    sp.max = Reader::number(hi);
    sp.points = Reader::count(rd.require(*sw, "points"));
    if (sp.points > 1 && !(sp.max > sp.min))
      Reader::fail(hi, "sweep max must exceed min");
    s.sweep = sp;
    if (s.kind == Kind::Fwm || (s.kind == Kind::Linear && sp.axis != Axis::Phi2))
      Reader::fail(a, fmt::format("axis {} is not valid for kind {}",
                                  to_string(sp.axis), to_string(s.kind)));
  }

  try {
    validate(s);
  } catch (const Error& e) {
    throw ParseError(e.what(), scen->line, 1);
  }
  return s;
}

void validate(const Scenario& s) {
  const LevelSystem sys = build_system(s);
  switch (s.kind) {
    case Kind::Linear:
      if (!s.pulse) throw ConfigurationError("linear scenario needs [pulse]");
      if (s.state.type == StateType::Steady)
        throw ConfigurationError(
            "driven_steady_state is only available for kind = driven");
      if (!(s.eta > 0.0)) throw ConfigurationError("eta must be > 0");
      break;
    case Kind::Fwm:
      if (s.modes.size() != 3)
        throw ConfigurationError("fwm scenario needs [mode1], [mode2], [mode3]");
      if (!s.probe) throw ConfigurationError("fwm scenario needs [probe]");
      if (s.state.type == StateType::Steady)
        throw ConfigurationError(
            "driven_steady_state is only available for kind = driven");
      if (!(s.eta > 0.0)) throw ConfigurationError("eta must be > 0");
      if (s.sweep) throw ConfigurationError("fwm scenarios cannot be swept");
      if (s.method == FwmMethod::Chi3 &&
          s.preparation == response::Preparation::Stationary)
        throw ConfigurationError(
            "the chi3 method supports only the nonequilibrium preparation");
      break;
    case Kind::Driven:
      if (!s.pulse) throw ConfigurationError("driven scenario needs [pulse]");
      if (!s.drive) throw ConfigurationError("driven scenario needs [drive]");
      if (s.state.type != StateType::Steady)
        throw ConfigurationError(
            "driven scenarios use state type driven_steady_state");
      if (sys.size() != 3)
        throw ConfigurationError("driven scenario needs three levels");
      if (!sys.temperature())
        throw ConfigurationError(
            "driven scenario needs a temperature for detailed balance");
      if (s.drive->Omega < 0.0 || s.drive->omega0 < 0.0)
        throw ConfigurationError("Omega and omega0 must be >= 0");
      (void)driven::make_driven(sys, s.drive->Omega, s.drive->omega0);
      break;
  }
  if (s.grid.points == 0) throw ConfigurationError("grid must be nonempty");
  if (s.sweep && s.sweep->points == 0)
    throw ConfigurationError("sweep must be nonempty");
  if (s.sweep && s.sweep->axis != Axis::Phi2 && s.kind != Kind::Driven)
    throw ConfigurationError("Omega and omega0 sweeps need kind = driven");
  if (s.state.type != StateType::Steady) (void)build_state(s, sys);
}

LevelSystem build_system(const Scenario& s) {
  const std::size_t n = s.system.labels.size();
  auto index = [&](const std::string& l) {
    const auto it = std::find(s.system.labels.begin(), s.system.labels.end(), l);
    if (it == s.system.labels.end())
      throw LabelError("unknown state label '" + l + "'");
    return static_cast<std::size_t>(it - s.system.labels.begin());
  };
  CMatrix mu = CMatrix::Zero(static_cast<Eigen::Index>(n),
                             static_cast<Eigen::Index>(n));
  for (const auto& d : s.system.dipoles)
    mu(static_cast<Eigen::Index>(index(d.lower)),
       static_cast<Eigen::Index>(index(d.upper))) = d.value;
  std::vector<DecayChannel> decays;
  for (const auto& r : s.system.rates)
    decays.push_back({index(r.from), index(r.to), r.rate});
  return LevelSystem(s.system.labels, s.system.energies, mu, decays,
                     s.system.temperature);
}

DensityMatrix build_state(const Scenario& s, const LevelSystem& sys) {
  switch (s.state.type) {
    case StateType::Thermal: return thermal_state(sys);
    case StateType::Population: return population_state(sys, s.state.levels[0]);
    case StateType::Coherent:
      return maximally_coherent_state(sys, s.state.levels[0], s.state.levels[1]);
    case StateType::Matrix: {
      const auto n = static_cast<Eigen::Index>(sys.size());
      CMatrix m(n, n);
      for (Eigen::Index i = 0; i < n; ++i)
        for (Eigen::Index j = 0; j < n; ++j)
          m(i, j) = s.state.matrix[static_cast<std::size_t>(i)]
                                  [static_cast<std::size_t>(j)];
      return DensityMatrix(m);
    }
    case StateType::Steady: break;
  }
  throw ConfigurationError(
      "the driven steady state is computed from the drive, not built here");
}

fields::ChirpedGaussianPulse build_pulse(const Scenario& s) {
  if (!s.pulse) throw ConfigurationError("scenario has no [pulse]");
  const auto& p = *s.pulse;
  return fields::ChirpedGaussianPulse::from_fs(p.E0, p.T0_fs, p.carrier, p.phi2,
                                               p.phi0);
}

Scenario with_axis_value(const Scenario& s, Axis axis, double value) {
  Scenario out = s;
  switch (axis) {
    case Axis::Phi2:
      if (!out.pulse) throw ConfigurationError("phi2 sweep needs [pulse]");
      out.pulse->phi2 = value;
      break;
    case Axis::Omega:
      if (!out.drive) throw ConfigurationError("Omega sweep needs [drive]");
      out.drive->Omega = value;
      break;
    case Axis::Omega0:
      if (!out.drive) throw ConfigurationError("omega0 sweep needs [drive]");
      out.drive->omega0 = value;
      break;
  }
  return out;
}

Scenario load_scenario(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in)
    throw std::system_error(errno ? errno : ENOENT, std::generic_category(),
                            "cannot read " + path.string());
  std::ostringstream buf;
  buf << in.rdbuf();
  if (in.bad())
    throw std::system_error(EIO, std::generic_category(),
                            "cannot read " + path.string());
  return parse_scenario(buf.str());
}

std::string serialize(const Scenario& s) {
  std::string o;
  auto line = [&o](std::string_view k, const std::string& v) {
    o += fmt::format("{} = {}\n", k, v);
  };
  o += "[scenario]\n";
  line("name", s.name);
  line("kind", std::string(to_string(s.kind)));

  o += "\n[system]\n";
  line("labels", join(s.system.labels, [](const std::string& x) { return x; }));
  line("energies", join(s.system.energies, fmt_num));
  if (s.system.temperature) line("temperature", fmt_num(*s.system.temperature));

  auto by_key = [](auto v) {
    std::sort(v.begin(), v.end(), [](const auto& a, const auto& b) {
      return a.first < b.first;
    });
    return v;
  };
  if (!s.system.dipoles.empty()) {
    o += "\n[dipoles]\n";
    std::vector<std::pair<std::string, std::string>> kv;
    for (const auto& d : s.system.dipoles)
      kv.emplace_back(d.lower + "-" + d.upper, fmt_cplx(d.value));
    for (const auto& [k, v] : by_key(kv)) line(k, v);
  }
  if (!s.system.rates.empty()) {
    o += "\n[rates]\n";
    std::vector<std::pair<std::string, std::string>> kv;
    for (const auto& r : s.system.rates)
      kv.emplace_back(r.from + "-" + r.to, fmt_num(r.rate));
    for (const auto& [k, v] : by_key(kv)) line(k, v);
  }

  o += "\n[state]\n";
  line("type", std::string(to_string(s.state.type)));
  if (s.state.type == StateType::Population) line("level", s.state.levels[0]);
  if (s.state.type == StateType::Coherent)
    line("levels", s.state.levels[0] + ", " + s.state.levels[1]);
  if (s.state.type == StateType::Matrix)
    for (std::size_t r = 0; r < s.state.matrix.size(); ++r)
      line(fmt::format("row{}", r + 1), join(s.state.matrix[r], fmt_cplx));

  if (s.pulse) {
    o += "\n[pulse]\n";
    line("E0", fmt_num(s.pulse->E0));
    line("T0_fs", fmt_num(s.pulse->T0_fs));
    line("carrier", fmt_num(s.pulse->carrier));
    line("phi2", fmt_num(s.pulse->phi2));
    line("phi0", fmt_num(s.pulse->phi0));
  }
  for (std::size_t m = 0; m < s.modes.size(); ++m) {
    o += fmt::format("\n[mode{}]\n", m + 1);
    line("amplitude", fmt_cplx(s.modes[m].amplitude));
    line("frequency", fmt_num(s.modes[m].frequency));
    line("sign", s.modes[m].sign > 0 ? "+1" : "-1");
  }
  if (s.probe) {
    o += "\n[probe]\n";
    line("sigma", fmt_num(s.probe->sigma));
    line("center", fmt_num(s.probe->center));
  }
  if (s.drive) {
    o += "\n[drive]\n";
    line("Omega", fmt_num(s.drive->Omega));
    line("omega0", fmt_num(s.drive->omega0));
  }

  o += "\n[numerics]\n";
  line("eta", fmt_num(s.eta));
  line("grid_min", fmt_num(s.grid.min));
  line("grid_max", fmt_num(s.grid.max));
  line("grid_points", std::to_string(s.grid.points));
  line("preparation", s.preparation == response::Preparation::Stationary
                          ? "stationary"
                          : "nonequilibrium");
  if (s.kind == Kind::Fwm) line("method", std::string(to_string(s.method)));

  if (s.sweep) {
    o += "\n[sweep]\n";
    line("axis", std::string(to_string(s.sweep->axis)));
    line("min", fmt_num(s.sweep->min));
    line("max", fmt_num(s.sweep->max));
    line("points", std::to_string(s.sweep->points));
  }
  return o;
}

std::uint64_t scenario_hash(const Scenario& s) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char c : serialize(s)) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace noneq::cli
