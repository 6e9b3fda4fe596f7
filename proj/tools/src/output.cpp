#include "noneq/cli/output.hpp"

#include <fmt/format.h>

#include <algorithm>
#include <array>
#include <cmath>
#include <sstream>
#include <stdexcept>

namespace noneq::cli {

void OutputTable::validate() const {
  for (const auto& r : rows) {
    if (r.size() != headers.size())
      throw std::invalid_argument("output table row width differs from header");
    for (double v : r)
      if (!std::isfinite(v))
        throw std::invalid_argument("output table holds a non-finite value");
  }
}

void write_csv(std::ostream& out, const OutputTable& t) {
  t.validate();
  std::string buf;
  for (std::size_t i = 0; i < t.headers.size(); ++i) {
    if (i) buf += ',';
    buf += t.headers[i];
  }
  buf += '\n';
  for (const auto& r : t.rows) {
    for (std::size_t i = 0; i < r.size(); ++i) {
      if (i) buf += ',';
      fmt::format_to(std::back_inserter(buf), "{:.17g}", r[i]);
    }
    buf += '\n';
  }
  fmt::format_to(std::back_inserter(buf), "# scenario {} hash {:016x}\n",
                 t.scenario, t.hash);
  fmt::format_to(std::back_inserter(buf), "# {}\n", kArtifactVersion);
  out << buf;
}

std::string to_csv(const OutputTable& t) {
  std::ostringstream s;
  write_csv(s, t);
  return s.str();
}

namespace {

constexpr double kWidth = 720, kHeight = 440;
constexpr double kLeft = 80, kRight = 150, kTop = 40, kBottom = 60;

std::string escape(const std::string& s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

struct Range {
  double lo, hi;
  double map(double v, double a, double b) const {
    return hi > lo ? a + (v - lo) / (hi - lo) * (b - a) : 0.5 * (a + b);
  }
};

Range range_of(const std::vector<double>& v) {
  if (v.empty()) return {0.0, 1.0};
  const auto [mn, mx] = std::minmax_element(v.begin(), v.end());
  return {*mn, *mx};
}

void frame(std::string& o, const std::string& title, const std::string& xlabel,
           const std::string& ylabel, Range xr, Range yr) {
  const double x0 = kLeft, x1 = kWidth - kRight;
  const double y0 = kHeight - kBottom, y1 = kTop;
  fmt::format_to(std::back_inserter(o),
                 "<rect x=\"{}\" y=\"{}\" width=\"{}\" height=\"{}\" "
                 "fill=\"none\" stroke=\"black\"/>\n",
                 x0, y1, x1 - x0, y0 - y1);
  for (int k = 0; k <= 4; ++k) {
    const double fx = x0 + k * (x1 - x0) / 4, fy = y0 - k * (y0 - y1) / 4;
    const double vx = xr.lo + k * (xr.hi - xr.lo) / 4;
    const double vy = yr.lo + k * (yr.hi - yr.lo) / 4;
    fmt::format_to(std::back_inserter(o),
                   "<text x=\"{:.1f}\" y=\"{:.1f}\" font-size=\"11\" "
                   "text-anchor=\"middle\">{:.4g}</text>\n",
                   fx, y0 + 16, vx);
    fmt::format_to(std::back_inserter(o),
                   "<text x=\"{:.1f}\" y=\"{:.1f}\" font-size=\"11\" "
                   "text-anchor=\"end\">{:.4g}</text>\n",
                   x0 - 6, fy + 4, vy);
  }
  fmt::format_to(std::back_inserter(o),
                 "<text x=\"{:.1f}\" y=\"24\" font-size=\"14\" "
                 "text-anchor=\"middle\">{}</text>\n",
                 0.5 * (x0 + x1), escape(title));
  fmt::format_to(std::back_inserter(o),
                 "<text x=\"{:.1f}\" y=\"{:.1f}\" font-size=\"12\" "
                 "text-anchor=\"middle\">{}</text>\n",
                 0.5 * (x0 + x1), kHeight - 18, escape(xlabel));
  fmt::format_to(std::back_inserter(o),
                 "<text x=\"18\" y=\"{:.1f}\" font-size=\"12\" "
                 "text-anchor=\"middle\" transform=\"rotate(-90 18 {:.1f})\">"
                 "{}</text>\n",
                 0.5 * (y0 + y1), 0.5 * (y0 + y1), escape(ylabel));
}

std::string header() {
  return fmt::format(
      "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"{}\" height=\"{}\" "
      "viewBox=\"0 0 {} {}\" font-family=\"sans-serif\">\n"
      "<rect width=\"100%\" height=\"100%\" fill=\"white\"/>\n",
      kWidth, kHeight, kWidth, kHeight);
}

// viridis-like ramp
std::string color(double t) {
  static const std::array<std::array<double, 3>, 5> stops = {{
      {68, 1, 84}, {59, 82, 139}, {33, 145, 140}, {94, 201, 98}, {253, 231, 37}}};
  t = std::clamp(t, 0.0, 1.0) * (stops.size() - 1);
  const auto k = std::min<std::size_t>(static_cast<std::size_t>(t), stops.size() - 2);
  const double f = t - static_cast<double>(k);
  std::array<int, 3> c{};
  for (int i = 0; i < 3; ++i)
    c[i] = static_cast<int>(std::lround(stops[k][i] + f * (stops[k + 1][i] - stops[k][i])));
  return fmt::format("#{:02x}{:02x}{:02x}", c[0], c[1], c[2]);
}

}  // namespace

std::string svg_line_plot(const std::vector<Series>& series,
                          const std::string& title, const std::string& xlabel,
                          const std::string& ylabel) {
  static const std::array<const char*, 6> palette = {
      "#1f77b4", "#d62728", "#2ca02c", "#9467bd", "#ff7f0e", "#8c564b"};
  std::vector<double> xs, ys;
  for (const auto& s : series) {
    xs.insert(xs.end(), s.x.begin(), s.x.end());
    ys.insert(ys.end(), s.y.begin(), s.y.end());
  }
  const Range xr = range_of(xs);
  Range yr = range_of(ys);
  if (yr.hi == yr.lo) yr = {yr.lo - 1.0, yr.hi + 1.0};
  std::string o = header();
  frame(o, title, xlabel, ylabel, xr, yr);
  const double x0 = kLeft, x1 = kWidth - kRight;
  const double y0 = kHeight - kBottom, y1 = kTop;
  for (std::size_t k = 0; k < series.size(); ++k) {
    const auto& s = series[k];
    o += fmt::format("<polyline fill=\"none\" stroke=\"{}\" stroke-width=\"1.2\" points=\"",
                     palette[k % palette.size()]);
    for (std::size_t i = 0; i < s.x.size(); ++i)
      fmt::format_to(std::back_inserter(o), "{}{:.2f},{:.2f}", i ? " " : "",
                     xr.map(s.x[i], x0, x1), yr.map(s.y[i], y0, y1));
    o += "\"/>\n";
    const double ly = y1 + 16 + 18 * static_cast<double>(k);
    fmt::format_to(std::back_inserter(o),
                   "<line x1=\"{}\" y1=\"{}\" x2=\"{}\" y2=\"{}\" stroke=\"{}\" "
                   "stroke-width=\"2\"/>\n<text x=\"{}\" y=\"{}\" "
                   "font-size=\"12\">{}</text>\n",
                   x1 + 12, ly, x1 + 36, ly, palette[k % palette.size()], x1 + 42,
                   ly + 4, escape(s.label));
  }
  o += "</svg>\n";
  return o;
}

std::string svg_heatmap(const std::vector<double>& x,
                        const std::vector<double>& y,
                        const std::vector<std::vector<double>>& z,
                        const std::string& title, const std::string& xlabel,
                        const std::string& ylabel) {
  const Range xr = range_of(x), yr = range_of(y);
  double zmin = 0.0, zmax = 0.0;
  bool first = true;
  for (const auto& row : z)
    for (double v : row) {
      if (first) zmin = zmax = v, first = false;
      zmin = std::min(zmin, v);
      zmax = std::max(zmax, v);
    }
  const Range zr{zmin, zmax};
  std::string o = header();
  const double x0 = kLeft, x1 = kWidth - kRight;
  const double y0 = kHeight - kBottom, y1 = kTop;
  const double cw = (x1 - x0) / static_cast<double>(std::max<std::size_t>(x.size(), 1));
  const double ch = (y0 - y1) / static_cast<double>(std::max<std::size_t>(y.size(), 1));
  for (std::size_t j = 0; j < z.size(); ++j)
    for (std::size_t i = 0; i < z[j].size(); ++i)
      fmt::format_to(std::back_inserter(o),
                     "<rect x=\"{:.2f}\" y=\"{:.2f}\" width=\"{:.2f}\" "
                     "height=\"{:.2f}\" fill=\"{}\"/>\n",
                     x0 + cw * static_cast<double>(i),
                     y0 - ch * static_cast<double>(j + 1), cw + 0.05, ch + 0.05,
                     color(zr.map(z[j][i], 0.0, 1.0)));
  frame(o, title, xlabel, ylabel, xr, yr);
  for (int k = 0; k <= 20; ++k) {
    const double t = k / 20.0;
    fmt::format_to(std::back_inserter(o),
                   "<rect x=\"{}\" y=\"{:.2f}\" width=\"16\" height=\"{:.2f}\" "
                   "fill=\"{}\"/>\n",
                   x1 + 20, y0 - t * (y0 - y1) - (y0 - y1) / 21.0,
                   (y0 - y1) / 21.0 + 0.05, color(t));
  }
  fmt::format_to(std::back_inserter(o),
                 "<text x=\"{}\" y=\"{}\" font-size=\"11\">{:.3g}</text>\n"
                 "<text x=\"{}\" y=\"{}\" font-size=\"11\">{:.3g}</text>\n",
                 x1 + 40, y1 + 10, zmax, x1 + 40, y0, zmin);
  o += "</svg>\n";
  return o;
}

}  // namespace noneq::cli
