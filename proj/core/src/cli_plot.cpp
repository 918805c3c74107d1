// Copyright 2026 The lcexact Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

// SVG rendering of the solve outputs. Coordinates use fixed three-decimal
// formatting so that identical inputs give identical bytes.

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <numbers>
#include <sstream>

#include "cli_detail.hpp"
#include "lcexact/error.hpp"
#include "lcexact/sphere_curve.hpp"

namespace lcexact::cli::detail {
namespace {

constexpr const char* kPalette[] = {"#1f77b4", "#d62728", "#2ca02c", "#9467bd",
                                    "#ff7f0e", "#8c564b", "#e377c2", "#17becf"};

const char* color(std::size_t k) { return kPalette[k % 8]; }

std::string f3(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.3f", v == 0.0 ? 0.0 : v);
  return buf;
}

std::string g4(double v) {
  char buf[48];
  std::snprintf(buf, sizeof buf, "%.4g", v == 0.0 ? 0.0 : v);
  return buf;
}

using Table = std::vector<std::vector<double>>;

Table read_csv(const std::filesystem::path& path, const std::string& header) {
  std::ifstream in(path, std::ios::binary);
  if (!in) {
    throw ConfigurationError("missing solve output '" + path.string() +
                             "'; run 'solve' with the csv format first");
  }
  std::string line;
  if (!std::getline(in, line) || line != header) {
    throw ConfigurationError("'" + path.string() + "' does not start with '" + header + "'");
  }
  const std::size_t cols = static_cast<std::size_t>(std::count(header.begin(), header.end(), ',')) + 1;
  Table rows;
  while (std::getline(in, line)) {
    if (line.empty()) continue;
    std::vector<double> row;
    const char* p = line.c_str();
    while (true) {
      char* end = nullptr;
      row.push_back(std::strtod(p, &end));
      if (end == p) break;
      p = end;
      if (*p != ',') break;
      ++p;
    }
    if (row.size() != cols || *p != '\0') {
      throw ConfigurationError("malformed row in '" + path.string() + "': " + line);
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

struct TimeGroup {
  double t = 0.0;
  double psi_min = INFINITY;
  double psi_max = -INFINITY;
  std::vector<Director> d;
};

// Ranges come from diagnostics.csv, which includes the far-field value.
std::vector<TimeGroup> group_fields(const Table& rows, const Table& diag) {
  std::vector<TimeGroup> groups;
  for (const auto& row : rows) {
    if (groups.empty() || groups.back().t != row[0]) {
      groups.emplace_back();
      groups.back().t = row[0];
    }
    groups.back().d.push_back({row[6], row[7], row[8]});
  }
  if (groups.size() != diag.size()) {
    throw ConfigurationError("fields.csv and diagnostics.csv list different times");
  }
  for (std::size_t k = 0; k < groups.size(); ++k) {
    if (groups[k].t != diag[k][0]) {
      throw ConfigurationError("fields.csv and diagnostics.csv list different times");
    }
    groups[k].psi_min = diag[k][4];
    groups[k].psi_max = diag[k][5];
  }
  return groups;
}

using Vec3 = std::array<double, 3>;

double dot(const Vec3& a, const Vec3& b) { return a[0] * b[0] + a[1] * b[1] + a[2] * b[2]; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Vec3 normalized(const Vec3& a) {
  const double n = std::sqrt(dot(a, a));
  return {a[0] / n, a[1] / n, a[2] / n};
}

struct Scale {
  double lo, hi, p0, p1;
  double operator()(double v) const { return p0 + (v - lo) / (hi - lo) * (p1 - p0); }
};

Scale padded(double lo, double hi, double p0, double p1) {
  if (!(hi > lo)) {
    const double w = std::max(1.0, std::abs(lo)) * 0.5;
    return {lo - w, hi + w, p0, p1};
  }
  const double pad = 0.05 * (hi - lo);
  return {lo - pad, hi + pad, p0, p1};
}

class Svg {
 public:
  Svg(int w, int h) {
    s_ << "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
       << "<svg xmlns=\"http://www.w3.org/2000/svg\" width=\"" << w << "\" height=\"" << h
       << "\" viewBox=\"0 0 " << w << ' ' << h << "\" font-family=\"sans-serif\" font-size=\"12\">\n"
       << "<rect x=\"0\" y=\"0\" width=\"" << w << "\" height=\"" << h << "\" fill=\"white\"/>\n";
  }
  void line(double x1, double y1, double x2, double y2, const char* stroke, double width = 1.0) {
    s_ << "<line x1=\"" << f3(x1) << "\" y1=\"" << f3(y1) << "\" x2=\"" << f3(x2) << "\" y2=\""
       << f3(y2) << "\" stroke=\"" << stroke << "\" stroke-width=\"" << f3(width) << "\"/>\n";
  }
  void polyline(const std::vector<std::pair<double, double>>& pts, const char* stroke,
                double width, double opacity = 1.0) {
    s_ << "<polyline fill=\"none\" stroke=\"" << stroke << "\" stroke-width=\"" << f3(width)
       << "\" stroke-opacity=\"" << f3(opacity) << "\" stroke-linecap=\"round\" points=\"";
    for (std::size_t i = 0; i < pts.size(); ++i) {
      s_ << (i ? " " : "") << f3(pts[i].first) << ',' << f3(pts[i].second);
    }
    s_ << "\"/>\n";
  }
  void circle(double x, double y, double r, const char* fill, const char* stroke = "none") {
    s_ << "<circle cx=\"" << f3(x) << "\" cy=\"" << f3(y) << "\" r=\"" << f3(r) << "\" fill=\""
       << fill << "\" stroke=\"" << stroke << "\"/>\n";
  }
  void rect(double x, double y, double w, double h, const char* fill, double opacity = 1.0) {
    s_ << "<rect x=\"" << f3(x) << "\" y=\"" << f3(y) << "\" width=\"" << f3(w) << "\" height=\""
       << f3(h) << "\" fill=\"" << fill << "\" fill-opacity=\"" << f3(opacity) << "\"/>\n";
  }
  void text(double x, double y, const std::string& t, const char* anchor = "start") {
    s_ << "<text x=\"" << f3(x) << "\" y=\"" << f3(y) << "\" text-anchor=\"" << anchor << "\">"
       << t << "</text>\n";
  }
  std::string finish() {
    s_ << "</svg>\n";
    return s_.str();
  }

 private:
  std::ostringstream s_;
};

void frame(Svg& svg, double x0, double y0, double x1, double y1) {
  svg.line(x0, y1, x1, y1, "black");
  svg.line(x0, y0, x0, y1, "black");
}

std::string curve_svg(const RunConfig& c, const std::vector<TimeGroup>& groups) {
  const ModelParams params = ModelParams::create(c.model.beta, c.model.delta1);
  const double lo = params.delta1(), hi = std::numbers::pi - params.delta1();
  const double inset = 1e-9 * (hi - lo);
  const auto sample = [&](double a, double b, int n) {
    std::vector<std::pair<double, double>> out;  // (psi, phi)
    for (int i = 0; i < n; ++i) {
      const double psi = n == 1 ? a : a + (b - a) * i / (n - 1);
      out.emplace_back(psi, phi_of_psi(psi, params));
    }
    return out;
  };
  const auto band = sample(lo + inset, hi - inset, 241);
  double phi_lo = INFINITY, phi_hi = -INFINITY;
  for (const auto& [psi, phi] : band) {
    phi_lo = std::min(phi_lo, phi);
    phi_hi = std::max(phi_hi, phi);
  }

  Svg svg(960, 520);
  // Left: the curve in the (phi, psi) plane.
  const double x0 = 80, x1 = 450, y0 = 40, y1 = 420;
  const Scale sx = padded(phi_lo, phi_hi, x0, x1);
  const Scale sy = padded(lo, hi, y1, y0);
  frame(svg, x0, y0, x1, y1);
  svg.text((x0 + x1) / 2, 24, "image curve in the (phi, psi) plane", "middle");
  svg.text((x0 + x1) / 2, y1 + 32, "phi", "middle");
  svg.text(x0 - 44, (y0 + y1) / 2, "psi", "middle");
  svg.text(sx(phi_lo), y1 + 16, f3(phi_lo), "middle");
  svg.text(sx(phi_hi), y1 + 16, f3(phi_hi), "middle");
  svg.text(x0 - 6, sy(lo) + 4, f3(lo), "end");
  svg.text(x0 - 6, sy(hi) + 4, f3(hi), "end");
  std::vector<std::pair<double, double>> pts;
  for (const auto& [psi, phi] : band) pts.emplace_back(sx(phi), sy(psi));
  svg.polyline(pts, "#999999", 1.5);

  // Right: orthographic view of the sphere along -v; ey is the projection
  // of d3 onto the screen and ex = ey x v.
  const double cx = 720, cy = 230, R = 180;
  const Vec3 v = normalized({1.0, 0.5, 0.3});
  const Vec3 ey = normalized({-v[2] * v[0], -v[2] * v[1], 1.0 - v[2] * v[2]});
  const Vec3 ex = cross(ey, v);
  const auto project = [&](const Director& d) {
    return std::pair{cx + R * dot(d, ex), cy - R * dot(d, ey)};
  };
  // Splits a curve on the sphere into front and back runs.
  const auto draw_on_sphere = [&](const std::vector<Director>& ds, const char* stroke,
                                  double width, double opacity) {
    std::vector<std::pair<double, double>> run;
    bool front = !ds.empty() && dot(ds.front(), v) >= 0.0;
    for (const auto& d : ds) {
      const bool f = dot(d, v) >= 0.0;
      if (f != front && !run.empty()) {
        run.push_back(project(d));
        svg.polyline(run, stroke, front ? width : 0.5 * width, front ? opacity : 0.3 * opacity);
        run.clear();
      }
      front = f;
      run.push_back(project(d));
    }
    if (run.size() > 1) {
      svg.polyline(run, stroke, front ? width : 0.5 * width, front ? opacity : 0.3 * opacity);
    }
  };
  svg.text(cx, 24, "director image on the unit sphere", "middle");
  svg.circle(cx, cy, R, "none", "black");
  std::vector<Director> equator, meridian;
  for (int i = 0; i <= 180; ++i) {
    const double a = 2.0 * std::numbers::pi * i / 180.0;
    equator.push_back({std::cos(a), std::sin(a), 0.0});
    meridian.push_back({std::cos(a), 0.0, std::sin(a)});
  }
  draw_on_sphere(equator, "#cccccc", 1.0, 1.0);
  draw_on_sphere(meridian, "#cccccc", 1.0, 1.0);
  for (int a = 0; a < 3; ++a) {
    Director e{0.0, 0.0, 0.0};
    e[a] = 1.0;
    const auto [px, py] = project(e);
    svg.line(cx, cy, px, py, "#bbbbbb");
    const auto [lx, ly] = project({1.12 * e[0], 1.12 * e[1], 1.12 * e[2]});
    svg.text(lx, ly + 4, "d" + std::to_string(a + 1), "middle");
  }
  std::vector<Director> ds;
  for (const auto& [psi, phi] : band) ds.push_back(director_from_angles(psi, phi));
  draw_on_sphere(ds, "#999999", 1.5, 1.0);

  const std::size_t n = groups.size();
  for (std::size_t k = 0; k < n; ++k) {
    const TimeGroup& g = groups[k];
    const double width = 3.0 + 6.0 * static_cast<double>(n - 1 - k) / static_cast<double>(std::max<std::size_t>(n - 1, 1));
    if (g.psi_max - g.psi_min <= 1e-12) {
      const double phi = phi_of_psi(g.psi_min, params);
      svg.circle(sx(phi), sy(g.psi_min), 5.0, color(k));
      const auto [px, py] = project(director_from_angles(g.psi_min, phi));
      svg.circle(px, py, 5.0, color(k));
    } else {
      const auto seg = sample(g.psi_min, g.psi_max, 81);
      std::vector<std::pair<double, double>> a;
      std::vector<Director> b;
      for (const auto& [psi, phi] : seg) {
        a.emplace_back(sx(phi), sy(psi));
        b.push_back(director_from_angles(psi, phi));
      }
      svg.polyline(a, color(k), width, 0.8);
      draw_on_sphere(b, color(k), width, 0.8);
    }
    for (const auto& d : g.d) {
      const auto [px, py] = project(d);
      svg.circle(px, py, 1.5, color(k));
    }
    const double lx = 80 + 110 * static_cast<double>(k % 8);
    const double ly = 470 + 20 * static_cast<double>(k / 8);
    svg.rect(lx, ly - 10, 12, 12, color(k));
    svg.text(lx + 16, ly, "t = " + g4(g.t));
  }
  return svg.finish();
}

std::string diagnostics_svg(const Table& rows) {
  const std::size_t n = rows.size();
  Svg svg(720, 620);
  const double x0 = 90, x1 = 680;
  const auto xi = [&](std::size_t k) {
    return n <= 1 ? (x0 + x1) / 2 : x0 + 20 + (x1 - x0 - 40) * static_cast<double>(k) / static_cast<double>(n - 1);
  };
  const auto panel = [&](int idx, const char* title, std::size_t col_lo, std::size_t col_hi,
                         bool band) {
    const double y0 = 40 + 190 * idx, y1 = y0 + 140;
    double lo = INFINITY, hi = -INFINITY;
    for (const auto& r : rows) {
      lo = std::min({lo, r[col_lo], r[col_hi]});
      hi = std::max({hi, r[col_lo], r[col_hi]});
    }
    if (n == 0) lo = hi = 0.0;
    const Scale sy = padded(lo, hi, y1, y0);
    frame(svg, x0, y0, x1, y1);
    svg.text(x0, y0 - 8, title);
    svg.text(x0 - 6, sy(lo) + 4, g4(lo), "end");
    svg.text(x0 - 6, sy(hi) + 4, g4(hi), "end");
    std::vector<std::pair<double, double>> pts;
    for (std::size_t k = 0; k < n; ++k) {
      if (band) {
        const double top = sy(rows[k][col_hi]), bot = sy(rows[k][col_lo]);
        svg.rect(xi(k) - 8, top, 16, std::max(bot - top, 1.0), color(k), 0.6);
      } else {
        pts.emplace_back(xi(k), sy(rows[k][col_lo]));
      }
      svg.text(xi(k), y1 + 16, "t = " + g4(rows[k][0]), "middle");
    }
    if (!band) {
      svg.polyline(pts, "#333333", 1.5);
      for (std::size_t k = 0; k < pts.size(); ++k) {
        svg.circle(pts[k].first, pts[k].second, 4.0, color(k));
      }
    }
  };
  panel(0, "arc length of the attained image curve", 1, 1, false);
  panel(1, "range of F(psi)", 2, 3, true);
  panel(2, "energy", 6, 6, false);
  return svg.finish();
}

}  // namespace

void write_plots(const RunConfig& c, const std::filesystem::path& dir, RunResult& result) {
  const Table fields = read_csv(dir / "fields.csv", "t,r,psi,phi,u,p,d1,d2,d3");
  const Table diag = read_csv(dir / "diagnostics.csv", "t,arc_length,F_min,F_max,psi_min,psi_max,energy");
  const std::string curve = curve_svg(c, group_fields(fields, diag));
  const std::string dsvg = diagnostics_svg(diag);
  write_file(dir / "curve.svg", curve, result);
  write_file(dir / "diagnostics.svg", dsvg, result);
}

}  // namespace lcexact::cli::detail
