#include "pgt/viz.hpp"

#include <algorithm>
#include <array>
#include <cmath>
#include <cstdio>
#include <map>
#include <vector>

#include "pgt/error.hpp"
#include "pgt/helix.hpp"

namespace pgt::viz {

namespace {

constexpr double kSqrt3 = 1.7320508075688772;

struct Cell {
  double x, y;  // lattice units
  Value v;
};

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.3f", v);
  std::string s = buf;
  if (s == "-0.000") s = "0.000";
  return s;
}

std::map<Value, std::string> palette_for(const std::vector<Cell>& cells) {
  std::map<Value, std::string> colors;
  for (const auto& c : cells) colors[c.v];
  std::size_t rank = 0;
  for (auto& [v, col] : colors) col = palette_color(rank++);
  return colors;
}

std::string header(double minx, double miny, double w, double h) {
  return "<?xml version=\"1.0\" encoding=\"UTF-8\"?>\n"
         "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" width=\"" +
         fmt(w) + "\" height=\"" + fmt(h) + "\" viewBox=\"" + fmt(minx) + " " + fmt(miny) + " " + fmt(w) + " " +
         fmt(h) + "\">\n";
}

std::string hex_document(const std::vector<Cell>& cells, double radius) {
  if (radius <= 0) throw InvalidArgument("cell radius must be positive");
  const double unit = kSqrt3 * radius;
  double minx = 0, maxx = 0, miny = 0, maxy = 0;
  bool first = true;
  for (const auto& c : cells) {
    const double x = c.x * unit, y = c.y * unit;
    if (first || x < minx) minx = x;
    if (first || x > maxx) maxx = x;
    if (first || y < miny) miny = y;
    if (first || y > maxy) maxy = y;
    first = false;
  }
  minx -= radius;
  miny -= radius;
  const auto colors = palette_for(cells);
  std::string s = header(minx, miny, maxx - minx + radius, maxy - miny + radius);
  for (const auto& c : cells) {
    const double cx = c.x * unit, cy = c.y * unit;
    s += "<polygon class=\"cell\" data-v=\"" + std::to_string(c.v) + "\" fill=\"" + colors.at(c.v) + "\" points=\"";
    for (int i = 0; i < 6; ++i) {
      const double a = (30.0 + 60.0 * i) * std::acos(-1.0) / 180.0;
      if (i) s += ' ';
      s += fmt(cx + radius * std::cos(a)) + "," + fmt(cy + radius * std::sin(a));
    }
    s += "\"/>\n";
  }
  s += "</svg>\n";
  return s;
}

}  // namespace

std::string palette_color(std::size_t rank) {
  const double phi = 0.6180339887498949;
  double h = std::fmod(static_cast<double>(rank) * phi, 1.0) * 6.0;
  const double s = 0.65, l = 0.55;
  const double c = (1 - std::abs(2 * l - 1)) * s;
  const double x = c * (1 - std::abs(std::fmod(h, 2.0) - 1));
  double r = 0, g = 0, b = 0;
  switch (static_cast<int>(h)) {
    case 0: r = c, g = x; break;
    case 1: r = x, g = c; break;
    case 2: g = c, b = x; break;
    case 3: g = x, b = c; break;
    case 4: r = x, b = c; break;
    default: r = c, b = x; break;
  }
  const double m = l - c / 2;
  auto byte = [&](double v) { return static_cast<unsigned>(std::lround((v + m) * 255.0)); };
  char buf[8];
  std::snprintf(buf, sizeof buf, "#%02x%02x%02x", byte(r), byte(g), byte(b));
  return buf;
}

std::string render_triangle(std::span<const Value> u, std::optional<Value> mod, double cell_radius) {
  if (u.empty()) throw EmptyGenerator();
  if (mod && *mod == 0) throw InvalidArgument("modulus must be >= 1");
  const TriangleView tri{Seq(u.begin(), u.end())};
  std::vector<Cell> cells;
  for (std::size_t j = 0; j < tri.size(); ++j)
    for (std::size_t k = 0; k < tri.row(j).size(); ++k) {
      const Value v = mod ? tri.at(j, k) % *mod : tri.at(j, k);
      cells.push_back({static_cast<double>(k) + 0.5 * static_cast<double>(j), 0.5 * kSqrt3 * static_cast<double>(j), v});
    }
  return hex_document(cells, cell_radius);
}

std::string render_layer(std::span<const Value> u, std::size_t level, double cell_radius) {
  if (u.empty()) throw EmptyGenerator();
  if (level < 1) throw InvalidArgument("layers are numbered from 1");
  // lattice directions in half-units: x in steps of 1/2, y in steps of sqrt(3)/2
  static constexpr std::array<std::array<int, 2>, 6> kDir = {
      {{2, 0}, {1, 1}, {-1, 1}, {-2, 0}, {-1, -1}, {1, -1}}};
  Seq g = helix::upsilon_pow(u, 6 * (level - 1));
  std::vector<Cell> cells;
  cells.push_back({0.0, 0.0, g[0]});
  for (std::size_t m = 0; m < 6; ++m) {
    const TriangleView tri{g};
    const auto& a = kDir[m];
    const auto& b = kDir[(m + 1) % 6];
    for (std::size_t j = 0; j < tri.size(); ++j)
      for (std::size_t k = 1; k < tri.row(j).size(); ++k) {
        const auto kk = static_cast<long>(k), jj = static_cast<long>(j);
        const long X = kk * a[0] + jj * b[0], Y = kk * a[1] + jj * b[1];
        cells.push_back({0.5 * static_cast<double>(X), 0.5 * kSqrt3 * static_cast<double>(Y), tri.at(j, k)});
      }
    g = left_edge(g);
  }
  return hex_document(cells, cell_radius);
}

std::string render_orbit_strip(std::span<const Value> u, std::size_t max_layers, double cell_size) {
  if (u.empty()) throw EmptyGenerator();
  if (cell_size <= 0) throw InvalidArgument("cell size must be positive");
  std::size_t layers = max_layers;
  try {
    layers = std::min(max_layers, helix::orbit_analysis(u, std::max<std::size_t>(max_layers, 1)).distinct());
  } catch (const helix::OrbitBudgetExceeded&) {
  }
  std::vector<Seq> rows;
  rows.emplace_back(u.begin(), u.end());
  for (std::size_t i = 0; i < 6 * layers; ++i) rows.push_back(left_edge(rows.back()));

  std::vector<Cell> all;
  for (const auto& r : rows)
    for (Value v : r) all.push_back({0, 0, v});
  const auto colors = palette_for(all);

  const double w = cell_size * static_cast<double>(u.size()), h = cell_size * static_cast<double>(rows.size());
  std::string s = header(0, 0, w, h);
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t k = 0; k < rows[i].size(); ++k)
      s += "<rect class=\"entry\" data-v=\"" + std::to_string(rows[i][k]) + "\" x=\"" +
           fmt(cell_size * static_cast<double>(k)) + "\" y=\"" + fmt(cell_size * static_cast<double>(i)) +
           "\" width=\"" + fmt(cell_size) + "\" height=\"" + fmt(cell_size) + "\" fill=\"" + colors.at(rows[i][k]) +
           "\"/>\n";
  s += "</svg>\n";
  return s;
}

}  // namespace pgt::viz
