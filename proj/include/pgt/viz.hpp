#pragma once

// SVG 1.1 output for triangles, helicoid layers and orbit strips.
//
// Cells are pointy-top hexagons (class="cell") on a triangular lattice with
// unit spacing sqrt(3) * cell_radius: row j, entry k of a triangle sits at
// (k + j/2, j sqrt(3)/2) in lattice units, y pointing down the page.
//
// Palette: the distinct values drawn in a document are sorted; the value of
// rank r gets hue frac(r * 0.6180339887...) * 360 at saturation 0.65 and
// lightness 0.55. Coordinates are printed with three decimals, so identical
// inputs give identical bytes.

#include <cstddef>
#include <optional>
#include <span>
#include <string>

#include "pgt/seq.hpp"

namespace pgt::viz {

inline constexpr double kDefaultCellRadius = 10.0;

/// "#rrggbb" for the value of the given rank.
std::string palette_color(std::size_t rank);

/// The triangle of u; with `mod` set the values are reduced before colouring.
std::string render_triangle(std::span<const Value> u, std::optional<Value> mod = {},
                            double cell_radius = kDefaultCellRadius);

/// Layer `level` (>= 1) of the helicoid of u: the six triangles of
/// Upsilon^{6(level-1)+m}(u), m = 0..5, turned by 60 m degrees around a_0.
/// Sector m owns its top row (the boundary shared with sector m-1), so each
/// cell is drawn once and a generator of length N+1 yields 3N^2 + 3N + 1 cells.
std::string render_layer(std::span<const Value> u, std::size_t level, double cell_radius = kDefaultCellRadius);

/// Rows Upsilon^0(u) .. Upsilon^{6L}(u), one square per entry, where L is the
/// number of distinct layers capped at max_layers.
std::string render_orbit_strip(std::span<const Value> u, std::size_t max_layers,
                               double cell_size = kDefaultCellRadius);

}  // namespace pgt::viz
