#pragma once

// Helicoid layers. Each application of Upsilon (the left-edge map) rotates the
// drawing by 60 degrees around a_0, so six of them close one hexagonal layer;
// layer n is generated by g_n = Upsilon^{6(n-1)}(u). All layer values are
// bounded by max(u), hence the orbit g_1, g_2, ... is eventually periodic.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pgt/error.hpp"
#include "pgt/seq.hpp"

namespace pgt::helix {

Seq upsilon_pow(std::span<const Value> u, std::size_t k);

struct Orbit {
  Seq generator;
  std::vector<Seq> layer_generators;  // g_1 .. g_{P+C}, pairwise distinct
  std::size_t precycle = 0;           // P
  std::size_t cycle = 0;              // C

  std::size_t distinct() const { return layer_generators.size(); }
};

// Thrown when max_layers distinct layers were generated without a repeat.
struct OrbitBudgetExceeded : Error {
  explicit OrbitBudgetExceeded(Orbit partial);
  Orbit partial;
};

inline constexpr std::size_t kDefaultMaxLayers = 10000;

Orbit orbit_analysis(std::span<const Value> u, std::size_t max_layers = kDefaultMaxLayers);

std::uint64_t layer_hash(std::span<const Value> g);

/// {"generator":[...],"P":..,"C":..,"distinct":..,"layer_hashes":["...",...]}
std::string orbit_json(const Orbit& o);

struct ChampionSet {
  std::vector<std::size_t> indices;
};

/// Positions n with a_n > 0 and a_j < a_n for every j < n.
ChampionSet champions(std::span<const Value> u);

/// E_m for m = 0..5: the anti-diagonal i + j = rho of the triangle spanned by
/// Upsilon^m(u), top to bottom (so E_m starts with the rho-th entry of Upsilon^m(u)).
std::array<Seq, 6> circle_of_differences(std::span<const Value> u, std::size_t rho);

}  // namespace pgt::helix
