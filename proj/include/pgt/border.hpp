#pragma once

// Bordering a difference triangle on the east so that the new southern vertex
// takes a preset value.

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pgt/seq.hpp"
#include "pgt/spnum.hpp"

namespace pgt::border {

// Relation imposed between the new eastern edge C_j and the old one B_j.
enum class Order { CAboveB, CBelowB };

/// Returns C_1..C_{m+1} with C_{m+1} = Z and |C_j - B_j| = C_{j+1}.
/// With the default order C_j = C_{j+1} + B_j, which needs B nondecreasing.
/// A per-index `order` selects C_j = B_j - C_{j+1} where CBelowB is requested.
Seq border_single(std::span<const Value> B, Value Z, std::span<const Order> order = {});

/// True when C is a valid new eastern edge next to B (|C_j - B_j| = C_{j+1}).
bool border_consistent(std::span<const Value> B, std::span<const Value> C);

struct BorderStep {
  Value Z = 0;
  Seq D;            // D_1..D_{m-1} from the old eastern edge (A_m, D_1, ...)
  Value bound = 0;  // X >= A_m + Z + D_1 + ... + D_{m-1}
  Value delta = 0;  // Y - X = Z + D_1 + D_3 + ... + D_{m-1}
  Value X = 0, Y = 0;
  Seq predicted_E;  // E_1..E_m
  Seq predicted_F;  // F_1..F_{m+1}, ends with Z
};

struct BorderResult {
  BorderStep step;
  Seq extended;
};

/// Extends a strictly increasing even-length row of square-primes by the least
/// square-prime pair (X, X + delta) with X >= bound. The result is checked
/// against a full recomputation of the extended triangle.
BorderResult border_pair(std::span<const Value> u, Value Z, const sp::SpSieve* sieve = nullptr,
                         std::uint64_t budget = sp::kDefaultScanBudget);

struct Construction {
  Seq row;
  std::vector<BorderStep> log;
};

inline const Seq kDefaultSeed = {27, 28};

/// Iterates border_pair with Z = w_1, w_2, ...; the western edge of the result
/// has w_t at position 2t + 1 (0-based) when started from a length-2 seed.
Construction build_prescribed_west(std::span<const Value> w, std::span<const Value> seed = kDefaultSeed,
                                   const sp::SpSieve* sieve = nullptr);

/// Per round: {"Z","D","bound","delta","X","Y"}.
std::string construction_json(const Construction& c);

}  // namespace pgt::border
