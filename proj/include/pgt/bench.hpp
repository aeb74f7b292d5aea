#pragma once

// Experiment drivers: ray tables over primes and square-primes, the
// balance experiment on random binary rows, discrepancy traces and the
// helicoid layer census.

#include <array>
#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "pgt/seq.hpp"

namespace pgt::bench {

// Philox4x32-10 (Salmon et al., SC'11). Stateless: a 128-bit counter and a
// 64-bit key map to 128 random bits.
struct Philox4x32 {
  using Block = std::array<std::uint32_t, 4>;
  static Block generate(Block counter, std::array<std::uint32_t, 2> key);
};

enum class Source { Primes, SquarePrimes };

Source parse_source(const std::string& name);
// 2 for primes (the gap that dominates above the first row), 1 for square-primes
Value paired_value(Source s);
Seq source_row(Source s, Value limit);

std::vector<RayStats> table_rays(Source s, Value limit, std::size_t num_rays, unsigned threads = 1);

struct Rational {
  std::uint64_t num = 0, den = 1;
  double value() const { return static_cast<double>(num) / static_cast<double>(den); }
  std::string str() const;
  friend bool operator==(const Rational&, const Rational&) = default;
};

// "0.05", "1/16", "3"; always reduced
Rational parse_rational(const std::string& text);

struct BalanceReport {
  std::uint64_t N = 0;
  std::uint64_t samples = 0;
  Rational epsilon, delta;
  std::uint64_t K = 0;                  // floor(delta N): rays 0..K on each side
  bool exhaustive = false;
  std::vector<double> west_mean_ratio;  // mean zero proportion on ray w_k
  std::vector<double> east_mean_ratio;  // ... on anti-diagonal e_k
  std::uint64_t within_band = 0;        // samples with every ratio in [1/2 - eps, 1/2 + eps]
  Rational fraction() const;
};

// Samples are drawn from Philox with counter (word, sample, sample >> 32, 0)
// and key (seed, seed >> 32), so the shard layout never changes the result.
// Exhaustive mode enumerates all 2^N rows (N <= 24) and ignores samples/seed.
BalanceReport monte_carlo_balance(std::uint64_t N, std::uint64_t samples, Rational epsilon, Rational delta,
                                  std::uint64_t seed, bool exhaustive = false, unsigned threads = 1);

std::string balance_json(const BalanceReport& r);

struct TracePoint {
  std::uint64_t n = 0;       // entries seen on the ray (row 0 excluded)
  std::uint64_t count = 0;   // how many equal d
  double discrepancy = 0;    // |count - n/2| / sqrt(n)
};

struct Trace {
  std::vector<TracePoint> points;
  std::uint64_t final_count = 0;
};

/// Walks ray `ray` (>= 1) of the triangle of `row`, recording a point every
/// `stride` entries and at the end.
Trace conjecture_trace(std::span<const Value> row, std::size_t ray, Value d, std::uint64_t stride);

std::string trace_csv(const Trace& t);

struct CensusEntry {
  std::string label;
  std::string spec;
  std::string tail = "fixed";
};

struct CensusRow {
  std::string label;
  std::size_t len = 0;
  std::size_t P = 0, C = 0, distinct = 0;
};

// The helicoid families discussed with the layer census.
std::vector<CensusEntry> builtin_census();

std::vector<CensusRow> layer_census(const std::vector<CensusEntry>& entries, unsigned threads = 1);

std::string census_csv(const std::vector<CensusRow>& rows);
std::string census_json(const std::vector<CensusRow>& rows);

}  // namespace pgt::bench
