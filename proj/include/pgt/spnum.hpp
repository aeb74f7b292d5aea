#pragma once

// Square-primes: integers k^2 * p with k >= 2 and p prime
// (8, 12, 18, 20, 27, 28, 32, ...). The representation is unique: p is the
// squarefree kernel of n. No square-prime is prime or a perfect square.

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "pgt/error.hpp"

namespace pgt::sp {

struct SpFactor {
  std::uint64_t prime = 0;
  std::uint64_t k = 0;  // n = prime * k^2, k >= 2
  friend bool operator==(const SpFactor&, const SpFactor&) = default;
};

inline constexpr std::uint64_t kMaxSieveLimit = std::uint64_t{1} << 28;

// Square-primes below a limit together with a smallest-prime-factor table.
// Immutable after construction.
class SpSieve {
 public:
  explicit SpSieve(std::uint64_t limit);

  std::uint64_t limit() const { return limit_; }
  const std::vector<std::uint64_t>& terms() const { return terms_; }
  bool contains(std::uint64_t n) const;
  std::uint32_t spf(std::uint64_t n) const;
  bool is_prime(std::uint64_t n) const { return n >= 2 && spf(n) == n; }
  std::optional<SpFactor> decompose(std::uint64_t n) const;
  // number of terms <= x
  std::size_t count_upto(std::uint64_t x) const;

 private:
  void check(std::uint64_t n) const;

  std::uint64_t limit_;
  std::vector<std::uint64_t> terms_;
  std::vector<bool> member_;
  std::vector<std::uint32_t> spf_;
};

/// Factorisation-based test valid for every 64-bit n.
std::optional<SpFactor> sp_decompose(std::uint64_t n);
inline bool is_sp(std::uint64_t n) { return sp_decompose(n).has_value(); }

/// n-th square-prime, 1-based (s_1 = 8).
std::uint64_t nth_sp(std::size_t n);

std::vector<std::pair<std::uint64_t, std::uint64_t>> sp_twins(std::uint64_t limit);

struct PellSolution {
  std::uint64_t D = 0;
  mpz_class m, n;
  bool verify() const { return m * m - D * n * n == 1; }
};

/// Least positive solution of m^2 - D n^2 = 1 from the continued fraction of sqrt(D).
PellSolution pell_fundamental(std::uint64_t D);

enum class GapCase { I, II, III, IV, V };
std::string to_string(GapCase c);

struct BigSpFactor {
  std::uint64_t prime = 0;
  mpz_class k;
};

// Witness that x = a - b with a = a_factor.prime * a_factor.k^2 and likewise b.
struct GapCertificate {
  std::uint64_t x = 0;
  GapCase tag = GapCase::I;
  mpz_class a, b;
  BigSpFactor a_factor, b_factor;
  std::optional<PellSolution> pell;  // set on the prime route, also when reached through scaling
};

GapCertificate gap_representation(std::uint64_t x);

/// Checks the certificate from its fields alone: a - b == x, both factors
/// rebuild a and b, primes are prime and both square roots are >= 2.
bool verify(const GapCertificate& c);

/// {x, case, a, b, a_prime, a_k, b_prime, b_k}; big integers as decimal strings.
std::string certificate_json(const GapCertificate& c);

using SpPair = std::pair<std::uint64_t, std::uint64_t>;

struct PairScanExhausted : Error {
  PairScanExhausted(std::uint64_t gap, std::vector<SpPair> found);
  std::vector<SpPair> found;
};

inline constexpr std::uint64_t kDefaultScanBudget = 50'000'000;

/// First `count` pairs (b, b + x) of square-primes with b >= min_value, in
/// increasing b. Scans with an on-demand sieve below 2^24 and switches to
/// per-number factorisation above it. Throws PairScanExhausted after `budget`
/// candidates.
std::vector<SpPair> find_sp_pairs_with_gap(std::uint64_t x, std::uint64_t min_value, std::size_t count,
                                           std::uint64_t budget = kDefaultScanBudget,
                                           const SpSieve* sieve = nullptr);

struct DensityRow {
  std::uint64_t x = 0;
  std::uint64_t count = 0;
  double main_term = 0;  // (zeta(2) - 1) x / log x
  double ratio = 0;
};

std::vector<DensityRow> density_trace(std::uint64_t limit, const std::vector<std::uint64_t>& checkpoints);

}  // namespace pgt::sp
