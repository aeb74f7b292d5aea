#pragma once

// Truncated power series over GF(2) and the left-edge transform on binary
// generators.
//
// For a binary top row the western edge is b_n = sum_k C(n,k) a_k (mod 2),
// i.e. the lower-triangular Pascal matrix mod 2 applied to the coefficient
// vector. Three independent evaluations live here:
//   t_naive     direct sum, entries of the matrix decided by Lucas' criterion
//   t_fast      the matrix is a Kronecker power of [[1,0],[1,1]]; evaluated
//               as an in-place butterfly in O(N log N / 64) word operations
//   t_rational  f(X/(1+X)) / (1+X) mod X^N by Horner accumulation

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

#include "pgt/seq.hpp"

namespace pgt::f2 {

class F2Poly {
 public:
  F2Poly() = default;
  explicit F2Poly(std::size_t order);

  static F2Poly from_bits(const std::string& bits);   // '0'/'1', index 0 first
  static F2Poly from_seq(std::span<const Value> s);   // throws unless every element is 0 or 1
  static F2Poly from_words(std::size_t order, std::vector<std::uint64_t> words);

  std::size_t order() const { return order_; }
  bool get(std::size_t i) const { return (words_[i >> 6] >> (i & 63)) & 1u; }
  void set(std::size_t i, bool bit);
  void flip(std::size_t i) { words_[i >> 6] ^= std::uint64_t{1} << (i & 63); }

  const std::vector<std::uint64_t>& words() const { return words_; }
  std::vector<std::uint64_t>& words() { return words_; }

  std::string to_bits() const;
  Seq to_seq() const;
  F2Poly truncated(std::size_t order) const;
  std::size_t popcount() const;

  F2Poly& operator^=(const F2Poly& o);
  friend F2Poly operator^(F2Poly a, const F2Poly& b) { return a ^= b; }
  friend bool operator==(const F2Poly&, const F2Poly&) = default;

  // Clears the bits at and above order(); keeps the invariant after raw word edits.
  void trim();

 private:
  std::size_t order_ = 0;
  std::vector<std::uint64_t> words_;
};

/// C(n, k) mod 2, by Lucas: odd iff the bits of k are a subset of the bits of n.
inline bool binom_parity(std::uint64_t n, std::uint64_t k) { return (k & n) == k; }

F2Poly t_naive(const F2Poly& f);
F2Poly t_fast(const F2Poly& f);
F2Poly t_rational(const F2Poly& f);

// Division by 1 + X in place: prefix XOR of the coefficient vector.
void divide_by_one_plus_x(F2Poly& f);

// (1 + X + X^2 + ...)^(power) truncated at `order` coefficients.
F2Poly ones_power(std::size_t power, std::size_t order);

// Western edge of the triangle of a binary row, computed on packed rows
// (row_{j+1} = row_j XOR (row_j >> 1)).
F2Poly left_edge_packed(const F2Poly& top);

struct HockeyStick {
  mpz_class lhs;  // sum_{i=0..n} C(K+i, K)
  mpz_class rhs;  // C(K+n+1, K+1)
  bool holds() const { return lhs == rhs; }
};

HockeyStick hockey_stick_check(unsigned long K, unsigned long n);

}  // namespace pgt::f2
