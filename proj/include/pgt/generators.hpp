#pragma once

// Builtin top rows, addressed by short textual specs such as
//   primes:below=1000000        square-primes:count=20,desc
//   powers:5,10,desc            fibonacci:30,desc
//   base3-no-2:314,desc         prime-indicator:0,49
//   times3-pow2:11,desc         sqrt2-bits:40
//   fixed-tail-bits             inline:3,1,4,1,5      file:row.json
// A trailing "desc" reverses any generated list.

#include <string>
#include <vector>

#include "pgt/seq.hpp"

namespace pgt::gen {

struct GeneratorSpec {
  std::string kind;
  std::vector<std::string> args;
  bool descending = false;
};

// 0,1,0,0,0,0,0,1,0,0
extern const Seq kFixedTail;

GeneratorSpec parse_spec(const std::string& text);
Seq resolve(const GeneratorSpec& spec);
inline Seq resolve(const std::string& text) { return resolve(parse_spec(text)); }

/// "none" or "" leaves the row alone, "fixed" appends kFixedTail, anything
/// else is resolved as a generator spec and appended.
Seq with_tail(Seq row, const std::string& tail);

// Individual generators.
Seq primes_below(Value limit);
Seq first_primes(std::size_t count);
Seq sp_below(Value limit);
Seq first_sp(std::size_t count);
Seq powers(unsigned k, std::size_t count);        // 1^k .. count^k
Seq fibonacci(std::size_t count);                 // F_1 = F_2 = 1
Seq fibonacci_bisection(std::size_t count);       // F_2, F_4, ...
Seq base3_no_2(std::size_t count);                // 0, 1, 3, 4, 9, ...
Seq prime_indicator(Value lo, Value hi);          // [n prime] for lo <= n <= hi
Seq times3_pow2(std::size_t count);               // 3, 6, 12, ...
Seq sqrt2_bits(std::size_t count);                // k = 1..count: 1 iff frac(k sqrt 2) < 1/2

}  // namespace pgt::gen
