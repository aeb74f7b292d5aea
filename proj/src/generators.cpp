#include "pgt/generators.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>

#include "pgt/arith64.hpp"
#include "pgt/error.hpp"
#include "pgt/spnum.hpp"

namespace pgt::gen {

const Seq kFixedTail = {0, 1, 0, 0, 0, 0, 0, 1, 0, 0};

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::size_t start = 0;
  for (;;) {
    const auto pos = s.find(sep, start);
    out.push_back(s.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

Value number(const std::string& tok, const std::string& what) {
  Value v = 0;
  const auto* end = tok.data() + tok.size();
  auto [p, ec] = std::from_chars(tok.data(), end, v);
  if (tok.empty() || ec != std::errc() || p != end)
    throw Error("malformed_spec", "expected a non-negative integer for " + what + ", got '" + tok + "'");
  return v;
}

std::vector<bool> prime_flags(Value limit) {
  if (limit > sp::kMaxSieveLimit) throw Error("budget_exhausted", "prime sieve limit too large");
  std::vector<bool> is_p(limit, true);
  for (Value i = 0; i < std::min<Value>(2, limit); ++i) is_p[i] = false;
  for (Value i = 2; i * i < limit; ++i)
    if (is_p[i])
      for (Value j = i * i; j < limit; j += i) is_p[j] = false;
  return is_p;
}

void expect_args(const GeneratorSpec& s, std::size_t lo, std::size_t hi) {
  if (s.args.size() < lo || s.args.size() > hi)
    throw Error("malformed_spec", "wrong number of arguments for generator '" + s.kind + "'");
}

// below=N or count=N
Seq counted(const GeneratorSpec& s, Seq (*below)(Value), Seq (*count)(std::size_t)) {
  expect_args(s, 1, 1);
  const auto& a = s.args[0];
  if (a.rfind("below=", 0) == 0) return below(number(a.substr(6), "below"));
  if (a.rfind("count=", 0) == 0) return count(number(a.substr(6), "count"));
  return count(number(a, "count"));
}

}  // namespace

GeneratorSpec parse_spec(const std::string& text) {
  if (text.empty()) throw Error("malformed_spec", "empty generator spec");
  GeneratorSpec s;
  const auto colon = text.find(':');
  s.kind = text.substr(0, colon);
  if (colon != std::string::npos) {
    s.args = split(text.substr(colon + 1), ',');
    if (s.kind != "file" && s.kind != "inline" && !s.args.empty() && s.args.back() == "desc") {
      s.descending = true;
      s.args.pop_back();
    }
  }
  return s;
}

Seq resolve(const GeneratorSpec& s) {
  Seq out;
  if (s.kind == "inline") {
    if (s.args.empty()) throw Error("malformed_spec", "inline generator needs values");
    for (const auto& a : s.args) out.push_back(number(a, "inline value"));
  } else if (s.kind == "file") {
    expect_args(s, 1, 1);
    out = read_sequence_file(s.args[0]);
  } else if (s.kind == "primes") {
    out = counted(s, primes_below, first_primes);
  } else if (s.kind == "square-primes") {
    out = counted(s, sp_below, first_sp);
  } else if (s.kind == "powers") {
    expect_args(s, 2, 2);
    out = powers(static_cast<unsigned>(number(s.args[0], "exponent")), number(s.args[1], "count"));
  } else if (s.kind == "fibonacci") {
    expect_args(s, 1, 1);
    out = fibonacci(number(s.args[0], "count"));
  } else if (s.kind == "fibonacci-bisection") {
    expect_args(s, 1, 1);
    out = fibonacci_bisection(number(s.args[0], "count"));
  } else if (s.kind == "base3-no-2") {
    expect_args(s, 1, 1);
    out = base3_no_2(number(s.args[0], "count"));
  } else if (s.kind == "prime-indicator") {
    expect_args(s, 2, 2);
    out = prime_indicator(number(s.args[0], "lo"), number(s.args[1], "hi"));
  } else if (s.kind == "times3-pow2") {
    expect_args(s, 1, 1);
    out = times3_pow2(number(s.args[0], "count"));
  } else if (s.kind == "sqrt2-bits") {
    expect_args(s, 1, 1);
    out = sqrt2_bits(number(s.args[0], "count"));
  } else if (s.kind == "fixed-tail-bits") {
    expect_args(s, 0, 0);
    out = kFixedTail;
  } else {
    throw Error("malformed_spec", "unknown generator kind '" + s.kind + "'");
  }
  if (s.descending) std::reverse(out.begin(), out.end());
  if (out.empty()) throw EmptyGenerator();
  return out;
}

Seq with_tail(Seq row, const std::string& tail) {
  if (tail.empty() || tail == "none") return row;
  const Seq t = tail == "fixed" ? kFixedTail : resolve(tail);
  row.insert(row.end(), t.begin(), t.end());
  return row;
}

Seq primes_below(Value limit) {
  Seq out;
  const auto f = prime_flags(limit);
  for (Value i = 0; i < limit; ++i)
    if (f[i]) out.push_back(i);
  return out;
}

Seq first_primes(std::size_t count) {
  Value limit = 64;
  for (;;) {
    Seq p = primes_below(limit);
    if (p.size() >= count) {
      p.resize(count);
      return p;
    }
    limit *= 2;
  }
}

Seq sp_below(Value limit) {
  if (limit <= 8) return {};
  return sp::SpSieve(limit).terms();
}

Seq first_sp(std::size_t count) {
  Value limit = 64;
  for (;;) {
    Seq t = sp_below(limit);
    if (t.size() >= count) {
      t.resize(count);
      return t;
    }
    limit *= 2;
  }
}

Seq powers(unsigned k, std::size_t count) {
  Seq out;
  for (Value b = 1; b <= count; ++b) {
    Value v = 1;
    for (unsigned i = 0; i < k; ++i) v = checked_mul(v, b);
    out.push_back(v);
  }
  return out;
}

Seq fibonacci(std::size_t count) {
  Seq out;
  Value a = 1, b = 1;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(a);
    if (i + 2 < count) {
      const Value c = checked_add(a, b);
      a = b;
      b = c;
    } else {
      a = b;
    }
  }
  return out;
}

Seq fibonacci_bisection(std::size_t count) {
  const Seq f = fibonacci(2 * count);
  Seq out;
  for (std::size_t i = 1; i < f.size(); i += 2) out.push_back(f[i]);
  return out;
}

Seq base3_no_2(std::size_t count) {
  // the n-th term reads the binary digits of n in base 3
  Seq out;
  for (Value n = 0; n < count; ++n) {
    Value v = 0, place = 1;
    for (Value m = n; m; m >>= 1) {
      if (m & 1) v = checked_add(v, place);
      if (m >> 1) place = checked_mul(place, 3);
    }
    out.push_back(v);
  }
  return out;
}

Seq prime_indicator(Value lo, Value hi) {
  if (hi < lo) throw InvalidArgument("prime-indicator range is empty");
  Seq out;
  for (Value n = lo; n <= hi; ++n) out.push_back(arith::is_prime(n) ? 1 : 0);
  return out;
}

Seq times3_pow2(std::size_t count) {
  Seq out;
  Value v = 3;
  for (std::size_t i = 0; i < count; ++i) {
    out.push_back(v);
    if (i + 1 < count) v = checked_mul(v, 2);
  }
  return out;
}

Seq sqrt2_bits(std::size_t count) {
  // frac(k sqrt2) < 1/2  <=>  floor(2k sqrt2) = isqrt(8k^2) is even
  Seq out;
  for (Value k = 1; k <= count; ++k) out.push_back(arith::isqrt(checked_mul(8, checked_mul(k, k))) % 2 == 0);
  return out;
}

}  // namespace pgt::gen
