#include "pgt/f2poly.hpp"

#include <algorithm>
#include <bit>

#include "pgt/error.hpp"

namespace pgt::f2 {

namespace {

std::size_t words_for(std::size_t order) { return (order + 63) / 64; }

// multiply by X, dropping the coefficient that leaves the truncation window
void shift_up(F2Poly& f) {
  auto& w = f.words();
  for (std::size_t i = w.size(); i-- > 0;) w[i] = (w[i] << 1) | (i ? w[i - 1] >> 63 : 0);
  f.trim();
}

}  // namespace

F2Poly::F2Poly(std::size_t order) : order_(order), words_(words_for(order), 0) {}

F2Poly F2Poly::from_bits(const std::string& bits) {
  F2Poly f(bits.size());
  for (std::size_t i = 0; i < bits.size(); ++i) {
    if (bits[i] == '1')
      f.flip(i);
    else if (bits[i] != '0')
      throw InvalidArgument("bit string may contain only '0' and '1'");
  }
  return f;
}

F2Poly F2Poly::from_seq(std::span<const Value> s) {
  F2Poly f(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (s[i] > 1) throw InvalidArgument("sequence is not binary at index " + std::to_string(i));
    if (s[i]) f.flip(i);
  }
  return f;
}

F2Poly F2Poly::from_words(std::size_t order, std::vector<std::uint64_t> words) {
  F2Poly f(order);
  words.resize(f.words_.size(), 0);
  f.words_ = std::move(words);
  f.trim();
  return f;
}

void F2Poly::set(std::size_t i, bool bit) {
  const std::uint64_t m = std::uint64_t{1} << (i & 63);
  if (bit)
    words_[i >> 6] |= m;
  else
    words_[i >> 6] &= ~m;
}

std::string F2Poly::to_bits() const {
  std::string s(order_, '0');
  for (std::size_t i = 0; i < order_; ++i)
    if (get(i)) s[i] = '1';
  return s;
}

Seq F2Poly::to_seq() const {
  Seq s(order_);
  for (std::size_t i = 0; i < order_; ++i) s[i] = get(i);
  return s;
}

F2Poly F2Poly::truncated(std::size_t order) const {
  if (order > order_) throw OutOfRange("truncation order exceeds polynomial order");
  F2Poly f(order);
  std::copy_n(words_.begin(), f.words_.size(), f.words_.begin());
  f.trim();
  return f;
}

std::size_t F2Poly::popcount() const {
  std::size_t c = 0;
  for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
  return c;
}

F2Poly& F2Poly::operator^=(const F2Poly& o) {
  if (o.order_ != order_) throw InvalidArgument("order mismatch in F2Poly xor");
  for (std::size_t i = 0; i < words_.size(); ++i) words_[i] ^= o.words_[i];
  return *this;
}

void F2Poly::trim() {
  if (order_ & 63) words_.back() &= (std::uint64_t{1} << (order_ & 63)) - 1;
}

F2Poly t_naive(const F2Poly& f) {
  F2Poly g(f.order());
  for (std::uint64_t n = 0; n < f.order(); ++n) {
    // C(n,k) is odd exactly for the submasks k of n
    bool b = false;
    for (std::uint64_t k = n;; k = (k - 1) & n) {
      b ^= f.get(k);
      if (k == 0) break;
    }
    if (b) g.flip(n);
  }
  return g;
}

F2Poly t_fast(const F2Poly& f) {
  std::vector<std::uint64_t> w = f.words();
  w.resize(std::bit_ceil(std::max<std::size_t>(w.size(), 1)), 0);

  static constexpr std::uint64_t kLow[6] = {
      0x5555555555555555ULL, 0x3333333333333333ULL, 0x0F0F0F0F0F0F0F0FULL,
      0x00FF00FF00FF00FFULL, 0x0000FFFF0000FFFFULL, 0x00000000FFFFFFFFULL,
  };
  for (auto& x : w)
    for (unsigned s = 0; s < 6; ++s) x ^= (x & kLow[s]) << (1u << s);

  for (std::size_t half = 1; half < w.size(); half <<= 1)
    for (std::size_t base = 0; base < w.size(); base += 2 * half)
      for (std::size_t i = 0; i < half; ++i) w[base + half + i] ^= w[base + i];

  return F2Poly::from_words(f.order(), std::move(w));
}

void divide_by_one_plus_x(F2Poly& f) {
  std::uint64_t carry = 0;
  for (auto& x : f.words()) {
    x ^= x << 1;
    x ^= x << 2;
    x ^= x << 4;
    x ^= x << 8;
    x ^= x << 16;
    x ^= x << 32;
    x ^= carry;
    carry = (x >> 63) ? ~std::uint64_t{0} : 0;
  }
  f.trim();
}

F2Poly t_rational(const F2Poly& f) {
  const std::size_t n = f.order();
  if (n == 0) throw InvalidArgument("t_rational needs order >= 1");
  // Horner in Y = X/(1+X): acc <- acc*Y + a_k for k = n-1 down to 0
  F2Poly acc(n);
  for (std::size_t k = n; k-- > 0;) {
    shift_up(acc);
    divide_by_one_plus_x(acc);
    if (f.get(k)) acc.flip(0);
  }
  divide_by_one_plus_x(acc);
  return acc;
}

F2Poly ones_power(std::size_t power, std::size_t order) {
  F2Poly f(order);
  if (order == 0) return f;
  f.flip(0);
  for (std::size_t i = 0; i < power; ++i) divide_by_one_plus_x(f);
  return f;
}

F2Poly left_edge_packed(const F2Poly& top) {
  const std::size_t n = top.order();
  F2Poly out(n);
  std::vector<std::uint64_t> row = top.words();
  for (std::size_t j = 0, len = n; len > 0; ++j, --len) {
    if (row[0] & 1u) out.flip(j);
    const std::size_t active = words_for(len);
    for (std::size_t i = 0; i < active; ++i) {
      const std::uint64_t next = i + 1 < active ? row[i + 1] : 0;
      row[i] ^= (row[i] >> 1) | (next << 63);
    }
    // row j+1 has len-1 entries; clear the stale top bit
    const std::size_t top_bit = len - 1;
    row[top_bit >> 6] &= ~(std::uint64_t{1} << (top_bit & 63));
  }
  return out;
}

HockeyStick hockey_stick_check(unsigned long K, unsigned long n) {
  HockeyStick h;
  mpz_class c;
  for (unsigned long i = 0; i <= n; ++i) {
    mpz_bin_uiui(c.get_mpz_t(), K + i, K);
    h.lhs += c;
  }
  mpz_bin_uiui(h.rhs.get_mpz_t(), K + n + 1, K + 1);
  return h;
}

}  // namespace pgt::f2
