#include <doctest.h>

#include <random>

#include <gmpxx.h>

#include "oracle.hpp"
#include "pgt/f2poly.hpp"

using namespace pgt;
using namespace pgt::f2;

namespace {

F2Poly random_poly(std::mt19937_64& rng, std::size_t order) {
  F2Poly f(order);
  for (auto& w : f.words()) w = rng();
  f.trim();
  return f;
}

bool exact_binom_odd(unsigned long n, unsigned long k) {
  mpz_class c;
  mpz_bin_uiui(c.get_mpz_t(), n, k);
  return mpz_odd_p(c.get_mpz_t());
}

}  // namespace

TEST_CASE("binom_parity") {
  CHECK(binom_parity(5, 2) == 0);
  CHECK(binom_parity(4, 2) == 0);
  CHECK(binom_parity(7, 3) == 1);
  for (std::uint64_t n = 0; n < 200; ++n) {
    CHECK(binom_parity(n, 0) == 1);
    for (std::uint64_t k = 0; k <= n; ++k) CHECK(binom_parity(n, k) == exact_binom_odd(n, k));
  }
}

TEST_CASE("F2Poly basics") {
  auto f = F2Poly::from_bits("10110");
  CHECK(f.order() == 5);
  CHECK(f.to_bits() == "10110");
  CHECK(f.popcount() == 3);
  CHECK(f.to_seq() == Seq{1, 0, 1, 1, 0});
  CHECK(F2Poly::from_seq(Seq{1, 0, 1, 1, 0}) == f);
  CHECK(f.truncated(3).to_bits() == "101");
  f.flip(4);
  CHECK(f.to_bits() == "10111");
  CHECK((f ^ f).popcount() == 0);
  CHECK_THROWS(F2Poly::from_bits("102"));
  CHECK_THROWS(F2Poly::from_seq(Seq{0, 2}));
  CHECK_THROWS(f ^ F2Poly(3));
}

TEST_CASE("transform examples") {
  CHECK(t_naive(F2Poly::from_bits("101")).to_bits() == "110");
  CHECK(t_fast(F2Poly::from_bits("1010")).to_bits() == "1100");
  CHECK(t_rational(F2Poly::from_bits("10100")).to_bits() == "11001");
  CHECK(t_rational(F2Poly::from_bits("010000")).to_bits() == "010101");
  for (std::size_t n : {1u, 5u, 64u, 65u, 200u}) {
    F2Poly e0(n);
    e0.set(0, true);
    F2Poly ones(n);
    for (std::size_t i = 0; i < n; ++i) ones.set(i, true);
    CHECK(t_naive(e0) == ones);
    CHECK(t_fast(e0) == ones);
    CHECK(t_rational(e0) == ones);
    CHECK(t_fast(F2Poly(n)) == F2Poly(n));
  }
}

TEST_CASE("involution, exhaustive for order <= 12") {
  std::size_t cases = 0;
  for (std::size_t n = 1; n <= 12; ++n) {
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const auto f = F2Poly::from_words(n, {bits});
      const auto t = t_fast(f);
      CHECK(t_fast(t) == f);
      CHECK(t == t_naive(f));
      ++cases;
    }
  }
  CHECK(cases == 8190);
}

TEST_CASE("four evaluations agree on random inputs") {
  std::mt19937_64 rng(2024);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = 1 + rng() % 700;
    const auto f = random_poly(rng, n);
    const auto t = t_fast(f);
    CHECK(t == t_naive(f));
    CHECK(t == t_rational(f));
    CHECK(t == left_edge_packed(f));
    CHECK(t.to_seq() == oracle::west(f.to_seq()));
    CHECK(t_fast(t) == f);
  }
  for (int trial = 0; trial < 20; ++trial) {
    const auto f = random_poly(rng, 4096);
    CHECK(t_fast(t_fast(f)) == f);
    CHECK(t_fast(f) == left_edge_packed(f));
    CHECK(t_fast(f) == t_rational(f));
  }
}

TEST_CASE("linearity and truncation consistency") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 100; ++trial) {
    const std::size_t n = 1 + rng() % 300;
    const auto f = random_poly(rng, n), g = random_poly(rng, n);
    CHECK(t_fast(f ^ g) == (t_fast(f) ^ t_fast(g)));
    const auto wide = random_poly(rng, 2 * n);
    CHECK(t_naive(wide).truncated(n) == t_naive(wide.truncated(n)));
  }
}

TEST_CASE("division by 1 + X") {
  auto f = F2Poly::from_bits("11000");  // 1 + X
  divide_by_one_plus_x(f);
  CHECK(f.to_bits() == "10000");
  std::mt19937_64 rng(4);
  for (int trial = 0; trial < 30; ++trial) {
    const std::size_t n = 1 + rng() % 300;
    const auto g = random_poly(rng, n);
    auto q = g;
    divide_by_one_plus_x(q);
    // multiply back: q + X q
    F2Poly back(n);
    for (std::size_t i = 0; i < n; ++i) back.set(i, q.get(i) ^ (i ? q.get(i - 1) : false));
    CHECK(back == g);
  }
}

TEST_CASE("powers of the all-ones series") {
  for (std::size_t N = 0; N <= 16; ++N) {
    const auto p = ones_power(N + 1, 513);
    for (std::uint64_t n = 0; n <= 512; ++n) {
      CHECK(p.get(n) == binom_parity(N + n, N));
      CHECK(p.get(n) == exact_binom_odd(N + n, N));
    }
  }
}

TEST_CASE("hockey stick identity") {
  auto h = hockey_stick_check(2, 2);
  CHECK(h.lhs == 10);
  CHECK(h.holds());
  CHECK(hockey_stick_check(3, 4).lhs == 70);
  for (unsigned long m = 0; m < 20; ++m) CHECK(hockey_stick_check(0, m).rhs == m + 1);
  for (unsigned long K = 0; K < 30; ++K)
    for (unsigned long n = 0; n < 30; ++n) CHECK(hockey_stick_check(K, n).holds());
}
