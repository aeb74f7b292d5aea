#include "pgt/spnum.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <numbers>

#include "pgt/arith64.hpp"
#include "pgt/seq.hpp"

namespace pgt::sp {

namespace {

// sieve-backed scanning stops here; beyond it membership comes from factoring
constexpr std::uint64_t kScanSieveCap = std::uint64_t{1} << 24;

std::optional<SpFactor> from_factors(const std::vector<std::pair<std::uint64_t, unsigned>>& fs) {
  std::uint64_t kernel = 0;
  std::uint64_t k = 1;
  for (auto [p, e] : fs) {
    if (e & 1) {
      if (kernel) return std::nullopt;
      kernel = p;
    }
    for (unsigned i = 0; i < e / 2; ++i) k *= p;
  }
  if (!kernel || k < 2) return std::nullopt;
  return SpFactor{kernel, k};
}

}  // namespace

SpSieve::SpSieve(std::uint64_t limit) : limit_(limit) {
  if (limit < 2) throw InvalidArgument("sieve limit must be >= 2");
  if (limit > kMaxSieveLimit)
    throw Error("budget_exhausted", "sieve limit " + std::to_string(limit) + " exceeds memory budget");
  spf_.assign(limit, 0);
  std::vector<std::uint32_t> primes;
  for (std::uint64_t i = 2; i < limit; ++i) {
    if (spf_[i] == 0) {
      spf_[i] = static_cast<std::uint32_t>(i);
      primes.push_back(static_cast<std::uint32_t>(i));
    }
    for (std::uint32_t p : primes) {
      if (p > spf_[i] || i * p >= limit) break;
      spf_[i * p] = p;
    }
  }
  member_.assign(limit, false);
  for (std::uint32_t p : primes) {
    if (std::uint64_t{4} * p >= limit) break;
    for (std::uint64_t k = 2; k * k * p < limit; ++k) member_[k * k * p] = true;
  }
  for (std::uint64_t n = 0; n < limit; ++n)
    if (member_[n]) terms_.push_back(n);
}

void SpSieve::check(std::uint64_t n) const {
  if (n >= limit_) throw OutOfRange(std::to_string(n) + " is outside the sieve (limit " + std::to_string(limit_) + ")");
}

bool SpSieve::contains(std::uint64_t n) const {
  check(n);
  return member_[n];
}

std::uint32_t SpSieve::spf(std::uint64_t n) const {
  check(n);
  return spf_[n];
}

std::optional<SpFactor> SpSieve::decompose(std::uint64_t n) const {
  check(n);
  if (!member_[n]) return std::nullopt;
  std::vector<std::pair<std::uint64_t, unsigned>> fs;
  for (std::uint64_t m = n; m > 1;) {
    const std::uint64_t p = spf_[m];
    unsigned e = 0;
    while (m % p == 0) {
      m /= p;
      ++e;
    }
    fs.emplace_back(p, e);
  }
  return from_factors(fs);
}

std::size_t SpSieve::count_upto(std::uint64_t x) const {
  return static_cast<std::size_t>(std::upper_bound(terms_.begin(), terms_.end(), x) - terms_.begin());
}

std::optional<SpFactor> sp_decompose(std::uint64_t n) {
  if (n < 8) return std::nullopt;
  return from_factors(arith::factor(n));
}

std::uint64_t nth_sp(std::size_t n) {
  if (n == 0) throw InvalidArgument("square-primes are indexed from 1");
  std::uint64_t limit = std::max<std::uint64_t>(64, 10 * static_cast<std::uint64_t>(n));
  for (;;) {
    SpSieve s(limit);
    if (s.terms().size() >= n) return s.terms()[n - 1];
    limit *= 2;
  }
}

std::vector<std::pair<std::uint64_t, std::uint64_t>> sp_twins(std::uint64_t limit) {
  SpSieve s(limit);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> out;
  const auto& t = s.terms();
  for (std::size_t i = 0; i + 1 < t.size(); ++i)
    if (t[i + 1] == t[i] + 1) out.emplace_back(t[i], t[i + 1]);
  return out;
}

PellSolution pell_fundamental(std::uint64_t D) {
  if (D < 2) throw InvalidArgument("Pell equation needs D >= 2");
  if (arith::is_square(D)) throw InvalidArgument("Pell equation needs a non-square D, got " + std::to_string(D));
  const std::uint64_t a0 = arith::isqrt(D);
  // continued fraction of sqrt(D): m, d, a stay below 2 sqrt(D)
  std::uint64_t m = 0, d = 1, a = a0;
  mpz_class h_prev = 1, h = a0;
  mpz_class k_prev = 0, k = 1;
  for (;;) {
    if (h * h - D * k * k == 1) return PellSolution{D, h, k};
    m = d * a - m;
    d = (D - m * m) / d;
    a = (a0 + m) / d;
    mpz_class h_next = a * h + h_prev;
    mpz_class k_next = a * k + k_prev;
    h_prev = std::move(h);
    h = std::move(h_next);
    k_prev = std::move(k);
    k = std::move(k_next);
  }
}

std::string to_string(GapCase c) {
  switch (c) {
    case GapCase::I: return "i";
    case GapCase::II: return "ii";
    case GapCase::III: return "iii";
    case GapCase::IV: return "iv";
    case GapCase::V: return "v";
  }
  return "?";
}

namespace {

GapCertificate make(std::uint64_t x, GapCase tag, std::uint64_t pa, mpz_class ka, std::uint64_t pb, mpz_class kb) {
  GapCertificate c;
  c.x = x;
  c.tag = tag;
  c.a = pa * ka * ka;
  c.b = pb * kb * kb;
  c.a_factor = {pa, std::move(ka)};
  c.b_factor = {pb, std::move(kb)};
  return c;
}

GapCertificate squarefree_case(std::uint64_t x, const std::vector<std::pair<std::uint64_t, unsigned>>& fs) {
  if (x == 1) return make(1, GapCase::I, 7, 2, 3, 3);  // 28 - 27
  if (fs.size() == 1) {
    // prime x: x M^2 - p (x N)^2 = x from M^2 - p x N^2 = 1
    const std::uint64_t p = (x == 2) ? 3 : 2;
    PellSolution pell = pell_fundamental(checked_mul(p, x));
    auto c = make(x, GapCase::II, x, pell.m, p, x * pell.n);
    c.pell = std::move(pell);
    return c;
  }
  if (x % 2 == 1) {
    // x = p y, p the smallest prime factor, y = 2K + 1
    const std::uint64_t p = fs.front().first;
    const std::uint64_t K = (x / p - 1) / 2;
    return make(x, GapCase::III, p, K + 1, p, K);
  }
  const std::uint64_t K = (x / 2 - 1) / 2;
  if (K == 1) return make(x, GapCase::IV, 2, 3, 3, 2);  // 6 = 2*3^2 - 3*2^2
  return make(x, GapCase::IV, 2, K + 1, 2, K);
}

}  // namespace

GapCertificate gap_representation(std::uint64_t x) {
  if (x == 0) throw InvalidArgument("gap must be >= 1");
  const auto fs = arith::factor(x);
  std::uint64_t c = 1;
  std::vector<std::pair<std::uint64_t, unsigned>> kernel;
  for (auto [p, e] : fs) {
    for (unsigned i = 0; i < e / 2; ++i) c *= p;
    if (e & 1) kernel.emplace_back(p, 1);
  }
  if (c == 1) return squarefree_case(x, fs);

  // x = c^2 y with y squarefree: scale a representation of y by c
  const std::uint64_t y = x / (c * c);
  GapCertificate base = squarefree_case(y, kernel);
  GapCertificate out = make(x, GapCase::V, base.a_factor.prime, base.a_factor.k * c, base.b_factor.prime,
                            base.b_factor.k * c);
  out.pell = std::move(base.pell);
  return out;
}

bool verify(const GapCertificate& c) {
  auto valid = [](const mpz_class& v, const BigSpFactor& f) {
    return f.k >= 2 && arith::is_prime(f.prime) && v == f.prime * f.k * f.k;
  };
  if (c.a - c.b != mpz_class(std::to_string(c.x))) return false;
  if (!valid(c.a, c.a_factor) || !valid(c.b, c.b_factor)) return false;
  if (c.pell && !c.pell->verify()) return false;
  return true;
}

std::string certificate_json(const GapCertificate& c) {
  auto q = [](const mpz_class& v) { return "\"" + v.get_str() + "\""; };
  return "{\"x\":" + std::to_string(c.x) + ",\"case\":\"" + to_string(c.tag) + "\",\"a\":" + q(c.a) +
         ",\"b\":" + q(c.b) + ",\"a_prime\":" + std::to_string(c.a_factor.prime) + ",\"a_k\":" + q(c.a_factor.k) +
         ",\"b_prime\":" + std::to_string(c.b_factor.prime) + ",\"b_k\":" + q(c.b_factor.k) + "}";
}

PairScanExhausted::PairScanExhausted(std::uint64_t gap, std::vector<SpPair> f)
    : Error("budget_exhausted", "scan budget exhausted searching square-prime pairs at distance " +
                                    std::to_string(gap) + " (" + std::to_string(f.size()) + " found)"),
      found(std::move(f)) {}

std::vector<SpPair> find_sp_pairs_with_gap(std::uint64_t x, std::uint64_t min_value, std::size_t count,
                                           std::uint64_t budget, const SpSieve* sieve) {
  if (x == 0) throw InvalidArgument("gap must be >= 1");
  std::vector<SpPair> found;
  if (count == 0) return found;

  std::unique_ptr<SpSieve> own;
  auto sieve_covering = [&](std::uint64_t hi) -> const SpSieve* {
    if (sieve && sieve->limit() > hi) return sieve;
    if (own && own->limit() > hi) return own.get();
    std::uint64_t lim = own ? own->limit() : (sieve ? sieve->limit() : std::uint64_t{1} << 16);
    while (lim <= hi) lim *= 2;
    own = std::make_unique<SpSieve>(std::min(lim, kScanSieveCap));
    return own.get();
  };

  constexpr std::uint64_t kWindow = 4096;
  std::uint64_t scanned = 0;
  for (std::uint64_t lo = min_value;; lo = checked_add(lo, kWindow)) {
    const std::uint64_t hi = checked_add(checked_add(lo, kWindow), x);  // exclusive bound of values touched
    if (hi < kScanSieveCap) {
      const SpSieve* s = sieve_covering(hi);
      for (std::uint64_t b = lo; b < lo + kWindow; ++b) {
        if (s->contains(b) && s->contains(b + x)) {
          found.emplace_back(b, b + x);
          if (found.size() == count) return found;
        }
      }
    } else {
      for (std::uint64_t b = lo; b < lo + kWindow; ++b) {
        if (is_sp(b) && is_sp(b + x)) {
          found.emplace_back(b, b + x);
          if (found.size() == count) return found;
        }
      }
    }
    scanned += kWindow;
    if (scanned >= budget) throw PairScanExhausted(x, std::move(found));
  }
}

std::vector<DensityRow> density_trace(std::uint64_t limit, const std::vector<std::uint64_t>& checkpoints) {
  for (auto c : checkpoints)
    if (c > limit) throw InvalidArgument("checkpoint " + std::to_string(c) + " exceeds limit");
  SpSieve s(limit + 1);
  const double kappa = std::numbers::pi * std::numbers::pi / 6.0 - 1.0;
  std::vector<DensityRow> rows;
  for (auto x : checkpoints) {
    DensityRow r;
    r.x = x;
    r.count = s.count_upto(x);
    r.main_term = x > 1 ? kappa * static_cast<double>(x) / std::log(static_cast<double>(x)) : 0.0;
    r.ratio = r.main_term > 0 ? static_cast<double>(r.count) / r.main_term : 0.0;
    rows.push_back(r);
  }
  return rows;
}

}  // namespace pgt::sp
