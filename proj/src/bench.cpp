#include "pgt/bench.hpp"

#include <algorithm>
#include <atomic>
#include <bit>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <numeric>
#include <thread>

#include <json.hpp>

#include "pgt/error.hpp"
#include "pgt/generators.hpp"
#include "pgt/helix.hpp"

namespace pgt::bench {

Philox4x32::Block Philox4x32::generate(Block ctr, std::array<std::uint32_t, 2> key) {
  constexpr std::uint32_t kM0 = 0xD2511F53, kM1 = 0xCD9E8D57;
  constexpr std::uint32_t kW0 = 0x9E3779B9, kW1 = 0xBB67AE85;
  for (int round = 0; round < 10; ++round) {
    const std::uint64_t p0 = std::uint64_t{kM0} * ctr[0];
    const std::uint64_t p1 = std::uint64_t{kM1} * ctr[2];
    ctr = {static_cast<std::uint32_t>(p1 >> 32) ^ ctr[1] ^ key[0], static_cast<std::uint32_t>(p1),
           static_cast<std::uint32_t>(p0 >> 32) ^ ctr[3] ^ key[1], static_cast<std::uint32_t>(p0)};
    key[0] += kW0;
    key[1] += kW1;
  }
  return ctr;
}

Source parse_source(const std::string& name) {
  if (name == "primes") return Source::Primes;
  if (name == "square-primes" || name == "sp") return Source::SquarePrimes;
  throw InvalidArgument("unknown source '" + name + "' (primes | square-primes)");
}

Value paired_value(Source s) { return s == Source::Primes ? 2 : 1; }

Seq source_row(Source s, Value limit) {
  if (limit < 2) throw InvalidArgument("limit must be >= 2");
  Seq row = s == Source::Primes ? gen::primes_below(limit) : gen::sp_below(limit);
  if (row.empty()) throw EmptyGenerator();
  return row;
}

std::vector<RayStats> table_rays(Source s, Value limit, std::size_t num_rays, unsigned threads) {
  if (num_rays < 1) throw InvalidArgument("need at least one ray");
  return stream_ray_stats(source_row(s, limit), num_rays, threads);
}

std::string Rational::str() const {
  return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
}

Rational parse_rational(const std::string& text) {
  auto bad = [&] { return InvalidArgument("cannot parse '" + text + "' as a non-negative rational"); };
  auto whole = [&](std::string_view t) {
    std::uint64_t v = 0;
    auto [p, ec] = std::from_chars(t.data(), t.data() + t.size(), v);
    if (t.empty() || ec != std::errc() || p != t.data() + t.size()) throw bad();
    return v;
  };
  Rational r;
  const std::string_view t = text;
  if (auto slash = t.find('/'); slash != std::string_view::npos) {
    r = {whole(t.substr(0, slash)), whole(t.substr(slash + 1))};
    if (r.den == 0) throw bad();
  } else if (auto dot = t.find('.'); dot != std::string_view::npos) {
    const auto frac = t.substr(dot + 1);
    if (frac.size() > 18) throw bad();
    std::uint64_t den = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
    const std::uint64_t ip = dot ? whole(t.substr(0, dot)) : 0;
    r = {checked_add(checked_mul(ip, den), frac.empty() ? 0 : whole(frac)), den};
  } else {
    r = {whole(t), 1};
  }
  const auto g = std::gcd(r.num, r.den);
  return {r.num / g, r.den / g};
}

Rational BalanceReport::fraction() const {
  if (samples == 0) return {0, 1};
  const auto g = std::gcd(within_band, samples);
  return {within_band / g, samples / g};
}

namespace {

struct Tally {
  std::vector<std::uint64_t> west, east;  // summed zero counts
  std::uint64_t within = 0;
};

// Runs samples [lo, hi) and adds to t.
void balance_shard(std::uint64_t N, std::uint64_t K, Rational eps, std::uint64_t seed, bool exhaustive,
                   std::uint64_t lo, std::uint64_t hi, Tally& t) {
  const std::size_t nwords = (N + 63) / 64;
  std::vector<std::uint64_t> row(nwords + 1);
  std::vector<std::uint64_t> wz(K + 1), ez(K + 1);
  const std::array<std::uint32_t, 2> key = {static_cast<std::uint32_t>(seed), static_cast<std::uint32_t>(seed >> 32)};

  for (std::uint64_t s = lo; s < hi; ++s) {
    std::fill(row.begin(), row.end(), 0);
    if (exhaustive) {
      row[0] = s;
    } else {
      for (std::size_t b = 0; 2 * b < nwords; ++b) {
        const auto r = Philox4x32::generate(
            {static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(s), static_cast<std::uint32_t>(s >> 32), 0},
            key);
        row[2 * b] = (std::uint64_t{r[1]} << 32) | r[0];
        if (2 * b + 1 < nwords) row[2 * b + 1] = (std::uint64_t{r[3]} << 32) | r[2];
      }
      if (N % 64) row[nwords - 1] &= (std::uint64_t{1} << (N % 64)) - 1;
    }
    std::fill(wz.begin(), wz.end(), 0);
    std::fill(ez.begin(), ez.end(), 0);

    auto bit = [&](std::uint64_t i) { return (row[i >> 6] >> (i & 63)) & 1u; };
    for (std::uint64_t L = N; L >= 1; --L) {
      const std::uint64_t top = std::min<std::uint64_t>(K, L - 1);
      for (std::uint64_t k = 0; k <= top; ++k) {
        wz[k] += !bit(k);
        ez[k] += !bit(L - 1 - k);
      }
      const std::size_t used = (L + 63) / 64;
      for (std::size_t i = 0; i < used; ++i) row[i] ^= (row[i] >> 1) | (row[i + 1] << 63);
      row[(L - 1) >> 6] &= ~(std::uint64_t{1} << ((L - 1) & 63));
    }

    bool ok = true;
    for (std::uint64_t k = 0; k <= K; ++k) {
      const std::uint64_t len = N - k;
      auto in_band = [&](std::uint64_t c) {
        const std::uint64_t dev = 2 * c > len ? 2 * c - len : len - 2 * c;
        return static_cast<unsigned __int128>(dev) * eps.den <= static_cast<unsigned __int128>(2) * eps.num * len;
      };
      ok = ok && in_band(wz[k]) && in_band(ez[k]);
      t.west[k] += wz[k];
      t.east[k] += ez[k];
    }
    t.within += ok;
  }
}

}  // namespace

BalanceReport monte_carlo_balance(std::uint64_t N, std::uint64_t samples, Rational epsilon, Rational delta,
                                  std::uint64_t seed, bool exhaustive, unsigned threads) {
  if (N < 4) throw InvalidArgument("N must be >= 4");
  if (epsilon.num == 0 || 2 * epsilon.num >= epsilon.den) throw InvalidArgument("epsilon must lie in (0, 1/2)");
  const std::uint64_t K = static_cast<std::uint64_t>(static_cast<unsigned __int128>(delta.num) * N / delta.den);
  if (K >= N) throw InvalidArgument("delta N must stay below N");
  if (exhaustive) {
    if (N > 24) throw InvalidArgument("exhaustive mode is limited to N <= 24");
    samples = std::uint64_t{1} << N;
  }
  if (samples == 0) throw InvalidArgument("samples must be >= 1");

  threads = std::max(1u, std::min<unsigned>(threads, static_cast<unsigned>(std::min<std::uint64_t>(samples, 256))));
  std::vector<Tally> tallies(threads, Tally{std::vector<std::uint64_t>(K + 1), std::vector<std::uint64_t>(K + 1), 0});
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) {
      const std::uint64_t lo = samples * t / threads, hi = samples * (t + 1) / threads;
      pool.emplace_back([&, lo, hi, t] { balance_shard(N, K, epsilon, seed, exhaustive, lo, hi, tallies[t]); });
    }
  }

  BalanceReport r;
  r.N = N;
  r.samples = samples;
  r.epsilon = epsilon;
  r.delta = delta;
  r.K = K;
  r.exhaustive = exhaustive;
  for (std::uint64_t k = 0; k <= K; ++k) {
    std::uint64_t w = 0, e = 0;
    for (const auto& t : tallies) {
      w += t.west[k];
      e += t.east[k];
    }
    const double denom = static_cast<double>(N - k) * static_cast<double>(samples);
    r.west_mean_ratio.push_back(static_cast<double>(w) / denom);
    r.east_mean_ratio.push_back(static_cast<double>(e) / denom);
  }
  for (const auto& t : tallies) r.within_band += t.within;
  return r;
}

std::string balance_json(const BalanceReport& r) {
  nlohmann::ordered_json j;
  j["N"] = r.N;
  j["samples"] = r.samples;
  j["epsilon"] = r.epsilon.str();
  j["delta"] = r.delta.str();
  j["K"] = r.K;
  j["exhaustive"] = r.exhaustive;
  j["within_band"] = r.within_band;
  j["fraction_within_band"] = r.fraction().str();
  j["fraction_value"] = r.fraction().value();
  j["west_mean_ratio"] = r.west_mean_ratio;
  j["east_mean_ratio"] = r.east_mean_ratio;
  return j.dump(2);
}

Trace conjecture_trace(std::span<const Value> row, std::size_t ray, Value d, std::uint64_t stride) {
  if (ray < 1) throw InvalidArgument("ray must be >= 1");
  if (stride < 1) throw InvalidArgument("stride must be >= 1");
  Trace t;
  std::uint64_t n = 0;
  auto point = [&] {
    t.points.push_back({n, t.final_count,
                        std::abs(static_cast<double>(t.final_count) - static_cast<double>(n) / 2) /
                            std::sqrt(static_cast<double>(n))});
  };
  stream_rows(row, ray + 1, [&](std::size_t j, std::span<const Value> head) {
    if (j == 0 || head.size() <= ray) return;
    ++n;
    t.final_count += head[ray] == d;
    if (n % stride == 0) point();
  });
  if (n > 0 && n % stride != 0) point();
  return t;
}

std::string trace_csv(const Trace& t) {
  std::string s = "n,count,discrepancy\n";
  char buf[96];
  for (const auto& p : t.points) {
    std::snprintf(buf, sizeof buf, "%llu,%llu,%.6f\n", static_cast<unsigned long long>(p.n),
                  static_cast<unsigned long long>(p.count), p.discrepancy);
    s += buf;
  }
  return s;
}

std::vector<CensusEntry> builtin_census() {
  std::vector<CensusEntry> v = {
      {"5th powers x10", "powers:5,10,desc"},
      {"7th powers x77", "powers:7,77,desc"},
      {"9th powers x10", "powers:9,10,desc"},
      {"10th powers x10", "powers:10,10,desc"},
      {"11th powers x10", "powers:11,10,desc"},
      {"fibonacci x30", "fibonacci:30,desc"},
      {"fibonacci bisection x30", "fibonacci-bisection:30,desc"},
      {"4th powers x20", "powers:4,20,desc"},
      {"5th powers x20", "powers:5,20,desc"},
      {"base3-no-2 x20", "base3-no-2:20,desc"},
      {"base3-no-2 x30", "base3-no-2:30,desc"},
  };
  for (int n = 314; n <= 320; ++n)
    v.push_back({"base3-no-2 x" + std::to_string(n), "base3-no-2:" + std::to_string(n) + ",desc"});
  v.push_back({"primes x20", "primes:count=20,desc"});
  v.push_back({"square-primes x20", "square-primes:count=20,desc"});
  return v;
}

std::vector<CensusRow> layer_census(const std::vector<CensusEntry>& entries, unsigned threads) {
  // resolve up front so malformed specs fail before any work starts
  std::vector<Seq> rows;
  for (const auto& e : entries) rows.push_back(gen::with_tail(gen::resolve(e.spec), e.tail));

  std::vector<CensusRow> out(entries.size());
  std::vector<std::exception_ptr> errors(entries.size());
  std::atomic<std::size_t> next{0};
  auto work = [&] {
    for (std::size_t i; (i = next++) < entries.size();) {
      try {
        const auto o = helix::orbit_analysis(rows[i]);
        out[i] = {entries[i].label, rows[i].size(), o.precycle, o.cycle, o.distinct()};
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  {
    std::vector<std::jthread> pool;
    for (unsigned t = 1; t < std::max(1u, threads); ++t) pool.emplace_back(work);
    work();
  }
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

std::string census_csv(const std::vector<CensusRow>& rows) {
  std::string s = "label,len,P,C,distinct\n";
  for (const auto& r : rows)
    s += r.label + "," + std::to_string(r.len) + "," + std::to_string(r.P) + "," + std::to_string(r.C) + "," +
         std::to_string(r.distinct) + "\n";
  return s;
}

std::string census_json(const std::vector<CensusRow>& rows) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& r : rows)
    j.push_back({{"label", r.label}, {"len", r.len}, {"P", r.P}, {"C", r.C}, {"distinct", r.distinct}});
  return j.dump(2);
}

}  // namespace pgt::bench
