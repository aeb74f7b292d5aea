// End-to-end acceptance checks. One PASS/FAIL line per criterion; the exit
// status is nonzero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pgt/bench.hpp"
#include "pgt/border.hpp"
#include "pgt/f2poly.hpp"
#include "pgt/generators.hpp"
#include "pgt/helix.hpp"
#include "pgt/seq.hpp"
#include "pgt/spnum.hpp"
#include "pgt/viz.hpp"

using namespace pgt;

namespace {

// collects mismatches for one criterion
struct Check {
  std::vector<std::string> failures;
  std::string note;
  template <class A, class B>
  void eq(const A& got, const B& want, const std::string& what) {
    if (!(got == want)) {
      std::ostringstream s;
      s << what << ": got " << got << ", expected " << want;
      failures.push_back(s.str());
    }
  }
  void ok(bool cond, const std::string& what) {
    if (!cond) failures.push_back(what);
  }
};

struct TableRow {
  std::uint64_t N, z, second, h;
  std::int64_t diff;
};

void check_table(Check& c, bench::Source src, const std::vector<TableRow>& want) {
  const auto paired = bench::paired_value(src);
  const Seq row = bench::source_row(src, 1000000);
  c.note = std::to_string(row.size()) + " terms";
  const auto st = bench::table_rays(src, 1000000, 10);
  for (std::size_t r = 0; r < want.size(); ++r) {
    const auto tag = "r=" + std::to_string(r);
    c.eq(st[r].n_entries, want[r].N, tag + " N");
    c.eq(st[r].zeros(), want[r].z, tag + " z");
    c.eq(st[r].count(paired), want[r].second, tag + " second");
    c.eq(st[r].rest(paired), want[r].h, tag + " h");
    c.eq(st[r].diff(paired), want[r].diff, tag + " z-second");
  }
}

void criterion1(Check& c) {
  c.eq(gen::primes_below(1000000).size(), 78498u, "prime count");
  check_table(c, bench::Source::Primes,
              {{78497, 0, 0, 78497, 0},
               {78496, 39061, 39435, 0, -374},
               {78495, 39272, 39223, 0, 49},
               {78494, 39218, 39275, 1, -57},
               {78493, 39405, 39088, 0, 317},
               {78492, 39311, 39180, 1, 131},
               {78491, 39030, 39461, 0, -431},
               {78490, 39307, 39182, 1, 125},
               {78489, 39276, 39211, 2, 65},
               {78488, 39231, 39256, 1, -25}});
}

void criterion2(Check& c) {
  c.eq(gen::sp_below(1000000).size(), 69179u, "square-prime count");
  check_table(c, bench::Source::SquarePrimes,
              {{69178, 34616, 34559, 3, 57},
               {69177, 34684, 34485, 8, 199},
               {69176, 34614, 34556, 6, 58},
               {69175, 34439, 34727, 9, -288},
               {69174, 34485, 34681, 8, -196},
               {69173, 34808, 34357, 8, 451},
               {69172, 34707, 34458, 7, 249},
               {69171, 34471, 34694, 6, -223},
               {69170, 34644, 34522, 4, 122},
               {69169, 34689, 34472, 8, 217}});
}

void criterion3(Check& c) {
  c.ok(sp::SpSieve(100).terms() ==
           std::vector<std::uint64_t>{8, 12, 18, 20, 27, 28, 32, 44, 45, 48, 50, 52, 63, 68, 72, 75, 76, 80, 92, 98, 99},
       "list below 100");
  c.eq(sp::SpSieve(400).terms().size(), 75u, "count below 400");
  c.eq(sp::SpSieve(1000000).terms().size(), 69179u, "count below 10^6");
  c.eq(sp::nth_sp(1), 8u, "s_1");
  c.eq(sp::nth_sp(76), 404u, "s_76");
  c.eq(sp::nth_sp(1000), 7900u, "s_1000");
}

void criterion4(Check& c) {
  const Seq row = {27, 28, 44, 76, 98, 112, 153, 171, 180, 188, 292, 316};
  c.ok(left_edge(row) == Seq{27, 1, 15, 1, 5, 1, 12, 1, 7, 1, 67, 1}, "western edge");
}

struct CensusExpect {
  std::string spec;
  std::size_t distinct;
  long P, C;  // -1: not published
};

std::vector<Seq> g_fixed_points;

void criterion5(Check& c) {
  std::vector<CensusExpect> want = {
      {"powers:5,10,desc", 7, 6, 1},     {"powers:7,77,desc", 17, 9, 8},   {"powers:9,10,desc", 262, 198, 64},
      {"powers:10,10,desc", 268, 140, 128}, {"powers:11,10,desc", 544, 512, 32}, {"fibonacci:30,desc", 1, -1, -1},
      {"powers:4,20,desc", 2, -1, -1},   {"powers:5,20,desc", 9, -1, -1},  {"base3-no-2:20,desc", 4, -1, -1},
      {"base3-no-2:30,desc", 2, -1, -1}, {"primes:count=20,desc", 2, -1, -1}, {"square-primes:count=20,desc", 2, -1, -1},
  };
  for (int n = 314; n <= 320; ++n) want.push_back({"base3-no-2:" + std::to_string(n) + ",desc", 84, -1, 1});

  std::size_t matched = 0;
  for (const auto& w : want) {
    const Seq u = gen::with_tail(gen::resolve(w.spec), "fixed");
    const auto o = helix::orbit_analysis(u);
    const std::size_t before = c.failures.size();
    c.eq(o.distinct(), w.distinct, w.spec + " distinct");
    if (w.P >= 0) c.eq(static_cast<long>(o.precycle), w.P, w.spec + " P");
    if (w.C >= 0) c.eq(static_cast<long>(o.cycle), w.C, w.spec + " C");
    matched += c.failures.size() == before;
    for (std::size_t i = o.precycle; i < o.distinct(); ++i)
      if (o.cycle == 1) g_fixed_points.push_back(o.layer_generators[i]);
  }
  c.note = std::to_string(matched) + "/" + std::to_string(want.size()) + " families match";
}

void criterion6(Check& c) {
  std::size_t exhaustive = 0;
  for (std::size_t n = 1; n <= 12; ++n)
    for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << n); ++bits) {
      const auto f = f2::F2Poly::from_words(n, {bits});
      const auto t = f2::t_fast(f);
      const bool ok = f2::t_fast(t) == f && t == f2::t_naive(f) && t == f2::t_rational(f) &&
                      t == f2::left_edge_packed(f) && t.to_seq() == left_edge(f.to_seq());
      c.ok(ok, "exhaustive case n=" + std::to_string(n) + " bits=" + std::to_string(bits));
      ++exhaustive;
    }
  c.eq(exhaustive, 8190u, "exhaustive case count");

  std::mt19937_64 rng(20240601);
  std::size_t random_cases = 0;
  for (int t = 0; t < 10000; ++t) {
    const std::size_t n = 1 + rng() % 4096;
    f2::F2Poly f(n);
    for (auto& w : f.words()) w = rng();
    f.trim();
    const auto tf = f2::t_fast(f);
    bool ok = f2::t_fast(tf) == f && tf == f2::t_naive(f) && tf == f2::t_rational(f) &&
              tf == f2::left_edge_packed(f);
    if (t % 100 == 0) ok = ok && tf.to_seq() == left_edge(f.to_seq());
    c.ok(ok, "random case " + std::to_string(t) + " (order " + std::to_string(n) + ")");
    ++random_cases;
  }
  c.note = std::to_string(exhaustive) + " exhaustive + " + std::to_string(random_cases) + " random";
}

void criterion7(Check& c) {
  std::mt19937_64 rng(77);
  std::size_t checked = 0;
  for (int t = 0; t < 100000; ++t) {
    const std::size_t n = 1 + rng() % 64;
    const std::uint64_t bits = rng();
    Seq u(n);
    for (std::size_t i = 0; i < n; ++i) u[i] = (bits >> i) & 1;
    if (helix::upsilon_pow(u, 6) != u) {
      c.ok(false, "binary row not fixed by Upsilon^6");
      continue;
    }
    c.ok(helix::champions(u).indices.size() <= 1, "binary fixed point with several champions");
    ++checked;
  }
  std::size_t constructed = 0;
  for (const auto& g : g_fixed_points) {
    if (helix::upsilon_pow(g, 6) != g) continue;
    ++constructed;
    c.ok(helix::champions(g).indices.size() <= 1, "constructed fixed point with several champions");
  }
  c.ok(constructed > 0, "no constructed fixed points (run criterion 5 first)");
  c.note = std::to_string(checked) + " random + " + std::to_string(constructed) + " constructed fixed points";
}

void criterion8(Check& c) {
  std::size_t pell = 0;
  for (std::uint64_t x = 1; x <= 2000; ++x) {
    const auto cert = sp::gap_representation(x);
    c.ok(sp::verify(cert), "certificate for x=" + std::to_string(x));
    c.ok(cert.a - cert.b == x, "a - b for x=" + std::to_string(x));
    if (cert.a.fits_ulong_p()) {
      c.ok(sp::is_sp(cert.a.get_ui()) && sp::is_sp(cert.b.get_ui()), "independent SP test for x=" + std::to_string(x));
    }
    if (cert.pell) {
      ++pell;
      const auto& p = *cert.pell;
      c.ok(p.m * p.m - p.D * p.n * p.n == 1, "Pell identity for D=" + std::to_string(p.D));
    }
  }
  c.note = std::to_string(pell) + " certificates via Pell";
}

void criterion9(Check& c) {
  Seq row = border::kDefaultSeed;
  for (int round = 1; round <= 50; ++round) {
    const auto r = border::border_pair(row, 1);
    row = r.extended;
    const TriangleView tri{row};
    const Seq west = tri.west();
    for (std::size_t i = 1; i < west.size(); i += 2)
      c.ok(west[i] == 1, "round " + std::to_string(round) + ": western position " + std::to_string(i) + " is " +
                             std::to_string(west[i]));
    for (std::size_t i = 0; i < row.size(); ++i) {
      c.ok(sp::is_sp(row[i]), "round " + std::to_string(round) + ": non-SP entry");
      if (i) c.ok(row[i] > row[i - 1], "round " + std::to_string(round) + ": row not increasing");
    }
    Seq e = tri.eastern(1), f = tri.eastern(0);
    e.erase(e.begin());
    f.erase(f.begin());
    c.ok(e == r.step.predicted_E && f == r.step.predicted_F, "round " + std::to_string(round) + ": E/F mismatch");
    c.ok(tri.row(row.size() - 1) == Seq{1}, "round " + std::to_string(round) + ": southern vertex");
  }
  c.note = "final row length " + std::to_string(row.size()) + ", max " + std::to_string(row.back());
}

void criterion10(Check& c) {
  const auto ex = bench::monte_carlo_balance(16, 0, bench::parse_rational("0.45"), bench::parse_rational("1/16"), 0, true);
  c.ok(ex.fraction() == bench::Rational{65529, 65536}, "exhaustive N=16 fraction " + ex.fraction().str());
  std::string fr;
  for (std::uint64_t seed : {1u, 2u, 3u, 4u, 5u}) {
    const auto r = bench::monte_carlo_balance(2048, 500, bench::parse_rational("0.1"), bench::parse_rational("0.05"),
                                              seed);
    c.ok(r.fraction().value() >= 0.9, "seed " + std::to_string(seed) + " fraction " + r.fraction().str());
    fr += (fr.empty() ? "" : ", ") + r.fraction().str();
  }
  c.note = "N=16 exhaustive " + ex.fraction().str() + "; N=2048 seeds 1-5: " + fr;
}

void criterion11(Check& c) {
  auto cells = [](const std::string& svg) {
    std::size_t n = 0;
    for (auto p = svg.find("class=\"cell\""); p != std::string::npos; p = svg.find("class=\"cell\"", p + 1)) ++n;
    return n;
  };
  std::mt19937_64 rng(11);
  for (std::size_t N = 1; N <= 20; ++N) {
    Seq u(N + 1);
    for (auto& v : u) v = rng() % 50;
    c.eq(cells(viz::render_layer(u, 1)), 3 * N * N + 3 * N + 1, "cells for N=" + std::to_string(N));
    Seq b(N + 1);
    for (auto& v : b) v = rng() & 1;
    c.ok(viz::render_layer(b, 1) == viz::render_layer(b, 2), "binary level 1 vs 2, N=" + std::to_string(N));
    c.ok(viz::render_layer(u, 2) == viz::render_layer(u, 2), "repeat render, N=" + std::to_string(N));
    c.ok(viz::render_triangle(u) == viz::render_triangle(u), "repeat triangle, N=" + std::to_string(N));
  }
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Check&)>>> criteria = {
      {"ray table, primes below 10^6, rays 0-9", criterion1},
      {"ray table, square-primes below 10^6, rays 0-9", criterion2},
      {"square-prime list, counts and indices", criterion3},
      {"western edge of the alternating-ones row", criterion4},
      {"helicoid layer censuses", criterion5},
      {"left-edge transform involution and agreement", criterion6},
      {"at most one champion on Upsilon^6 fixed points", criterion7},
      {"gap certificates for 1 <= x <= 2000", criterion8},
      {"50 bordering rounds from (27, 28) with Z = 1", criterion9},
      {"balance of outer rays at desk scale", criterion10},
      {"rendering cell counts and determinism", criterion11},
  };
  int failed = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Check c;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      criteria[i].second(c);
    } catch (const std::exception& e) {
      c.failures.push_back(std::string("exception: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool pass = c.failures.empty();
    failed += !pass;
    std::printf("%s  criterion %2zu: %s [%.2fs]%s%s\n", pass ? "PASS" : "FAIL", i + 1, criteria[i].first.c_str(), secs,
                c.note.empty() ? "" : " - ", c.note.c_str());
    for (std::size_t k = 0; k < c.failures.size() && k < 10; ++k) std::printf("        %s\n", c.failures[k].c_str());
    if (c.failures.size() > 10) std::printf("        ... %zu more\n", c.failures.size() - 10);
    std::fflush(stdout);
  }
  std::printf("%zu/%zu criteria passed\n", criteria.size() - failed, criteria.size());
  return failed ? 1 : 0;
}
