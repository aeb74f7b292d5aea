#include "pgt/helix.hpp"

#include <cstdio>
#include <unordered_map>

namespace pgt::helix {

Seq upsilon_pow(std::span<const Value> u, std::size_t k) {
  if (u.empty()) throw EmptyGenerator();
  Seq g(u.begin(), u.end());
  for (std::size_t i = 0; i < k; ++i) g = left_edge(g);
  return g;
}

OrbitBudgetExceeded::OrbitBudgetExceeded(Orbit p)
    : Error("budget_exhausted",
            "orbit did not close within " + std::to_string(p.layer_generators.size()) + " layers"),
      partial(std::move(p)) {}

std::uint64_t layer_hash(std::span<const Value> g) {
  // FNV-1a over the little-endian bytes of every element
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (Value v : g) {
    for (int b = 0; b < 8; ++b) {
      h ^= (v >> (8 * b)) & 0xff;
      h *= 0x100000001b3ULL;
    }
  }
  return h;
}

Orbit orbit_analysis(std::span<const Value> u, std::size_t max_layers) {
  if (u.empty()) throw EmptyGenerator();
  if (max_layers == 0) throw InvalidArgument("max_layers must be >= 1");

  Orbit orbit;
  orbit.generator.assign(u.begin(), u.end());
  std::unordered_map<std::uint64_t, std::vector<std::size_t>> seen;

  Seq g = orbit.generator;
  for (;;) {
    auto& bucket = seen[layer_hash(g)];
    for (std::size_t idx : bucket) {
      if (orbit.layer_generators[idx] == g) {
        orbit.precycle = idx;
        orbit.cycle = orbit.layer_generators.size() - idx;
        return orbit;
      }
    }
    if (orbit.layer_generators.size() == max_layers) throw OrbitBudgetExceeded(std::move(orbit));
    bucket.push_back(orbit.layer_generators.size());
    orbit.layer_generators.push_back(g);
    g = upsilon_pow(g, 6);
  }
}

std::string orbit_json(const Orbit& o) {
  std::string s = "{\"generator\":" + to_json(o.generator) + ",\"P\":" + std::to_string(o.precycle) +
                  ",\"C\":" + std::to_string(o.cycle) + ",\"distinct\":" + std::to_string(o.distinct()) +
                  ",\"layer_hashes\":[";
  char buf[24];
  for (std::size_t i = 0; i < o.layer_generators.size(); ++i) {
    std::snprintf(buf, sizeof buf, "\"%016llx\"", static_cast<unsigned long long>(layer_hash(o.layer_generators[i])));
    if (i) s += ',';
    s += buf;
  }
  s += "]}";
  return s;
}

ChampionSet champions(std::span<const Value> u) {
  ChampionSet cs;
  Value best = 0;  // champions are positive, so 0 is a safe "nothing yet"
  for (std::size_t n = 0; n < u.size(); ++n) {
    if (u[n] > best) {
      cs.indices.push_back(n);
      best = u[n];
    }
  }
  return cs;
}

std::array<Seq, 6> circle_of_differences(std::span<const Value> u, std::size_t rho) {
  if (rho >= u.size())
    throw OutOfRange("radius " + std::to_string(rho) + " outside generator of length " + std::to_string(u.size()));
  std::array<Seq, 6> edges;
  Seq g(u.begin(), u.end());
  for (std::size_t m = 0; m < 6; ++m) {
    edges[m] = anti_diagonal(g, rho);
    g = left_edge(g);
  }
  return edges;
}

}  // namespace pgt::helix
