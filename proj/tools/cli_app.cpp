#include "cli_app.hpp"

#include <fstream>
#include <optional>
#include <ostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>
#include <json.hpp>

#include "pgt/bench.hpp"
#include "pgt/border.hpp"
#include "pgt/error.hpp"
#include "pgt/generators.hpp"
#include "pgt/helix.hpp"
#include "pgt/seq.hpp"
#include "pgt/spnum.hpp"
#include "pgt/viz.hpp"

namespace pgt::cli {

namespace {

struct Options {
  std::string gen, tail = "none";
  std::string out, format = "json";
  unsigned threads = 1;

  std::size_t rays = 10, k = 0, level = 1, max_layers = 64, rounds = 1, nth = 0;
  std::optional<Value> mod, paired;
  std::uint64_t limit = 100, x = 1, d = 2, z = 1;
  std::string source = "primes", side = "west", emit = "rows", kind = "triangle", west;
  bool twins = false, exhaustive = false;

  std::uint64_t n = 2048, samples = 500, seed = 1, stride = 1000;
  std::string epsilon = "0.1", delta = "0.05";
  double cell_radius = viz::kDefaultCellRadius;
  std::vector<std::string> census_specs;
};

Seq row_of(const Options& o) {
  if (o.gen.empty()) throw Error("malformed_spec", "--gen is required");
  return gen::with_tail(gen::resolve(o.gen), o.tail);
}

std::string rows_json(const std::vector<Seq>& rows) {
  std::string s = "[";
  for (std::size_t i = 0; i < rows.size(); ++i) s += (i ? ",\n " : "") + to_json(rows[i]);
  return s + "]\n";
}

std::string rows_csv(const std::vector<Seq>& rows) {
  std::string s;
  for (const auto& r : rows) {
    for (std::size_t i = 0; i < r.size(); ++i) s += (i ? "," : "") + std::to_string(r[i]);
    s += '\n';
  }
  return s;
}

std::string stats_json(const std::vector<RayStats>& st, Value paired) {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& s : st) {
    nlohmann::ordered_json counts = nlohmann::ordered_json::object();
    for (auto [v, c] : s.counts) counts[std::to_string(v)] = c;
    j.push_back({{"r", s.rank},
                  {"N", s.n_entries},
                  {"z", s.zeros()},
                  {"second_count", s.count(paired)},
                  {"diff", s.diff(paired)},
                  {"h", s.rest(paired)},
                  {"ratio", s.ratio(paired)},
                  {"counts", counts}});
  }
  return j.dump(2) + "\n";
}

std::string rays_output(std::vector<RayStats> st, const Options& o, Value paired) {
  if (o.mod)
    for (auto& s : st) s = s.reduced(*o.mod);
  return o.format == "csv" ? ray_stats_csv(st, paired) : stats_json(st, paired);
}

void add_gen(CLI::App* c, Options& o, bool required = true) {
  auto* g = c->add_option("--gen", o.gen, "generator spec, e.g. powers:5,10,desc or file:row.json");
  if (required) g->required();
  c->add_option("--tail", o.tail, "appended tail: none | fixed | <generator spec>")->capture_default_str();
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  Options o;
  CLI::App app{"Difference triangles, helicoids and square-prime tools", "pgt"};
  app.require_subcommand(1);
  app.fallthrough();
  app.set_config("--config", "", "TOML/INI file with option defaults; flags override it");
  app.add_option("--out", o.out, "write the artifact to this path instead of stdout");
  app.add_option("--format", o.format, "json | csv | svg")
      ->check(CLI::IsMember({"json", "csv", "svg"}))
      ->capture_default_str();
  app.add_option("--threads", o.threads, "worker threads")->check(CLI::Range(1u, 1024u))->capture_default_str();

  std::string result;

  auto* tri = app.add_subcommand("triangle", "full triangle of a generator");
  add_gen(tri, o);
  tri->add_option("--mod", o.mod, "reduce entries modulo m");
  tri->add_option("--emit", o.emit, "rows | edge")->check(CLI::IsMember({"rows", "edge"}))->capture_default_str();
  tri->callback([&] {
    TriangleView t{row_of(o)};
    std::vector<Seq> rows = o.emit == "edge" ? std::vector<Seq>{t.west()} : t.rows();
    if (o.mod) {
      if (*o.mod == 0) throw InvalidArgument("modulus must be >= 1");
      for (auto& r : rows)
        for (auto& v : r) v %= *o.mod;
    }
    result = o.format == "csv" ? rows_csv(rows) : rows_json(rows);
  });

  auto* edge = app.add_subcommand("edge", "western edge, a ray or an eastern anti-diagonal");
  add_gen(edge, o);
  edge->add_option("--side", o.side, "west | ray | east")->check(CLI::IsMember({"west", "ray", "east"}));
  edge->add_option("--k", o.k, "ray / anti-diagonal index");
  edge->callback([&] {
    const Seq s = row_of(o);
    Seq e = o.side == "west" ? left_edge(s) : o.side == "ray" ? ray(s, o.k) : eastern_edge(s, o.k);
    result = to_json(e) + "\n";
  });

  auto* rays = app.add_subcommand("rays", "value counts on the first rays of a generator's triangle");
  add_gen(rays, o);
  rays->add_option("--rays", o.rays, "number of rays")->check(CLI::PositiveNumber);
  rays->add_option("--paired", o.paired, "value counted in the second column (default 2)");
  rays->add_option("--mod", o.mod, "classify by residue modulo m");
  rays->callback([&] {
    const Value paired = o.paired.value_or(2);
    result = rays_output(stream_ray_stats(row_of(o), o.rays, o.threads), o, paired);
  });

  auto* tables = app.add_subcommand("tables", "ray tables for primes or square-primes below a limit");
  tables->add_option("--source", o.source, "primes | square-primes")->capture_default_str();
  tables->add_option("--limit", o.limit, "exclusive upper bound")->capture_default_str();
  tables->add_option("--rays", o.rays, "number of rays")->check(CLI::PositiveNumber);
  tables->add_option("--mod", o.mod, "classify by residue modulo m");
  tables->callback([&] {
    const auto src = bench::parse_source(o.source);
    result = rays_output(bench::table_rays(src, o.limit, o.rays, o.threads), o, bench::paired_value(src));
  });

  auto* trace = app.add_subcommand("trace", "discrepancy of a value's frequency along one ray");
  trace->add_option("--source", o.source, "primes | square-primes")->capture_default_str();
  trace->add_option("--limit", o.limit, "exclusive upper bound")->capture_default_str();
  trace->add_option("--k", o.k, "ray index (>= 1)")->required();
  trace->add_option("--d", o.d, "counted value")->capture_default_str();
  trace->add_option("--stride", o.stride, "sampling stride")->capture_default_str();
  trace->callback([&] {
    const auto t = bench::conjecture_trace(bench::source_row(bench::parse_source(o.source), o.limit), o.k, o.d, o.stride);
    result = bench::trace_csv(t);
  });

  auto* hel = app.add_subcommand("helicoid", "layer orbit of a generator: P, C and distinct layers");
  add_gen(hel, o);
  hel->add_option("--max-layers", o.max_layers, "budget of distinct layers")->default_val(helix::kDefaultMaxLayers);
  hel->callback([&] { result = helix::orbit_json(helix::orbit_analysis(row_of(o), o.max_layers)) + "\n"; });

  auto* census = app.add_subcommand("census", "layer census over the builtin families or given specs");
  census->add_option("--gen", o.census_specs, "generator specs (repeatable); default: builtin families");
  census->add_option("--tail", o.tail, "tail appended to each --gen")->capture_default_str();
  census->callback([&] {
    std::vector<bench::CensusEntry> entries;
    if (o.census_specs.empty()) {
      entries = bench::builtin_census();
    } else {
      for (const auto& s : o.census_specs) entries.push_back({s, s, o.tail});
    }
    const auto rows = bench::layer_census(entries, o.threads);
    result = o.format == "csv" ? bench::census_csv(rows) : bench::census_json(rows) + "\n";
  });

  auto* sp = app.add_subcommand("sp", "square-primes below a limit, the n-th one, or twins");
  sp->add_option("--limit", o.limit, "exclusive upper bound")->capture_default_str();
  sp->add_option("--nth", o.nth, "print the n-th square-prime (1-based)");
  sp->add_flag("--twins", o.twins, "list pairs (s, s+1) below the limit");
  sp->callback([&] {
    if (o.nth) {
      result = std::to_string(sp::nth_sp(o.nth)) + "\n";
    } else if (o.twins) {
      nlohmann::json j = sp::sp_twins(o.limit);
      result = j.dump() + "\n";
    } else {
      result = to_json(o.limit > 8 ? sp::SpSieve(o.limit).terms() : Seq{}) + "\n";
    }
  });

  auto* gap = app.add_subcommand("gap", "two square-primes at distance x");
  gap->add_option("--x", o.x, "the gap")->required();
  gap->callback([&] { result = sp::certificate_json(sp::gap_representation(o.x)) + "\n"; });

  auto* pell = app.add_subcommand("pell", "fundamental solution of m^2 - D n^2 = 1");
  pell->add_option("--d", o.d, "D, not a square")->required();
  pell->callback([&] {
    const auto p = sp::pell_fundamental(o.d);
    result = "{\"D\":" + std::to_string(p.D) + ",\"m\":\"" + p.m.get_str() + "\",\"n\":\"" + p.n.get_str() + "\"}\n";
  });

  auto* border = app.add_subcommand("border", "extend a square-prime row by pairs with a prescribed western edge");
  add_gen(border, o, false);
  border->add_option("--z", o.z, "value placed on the western edge each round")->capture_default_str();
  border->add_option("--rounds", o.rounds, "number of rounds")->capture_default_str();
  border->add_option("--west", o.west, "comma-separated western values (overrides --z/--rounds)");
  border->callback([&] {
    const Seq seed = o.gen.empty() ? border::kDefaultSeed : row_of(o);
    Seq w = o.west.empty() ? Seq(o.rounds, o.z) : gen::resolve("inline:" + o.west);
    result = border::construction_json(border::build_prescribed_west(w, seed)) + "\n";
  });

  auto* bal = app.add_subcommand("balance", "zero proportions on the outer rays of random binary triangles");
  bal->add_option("--n", o.n, "row length")->capture_default_str();
  bal->add_option("--samples", o.samples, "number of random rows")->capture_default_str();
  bal->add_option("--epsilon", o.epsilon, "band half-width, decimal or p/q")->capture_default_str();
  bal->add_option("--delta", o.delta, "fraction of rays checked on each side")->capture_default_str();
  bal->add_option("--seed", o.seed, "Philox key")->capture_default_str();
  bal->add_flag("--exhaustive", o.exhaustive, "enumerate all 2^n rows instead of sampling");
  bal->callback([&] {
    const auto r = bench::monte_carlo_balance(o.n, o.samples, bench::parse_rational(o.epsilon),
                                              bench::parse_rational(o.delta), o.seed, o.exhaustive, o.threads);
    result = bench::balance_json(r) + "\n";
  });

  auto* render = app.add_subcommand("render", "SVG of a triangle, a helicoid layer or an orbit strip");
  add_gen(render, o);
  render->add_option("--kind", o.kind, "triangle | layer | strip")
      ->check(CLI::IsMember({"triangle", "layer", "strip"}))
      ->capture_default_str();
  render->add_option("--mod", o.mod, "colour by residue modulo m (triangle)");
  render->add_option("--level", o.level, "layer number (layer)")->capture_default_str();
  render->add_option("--max-layers", o.max_layers, "layer cap (strip)")->capture_default_str();
  render->add_option("--cell-radius", o.cell_radius, "hexagon radius in px")->check(CLI::PositiveNumber);
  render->callback([&] {
    const Seq s = row_of(o);
    result = o.kind == "triangle" ? viz::render_triangle(s, o.mod, o.cell_radius)
             : o.kind == "layer"  ? viz::render_layer(s, o.level, o.cell_radius)
                                  : viz::render_orbit_strip(s, o.max_layers, o.cell_radius);
  });

  auto fail = [&](const std::string& code, const std::string& message) {
    nlohmann::ordered_json j{{"error", code}, {"message", message}};
    err << j.dump() << "\n";
    return 2;
  };

  try {
    std::vector<std::string> rev(args.rbegin(), args.rend());
    app.parse(rev);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return 0;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return 0;
  } catch (const CLI::ParseError& e) {
    return fail("usage", e.what());
  } catch (const Error& e) {
    return fail(e.code(), e.what());
  } catch (const std::bad_alloc&) {
    return fail("budget_exhausted", "out of memory");
  } catch (const std::exception& e) {
    return fail("internal", e.what());
  }

  if (o.out.empty()) {
    out << result;
  } else {
    std::ofstream f(o.out, std::ios::binary);
    f << result;
    if (!f) return fail("io", "cannot write " + o.out);
  }
  return 0;
}

}  // namespace pgt::cli
