#pragma once

// Difference-triangle engine.
//
// A generator s = (a_0, ..., a_{n-1}) spans the triangle whose row j+1 holds
// the absolute differences of neighbours in row j:
//
//     d_k^{(0)} = a_k,   d_k^{(j+1)} = |d_{k+1}^{(j)} - d_k^{(j)}|.
//
// Row j has n - j entries. Ray k is the column (d_k^{(0)}, d_k^{(1)}, ...)
// parallel to the western edge; the western edge itself is ray 0. Eastern
// edge k is the anti-diagonal i + j = n - 1 - k, read top to bottom.

#include <cstddef>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

namespace pgt {

using Value = std::uint64_t;
using Seq = std::vector<Value>;

Value checked_add(Value a, Value b);
Value checked_mul(Value a, Value b);

inline Value abs_diff(Value a, Value b) { return a > b ? a - b : b - a; }

Seq next_row(std::span<const Value> s);

/// Western edge of the triangle spanned by s (the operator Upsilon).
/// Throws EmptyGenerator on empty input.
Seq left_edge(std::span<const Value> s);

/// Column k, truncated to the triangle or to max_len entries.
Seq ray(std::span<const Value> s, std::size_t k, std::optional<std::size_t> max_len = {});

/// Entries d_i^{(j)} with i + j == sum, ordered by increasing j.
Seq anti_diagonal(std::span<const Value> s, std::size_t sum);

/// k-th anti-diagonal counted from the right: i + j == len(s) - 1 - k.
Seq eastern_edge(std::span<const Value> s, std::size_t k);

// Fully materialised triangle. Immutable after construction.
class TriangleView {
 public:
  explicit TriangleView(Seq generator);

  const Seq& generator() const { return rows_.front(); }
  std::size_t size() const { return rows_.size(); }
  const Seq& row(std::size_t j) const;
  const std::vector<Seq>& rows() const { return rows_; }
  Value at(std::size_t j, std::size_t k) const;

  Seq ray(std::size_t k) const;
  Seq eastern(std::size_t k) const;
  Seq west() const { return ray(0); }

 private:
  std::vector<Seq> rows_;
};

// Streaming traversal: the row buffer is updated in place, so memory stays at
// one row. `visit` receives each row index together with the first
// min(head_len, row length) entries of that row. With threads > 1 each row is
// split into contiguous segments and double-buffered; the visited values are
// identical to the serial path.
using RowVisitor = std::function<void(std::size_t row, std::span<const Value> head)>;

void stream_rows(std::span<const Value> s, std::size_t head_len, const RowVisitor& visit,
                 unsigned threads = 1);

// Value counts along one ray, excluding its row-0 entry.
struct RayStats {
  std::size_t rank = 0;
  std::uint64_t n_entries = 0;
  std::map<Value, std::uint64_t> counts;

  std::uint64_t count(Value v) const;
  std::uint64_t zeros() const { return count(0); }
  // h: entries that are neither 0 nor `paired`
  std::uint64_t rest(Value paired) const;
  std::int64_t diff(Value paired) const;
  double ratio(Value paired) const;

  // Same ray with every value replaced by its residue mod m.
  RayStats reduced(Value modulus) const;
};

RayStats ray_stats(std::span<const Value> s, std::size_t k);

/// Stats for rays 0..num_rays-1 from a single streamed pass.
std::vector<RayStats> stream_ray_stats(std::span<const Value> s, std::size_t num_rays,
                                       unsigned threads = 1);

/// Columns r,N,z,second_count,diff,h,ratio; ratio with 5 decimals.
std::string ray_stats_csv(const std::vector<RayStats>& stats, Value paired);

// Sequence files: a JSON array of non-negative integers, or one decimal per line.
Seq parse_sequence(const std::string& text);
Seq read_sequence_file(const std::string& path);
std::string to_json(std::span<const Value> s);

}  // namespace pgt
