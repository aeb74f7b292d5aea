#include "pgt/seq.hpp"

#include <algorithm>
#include <barrier>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>
#include <string_view>
#include <thread>

#include "pgt/error.hpp"

namespace pgt {

Value checked_add(Value a, Value b) {
  Value r;
  if (__builtin_add_overflow(a, b, &r)) throw Overflow("64-bit addition overflow");
  return r;
}

Value checked_mul(Value a, Value b) {
  Value r;
  if (__builtin_mul_overflow(a, b, &r)) throw Overflow("64-bit multiplication overflow");
  return r;
}

Seq next_row(std::span<const Value> s) {
  if (s.size() < 2) return {};
  Seq out(s.size() - 1);
  for (std::size_t k = 0; k + 1 < s.size(); ++k) out[k] = abs_diff(s[k + 1], s[k]);
  return out;
}

Seq left_edge(std::span<const Value> s) {
  if (s.empty()) throw EmptyGenerator();
  Seq row(s.begin(), s.end());
  Seq out(s.size());
  for (std::size_t j = 0, len = row.size(); len > 0; ++j, --len) {
    out[j] = row[0];
    for (std::size_t i = 0; i + 1 < len; ++i) row[i] = abs_diff(row[i + 1], row[i]);
  }
  return out;
}

Seq ray(std::span<const Value> s, std::size_t k, std::optional<std::size_t> max_len) {
  if (k >= s.size()) throw OutOfRange("ray index " + std::to_string(k) + " outside generator of length " +
                                      std::to_string(s.size()));
  std::size_t want = s.size() - k;
  if (max_len) want = std::min(want, *max_len);
  Seq out;
  out.reserve(want);
  // only the first k + want entries of the generator influence the ray
  Seq row(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(k + want));
  for (std::size_t len = row.size(); out.size() < want; --len) {
    out.push_back(row[k]);
    for (std::size_t i = 0; i + 1 < len; ++i) row[i] = abs_diff(row[i + 1], row[i]);
  }
  return out;
}

Seq anti_diagonal(std::span<const Value> s, std::size_t sum) {
  if (sum >= s.size()) throw OutOfRange("anti-diagonal " + std::to_string(sum) + " outside generator of length " +
                                        std::to_string(s.size()));
  Seq row(s.begin(), s.begin() + static_cast<std::ptrdiff_t>(sum + 1));
  Seq out;
  out.reserve(sum + 1);
  for (std::size_t j = 0, len = row.size(); j <= sum; ++j, --len) {
    out.push_back(row[sum - j]);
    for (std::size_t i = 0; i + 1 < len; ++i) row[i] = abs_diff(row[i + 1], row[i]);
  }
  return out;
}

Seq eastern_edge(std::span<const Value> s, std::size_t k) {
  if (k >= s.size()) throw OutOfRange("eastern edge " + std::to_string(k) + " outside generator of length " +
                                      std::to_string(s.size()));
  return anti_diagonal(s, s.size() - 1 - k);
}

TriangleView::TriangleView(Seq generator) {
  if (generator.empty()) throw EmptyGenerator();
  rows_.reserve(generator.size());
  rows_.push_back(std::move(generator));
  while (rows_.back().size() > 1) rows_.push_back(next_row(rows_.back()));
}

const Seq& TriangleView::row(std::size_t j) const {
  if (j >= rows_.size()) throw OutOfRange("row " + std::to_string(j));
  return rows_[j];
}

Value TriangleView::at(std::size_t j, std::size_t k) const {
  const Seq& r = row(j);
  if (k >= r.size()) throw OutOfRange("column " + std::to_string(k) + " in row " + std::to_string(j));
  return r[k];
}

Seq TriangleView::ray(std::size_t k) const {
  if (k >= rows_.size()) throw OutOfRange("ray " + std::to_string(k));
  Seq out;
  for (std::size_t j = 0; j + k < rows_.size(); ++j) out.push_back(rows_[j][k]);
  return out;
}

Seq TriangleView::eastern(std::size_t k) const {
  const std::size_t n = rows_.size();
  if (k >= n) throw OutOfRange("eastern edge " + std::to_string(k));
  Seq out;
  for (std::size_t j = 0; j + k < n; ++j) out.push_back(rows_[j][n - 1 - k - j]);
  return out;
}

namespace {

template <class T>
void stream_serial(std::vector<T> row, std::size_t head_len, const RowVisitor& visit) {
  Seq head;
  for (std::size_t j = 0, len = row.size(); len > 0; ++j, --len) {
    const std::size_t h = std::min(head_len, len);
    head.assign(row.begin(), row.begin() + static_cast<std::ptrdiff_t>(h));
    visit(j, head);
    T* r = row.data();
    for (std::size_t i = 0; i + 1 < len; ++i) r[i] = r[i + 1] > r[i] ? r[i + 1] - r[i] : r[i] - r[i + 1];
  }
}

template <class T>
void stream_parallel(std::vector<T> first, std::size_t head_len, const RowVisitor& visit, unsigned threads) {
  std::vector<T> cur = std::move(first);
  std::vector<T> nxt(cur.size());
  std::size_t len = cur.size();
  std::size_t j = 0;
  Seq head;
  auto emit = [&] {
    const std::size_t h = std::min(head_len, len);
    head.assign(cur.begin(), cur.begin() + static_cast<std::ptrdiff_t>(h));
    visit(j, head);
  };
  emit();
  auto on_row_done = [&]() noexcept {
    std::swap(cur, nxt);
    --len;
    ++j;
    emit();
  };
  std::barrier sync(static_cast<std::ptrdiff_t>(threads), on_row_done);
  auto worker = [&](unsigned t) {
    for (;;) {
      const std::size_t n = len;
      if (n <= 1) break;
      const std::size_t work = n - 1;
      const std::size_t lo = work * t / threads;
      const std::size_t hi = work * (t + 1) / threads;
      const T* c = cur.data();
      T* d = nxt.data();
      for (std::size_t i = lo; i < hi; ++i) d[i] = c[i + 1] > c[i] ? c[i + 1] - c[i] : c[i] - c[i + 1];
      sync.arrive_and_wait();
    }
  };
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < threads; ++t) pool.emplace_back(worker, t);
  worker(0);
}

template <class T>
void dispatch(std::vector<T> row, std::size_t head_len, const RowVisitor& visit, unsigned threads) {
  if (threads <= 1 || row.size() < 2)
    stream_serial(std::move(row), head_len, visit);
  else
    stream_parallel(std::move(row), head_len, visit, threads);
}

}  // namespace

void stream_rows(std::span<const Value> s, std::size_t head_len, const RowVisitor& visit, unsigned threads) {
  if (s.empty()) return;
  const Value top = *std::max_element(s.begin(), s.end());
  // every entry of the triangle is bounded by max(s), so a narrower word is exact
  if (top <= std::numeric_limits<std::uint32_t>::max())
    dispatch(std::vector<std::uint32_t>(s.begin(), s.end()), head_len, visit, threads);
  else
    dispatch(Seq(s.begin(), s.end()), head_len, visit, threads);
}

std::uint64_t RayStats::count(Value v) const {
  auto it = counts.find(v);
  return it == counts.end() ? 0 : it->second;
}

std::uint64_t RayStats::rest(Value paired) const {
  return n_entries - zeros() - (paired == 0 ? 0 : count(paired));
}

std::int64_t RayStats::diff(Value paired) const {
  return static_cast<std::int64_t>(zeros()) - static_cast<std::int64_t>(count(paired));
}

double RayStats::ratio(Value paired) const {
  return n_entries == 0 ? 0.0 : static_cast<double>(diff(paired)) / static_cast<double>(n_entries);
}

RayStats RayStats::reduced(Value modulus) const {
  if (modulus == 0) throw InvalidArgument("modulus must be positive");
  RayStats out;
  out.rank = rank;
  out.n_entries = n_entries;
  for (const auto& [v, c] : counts) out.counts[v % modulus] += c;
  return out;
}

RayStats ray_stats(std::span<const Value> s, std::size_t k) {
  if (k >= s.size()) throw OutOfRange("ray index " + std::to_string(k));
  return stream_ray_stats(s, k + 1)[k];
}

std::vector<RayStats> stream_ray_stats(std::span<const Value> s, std::size_t num_rays, unsigned threads) {
  std::vector<RayStats> stats(num_rays);
  for (std::size_t r = 0; r < num_rays; ++r) stats[r].rank = r;
  stream_rows(
      s, num_rays,
      [&](std::size_t j, std::span<const Value> head) {
        if (j == 0) return;
        for (std::size_t r = 0; r < head.size(); ++r) {
          ++stats[r].counts[head[r]];
          ++stats[r].n_entries;
        }
      },
      threads);
  return stats;
}

std::string ray_stats_csv(const std::vector<RayStats>& stats, Value paired) {
  std::ostringstream os;
  os << "r,N,z,second_count,diff,h,ratio\n";
  char ratio[32];
  for (const auto& st : stats) {
    double q = st.ratio(paired);
    std::snprintf(ratio, sizeof ratio, "%.5f", q);
    // avoid printing -0.00000 for tiny negative ratios
    if (std::string_view(ratio) == "-0.00000") std::snprintf(ratio, sizeof ratio, "%.5f", 0.0);
    os << st.rank << ',' << st.n_entries << ',' << st.zeros() << ',' << st.count(paired) << ',' << st.diff(paired)
       << ',' << st.rest(paired) << ',' << ratio << '\n';
  }
  return os.str();
}

}  // namespace pgt
