#include "pgt/border.hpp"

#include "pgt/error.hpp"

namespace pgt::border {

Seq border_single(std::span<const Value> B, Value Z, std::span<const Order> order) {
  if (!order.empty() && order.size() != B.size())
    throw InvalidArgument("order must list one relation per eastern-edge entry");
  if (order.empty()) {
    for (std::size_t j = 1; j < B.size(); ++j)
      if (B[j] < B[j - 1]) throw InvalidArgument("eastern edge must be nondecreasing");
  }
  const std::size_t m = B.size();
  Seq C(m + 1);
  C[m] = Z;
  for (std::size_t j = m; j-- > 0;) {
    if (order.empty() || order[j] == Order::CAboveB) {
      C[j] = checked_add(C[j + 1], B[j]);
    } else {
      if (B[j] < C[j + 1])
        throw InvalidArgument("C_" + std::to_string(j + 1) + " below B_" + std::to_string(j + 1) +
                              " would be negative");
      C[j] = B[j] - C[j + 1];
    }
  }
  return C;
}

bool border_consistent(std::span<const Value> B, std::span<const Value> C) {
  if (C.size() != B.size() + 1) return false;
  for (std::size_t j = 0; j < B.size(); ++j)
    if (abs_diff(C[j], B[j]) != C[j + 1]) return false;
  return true;
}

BorderResult border_pair(std::span<const Value> u, Value Z, const sp::SpSieve* sieve, std::uint64_t budget) {
  const std::size_t m = u.size();
  if (m < 2 || m % 2 != 0) throw InvalidArgument("row to border must have even length >= 2");
  for (std::size_t i = 0; i < m; ++i) {
    if (i && u[i] <= u[i - 1]) throw InvalidArgument("row to border must be strictly increasing");
    if (!sp::is_sp(u[i])) throw InvalidArgument(std::to_string(u[i]) + " is not a square-prime");
  }

  BorderResult res;
  BorderStep& st = res.step;
  st.Z = Z;
  const Seq east = eastern_edge(u, 0);  // (A_m, D_1, ..., D_{m-1})
  const Value A_m = east[0];
  st.D.assign(east.begin() + 1, east.end());

  st.bound = checked_add(A_m, Z);
  st.delta = Z;
  for (std::size_t i = 0; i < st.D.size(); ++i) {
    st.bound = checked_add(st.bound, st.D[i]);
    if (i % 2 == 0) st.delta = checked_add(st.delta, st.D[i]);  // D_1, D_3, ...
  }

  const auto pair = sp::find_sp_pairs_with_gap(st.delta, st.bound, 1, budget, sieve).front();
  st.X = pair.first;
  st.Y = pair.second;

  auto fail = [](const std::string& what) { return Error("verification_failed", what); };

  st.predicted_E.push_back(st.X - A_m);
  for (std::size_t i = 0; i + 1 < m; ++i) {
    const Value e = st.predicted_E.back();
    if (e < st.D[i]) throw fail("E diagonal would turn negative");
    st.predicted_E.push_back(e - st.D[i]);
  }
  st.predicted_F.push_back(st.delta);
  for (std::size_t i = 0; i < m; ++i) {
    const Value e = st.predicted_E[i], f = st.predicted_F.back();
    if (e < f) throw fail("F diagonal would turn negative");
    st.predicted_F.push_back(e - f);
  }

  res.extended.assign(u.begin(), u.end());
  res.extended.push_back(st.X);
  res.extended.push_back(st.Y);

  Seq e_actual = eastern_edge(res.extended, 1);
  Seq f_actual = eastern_edge(res.extended, 0);
  e_actual.erase(e_actual.begin());
  f_actual.erase(f_actual.begin());
  if (e_actual != st.predicted_E) throw fail("recomputed E diagonal differs from the closed form");
  if (f_actual != st.predicted_F) throw fail("recomputed F diagonal differs from the closed form");
  if (f_actual.back() != Z) throw fail("southern vertex differs from Z");
  return res;
}

Construction build_prescribed_west(std::span<const Value> w, std::span<const Value> seed, const sp::SpSieve* sieve) {
  Construction c;
  c.row.assign(seed.begin(), seed.end());
  for (Value z : w) {
    BorderResult r = border_pair(c.row, z, sieve);
    c.row = std::move(r.extended);
    c.log.push_back(std::move(r.step));
  }
  return c;
}

std::string construction_json(const Construction& c) {
  std::string s = "{\"row\":" + to_json(c.row) + ",\"rounds\":[";
  for (std::size_t i = 0; i < c.log.size(); ++i) {
    const auto& st = c.log[i];
    if (i) s += ',';
    s += "{\"Z\":" + std::to_string(st.Z) + ",\"D\":" + to_json(st.D) + ",\"bound\":" + std::to_string(st.bound) +
         ",\"delta\":" + std::to_string(st.delta) + ",\"X\":" + std::to_string(st.X) +
         ",\"Y\":" + std::to_string(st.Y) + "}";
  }
  s += "]}";
  return s;
}

}  // namespace pgt::border
