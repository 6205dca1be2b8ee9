#pragma once

// The chromatic polynomial by three independent routes: brute-force coloring
// counts plus interpolation, memoized deletion-contraction, and Whitney's
// no-broken-circuit expansion.

#include <cstdint>
#include <mutex>
#include <optional>
#include <set>
#include <string>
#include <unordered_map>
#include <vector>

#include "chromatic/base.hpp"
#include "chromatic/graph.hpp"
#include "chromatic/intpoly.hpp"

namespace chromatic {

// Exhaustive count of proper colorings V -> [t]. This is the oracle the
// polynomial routes are checked against; it is a plain backtracking search
// over vertices 1..n and knows nothing about polynomials.
inline CheckedInt count_proper_colorings(const Graph& g, long long t,
                                         const Budget& budget = {}) {
  if (t < 0) throw std::invalid_argument("color count must be nonnegative");
  const int n = g.vertex_count();
  if (t == 0) return 0;

  std::vector<std::vector<int>> earlier(n + 1);
  for (Edge e : g.edges()) earlier[e.v].push_back(e.u);

  std::vector<long long> color(n + 1, 0);
  std::uint64_t attempts = 0;
  long long count = 0;
  auto assign = [&](auto&& self, int v) -> void {
    for (long long c = 1; c <= t; ++c) {
      if (++attempts > budget.max_colorings)
        throw ResourceError("coloring enumeration budget exceeded");
      bool ok = true;
      for (int u : earlier[v])
        if (color[u] == c) {
          ok = false;
          break;
        }
      if (!ok) continue;
      if (v == n) {
        ++count;
      } else {
        color[v] = c;
        self(self, v + 1);
      }
    }
    color[v] = 0;
  };
  assign(assign, 1);
  return CheckedInt(count);
}

// Degree-n interpolation through the counts at t = 0..n.
inline IntPoly chromatic_poly_interp(const Graph& g,
                                     const Budget& budget = {}) {
  const int n = g.vertex_count();
  std::vector<std::pair<long long, CheckedInt>> points;
  points.reserve(n + 1);
  for (long long t = 0; t <= n; ++t)
    points.emplace_back(t, count_proper_colorings(g, t, budget));
  return IntPoly::interpolate(points);
}

namespace detail {

// Memo for deletion-contraction, keyed by canonical form. Bounded: once
// full it stops admitting entries, so results never depend on hit order.
struct DcMemo {
  std::mutex mu;
  std::unordered_map<std::string, IntPoly> map;
  std::size_t capacity = std::size_t{1} << 20;

  std::optional<IntPoly> lookup(const std::string& key) {
    std::lock_guard<std::mutex> lock(mu);
    auto it = map.find(key);
    if (it == map.end()) return std::nullopt;
    return it->second;
  }
  void store(const std::string& key, const IntPoly& p) {
    std::lock_guard<std::mutex> lock(mu);
    if (map.size() < capacity) map.emplace(key, p);
  }
  void clear() {
    std::lock_guard<std::mutex> lock(mu);
    map.clear();
  }
  std::size_t size() {
    std::lock_guard<std::mutex> lock(mu);
    return map.size();
  }
};

inline DcMemo& dc_memo() {
  static DcMemo memo;
  return memo;
}

}  // namespace detail

inline void clear_dc_cache() { detail::dc_memo().clear(); }
inline std::size_t dc_cache_size() { return detail::dc_memo().size(); }

// P(G) = P(G \ e) - P(G / e), pivoting on the lex-first edge, with the
// edgeless graph (t^n) as base case.
inline IntPoly chromatic_poly_dc(const Graph& g) {
  if (g.edge_count() == 0) return IntPoly::monomial(g.vertex_count());
  const std::string key = canonical_key(g);
  if (auto hit = detail::dc_memo().lookup(key)) return *hit;
  const Edge pivot = g.edges().front();
  IntPoly p = chromatic_poly_dc(g.delete_edge(pivot)) -
              chromatic_poly_dc(g.contract_edge(pivot));
  detail::dc_memo().store(key, p);
  return p;
}

// Each simple cycle minus its smallest edge under the given order,
// deduplicated, each set lex-sorted.
inline std::vector<std::vector<Edge>> broken_circuits(const Graph& g,
                                                      const EdgeOrder& ord) {
  detail::require_order_matches(g, ord);
  std::set<std::vector<Edge>> out;
  for (const auto& cycle : g.simple_cycles()) {
    Edge smallest = cycle.front();
    for (Edge e : cycle)
      if (ord.position(e) < ord.position(smallest)) smallest = e;
    std::vector<Edge> bc;
    for (Edge e : cycle)
      if (e != smallest) bc.push_back(e);
    out.insert(std::move(bc));
  }
  return {out.begin(), out.end()};
}

struct NbcReport {
  std::vector<std::vector<Edge>> broken_circuits;
  std::vector<std::vector<std::vector<Edge>>> sets_by_k;  // k = 0..n
  std::vector<long long> counts;                          // nbc_0..nbc_n
};

namespace detail {

// Subset scan in Gray-code order, one bit flip per step, with per-circuit
// intersection counters.
inline void nbc_scan(int m, const std::vector<std::uint64_t>& bc_masks,
                     std::vector<std::uint64_t>& out) {
  const int num_bc = (int)bc_masks.size();
  std::vector<std::vector<int>> bcs_with_bit(m);
  std::vector<int> size(num_bc), cnt(num_bc, 0);
  for (int b = 0; b < num_bc; ++b) {
    size[b] = __builtin_popcountll(bc_masks[b]);
    for (int i = 0; i < m; ++i)
      if (bc_masks[b] >> i & 1) bcs_with_bit[i].push_back(b);
  }
  int saturated = 0;
  std::uint64_t mask = 0;
  out.push_back(0);  // the empty set is always NBC
  for (std::uint64_t step = 1; step < (std::uint64_t{1} << m); ++step) {
    const int bit = __builtin_ctzll(step);
    mask ^= std::uint64_t{1} << bit;
    const bool now_set = mask >> bit & 1;
    for (int b : bcs_with_bit[bit]) {
      if (now_set) {
        if (++cnt[b] == size[b]) ++saturated;
      } else {
        if (cnt[b]-- == size[b]) --saturated;
      }
    }
    if (saturated == 0) out.push_back(mask);
  }
}

// Walks the NBC complex directly: the family is closed under subsets, so a
// depth-first extension by increasing edge position visits every member
// once. A new edge e can only complete a circuit whose largest edge is e.
inline void nbc_walk(int m, const std::vector<std::uint64_t>& bc_masks,
                     const Budget& budget, std::vector<std::uint64_t>& out) {
  std::vector<std::vector<std::uint64_t>> bc_by_max(m);
  for (std::uint64_t b : bc_masks)
    bc_by_max[63 - __builtin_clzll(b)].push_back(b);
  std::uint64_t visited = 0;
  auto rec = [&](auto&& self, std::uint64_t mask, int next) -> void {
    if (++visited > budget.max_subsets)
      throw ResourceError("NBC enumeration budget exceeded");
    out.push_back(mask);
    for (int e = next; e < m; ++e) {
      const std::uint64_t with_e = mask | (std::uint64_t{1} << e);
      bool ok = true;
      for (std::uint64_t b : bc_by_max[e])
        if ((b & ~with_e) == 0) {
          ok = false;
          break;
        }
      if (ok) self(self, with_e, e + 1);
    }
  };
  rec(rec, 0, 0);
}

}  // namespace detail

// All subsets of E containing no broken circuit, grouped by size. The Gray
// scan covers the full subset lattice when 2^m fits the budget; denser
// graphs fall back to walking the (much smaller) NBC complex itself.
inline NbcReport nbc_report(const Graph& g, const EdgeOrder& ord,
                            const Budget& budget = {}) {
  detail::require_order_matches(g, ord);
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (m > 63) throw ResourceError("too many edges for subset enumeration");

  NbcReport report;
  report.broken_circuits = broken_circuits(g, ord);

  std::vector<std::uint64_t> bc_masks;
  for (const auto& bc : report.broken_circuits) {
    std::uint64_t mask = 0;
    for (Edge e : bc) mask |= std::uint64_t{1} << ord.position(e);
    bc_masks.push_back(mask);
  }

  std::vector<std::uint64_t> nbc_masks;
  if (m <= 18 && (std::uint64_t{1} << m) <= budget.max_subsets)
    detail::nbc_scan(m, bc_masks, nbc_masks);
  else
    detail::nbc_walk(m, bc_masks, budget, nbc_masks);

  report.sets_by_k.resize(n + 1);
  report.counts.assign(n + 1, 0);
  for (std::uint64_t mask : nbc_masks) {
    const int k = __builtin_popcountll(mask);
    std::vector<Edge> set;
    for (int i = 0; i < m; ++i)
      if (mask >> i & 1) set.push_back(ord.sequence()[i]);
    std::sort(set.begin(), set.end());
    report.sets_by_k[k].push_back(std::move(set));
    ++report.counts[k];
  }
  for (auto& level : report.sets_by_k)
    std::sort(level.begin(), level.end());
  return report;
}

// Whitney: P(G;t) = sum_k (-1)^k nbc_k t^{n-k}.
inline IntPoly chromatic_poly_nbc(const Graph& g, const EdgeOrder& ord,
                                  const Budget& budget = {}) {
  const NbcReport report = nbc_report(g, ord, budget);
  const int n = g.vertex_count();
  std::vector<CheckedInt> coeffs(n + 1, CheckedInt(0));
  for (int k = 0; k <= n; ++k)
    coeffs[n - k] = (k % 2 ? CheckedInt(-1) : CheckedInt(1)) *
                    CheckedInt(report.counts[k]);
  return IntPoly(std::move(coeffs));
}

// Least t >= 1 with P(G;t) > 0. Always at most n.
inline int chromatic_number(const Graph& g) {
  const IntPoly p = chromatic_poly_dc(g);
  for (int t = 1; t < g.vertex_count(); ++t)
    if (p.eval(t).sign() > 0) return t;
  return g.vertex_count();
}

}  // namespace chromatic
