#pragma once

// Increasing spanning forests: the level sets E_j, the product formula,
// direct enumeration by two independent characterizations, natural perfect
// elimination orderings, and the containment of increasing forests among
// NBC sets.

#include <algorithm>
#include <cstdint>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "chromatic/base.hpp"
#include "chromatic/chromatic_poly.hpp"
#include "chromatic/graph.hpp"
#include "chromatic/intpoly.hpp"

namespace chromatic {

// E_j = {ij in E | i < j}: edges grouped by their larger endpoint. The E_j
// partition E, and E_1 is always empty.
struct LevelSets {
  std::vector<std::vector<Edge>> by_vertex;  // index j = 1..n; slot 0 unused
  std::vector<int> sizes;                    // #E_j, same indexing
};

inline LevelSets level_sets(const Graph& g) {
  const int n = g.vertex_count();
  LevelSets ls;
  ls.by_vertex.resize(n + 1);
  ls.sizes.assign(n + 1, 0);
  for (Edge e : g.edges()) {
    ls.by_vertex[e.v].push_back(e);
    ++ls.sizes[e.v];
  }
  return ls;
}

// ISF(G;t) = prod_j (t - #E_j).
inline IntPoly isf_poly(const Graph& g) {
  const LevelSets ls = level_sets(g);
  std::vector<long long> roots;
  for (int j = 1; j <= g.vertex_count(); ++j) roots.push_back(ls.sizes[j]);
  return IntPoly::from_roots(roots);
}

// Path definition: rooting each component tree at its minimum vertex, every
// root-to-descendant path must carry increasing labels, i.e. every child
// exceeds its parent.
inline bool is_increasing_forest(int n, const std::vector<Edge>& forest) {
  std::vector<std::vector<int>> adj(n + 1);
  for (Edge e : forest) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<char> seen(n + 1, 0);
  std::vector<std::pair<int, int>> stack;  // (vertex, parent)
  for (int r = 1; r <= n; ++r) {
    if (seen[r]) continue;  // ascending scan: r is its component's minimum
    seen[r] = 1;
    stack.assign(1, {r, 0});
    while (!stack.empty()) {
      auto [v, parent] = stack.back();
      stack.pop_back();
      for (int w : adj[v]) {
        if (w == parent) continue;
        if (w < v) return false;
        seen[w] = 1;
        stack.push_back({w, v});
      }
    }
  }
  return true;
}

struct IsfFamily {
  std::vector<std::vector<std::vector<Edge>>> by_k;  // k = 0..n, each lex
  std::vector<long long> counts;                     // isf_0..isf_n
};

namespace detail {

inline IsfFamily group_by_size(int n,
                               std::vector<std::vector<Edge>> forests) {
  IsfFamily family;
  family.by_k.resize(n + 1);
  family.counts.assign(n + 1, 0);
  for (auto& f : forests) {
    const int k = (int)f.size();
    ++family.counts[k];
    family.by_k[k].push_back(std::move(f));
  }
  for (auto& level : family.by_k) std::sort(level.begin(), level.end());
  return family;
}

struct RollbackDsu {
  std::vector<int> parent, size;
  std::vector<std::pair<int, int>> trail;  // (absorbed root, new root)

  explicit RollbackDsu(int n) : parent(n + 1), size(n + 1, 1) {
    for (int i = 0; i <= n; ++i) parent[i] = i;
  }
  int find(int x) const {  // no path compression, so unions can roll back
    while (parent[x] != x) x = parent[x];
    return x;
  }
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    if (size[rx] < size[ry]) std::swap(rx, ry);
    parent[ry] = rx;
    size[rx] += size[ry];
    trail.emplace_back(ry, rx);
    return true;
  }
  void rollback(size_t mark) {
    while (trail.size() > mark) {
      auto [child, root] = trail.back();
      trail.pop_back();
      size[root] -= size[child];
      parent[child] = child;
    }
  }
};

// All forests contained in E, by extending with lex-later edges that do not
// close a cycle.
template <class F>
void for_each_forest(const Graph& g, const Budget& budget, F&& fn) {
  const int m = g.edge_count();
  RollbackDsu dsu(g.vertex_count());
  std::vector<Edge> current;
  std::uint64_t visited = 0;
  auto rec = [&](auto&& self, int next) -> void {
    if (++visited > budget.max_subsets)
      throw ResourceError("forest enumeration budget exceeded");
    fn(current);
    for (int k = next; k < m; ++k) {
      Edge e = g.edges()[k];
      size_t mark = dsu.trail.size();
      if (!dsu.unite(e.u, e.v)) continue;
      current.push_back(e);
      self(self, k + 1);
      current.pop_back();
      dsu.rollback(mark);
    }
  };
  rec(rec, 0);
}

}  // namespace detail

// The increasing spanning forests by the path definition, grouped by edge
// count. The candidate pool is every forest contained in E, so nothing
// about the level-set characterization is assumed.
inline IsfFamily enumerate_isf(const Graph& g, const Budget& budget = {}) {
  const int n = g.vertex_count();
  std::vector<std::vector<Edge>> keep;
  detail::for_each_forest(g, budget, [&](const std::vector<Edge>& forest) {
    if (is_increasing_forest(n, forest)) keep.push_back(forest);
  });
  return detail::group_by_size(n, std::move(keep));
}

// The independent route: subgraphs using at most one edge from each E_j,
// enumerated as the product over levels of (skip | pick one).
inline IsfFamily enumerate_isf_by_levels(const Graph& g,
                                         const Budget& budget = {}) {
  const int n = g.vertex_count();
  const LevelSets ls = level_sets(g);
  std::vector<std::vector<Edge>> out;
  std::vector<Edge> current;
  std::uint64_t visited = 0;
  auto rec = [&](auto&& self, int j) -> void {
    if (j > n) {
      if (++visited > budget.max_subsets)
        throw ResourceError("level-set enumeration budget exceeded");
      out.push_back(current);
      return;
    }
    self(self, j + 1);  // skip level j
    for (Edge e : ls.by_vertex[j]) {
      current.push_back(e);
      self(self, j + 1);
      current.pop_back();
    }
  };
  rec(rec, 1);
  for (auto& f : out) std::sort(f.begin(), f.end());
  return detail::group_by_size(n, std::move(out));
}

struct PeoResult {
  bool ok = true;
  int violating_vertex = 0;        // meaningful only when !ok
  std::pair<int, int> missing{0, 0};
};

// The natural order 1..n is a perfect elimination ordering when, for every
// j, the smaller-labeled neighbors of j are pairwise adjacent.
inline PeoResult is_natural_peo(const Graph& g) {
  for (int j = 1; j <= g.vertex_count(); ++j) {
    std::vector<int> smaller;
    for (int w : g.neighbors(j))
      if (w < j) smaller.push_back(w);
    for (size_t a = 0; a < smaller.size(); ++a)
      for (size_t b = a + 1; b < smaller.size(); ++b)
        if (!g.has_edge(Edge(smaller[a], smaller[b])))
          return {false, j, {smaller[a], smaller[b]}};
  }
  return {};
}

struct IsfReport {
  IntPoly isf;
  IntPoly chromatic;
  bool natural_peo = false;
  bool polys_equal = false;
  std::vector<long long> isf_counts;
  std::vector<long long> nbc_counts;
  bool isf_subset_of_nbc = false;
  bool families_equal = false;  // ISF_k == NBC_k for every k
};

// Checks, against this graph:
//   (i)  the enumerated counts match the coefficients of prod (t - #E_j);
//   (ii) ISF(G;t) = P(G;t) exactly when the natural order is a PEO;
//   (iii) every increasing forest is an NBC set under lex order, with
//         equality of the families at all k exactly under a PEO.
inline IsfReport verify_isf_theorems(const Graph& g,
                                     const Budget& budget = {}) {
  const int n = g.vertex_count();
  IsfReport report;
  report.isf = isf_poly(g);
  report.chromatic = chromatic_poly_dc(g);
  report.natural_peo = is_natural_peo(g).ok;
  report.polys_equal = report.isf == report.chromatic;

  const IsfFamily isf = enumerate_isf(g, budget);
  report.isf_counts = isf.counts;
  for (int k = 0; k <= n; ++k) {
    const CheckedInt expected = (k % 2 ? CheckedInt(-1) : CheckedInt(1)) *
                                CheckedInt(isf.counts[k]);
    if (report.isf.coeff(n - k) != expected)
      throw TheoremViolation(
          "ISF count mismatch at k=" + std::to_string(k) + ": enumerated " +
          std::to_string(isf.counts[k]) + ", product formula gives " +
          report.isf.coeff(n - k).abs().to_string());
  }

  if (report.polys_equal != report.natural_peo)
    throw TheoremViolation(std::string("PEO criterion fails: polynomials ") +
                           (report.polys_equal ? "agree" : "differ") +
                           " but natural order is " +
                           (report.natural_peo ? "" : "not ") + "a PEO");

  const NbcReport nbc = nbc_report(g, EdgeOrder::lex(g), budget);
  report.nbc_counts = nbc.counts;
  report.isf_subset_of_nbc = true;
  report.families_equal = true;
  for (int k = 0; k <= n; ++k) {
    std::set<std::vector<Edge>> nbc_k(nbc.sets_by_k[k].begin(),
                                      nbc.sets_by_k[k].end());
    for (const auto& forest : isf.by_k[k])
      if (!nbc_k.count(forest)) {
        report.isf_subset_of_nbc = false;
        std::string edges;
        for (Edge e : forest) edges += " " + to_string(e);
        throw TheoremViolation("increasing forest{" + edges +
                               " } is not an NBC set");
      }
    if (isf.counts[k] != nbc.counts[k]) report.families_equal = false;
  }
  if (report.families_equal != report.natural_peo)
    throw TheoremViolation(
        std::string("ISF/NBC equality criterion fails: families ") +
        (report.families_equal ? "coincide" : "differ") +
        " but natural order is " + (report.natural_peo ? "" : "not ") +
        "a PEO");
  return report;
}

}  // namespace chromatic
