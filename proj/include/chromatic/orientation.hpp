#pragma once

// Orientations of a graph: acyclicity testing, enumeration of the acyclic
// ones, and Stanley's compatible (orientation, coloring) pair counts.

#include <algorithm>
#include <cstdint>
#include <string>
#include <vector>

#include "chromatic/base.hpp"
#include "chromatic/chromatic_poly.hpp"
#include "chromatic/graph.hpp"
#include "chromatic/intpoly.hpp"

namespace chromatic {

struct Arc {
  int from, to;
  auto operator<=>(const Arc&) const = default;
};

// One direction per edge, aligned with the lex edge list of the source
// graph: bit k clear orients the k-th edge {u,v} as u->v, set as v->u.
class Orientation {
 public:
  Orientation(const Graph& g, std::uint64_t mask)
      : n_(g.vertex_count()), mask_(mask) {
    arcs_.reserve(g.edge_count());
    for (int k = 0; k < g.edge_count(); ++k) {
      Edge e = g.edges()[k];
      if (mask >> k & 1)
        arcs_.push_back({e.v, e.u});
      else
        arcs_.push_back({e.u, e.v});
    }
  }

  int vertex_count() const { return n_; }
  const std::vector<Arc>& arcs() const { return arcs_; }
  std::uint64_t mask() const { return mask_; }

 private:
  int n_;
  std::uint64_t mask_;
  std::vector<Arc> arcs_;
};

// Kahn peeling: repeatedly delete sources; a directed cycle survives.
inline bool is_acyclic(const Orientation& o) {
  const int n = o.vertex_count();
  std::vector<int> indegree(n + 1, 0);
  std::vector<std::vector<int>> next(n + 1);
  for (Arc a : o.arcs()) {
    ++indegree[a.to];
    next[a.from].push_back(a.to);
  }
  std::vector<int> stack;
  for (int v = 1; v <= n; ++v)
    if (indegree[v] == 0) stack.push_back(v);
  int peeled = 0;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    ++peeled;
    for (int w : next[v])
      if (--indegree[w] == 0) stack.push_back(w);
  }
  return peeled == n;
}

namespace detail {

// Kahn test on a raw direction mask, reusing scratch buffers.
struct OrientationScan {
  const Graph& g;
  int n, m;
  std::vector<int> indegree, head, next_arc, to, stack;

  explicit OrientationScan(const Graph& graph)
      : g(graph),
        n(graph.vertex_count()),
        m(graph.edge_count()),
        indegree(n + 1),
        head(n + 1),
        next_arc(m),
        to(m),
        stack() {
    stack.reserve(n);
  }

  bool acyclic(std::uint64_t mask) {
    std::fill(indegree.begin(), indegree.end(), 0);
    std::fill(head.begin(), head.end(), -1);
    for (int k = 0; k < m; ++k) {
      Edge e = g.edges()[k];
      int from = e.u, target = e.v;
      if (mask >> k & 1) std::swap(from, target);
      ++indegree[target];
      to[k] = target;
      next_arc[k] = head[from];
      head[from] = k;
    }
    stack.clear();
    for (int v = 1; v <= n; ++v)
      if (indegree[v] == 0) stack.push_back(v);
    int peeled = 0;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      ++peeled;
      for (int k = head[v]; k != -1; k = next_arc[k])
        if (--indegree[to[k]] == 0) stack.push_back(to[k]);
    }
    return peeled == n;
  }
};

// Visits every acyclic orientation mask exactly once, ascending. Small edge
// sets get the direct scan over all 2^m bit patterns; denser graphs orient
// along each vertex order instead (every acyclic orientation has a
// topological order, so the induced masks cover them all) and deduplicate.
template <class F>
void for_each_acyclic_orientation(const Graph& g, const Budget& budget,
                                  F&& fn) {
  const int n = g.vertex_count();
  const int m = g.edge_count();
  if (m > 63) throw ResourceError("too many edges for orientation masks");

  if (m <= 62 && (std::uint64_t{1} << m) <= budget.max_subsets) {
    OrientationScan scan(g);
    for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask)
      if (scan.acyclic(mask)) fn(mask);
    return;
  }

  std::uint64_t factorial = 1;
  for (int i = 2; i <= n; ++i) {
    factorial *= (std::uint64_t)i;
    if (factorial > budget.max_subsets)
      throw ResourceError("orientation enumeration budget exceeded");
  }
  std::vector<int> order(n);
  for (int i = 0; i < n; ++i) order[i] = i + 1;
  std::vector<int> rank(n + 1);
  std::vector<std::uint64_t> masks;
  do {
    for (int i = 0; i < n; ++i) rank[order[i]] = i;
    std::uint64_t mask = 0;
    for (int k = 0; k < m; ++k) {
      Edge e = g.edges()[k];
      if (rank[e.v] < rank[e.u]) mask |= std::uint64_t{1} << k;
    }
    masks.push_back(mask);
  } while (std::next_permutation(order.begin(), order.end()));
  std::sort(masks.begin(), masks.end());
  masks.erase(std::unique(masks.begin(), masks.end()), masks.end());
  for (std::uint64_t mask : masks) fn(mask);
}

}  // namespace detail

struct AcyclicOrientations {
  long long count = 0;
  std::vector<Orientation> list;
};

inline AcyclicOrientations acyclic_orientations(const Graph& g,
                                                const Budget& budget = {},
                                                bool collect = false) {
  AcyclicOrientations result;
  detail::for_each_acyclic_orientation(g, budget, [&](std::uint64_t mask) {
    ++result.count;
    if (collect) result.list.emplace_back(g, mask);
  });
  return result;
}

// Number of pairs (O, kappa) with O an acyclic orientation and
// kappa : V -> [t] obeying kappa(from) <= kappa(to) on every arc.
// Orientations outer, colorings inner, pruning on the first violated arc.
inline CheckedInt compatible_pairs_count(const Graph& g, long long t,
                                         const Budget& budget = {}) {
  if (t < 1) throw std::invalid_argument("compatible pairs need t >= 1");
  const int n = g.vertex_count();
  const int m = g.edge_count();

  // per vertex v: earlier neighbors that must be <= / >= the color of v
  std::vector<std::vector<int>> at_most(n + 1), at_least(n + 1);
  std::vector<long long> color(n + 1, 0);
  std::uint64_t attempts = 0;
  CheckedInt total = 0;

  detail::for_each_acyclic_orientation(g, budget, [&](std::uint64_t mask) {
    for (int v = 1; v <= n; ++v) {
      at_most[v].clear();
      at_least[v].clear();
    }
    for (int k = 0; k < m; ++k) {
      Edge e = g.edges()[k];
      if (mask >> k & 1)
        at_least[e.v].push_back(e.u);  // arc v->u: color(v) <= color(u)
      else
        at_most[e.v].push_back(e.u);  // arc u->v: color(u) <= color(v)
    }
    long long found = 0;
    auto assign = [&](auto&& self, int v) -> void {
      for (long long c = 1; c <= t; ++c) {
        if (++attempts > budget.max_colorings)
          throw ResourceError("compatible-pair coloring budget exceeded");
        bool ok = true;
        for (int u : at_most[v])
          if (color[u] > c) {
            ok = false;
            break;
          }
        if (ok)
          for (int u : at_least[v])
            if (color[u] < c) {
              ok = false;
              break;
            }
        if (!ok) continue;
        if (v == n) {
          ++found;
        } else {
          color[v] = c;
          self(self, v + 1);
        }
      }
      color[v] = 0;
    };
    assign(assign, 1);
    total += CheckedInt(found);
  });
  return total;
}

struct StanleyCheck {
  int t;
  CheckedInt chromatic_at_minus_t;
  CheckedInt pairs;
};

struct StanleyReport {
  int n;
  std::vector<StanleyCheck> checks;
};

// P(G;-t) = (-1)^n #{compatible pairs} for t = 1..t_max. The t = 1 row is
// the acyclic orientation count.
inline StanleyReport verify_stanley(const Graph& g, int t_max,
                                    const Budget& budget = {}) {
  const int n = g.vertex_count();
  const IntPoly p = chromatic_poly_dc(g);
  const CheckedInt sign = n % 2 ? CheckedInt(-1) : CheckedInt(1);
  StanleyReport report{n, {}};
  for (int t = 1; t <= t_max; ++t) {
    CheckedInt pairs = compatible_pairs_count(g, t, budget);
    CheckedInt lhs = p.eval(CheckedInt(-t));
    if (lhs != sign * pairs)
      throw TheoremViolation(
          "compatible-pair identity fails at t=" + std::to_string(t) +
          ": P(-t)=" + lhs.to_string() + " but (-1)^n * pairs = " +
          (sign * pairs).to_string());
    report.checks.push_back({t, lhs, pairs});
  }
  return report;
}

}  // namespace chromatic
