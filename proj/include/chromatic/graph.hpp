#pragma once

// Simple labeled graphs on vertex set {1..n}: construction, deletion and
// contraction, components, cycle enumeration, canonical forms, and the
// standard families. Everything here is a pure value type.

#include <algorithm>
#include <compare>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "chromatic/base.hpp"

namespace chromatic {

// Undirected edge {u,v}, stored with u < v.
struct Edge {
  int u, v;
  Edge(int a, int b) : u(std::min(a, b)), v(std::max(a, b)) {
    if (a == b)
      throw std::invalid_argument("loop edge at vertex " + std::to_string(a));
  }
  auto operator<=>(const Edge&) const = default;
};

inline std::string to_string(Edge e) {
  return std::to_string(e.u) + "-" + std::to_string(e.v);
}

// Integer partition: weakly decreasing sequence of positive parts.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (parts_[i] < 1)
        throw std::invalid_argument("partition parts must be positive");
      if (i > 0 && parts_[i - 1] < parts_[i])
        throw std::invalid_argument("partition parts must weakly decrease");
    }
  }
  // Convenience: sorts the sizes into weakly decreasing order first.
  static Partition of_sizes(std::vector<int> sizes) {
    std::sort(sizes.begin(), sizes.end(), std::greater<int>());
    return Partition(std::move(sizes));
  }

  const std::vector<int>& parts() const { return parts_; }
  int length() const { return (int)parts_.size(); }
  int sum() const {
    int s = 0;
    for (int p : parts_) s += p;
    return s;
  }

  bool operator==(const Partition&) const = default;
  auto operator<=>(const Partition&) const = default;

  std::string to_string() const {
    std::string out = "(";
    for (size_t i = 0; i < parts_.size(); ++i) {
      if (i) out += ",";
      out += std::to_string(parts_[i]);
    }
    return out + ")";
  }

 private:
  std::vector<int> parts_;
};

namespace detail {

struct Dsu {
  std::vector<int> parent, size;
  explicit Dsu(int n) : parent(n + 1), size(n + 1, 1) {
    for (int i = 0; i <= n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  }
  // false if x and y were already connected
  bool unite(int x, int y) {
    int rx = find(x), ry = find(y);
    if (rx == ry) return false;
    if (size[rx] < size[ry]) std::swap(rx, ry);
    parent[ry] = rx;
    size[rx] += size[ry];
    return true;
  }
};

}  // namespace detail

// Component size partition of the spanning subgraph ([n], edges).
inline Partition component_shape(int n, const std::vector<Edge>& edges) {
  detail::Dsu dsu(n);
  for (Edge e : edges) dsu.unite(e.u, e.v);
  std::vector<int> sizes;
  for (int v = 1; v <= n; ++v)
    if (dsu.find(v) == v) sizes.push_back(dsu.size[v]);
  return Partition::of_sizes(std::move(sizes));
}

class Graph {
 public:
  Graph(int n, const std::vector<std::pair<int, int>>& edge_list) : n_(n) {
    if (n < 1) throw std::invalid_argument("graph needs at least one vertex");
    edges_.reserve(edge_list.size());
    for (auto [a, b] : edge_list) {
      if (a == b)
        throw std::invalid_argument("loop edge at vertex " +
                                    std::to_string(a));
      if (a < 1 || a > n || b < 1 || b > n)
        throw std::invalid_argument(
            "edge endpoint out of range 1.." + std::to_string(n) + ": (" +
            std::to_string(a) + "," + std::to_string(b) + ")");
      edges_.emplace_back(a, b);
    }
    std::sort(edges_.begin(), edges_.end());
    edges_.erase(std::unique(edges_.begin(), edges_.end()), edges_.end());
  }

  static Graph edgeless(int n) { return Graph(n, {}); }

  int vertex_count() const { return n_; }
  int edge_count() const { return (int)edges_.size(); }
  const std::vector<Edge>& edges() const { return edges_; }  // lex-sorted

  bool has_edge(Edge e) const {
    return std::binary_search(edges_.begin(), edges_.end(), e);
  }

  std::vector<int> neighbors(int v) const {
    std::vector<int> out;
    for (Edge e : edges_) {
      if (e.u == v) out.push_back(e.v);
      if (e.v == v) out.push_back(e.u);
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  Graph delete_edge(Edge e) const {
    require_edge(e, "delete_edge");
    std::vector<std::pair<int, int>> keep;
    keep.reserve(edges_.size() - 1);
    for (Edge f : edges_)
      if (f != e) keep.emplace_back(f.u, f.v);
    return Graph(n_, keep);
  }

  // Merge v into u (u < v), drop the contracted edge, collapse parallels,
  // and shift every label above v down by one.
  Graph contract_edge(Edge e) const {
    require_edge(e, "contract_edge");
    auto remap = [&](int x) { return x == e.v ? e.u : x > e.v ? x - 1 : x; };
    std::vector<std::pair<int, int>> mapped;
    mapped.reserve(edges_.size() - 1);
    for (Edge f : edges_) {
      if (f == e) continue;
      int a = remap(f.u), b = remap(f.v);
      if (a != b) mapped.emplace_back(a, b);
    }
    return Graph(n_ - 1, mapped);
  }

  bool is_forest() const {
    detail::Dsu dsu(n_);
    for (Edge e : edges_)
      if (!dsu.unite(e.u, e.v)) return false;
    return true;
  }

  struct ComponentInfo {
    std::vector<std::vector<int>> blocks;  // each sorted, ordered by minimum
    Partition shape;                       // block sizes, weakly decreasing
  };

  ComponentInfo components() const {
    detail::Dsu dsu(n_);
    for (Edge e : edges_) dsu.unite(e.u, e.v);
    std::map<int, std::vector<int>> groups;
    for (int v = 1; v <= n_; ++v) groups[dsu.find(v)].push_back(v);
    ComponentInfo info;
    std::vector<int> sizes;
    for (auto& [root, verts] : groups) {
      sizes.push_back((int)verts.size());
      info.blocks.push_back(std::move(verts));
    }
    std::sort(info.blocks.begin(), info.blocks.end());
    info.shape = Partition::of_sizes(std::move(sizes));
    return info;
  }

  // Every simple cycle exactly once, as its lex-sorted edge set. A cycle is
  // found from its minimum vertex s by a DFS over vertices > s; requiring
  // path[1] < path.back() at closing time kills the reversed duplicate.
  std::vector<std::vector<Edge>> simple_cycles() const {
    std::vector<std::vector<int>> adj(n_ + 1);
    for (Edge e : edges_) {
      adj[e.u].push_back(e.v);
      adj[e.v].push_back(e.u);
    }
    for (auto& a : adj) std::sort(a.begin(), a.end());

    std::vector<std::vector<Edge>> out;
    std::vector<int> path;
    std::vector<char> on_path(n_ + 1, 0);

    auto dfs = [&](auto&& self, int s, int v) -> void {
      for (int w : adj[v]) {
        if (w == s && path.size() >= 3 && path[1] < path.back()) {
          std::vector<Edge> cycle;
          for (size_t i = 0; i + 1 < path.size(); ++i)
            cycle.emplace_back(path[i], path[i + 1]);
          cycle.emplace_back(path.back(), s);
          std::sort(cycle.begin(), cycle.end());
          out.push_back(std::move(cycle));
        } else if (w > s && !on_path[w]) {
          on_path[w] = 1;
          path.push_back(w);
          self(self, s, w);
          path.pop_back();
          on_path[w] = 0;
        }
      }
    };
    for (int s = 1; s <= n_; ++s) {
      path.assign(1, s);
      on_path[s] = 1;
      dfs(dfs, s, s);
      on_path[s] = 0;
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  bool operator==(const Graph&) const = default;
  auto operator<=>(const Graph&) const = default;

 private:
  void require_edge(Edge e, const char* op) const {
    if (!has_edge(e))
      throw std::invalid_argument(std::string(op) + ": edge " +
                                  chromatic::to_string(e) +
                                  " is not in the graph");
  }
  int n_;
  std::vector<Edge> edges_;
};

// A total order on the edge set of one graph, default lexicographic.
class EdgeOrder {
 public:
  static EdgeOrder lex(const Graph& g) {
    EdgeOrder ord;
    ord.assign(g.edges());
    return ord;
  }

  static EdgeOrder of_sequence(const Graph& g, std::vector<Edge> seq) {
    std::vector<Edge> sorted = seq;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != g.edges())
      throw std::invalid_argument(
          "edge order is not a permutation of the edge set");
    EdgeOrder ord;
    ord.assign(std::move(seq));
    return ord;
  }

  static EdgeOrder shuffled(const Graph& g, std::uint32_t seed) {
    std::vector<Edge> seq = g.edges();
    std::mt19937 rng(seed);
    for (size_t i = seq.size(); i > 1; --i)
      std::swap(seq[i - 1], seq[rng() % i]);
    EdgeOrder ord;
    ord.assign(std::move(seq));
    return ord;
  }

  const std::vector<Edge>& sequence() const { return seq_; }
  int size() const { return (int)seq_.size(); }

  int position(Edge e) const {
    auto it = pos_.find(e);
    if (it == pos_.end())
      throw std::invalid_argument("edge " + chromatic::to_string(e) +
                                  " is not in this order");
    return it->second;
  }

 private:
  void assign(std::vector<Edge> seq) {
    seq_ = std::move(seq);
    for (int i = 0; i < (int)seq_.size(); ++i) pos_.emplace(seq_[i], i);
  }
  std::vector<Edge> seq_;
  std::map<Edge, int> pos_;
};

namespace detail {

inline void require_order_matches(const Graph& g, const EdgeOrder& ord) {
  std::vector<Edge> sorted = ord.sequence();
  std::sort(sorted.begin(), sorted.end());
  if (sorted != g.edges())
    throw std::invalid_argument(
        "edge order is not a permutation of the graph's edge set");
}

// AHU-style canonical encoding of a tree component, rooted at its center
// (minimum of the two encodings when the center is an edge).
inline std::string rooted_tree_code(
    const std::vector<std::vector<int>>& adj, int root, int parent) {
  std::vector<std::string> child_codes;
  for (int w : adj[root])
    if (w != parent) child_codes.push_back(rooted_tree_code(adj, w, root));
  std::sort(child_codes.begin(), child_codes.end());
  std::string code = "(";
  for (auto& c : child_codes) code += c;
  return code + ")";
}

inline std::string forest_key(const Graph& g) {
  const int n = g.vertex_count();
  std::vector<std::vector<int>> adj(n + 1);
  for (Edge e : g.edges()) {
    adj[e.u].push_back(e.v);
    adj[e.v].push_back(e.u);
  }
  std::vector<std::string> component_codes;
  std::vector<char> seen(n + 1, 0);
  for (int s = 1; s <= n; ++s) {
    if (seen[s]) continue;
    // collect the component
    std::vector<int> comp{s};
    seen[s] = 1;
    for (size_t i = 0; i < comp.size(); ++i)
      for (int w : adj[comp[i]])
        if (!seen[w]) {
          seen[w] = 1;
          comp.push_back(w);
        }
    // strip leaves until one or two centers remain
    std::vector<int> degree(n + 1, 0), layer;
    for (int v : comp) degree[v] = (int)adj[v].size();
    std::vector<char> removed(n + 1, 0);
    int remaining = (int)comp.size();
    for (int v : comp)
      if (degree[v] <= 1) layer.push_back(v);
    while (remaining > 2) {
      std::vector<int> next;
      for (int v : layer) {
        removed[v] = 1;
        --remaining;
        for (int w : adj[v])
          if (!removed[w] && --degree[w] == 1) next.push_back(w);
      }
      layer = std::move(next);
    }
    std::string code;
    if (layer.size() == 1 || comp.size() == 1) {
      code = rooted_tree_code(adj, layer.empty() ? s : layer[0], 0);
    } else {
      std::string a = rooted_tree_code(adj, layer[0], layer[1]);
      std::string b = rooted_tree_code(adj, layer[1], layer[0]);
      // join the two halves across the center edge, smaller side first
      code = a <= b ? "(" + a + b + ")" : "(" + b + a + ")";
    }
    component_codes.push_back(std::move(code));
  }
  std::sort(component_codes.begin(), component_codes.end());
  std::string key = "F" + std::to_string(n) + ":";
  for (auto& c : component_codes) key += c;
  return key;
}

// Branch-and-bound search for the label permutation minimizing the
// column-major upper-triangular adjacency code. Intended for n <= 12.
struct CanonSearch {
  int n;
  std::vector<std::uint32_t> adj;  // adjacency bitmask per vertex, 0-based
  std::vector<std::uint32_t> cur, best;
  std::vector<int> perm, best_perm;
  std::vector<char> used;
  bool have_best = false;

  void dfs(int k) {
    if (k == n) {
      if (!have_best || cur < best) {
        best = cur;
        best_perm = perm;
        have_best = true;
      }
      return;
    }
    for (int u = 0; u < n; ++u) {
      if (used[u]) continue;
      std::uint32_t code = 0;
      for (int i = 0; i < k; ++i)
        code = (code << 1) | ((adj[perm[i]] >> u) & 1u);
      cur[k] = code;
      if (have_best) {
        int cmp = 0;
        for (int i = 0; i <= k; ++i)
          if (cur[i] != best[i]) {
            cmp = cur[i] < best[i] ? -1 : 1;
            break;
          }
        if (cmp > 0) continue;
      }
      used[u] = 1;
      perm[k] = u;
      dfs(k + 1);
      used[u] = 0;
    }
  }
};

inline std::string general_key(const Graph& g) {
  const int n = g.vertex_count();
  if (n > 31)
    throw std::invalid_argument("canonical_key: graph too large");
  CanonSearch search;
  search.n = n;
  search.adj.assign(n, 0);
  for (Edge e : g.edges()) {
    search.adj[e.u - 1] |= 1u << (e.v - 1);
    search.adj[e.v - 1] |= 1u << (e.u - 1);
  }
  search.cur.assign(n, 0);
  search.perm.assign(n, 0);
  search.used.assign(n, 0);
  search.dfs(0);

  // new label of original vertex = its position in the winning permutation
  std::vector<int> relabel(n + 1, 0);
  for (int k = 0; k < n; ++k) relabel[search.best_perm[k] + 1] = k + 1;
  std::vector<Edge> canon;
  for (Edge e : g.edges()) canon.emplace_back(relabel[e.u], relabel[e.v]);
  std::sort(canon.begin(), canon.end());
  std::string key = "G" + std::to_string(n) + ":";
  for (Edge e : canon) key += chromatic::to_string(e) + ",";
  return key;
}

}  // namespace detail

// Opaque key, equal exactly for isomorphic graphs. Forests take a
// linear-time center-rooted encoding; everything else goes through a
// pruned search over labelings (fine at desk scale, n <= ~12).
inline std::string canonical_key(const Graph& g) {
  return g.is_forest() ? detail::forest_key(g) : detail::general_key(g);
}

inline bool is_isomorphic(const Graph& a, const Graph& b) {
  if (a.vertex_count() != b.vertex_count() ||
      a.edge_count() != b.edge_count())
    return false;
  auto degree_multiset = [](const Graph& g) {
    std::vector<int> d(g.vertex_count() + 1, 0);
    for (Edge e : g.edges()) {
      ++d[e.u];
      ++d[e.v];
    }
    d.erase(d.begin());
    std::sort(d.begin(), d.end());
    return d;
  };
  if (degree_multiset(a) != degree_multiset(b)) return false;
  return canonical_key(a) == canonical_key(b);
}

enum class Family { complete, cycle, path, edgeless };

inline Family family_from_name(const std::string& name) {
  if (name == "complete") return Family::complete;
  if (name == "cycle") return Family::cycle;
  if (name == "path") return Family::path;
  if (name == "edgeless") return Family::edgeless;
  throw std::invalid_argument("unknown family: " + name);
}

inline Graph family(Family kind, int n) {
  if (n < 1) throw std::invalid_argument("family needs n >= 1");
  std::vector<std::pair<int, int>> es;
  switch (kind) {
    case Family::complete:
      for (int i = 1; i <= n; ++i)
        for (int j = i + 1; j <= n; ++j) es.emplace_back(i, j);
      break;
    case Family::cycle:
      if (n < 3) throw std::invalid_argument("cycle needs n >= 3");
      for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
      es.emplace_back(1, n);
      break;
    case Family::path:
      for (int i = 1; i < n; ++i) es.emplace_back(i, i + 1);
      break;
    case Family::edgeless:
      break;
  }
  return Graph(n, es);
}

// Erdos-Renyi draw, reproducible from the seed. Raw mt19937 words are
// compared against a fixed threshold; the standard distributions are not
// pinned across library implementations.
inline Graph random_graph(int n, double p, std::uint32_t seed) {
  if (n < 1) throw std::invalid_argument("random_graph needs n >= 1");
  if (!(p >= 0.0 && p <= 1.0))
    throw std::invalid_argument("edge probability must lie in [0,1]");
  std::mt19937 rng(seed);
  const std::uint64_t threshold = (std::uint64_t)(p * 4294967296.0);
  std::vector<std::pair<int, int>> es;
  for (int i = 1; i <= n; ++i)
    for (int j = i + 1; j <= n; ++j)
      if ((std::uint64_t)rng() < threshold) es.emplace_back(i, j);
  return Graph(n, es);
}

}  // namespace chromatic
