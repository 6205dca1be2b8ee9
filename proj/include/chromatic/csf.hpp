#pragma once

// The chromatic symmetric function in the power-sum basis, via the signed
// NBC expansion; its specialization back to the chromatic polynomial; and
// the distinctness scan over trees.

#include <cstdint>
#include <map>
#include <set>
#include <string>
#include <unordered_set>
#include <vector>

#include "chromatic/base.hpp"
#include "chromatic/chromatic_poly.hpp"
#include "chromatic/graph.hpp"
#include "chromatic/intpoly.hpp"

namespace chromatic {

// Finitely supported integer combination of power-sum basis elements
// indexed by partitions of one fixed n (X(G) is homogeneous of degree n).
// Zero coefficients are never stored.
class PSymFunc {
 public:
  PSymFunc() = default;
  explicit PSymFunc(int degree) : n_(degree) {}

  int degree() const { return n_; }
  const std::map<Partition, CheckedInt>& terms() const { return terms_; }

  CheckedInt coeff(const Partition& lambda) const {
    auto it = terms_.find(lambda);
    return it == terms_.end() ? CheckedInt(0) : it->second;
  }

  void add_term(const Partition& lambda, CheckedInt coefficient) {
    if (lambda.sum() != n_)
      throw std::invalid_argument("partition of " +
                                  std::to_string(lambda.sum()) +
                                  " in a degree-" + std::to_string(n_) +
                                  " symmetric function");
    auto [it, inserted] = terms_.emplace(lambda, coefficient);
    if (!inserted) {
      it->second += coefficient;
      if (it->second.is_zero()) terms_.erase(it);
    } else if (it->second.is_zero()) {
      terms_.erase(it);
    }
  }

  bool operator==(const PSymFunc&) const = default;

  // "p[1,1,1] - 2*p[2,1] + p[3]"
  std::string to_string() const {
    if (terms_.empty()) return "0";
    std::string out;
    for (const auto& [lambda, coefficient] : terms_) {
      if (out.empty())
        out += coefficient.sign() < 0 ? "-" : "";
      else
        out += coefficient.sign() < 0 ? " - " : " + ";
      CheckedInt mag = coefficient.abs();
      if (mag != CheckedInt(1)) out += mag.to_string() + "*";
      out += "p[";
      for (size_t i = 0; i < lambda.parts().size(); ++i) {
        if (i) out += ",";
        out += std::to_string(lambda.parts()[i]);
      }
      out += "]";
    }
    return out;
  }

 private:
  int n_ = 0;
  std::map<Partition, CheckedInt> terms_;
};

// X(G) = sum over NBC sets A of (-1)^#A p_{lambda(A)}, where lambda(A) is
// the component-size partition of the spanning subgraph ([n], A).
inline PSymFunc csf_nbc(const Graph& g, const EdgeOrder& ord,
                        const Budget& budget = {}) {
  const int n = g.vertex_count();
  const NbcReport nbc = nbc_report(g, ord, budget);
  PSymFunc x(n);
  for (int k = 0; k <= n; ++k) {
    const CheckedInt sign = k % 2 ? CheckedInt(-1) : CheckedInt(1);
    for (const auto& set : nbc.sets_by_k[k])
      x.add_term(component_shape(n, set), sign);
  }
  return x;
}

// Substitute x_1 = ... = x_t = 1, rest 0: p_lambda becomes t^(#parts).
inline IntPoly specialize(const PSymFunc& x) {
  std::vector<CheckedInt> coeffs(x.degree() + 1, CheckedInt(0));
  for (const auto& [lambda, coefficient] : x.terms())
    coeffs[lambda.length()] += coefficient;
  return IntPoly(std::move(coeffs));
}

// Evaluates X(G) at x_1 = ... = x_t = 1 straight from the definition: every
// proper coloring into [t] contributes a monomial equal to 1. A plain
// odometer over all t^n colorings, independent of the NBC expansion.
inline CheckedInt csf_eval_monomial_oracle(const Graph& g, long long t,
                                           const Budget& budget = {}) {
  if (t < 1) throw std::invalid_argument("specialization needs t >= 1");
  const int n = g.vertex_count();
  double size = 1;
  for (int i = 0; i < n; ++i) size *= (double)t;
  if (size > (double)budget.max_colorings)
    throw ResourceError("coloring enumeration budget exceeded");

  std::vector<long long> kappa(n + 1, 1);
  long long total = 0;
  while (true) {
    bool proper = true;
    for (Edge e : g.edges())
      if (kappa[e.u] == kappa[e.v]) {
        proper = false;
        break;
      }
    if (proper) ++total;
    int v = 1;
    while (v <= n && kappa[v] == t) kappa[v++] = 1;
    if (v > n) break;
    ++kappa[v];
  }
  return CheckedInt(total);
}

struct TreeScanReport {
  int n_max = 0;
  std::vector<long long> class_counts;  // index by n, slot 0 unused
  bool all_chromatic_standard = true;   // every class has P = t(t-1)^(n-1)
  bool all_csf_distinct = true;
  std::string collision;  // description of a collision, if one ever appears
};

namespace detail {

// One representative per isomorphism class of trees on n vertices: decode
// every Prufer sequence and deduplicate by canonical form.
inline std::vector<Graph> tree_representatives(int n, const Budget& budget) {
  std::vector<Graph> reps;
  if (n == 1) {
    reps.push_back(Graph::edgeless(1));
    return reps;
  }
  if (n == 2) {
    reps.push_back(Graph(2, {{1, 2}}));
    return reps;
  }
  std::uint64_t sequences = 1;
  for (int i = 0; i < n - 2; ++i) {
    sequences *= (std::uint64_t)n;
    if (sequences > budget.max_subsets)
      throw ResourceError("tree enumeration budget exceeded");
  }
  std::unordered_set<std::string> seen;
  std::vector<int> seq(n - 2, 1), degree(n + 1);
  while (true) {
    // decode
    std::fill(degree.begin(), degree.end(), 1);
    for (int a : seq) ++degree[a];
    std::vector<std::pair<int, int>> edges;
    for (int a : seq) {
      int leaf = 1;
      while (degree[leaf] != 1) ++leaf;
      edges.emplace_back(leaf, a);
      degree[leaf] = 0;
      --degree[a];
    }
    int x = 1;
    while (degree[x] != 1) ++x;
    int y = x + 1;
    while (degree[y] != 1) ++y;
    edges.emplace_back(x, y);

    Graph tree(n, edges);
    if (seen.insert(canonical_key(tree)).second) reps.push_back(tree);

    int pos = 0;
    while (pos < n - 2 && seq[pos] == n) seq[pos++] = 1;
    if (pos == n - 2) break;
    ++seq[pos];
  }
  return reps;
}

}  // namespace detail

// For each n <= n_max: every tree class has the standard chromatic
// polynomial t(t-1)^(n-1), while the chromatic symmetric functions are all
// distinct. A collision would be a counterexample to the distinctness
// conjecture and is reported, not thrown.
inline TreeScanReport tree_scan(int n_max, const Budget& budget = {}) {
  if (n_max < 1) throw std::invalid_argument("tree scan needs n_max >= 1");
  TreeScanReport report;
  report.n_max = n_max;
  report.class_counts.assign(n_max + 1, 0);
  for (int n = 1; n <= n_max; ++n) {
    const std::vector<Graph> reps = detail::tree_representatives(n, budget);
    report.class_counts[n] = (long long)reps.size();

    std::vector<long long> roots{0};
    roots.insert(roots.end(), n - 1, 1);
    const IntPoly standard = IntPoly::from_roots(roots);

    std::set<std::string> csf_seen;
    for (const Graph& tree : reps) {
      if (chromatic_poly_dc(tree) != standard) {
        report.all_chromatic_standard = false;
        throw TheoremViolation("tree with non-standard chromatic polynomial "
                               "found at n=" + std::to_string(n));
      }
      const PSymFunc x = csf_nbc(tree, EdgeOrder::lex(tree), budget);
      if (!csf_seen.insert(x.to_string()).second) {
        report.all_csf_distinct = false;
        report.collision = "n=" + std::to_string(n) +
                           ": repeated symmetric function " + x.to_string();
      }
    }
  }
  return report;
}

}  // namespace chromatic
