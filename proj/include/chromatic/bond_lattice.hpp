#pragma once

// The graphical arrangement of a graph, realized combinatorially by its
// bond lattice: partitions of {1..n} whose blocks induce connected
// subgraphs, ordered by refinement (coarser = higher, all singletons at the
// bottom). A flat with b blocks stands for the subspace where coordinates
// agree within blocks, of dimension b.

#include <algorithm>
#include <map>
#include <string>
#include <vector>

#include "chromatic/base.hpp"
#include "chromatic/graph.hpp"
#include "chromatic/intpoly.hpp"
#include "chromatic/orientation.hpp"

namespace chromatic {

class Flat {
 public:
  explicit Flat(std::vector<std::vector<int>> blocks)
      : blocks_(std::move(blocks)) {
    for (auto& b : blocks_) std::sort(b.begin(), b.end());
    std::sort(blocks_.begin(), blocks_.end());
  }

  const std::vector<std::vector<int>>& blocks() const { return blocks_; }
  int dim() const { return (int)blocks_.size(); }

  std::string to_string() const {
    std::string out;
    for (size_t i = 0; i < blocks_.size(); ++i) {
      if (i) out += "|";
      for (int v : blocks_[i]) out += std::to_string(v);
    }
    return out;
  }

  bool operator==(const Flat&) const = default;
  auto operator<=>(const Flat&) const = default;

 private:
  std::vector<std::vector<int>> blocks_;
};

class BondLattice {
 public:
  int ground_size() const { return n_; }
  const std::vector<Flat>& flats() const { return flats_; }
  const std::vector<CheckedInt>& mobius() const { return mobius_; }

  // true when flats()[a] refines flats()[b], i.e. a lies weakly below b
  bool refines(int a, int b) const {
    const auto& fine = block_id_[a];
    const auto& coarse = block_id_[b];
    std::vector<int> image(flats_[a].dim(), -1);
    for (int v = 1; v <= n_; ++v) {
      int bucket = fine[v];
      if (image[bucket] == -1)
        image[bucket] = coarse[v];
      else if (image[bucket] != coarse[v])
        return false;
    }
    return true;
  }

 private:
  friend BondLattice bond_lattice(const Graph&, const Budget&);
  int n_ = 0;
  std::vector<Flat> flats_;                 // dim descending, then lex
  std::vector<std::vector<int>> block_id_;  // per flat: vertex -> block index
  std::vector<CheckedInt> mobius_;
};

// Builds every connected-block partition by closure: start from the
// all-singletons flat and keep merging pairs of blocks joined by an edge.
// Then computes the Mobius function bottom-up: mu(min) = 1 and
// mu(S) = -sum of mu over the flats strictly below S.
inline BondLattice bond_lattice(const Graph& g, const Budget& budget = {}) {
  const int n = g.vertex_count();

  // partitions as first-occurrence-numbered block id vectors (index 1..n)
  std::vector<int> singletons(n + 1);
  for (int v = 1; v <= n; ++v) singletons[v] = v - 1;
  std::map<std::vector<int>, int> seen;
  std::vector<std::vector<int>> ids;
  seen.emplace(singletons, 0);
  ids.push_back(singletons);

  auto canonicalize = [&](std::vector<int>& id) {
    std::vector<int> rename(n, -1);
    int next = 0;
    for (int v = 1; v <= n; ++v) {
      if (rename[id[v]] == -1) rename[id[v]] = next++;
      id[v] = rename[id[v]];
    }
  };

  for (size_t head = 0; head < ids.size(); ++head) {
    std::vector<int> current = ids[head];
    for (Edge e : g.edges()) {
      if (current[e.u] == current[e.v]) continue;
      std::vector<int> merged = current;
      int keep = merged[e.u], gone = merged[e.v];
      for (int v = 1; v <= n; ++v)
        if (merged[v] == gone) merged[v] = keep;
      canonicalize(merged);
      if (seen.emplace(merged, (int)ids.size()).second) {
        ids.push_back(std::move(merged));
        if (ids.size() > budget.max_subsets)
          throw ResourceError("bond lattice flat budget exceeded");
      }
    }
  }

  BondLattice lattice;
  lattice.n_ = n;
  std::vector<std::pair<Flat, std::vector<int>>> entries;
  for (auto& id : ids) {
    int block_count = *std::max_element(id.begin() + 1, id.end()) + 1;
    std::vector<std::vector<int>> blocks(block_count);
    for (int v = 1; v <= n; ++v) blocks[id[v]].push_back(v);
    entries.emplace_back(Flat(std::move(blocks)), id);
  }
  std::sort(entries.begin(), entries.end(),
            [](const auto& a, const auto& b) {
              if (a.first.dim() != b.first.dim())
                return a.first.dim() > b.first.dim();
              return a.first < b.first;
            });
  for (auto& [flat, id] : entries) {
    lattice.flats_.push_back(std::move(flat));
    lattice.block_id_.push_back(std::move(id));
  }

  const int count = (int)lattice.flats_.size();
  lattice.mobius_.assign(count, CheckedInt(0));
  lattice.mobius_[0] = 1;  // the all-singletons minimum
  for (int s = 1; s < count; ++s) {
    CheckedInt below = 0;
    for (int t = 0; t < s; ++t) {
      if (lattice.flats_[t].dim() <= lattice.flats_[s].dim()) continue;
      if (lattice.refines(t, s)) below += lattice.mobius_[t];
    }
    lattice.mobius_[s] = -below;
  }
  return lattice;
}

// mu per flat, aligned with flats(): mu(minimum) = 1 and every other flat
// carries minus the sum over the flats strictly below it.
inline const std::vector<CheckedInt>& mobius_function(
    const BondLattice& lattice) {
  return lattice.mobius();
}

// chi(H;t) = sum over flats of mu(S) t^{dim S}.
inline IntPoly characteristic_poly(const BondLattice& lattice) {
  std::vector<CheckedInt> coeffs(lattice.ground_size() + 1, CheckedInt(0));
  for (size_t i = 0; i < lattice.flats().size(); ++i)
    coeffs[lattice.flats()[i].dim()] += lattice.mobius()[i];
  return IntPoly(std::move(coeffs));
}

struct ZaslavskyReport {
  int n;
  CheckedInt chi_at_minus_one;
  long long regions;
};

// chi(H;-1) = (-1)^n #regions. Regions of the graphical arrangement are in
// bijection with acyclic orientations, which is how they are counted here.
inline ZaslavskyReport verify_zaslavsky(const Graph& g,
                                        const Budget& budget = {}) {
  const int n = g.vertex_count();
  const IntPoly chi = characteristic_poly(bond_lattice(g, budget));
  const CheckedInt lhs = chi.eval(CheckedInt(-1));
  const long long regions = acyclic_orientations(g, budget).count;
  const CheckedInt sign = n % 2 ? CheckedInt(-1) : CheckedInt(1);
  if (lhs != sign * CheckedInt(regions))
    throw TheoremViolation("region identity fails: chi(-1)=" +
                           lhs.to_string() + " but (-1)^n * regions = " +
                           (sign * CheckedInt(regions)).to_string());
  return {n, lhs, regions};
}

}  // namespace chromatic
