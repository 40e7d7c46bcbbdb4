#pragma once

#include <utility>
#include <vector>

#include "unimap/errors.hpp"
#include "unimap/multigraph.hpp"
#include "unimap/permutation.hpp"
#include "unimap/plane_tree.hpp"

namespace unimap {

// Plane tree with n edges paired with an odd-cycle permutation acting on its
// n+1 DFS-numbered vertices.
struct OTree {
  PlaneTree tree;
  OPermutation sigma;

  OTree(PlaneTree t, OPermutation s) : tree(std::move(t)), sigma(std::move(s)) {
    if (sigma.size() != tree.vertices())
      throw InvalidInputError("O-tree: permutation size must be vertex count");
  }

  int edges() const { return tree.edges(); }
  int genus() const { return sigma.genus(); }

  bool operator==(const OTree& o) const {
    return tree == o.tree && sigma.perm() == o.sigma.perm();
  }
};

// Merge the vertices of each sigma-cycle into a single graph vertex; each
// tree edge survives (as a loop when both ends land in the same cycle).
// Graph vertices are ordered by ascending cycle minimum, so the cycle
// containing the tree root is graph vertex 0.
inline Multigraph underlying_graph(const OTree& ot) {
  const auto& cycles = ot.sigma.cycles_by_min();
  Multigraph g;
  g.vertex_count = static_cast<int>(cycles.size());
  g.plant = true;
  std::vector<int> cyc_of(ot.tree.vertices(), -1);
  for (int ci = 0; ci < g.vertex_count; ++ci)
    for (int v : cycles[ci]) cyc_of[v] = ci;
  g.root = cyc_of[0];
  for (int v = 1; v < ot.tree.vertices(); ++v) {
    int a = cyc_of[v], b = cyc_of[ot.tree.parent(v)];
    if (a > b) std::swap(a, b);
    g.edges.emplace_back(a, b);
  }
  return g;
}

// True when every merged vertex has degree >= 3, the plant counting toward
// the root's degree.
inline bool is_shape_tree(const OTree& ot) {
  for (const auto& cycle : ot.sigma.cycles_by_min()) {
    int deg = 0;
    bool has_root = false;
    for (int v : cycle) {
      deg += ot.tree.tree_degree(v);
      if (v == 0) has_root = true;
    }
    if (deg + (has_root ? 1 : 0) < 3) return false;
  }
  return true;
}

}  // namespace unimap
