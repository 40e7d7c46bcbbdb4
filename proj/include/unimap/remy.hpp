#pragma once

#include <utility>
#include <vector>

#include "unimap/errors.hpp"
#include "unimap/plane_tree.hpp"
#include "unimap/sign.hpp"

namespace unimap {

// Invertible edge contraction pairing (tree with n edges, marked vertex) with
// (tree with n-1 edges, marked corner, sign):
//
//   leaf v:     contract the edge to its parent; mark the corner where v
//               hung, sign '+'.
//   non-leaf v: contract the edge to its leftmost child; mark the corner
//               separating the leftmost subtree from the rest, sign '-'.
//
// The contracted-at vertex is the one that disappears; in the non-leaf case
// the merged vertex keeps the leftmost child's identity. old_to_new maps the
// input tree's DFS numbers to the output's (-1 for the removed vertex), which
// is what O-tree relabelings consume.

struct RemyContraction {
  PlaneTree tree;
  int corner = 0;
  Sign sign = Sign::Plus;
  std::vector<int> old_to_new;
};

struct RemyExpansion {
  PlaneTree tree;
  int vertex = 0;  // the vertex the expansion created
  std::vector<int> old_to_new;
};

inline RemyContraction remy_contract(const PlaneTree& t, int v) {
  if (t.edges() == 0) throw EmptyTreeError("cannot contract a single vertex");
  if (v < 0 || v >= t.vertices())
    throw InvalidInputError("vertex out of range");
  TreeScaffold s = TreeScaffold::of(t);
  if (t.is_leaf(v)) {
    const int p = t.parent(v);
    auto& pk = s.kids[p];
    int slot = 0;
    while (pk[slot] != v) ++slot;
    pk.erase(pk.begin() + slot);
    auto [tree, map] = s.canonical();
    int corner = tree.corner_id(map[p], slot);
    return {std::move(tree), corner, Sign::Plus, std::move(map)};
  }
  // Non-leaf: merge v with its leftmost child c; the merged vertex keeps c's
  // identity and children [c's kids, v's remaining kids].
  const int c = s.kids[v][0];
  const int r = static_cast<int>(s.kids[c].size());
  for (size_t i = 1; i < s.kids[v].size(); ++i) {
    s.kids[c].push_back(s.kids[v][i]);
    s.parent[s.kids[v][i]] = c;
  }
  s.kids[v].clear();
  const int p = s.parent[v];
  s.parent[c] = p;
  if (p == -1) {
    s.root = c;
  } else {
    for (auto& kid : s.kids[p])
      if (kid == v) kid = c;
  }
  auto [tree, map] = s.canonical();
  int corner = tree.corner_id(map[c], r);
  return {std::move(tree), corner, Sign::Minus, std::move(map)};
}

inline RemyExpansion remy_expand(const PlaneTree& t, int corner, Sign sign) {
  if (corner < 0 || corner >= t.corner_count())
    throw InvalidInputError("corner out of range");
  TreeScaffold s = TreeScaffold::of(t);
  const int w = t.corner_vertex(corner);
  const int slot = t.corner_slot(corner);
  int created;
  if (sign == Sign::Plus) {
    created = s.add_vertex();
    s.parent[created] = w;
    s.kids[w].insert(s.kids[w].begin() + slot, created);
  } else {
    // Split w: the new vertex takes w's place and w becomes its leftmost
    // child, keeping the first `slot` children.
    created = s.add_vertex();
    const int p = s.parent[w];
    s.parent[created] = p;
    if (p == -1) {
      s.root = created;
    } else {
      for (auto& kid : s.kids[p])
        if (kid == w) kid = created;
    }
    s.kids[created].push_back(w);
    for (size_t i = slot; i < s.kids[w].size(); ++i) {
      s.kids[created].push_back(s.kids[w][i]);
      s.parent[s.kids[w][i]] = created;
    }
    s.kids[w].resize(slot);
    s.parent[w] = created;
  }
  auto [tree, map] = s.canonical();
  int vertex = map[created];
  map.resize(t.vertices());  // old_to_new covers only the input's vertices
  return {std::move(tree), vertex, std::move(map)};
}

}  // namespace unimap
