#pragma once

#include <algorithm>
#include <cassert>
#include <string>
#include <utility>
#include <vector>

#include "unimap/errors.hpp"
#include "unimap/otree.hpp"
#include "unimap/permutation.hpp"
#include "unimap/remy.hpp"
#include "unimap/sign.hpp"

namespace unimap {

// ---------------------------------------------------------------------------
// Sequences <-> signed odd-cycle collections.
//
// A sequence of distinct integers splits into blocks at its left-to-right
// minima. Blocks are processed right to left: an odd block becomes a
// '+'-signed cycle; an even block gives up its second element x and becomes a
// '-'-signed cycle, x starting a fresh singleton block when it undercuts
// every raw element to its left (vacuously so at the far left) and otherwise
// being appended to the preceding block. The last surviving block is the
// leftmost, unsigned cycle. The result lists cycles in canonical order
// (descending minima) with one sign per cycle after the first.
// ---------------------------------------------------------------------------

struct SignedCycles {
  std::vector<std::vector<int>> cycles;  // canonical order
  SignSeq signs;                         // signs of cycles[1..]
};

inline SignedCycles phi_sequence(const std::vector<int>& seq) {
  SignedCycles out;
  if (seq.empty()) return out;

  std::vector<std::vector<int>> raw;
  for (int x : seq) {
    if (raw.empty() || x < raw.back().front())
      raw.push_back({x});
    else
      raw.back().push_back(x);
  }

  std::vector<std::vector<int>> made;  // creation order = right-to-left
  SignSeq made_signs;
  for (;;) {
    std::vector<int> block = std::move(raw.back());
    raw.pop_back();
    if (raw.empty() && block.size() % 2 == 1) {
      out.cycles.push_back(std::move(block));  // leftmost, unsigned
      break;
    }
    if (block.size() % 2 == 1) {
      made.push_back(std::move(block));
      made_signs.push_back(Sign::Plus);
    } else {
      const int x = block[1];
      block.erase(block.begin() + 1);
      made.push_back(std::move(block));
      made_signs.push_back(Sign::Minus);
      if (raw.empty() || x < raw.back().front())
        raw.push_back({x});
      else
        raw.back().push_back(x);
    }
  }
  for (size_t i = made.size(); i-- > 0;) {
    out.cycles.push_back(std::move(made[i]));
    out.signs.push_back(made_signs[i]);
  }
  return out;
}

// Inverse of phi_sequence: rebuild the sequence from canonical cycles and the
// signs of all cycles but the first. A '-' cycle steals the last element of
// the block to its left and places it second.
inline std::vector<int> psi_sequence(std::vector<std::vector<int>> cycles,
                                     const SignSeq& signs) {
  if (cycles.empty()) {
    if (!signs.empty())
      throw LengthMismatchError("sign sequence for an empty cycle list");
    return {};
  }
  if (signs.size() + 1 != cycles.size())
    throw LengthMismatchError("need one sign per cycle after the first");
  for (size_t i = 1; i < cycles.size(); ++i) {
    if (signs[i - 1] == Sign::Minus) {
      auto& prev = cycles[i - 1];
      assert(!prev.empty());
      int x = prev.back();
      prev.pop_back();
      cycles[i].insert(cycles[i].begin() + 1, x);
    }
  }
  std::vector<int> seq;
  for (const auto& b : cycles) seq.insert(seq.end(), b.begin(), b.end());
  return seq;
}

struct PhiResult {
  OPermutation op;
  SignSeq signs;
};

// The sequence is a permutation of {0..n-1} in one-line form.
inline PhiResult phi(const std::vector<int>& seq) {
  Permutation p(seq);  // validates
  auto sc = phi_sequence(seq);
  return {OPermutation(Permutation::from_cycles(p.size(), sc.cycles)),
          std::move(sc.signs)};
}

inline std::vector<int> psi(const OPermutation& op, const SignSeq& signs) {
  return psi_sequence(op.cycles_canonical(), signs);
}

// ---------------------------------------------------------------------------
// Permissible sectors and the bijection eliminating 1-cycle vertices.
// ---------------------------------------------------------------------------

inline bool corner_is_permissible(const OTree& ot, int corner) {
  const auto& t = ot.tree;
  const int v = t.corner_vertex(corner);
  const int slot = t.corner_slot(corner);
  if (slot == t.corner_slots(v) - 1) return false;  // last sector around v
  if (ot.sigma.is_fixed_point(v) && slot < 2) return false;
  return true;
}

// Corners that are not the last around their vertex nor among the first two
// around a 1-cycle vertex; there are exactly 2g+t-k-1 of them.
inline std::vector<int> permissible_corners(const OTree& ot) {
  if (!is_shape_tree(ot))
    throw NotAShapeTreeError("O-tree has a merged vertex of degree < 3");
  std::vector<int> out;
  for (int c = 0; c < ot.tree.corner_count(); ++c)
    if (corner_is_permissible(ot, c)) out.push_back(c);
  return out;
}

namespace detail {

// sigma' on the renumbered vertex set; `map` sends old ids to new ids with
// exactly the deleted vertices at -1, and those must be sigma-fixed or
// spliced out beforehand by the caller.
inline OPermutation relabel_drop(const OPermutation& op,
                                 const std::vector<int>& map, int new_size) {
  std::vector<int> img(new_size, -1);
  for (int x = 0; x < op.size(); ++x) {
    if (map[x] < 0) continue;
    int y = op(x);
    assert(map[y] >= 0);
    img[map[x]] = map[y];
  }
  return OPermutation(Permutation(std::move(img)));
}

}  // namespace detail

struct PiForwardResult {
  OTree out;
  int corner = 0;
};

// Delete a 1-cycle vertex: contract the edge to its leftmost child, drop the
// fixed point from sigma and renumber. The marked corner is permissible in
// the result.
inline PiForwardResult pi_forward(const OTree& ot, int v) {
  if (v < 0 || v >= ot.tree.vertices())
    throw InvalidInputError("vertex out of range");
  if (!ot.sigma.is_fixed_point(v))
    throw NotOneCycleError("vertex is not a 1-cycle of sigma");
  if (!is_shape_tree(ot))
    throw NotAShapeTreeError("O-tree has a merged vertex of degree < 3");
  assert(!ot.tree.children(v).empty());
  auto rc = remy_contract(ot.tree, v);
  assert(rc.sign == Sign::Minus);
  OPermutation sigma =
      detail::relabel_drop(ot.sigma, rc.old_to_new, ot.tree.vertices() - 1);
  return {OTree(std::move(rc.tree), std::move(sigma)), rc.corner};
}

struct PiInverseResult {
  OTree out;
  int vertex = 0;
};

inline PiInverseResult pi_inverse(const OTree& ot, int corner) {
  if (corner < 0 || corner >= ot.tree.corner_count())
    throw InvalidInputError("corner out of range");
  if (!is_shape_tree(ot))
    throw NotAShapeTreeError("O-tree has a merged vertex of degree < 3");
  if (!corner_is_permissible(ot, corner))
    throw NotPermissibleError("corner is not permissible");
  auto ex = remy_expand(ot.tree, corner, Sign::Minus);
  const int n1 = ot.tree.vertices() + 1;
  std::vector<int> img(n1, -1);
  for (int x = 0; x < ot.sigma.size(); ++x)
    img[ex.old_to_new[x]] = ex.old_to_new[ot.sigma(x)];
  img[ex.vertex] = ex.vertex;  // the reinserted vertex is a fresh 1-cycle
  return {OTree(std::move(ex.tree), OPermutation(Permutation(std::move(img)))),
          ex.vertex};
}

// ---------------------------------------------------------------------------
// Splitting a cycle at a non-minimal element (and merging back).
// ---------------------------------------------------------------------------

struct NonminimalSplit {
  OPermutation reduced;           // genus g-k
  std::vector<int> labeled_minima;  // minima of the 2k+1 new cycles, descending
  SignSeq signs;                  // 2k signs
};

// Write the cycle containing `element` starting at it and split via
// phi_sequence; the 2k+1 resulting odd cycles replace the original cycle.
inline NonminimalSplit decompose_nonminimal(const OPermutation& op,
                                            int element) {
  if (element < 0 || element >= op.size())
    throw InvalidInputError("element out of range");
  std::vector<int> cycle_seq{element};
  for (int x = op(element); x != element; x = op(x)) cycle_seq.push_back(x);
  if (element == *std::min_element(cycle_seq.begin(), cycle_seq.end()))
    throw MinimalElementError("element is the minimum of its cycle");

  auto sc = phi_sequence(cycle_seq);
  assert(sc.cycles.size() >= 3 && sc.cycles.size() % 2 == 1);

  std::vector<std::vector<int>> cycles;
  std::vector<int> labeled;
  for (auto& c : sc.cycles) {
    labeled.push_back(c.front());
    cycles.push_back(std::move(c));
  }
  for (const auto& c : op.cycles_by_min())
    if (std::find(c.begin(), c.end(), element) == c.end()) cycles.push_back(c);
  return {OPermutation(Permutation::from_cycles(op.size(), cycles)),
          std::move(labeled), std::move(sc.signs)};
}

// Inverse: merge the labeled cycles (given by their minima) back into one
// cycle; returns the rebuilt permutation and the distinguished element.
inline std::pair<OPermutation, int> compose_nonminimal(
    const OPermutation& op, const std::vector<int>& labeled_minima,
    const SignSeq& signs) {
  if (labeled_minima.size() < 3 || labeled_minima.size() % 2 == 0)
    throw ArityMismatchError("need an odd number (>= 3) of labeled cycles");
  if (signs.size() + 1 != labeled_minima.size())
    throw ArityMismatchError("need one sign per labeled cycle after the first");

  std::vector<std::vector<int>> labeled;
  std::vector<char> is_labeled_min(op.size(), 0);
  for (int m : labeled_minima) {
    if (m < 0 || m >= op.size())
      throw InvalidInputError("labeled minimum out of range");
    is_labeled_min[m] = 1;
  }
  std::vector<std::vector<int>> rest;
  for (const auto& c : op.cycles_by_min()) {
    if (is_labeled_min[c.front()])
      labeled.push_back(c);
    else
      rest.push_back(c);
  }
  if (labeled.size() != labeled_minima.size())
    throw InvalidInputError("labeled minima must name distinct cycles");
  // Canonical order: descending minima.
  std::sort(labeled.begin(), labeled.end(),
            [](const auto& a, const auto& b) { return a.front() > b.front(); });

  std::vector<int> seq = psi_sequence(labeled, signs);
  const int element = seq.front();
  rest.push_back(std::move(seq));
  return {OPermutation(Permutation::from_cycles(op.size(), rest)), element};
}

// ---------------------------------------------------------------------------
// Branch decompositions behind the two-term recurrences. Both delete the
// cycle around a distinguished point (shrinking it by two when it is longer
// than 3), relabel canonically, and carry exactly the data needed to invert.
// ---------------------------------------------------------------------------

namespace detail {

// Order-preserving relabeling of {0..n-1} minus the sorted `removed` set.
inline std::vector<int> drop_labels(int n, std::vector<int> removed) {
  std::sort(removed.begin(), removed.end());
  std::vector<int> map(n, -1);
  int next = 0;
  size_t r = 0;
  for (int x = 0; x < n; ++x) {
    if (r < removed.size() && removed[r] == x) {
      ++r;
      continue;
    }
    map[x] = next++;
  }
  return map;
}

// Inverse direction: images of {0..m-1} in {0..n-1} minus `removed`.
inline std::vector<int> insert_labels(int n, std::vector<int> removed) {
  std::sort(removed.begin(), removed.end());
  std::vector<int> out;
  size_t r = 0;
  for (int x = 0; x < n; ++x) {
    if (r < removed.size() && removed[r] == x) {
      ++r;
      continue;
    }
    out.push_back(x);
  }
  return out;
}

}  // namespace detail

// Branch record for the recurrence on O-permutations without 1-cycles. The
// distinguished point is the largest element n-1. Short case (cycle length
// exactly 3): the whole cycle (i, j, n-1) is deleted and i, j are remembered
// as raw labels. Long case: j = sigma^{-1}(n-1) and n-1 are spliced out and
// the reinsertion anchor i is remembered as a label of the reduced
// permutation.
struct BetaBranch {
  bool long_case = false;
  OPermutation reduced;
  int i = -1;
  int j = -1;
};

inline BetaBranch beta_decompose(const OPermutation& op) {
  const int n = op.size();
  if (n < 3 || op.fixed_points() != 0)
    throw InvalidInputError("expected an O-permutation without 1-cycles");
  const int top = n - 1;
  std::vector<int> cyc{top};
  for (int x = op(top); x != top; x = op(x)) cyc.push_back(x);

  if (cyc.size() == 3) {
    const int i = op(top);
    const int j = op(i);
    auto map = detail::drop_labels(n, {i, j, top});
    std::vector<int> img(n - 3, -1);
    for (int x = 0; x < n; ++x)
      if (map[x] >= 0) img[map[x]] = map[op(x)];
    return {false, OPermutation(Permutation(std::move(img))), i, j};
  }
  const int j = op.perm().preimage(top);
  const int i = op.perm().preimage(j);
  auto map = detail::drop_labels(n, {j, top});
  std::vector<int> img(n - 2, -1);
  for (int x = 0; x < n; ++x) {
    if (map[x] < 0) continue;
    int y = (x == i) ? op(top) : op(x);  // splice i -> old successor of n-1
    img[map[x]] = map[y];
  }
  return {true, OPermutation(Permutation(std::move(img))), map[i], j};
}

inline OPermutation beta_compose(const BetaBranch& br) {
  const int m = br.reduced.size();
  if (br.long_case) {
    const int n = m + 2;
    if (br.j < 0 || br.j >= n - 1 || br.i < 0 || br.i >= m)
      throw InvalidInputError("branch labels out of range");
    auto lift = detail::insert_labels(n, {br.j, n - 1});
    std::vector<int> img(n, -1);
    for (int x = 0; x < m; ++x) img[lift[x]] = lift[br.reduced(x)];
    const int i = lift[br.i];
    img[br.j] = n - 1;
    img[n - 1] = img[i];
    img[i] = br.j;
    return OPermutation(Permutation(std::move(img)));
  }
  const int n = m + 3;
  if (br.i < 0 || br.j < 0 || br.i >= n - 1 || br.j >= n - 1 || br.i == br.j)
    throw InvalidInputError("branch labels out of range");
  auto lift = detail::insert_labels(n, {br.i, br.j, n - 1});
  std::vector<int> img(n, -1);
  for (int x = 0; x < m; ++x) img[lift[x]] = lift[br.reduced(x)];
  img[br.i] = br.j;
  img[br.j] = n - 1;
  img[n - 1] = br.i;
  return OPermutation(Permutation(std::move(img)));
}

// Branch record for the recurrence on O-trees without 1-cycles, at a labeled
// vertex v. The tree side applies the contraction of remy.hpp two or three
// times (at v and its cyclic predecessors); the permutation side mirrors the
// short/long cases above. Signed corners are recorded in contraction order.
struct KappaBranch {
  bool long_case = false;
  OTree reduced;
  int corner1 = 0;
  Sign sign1 = Sign::Plus;
  int corner2 = 0;
  Sign sign2 = Sign::Plus;
  int corner3 = 0;  // short case only
  Sign sign3 = Sign::Plus;
  int anchor = -1;  // long case: reinsertion anchor in `reduced`
};

inline KappaBranch kappa_decompose(const OTree& ot, int v) {
  const auto& sigma = ot.sigma;
  const int n = sigma.size();
  if (sigma.fixed_points() != 0)
    throw InvalidInputError("expected an O-tree without 1-cycles");
  if (sigma.genus() < 2)
    throw InvalidInputError("decomposition needs genus >= 2");
  if (v < 0 || v >= n) throw InvalidInputError("vertex out of range");

  std::vector<int> cyc{v};
  for (int x = sigma(v); x != v; x = sigma(x)) cyc.push_back(x);

  if (cyc.size() > 3) {
    const int v2 = sigma.perm().preimage(v);
    const int v1 = sigma.perm().preimage(v2);
    auto rc1 = remy_contract(ot.tree, v);
    auto rc2 = remy_contract(rc1.tree, rc1.old_to_new[v2]);
    std::vector<int> map(n, -1);
    for (int x = 0; x < n; ++x)
      if (rc1.old_to_new[x] >= 0) map[x] = rc2.old_to_new[rc1.old_to_new[x]];
    std::vector<int> img(n - 2, -1);
    for (int x = 0; x < n; ++x) {
      if (map[x] < 0) continue;
      int y = (x == v1) ? sigma(v) : sigma(x);
      img[map[x]] = map[y];
    }
    OTree reduced(std::move(rc2.tree),
                  OPermutation(Permutation(std::move(img))));
    return {true,     std::move(reduced), rc1.corner, rc1.sign, rc2.corner,
            rc2.sign, 0,                  Sign::Plus, map[v1]};
  }

  const int v1 = sigma(v);
  const int v2 = sigma(v1);
  auto rc1 = remy_contract(ot.tree, v);
  auto rc2 = remy_contract(rc1.tree, rc1.old_to_new[v1]);
  auto rc3 = remy_contract(rc2.tree, rc2.old_to_new[rc1.old_to_new[v2]]);
  std::vector<int> map(n, -1);
  for (int x = 0; x < n; ++x) {
    int a = rc1.old_to_new[x];
    if (a < 0) continue;
    int b = rc2.old_to_new[a];
    if (b < 0) continue;
    map[x] = rc3.old_to_new[b];
  }
  std::vector<int> img(n - 3, -1);
  for (int x = 0; x < n; ++x)
    if (map[x] >= 0) img[map[x]] = map[sigma(x)];
  OTree reduced(std::move(rc3.tree), OPermutation(Permutation(std::move(img))));
  return {false,    std::move(reduced), rc1.corner, rc1.sign, rc2.corner,
          rc2.sign, rc3.corner,         rc3.sign,   -1};
}

inline std::pair<OTree, int> kappa_compose(const KappaBranch& br) {
  const int m = br.reduced.sigma.size();
  if (br.long_case) {
    auto ex2 = remy_expand(br.reduced.tree, br.corner2, br.sign2);
    auto ex1 = remy_expand(ex2.tree, br.corner1, br.sign1);
    const int n = m + 2;
    const int v = ex1.vertex;
    const int v2 = ex1.old_to_new[ex2.vertex];
    std::vector<int> lift(m, -1);
    for (int x = 0; x < m; ++x) lift[x] = ex1.old_to_new[ex2.old_to_new[x]];
    if (br.anchor < 0 || br.anchor >= m)
      throw InvalidInputError("anchor out of range");
    const int v1 = lift[br.anchor];
    std::vector<int> img(n, -1);
    for (int x = 0; x < m; ++x) img[lift[x]] = lift[br.reduced.sigma(x)];
    img[v2] = v;
    img[v] = img[v1];
    img[v1] = v2;
    return {OTree(std::move(ex1.tree), OPermutation(Permutation(std::move(img)))),
            v};
  }
  auto ex3 = remy_expand(br.reduced.tree, br.corner3, br.sign3);
  auto ex2 = remy_expand(ex3.tree, br.corner2, br.sign2);
  auto ex1 = remy_expand(ex2.tree, br.corner1, br.sign1);
  const int n = m + 3;
  const int v = ex1.vertex;
  const int v1 = ex1.old_to_new[ex2.vertex];
  const int v2 = ex1.old_to_new[ex2.old_to_new[ex3.vertex]];
  std::vector<int> img(n, -1);
  for (int x = 0; x < m; ++x) {
    int y = ex1.old_to_new[ex2.old_to_new[ex3.old_to_new[x]]];
    img[y] = ex1.old_to_new[ex2.old_to_new[ex3.old_to_new[br.reduced.sigma(x)]]];
  }
  img[v1] = v2;
  img[v2] = v;
  img[v] = v1;
  return {OTree(std::move(ex1.tree), OPermutation(Permutation(std::move(img)))),
          v};
}

}  // namespace unimap
