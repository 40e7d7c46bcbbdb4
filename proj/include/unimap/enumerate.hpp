#pragma once

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "unimap/errors.hpp"
#include "unimap/glued_map.hpp"
#include "unimap/ints.hpp"
#include "unimap/otree.hpp"
#include "unimap/parallel.hpp"
#include "unimap/partition.hpp"
#include "unimap/permutation.hpp"
#include "unimap/plane_tree.hpp"
#include "unimap/verdict.hpp"

namespace unimap {

// Exhaustive generation caps. Polygon-gluing enumeration costs (2n-1)!!; runs
// beyond the hard cap are refused unless forced. UNIMAP_HARD_CAP overrides
// the default cap value.
struct EnumConfig {
  int max_n = 8;        // gluing edge cap backing the default hard cap
  int max_elems = 10;   // element cap for O-permutation generation
  int threads = 0;      // 0 = hardware concurrency
  bool force = false;
};

inline Int gluing_hard_cap() {
  if (const char* env = std::getenv("UNIMAP_HARD_CAP")) {
    try {
      return Int(env);
    } catch (const std::invalid_argument&) {
      throw InvalidInputError("UNIMAP_HARD_CAP is not an integer");
    }
  }
  return double_factorial(2 * 8 - 1);
}

inline void check_gluing_cap(int n, const EnumConfig& cfg) {
  if (cfg.force) return;
  Int work = double_factorial(2 * n - 1);
  Int cap = gluing_hard_cap();
  if (n > cfg.max_n && work > cap)
    throw CapExceededError("gluing enumeration at n=" + std::to_string(n) +
                           " needs " + work.get_str() +
                           " involutions (cap " + cap.get_str() +
                           "); pass --force to override");
}

inline void check_elem_cap(int n, const EnumConfig& cfg) {
  if (cfg.force) return;
  if (n > cfg.max_elems)
    throw CapExceededError("O-permutation generation capped at " +
                           std::to_string(cfg.max_elems) + " elements");
}

// --------------------------------------------------------------------------
// Plane trees, in lexicographic Dyck order.
// --------------------------------------------------------------------------

namespace detail {

template <class F>
void dyck_rec(std::string& word, int open, int close, int n, F& f) {
  if (static_cast<int>(word.size()) == 2 * n) {
    f(word);
    return;
  }
  if (open < n) {
    word.push_back('(');
    dyck_rec(word, open + 1, close, n, f);
    word.pop_back();
  }
  if (close < open) {
    word.push_back(')');
    dyck_rec(word, open, close + 1, n, f);
    word.pop_back();
  }
}

}  // namespace detail

template <class F>
void for_each_plane_tree(int n, F&& f, const EnumConfig& cfg = {}) {
  if (n < 0) throw InvalidInputError("negative edge count");
  if (!cfg.force && n > 15)
    throw CapExceededError("plane-tree enumeration capped at 15 edges");
  std::string word;
  auto emit = [&](const std::string& w) { f(PlaneTree(w)); };
  detail::dyck_rec(word, 0, 0, n, emit);
}

inline std::vector<PlaneTree> all_plane_trees(int n,
                                              const EnumConfig& cfg = {}) {
  std::vector<PlaneTree> out;
  for_each_plane_tree(n, [&](const PlaneTree& t) { out.push_back(t); }, cfg);
  return out;
}

// --------------------------------------------------------------------------
// O-permutations, generated by cycle type: pick a partition of n into odd
// parts, then all ways to fill the cycles. The smallest free element anchors
// each new cycle, so every permutation appears exactly once.
// --------------------------------------------------------------------------

namespace detail {

template <class F>
void fill_cycles(std::vector<int>& free_elems,
                 std::vector<std::pair<int, int>>& parts,  // length -> count
                 std::vector<std::vector<int>>& acc, F& f) {
  if (free_elems.empty()) {
    f(acc);
    return;
  }
  const int anchor = free_elems.front();
  for (auto& [len, count] : parts) {
    if (count == 0) continue;
    if (len > static_cast<int>(free_elems.size())) continue;
    --count;
    // Choose len-1 companions among free_elems[1..], then every arrangement.
    const int need = len - 1;
    std::vector<int> idx(need);
    for (int i = 0; i < need; ++i) idx[i] = i + 1;
    for (;;) {
      std::vector<int> chosen(need);
      for (int i = 0; i < need; ++i) chosen[i] = free_elems[idx[i]];
      std::sort(chosen.begin(), chosen.end());
      do {
        std::vector<int> cycle;
        cycle.reserve(len);
        cycle.push_back(anchor);
        cycle.insert(cycle.end(), chosen.begin(), chosen.end());
        std::vector<int> rest;
        rest.reserve(free_elems.size() - len);
        {
          std::vector<char> taken(free_elems.size(), 0);
          taken[0] = 1;
          for (int i = 0; i < need; ++i) taken[idx[i]] = 1;
          for (size_t i = 0; i < free_elems.size(); ++i)
            if (!taken[i]) rest.push_back(free_elems[i]);
        }
        acc.push_back(std::move(cycle));
        std::swap(free_elems, rest);
        fill_cycles(free_elems, parts, acc, f);
        std::swap(free_elems, rest);
        acc.pop_back();
      } while (std::next_permutation(chosen.begin(), chosen.end()));
      // next combination of indices
      if (need == 0) break;
      int i = need - 1;
      while (i >= 0 &&
             idx[i] == static_cast<int>(free_elems.size()) - need + i)
        --i;
      if (i < 0) break;
      ++idx[i];
      for (int j = i + 1; j < need; ++j) idx[j] = idx[j - 1] + 1;
    }
    ++count;
  }
}

template <class F>
void gen_with_part_list(int n, const std::vector<long>& part_list, F& f) {
  std::vector<std::pair<int, int>> parts;  // distinct length -> multiplicity
  for (long p : part_list) {
    if (!parts.empty() && parts.back().first == static_cast<int>(p))
      parts.back().second += 1;
    else
      parts.emplace_back(static_cast<int>(p), 1);
  }
  std::vector<int> free_elems(n);
  for (int i = 0; i < n; ++i) free_elems[i] = i;
  std::vector<std::vector<int>> acc;
  auto emit = [&](const std::vector<std::vector<int>>& cycles) {
    f(OPermutation(Permutation::from_cycles(n, cycles)));
  };
  fill_cycles(free_elems, parts, acc, emit);
}

}  // namespace detail

template <class F>
void for_each_opermutation(int n, std::optional<int> genus, F&& f,
                           const EnumConfig& cfg = {}) {
  if (n < 0) throw InvalidInputError("negative element count");
  check_elem_cap(n, cfg);
  if (n == 0) {
    if (!genus || *genus == 0) f(OPermutation(Permutation::identity(0)));
    return;
  }
  for_each_odd_partition(n, [&](const std::vector<long>& parts) {
    if (genus) {
      int l = static_cast<int>(parts.size());
      if ((n - l) / 2 != *genus) return;
    }
    detail::gen_with_part_list(n, parts, f);
  });
}

inline std::vector<OPermutation> all_opermutations(int n,
                                                   std::optional<int> genus,
                                                   const EnumConfig& cfg = {}) {
  std::vector<OPermutation> out;
  for_each_opermutation(n, genus, [&](const OPermutation& p) { out.push_back(p); },
                        cfg);
  return out;
}

// All of O_{g,t,k}: genus g, t odd cycles of length > 1, k fixed points,
// hence 2g+t+k elements.
template <class F>
void for_each_opermutation_tk(int g, int t, int k, F&& f,
                              const EnumConfig& cfg = {}) {
  const int n = 2 * g + t + k;
  check_elem_cap(n, cfg);
  if (g == 0 && t == 0) {
    if (k == n) f(OPermutation(Permutation::identity(n)));
    return;
  }
  for_each_partition_with_parts(g, t, [&](const Partition& gamma) {
    std::vector<long> parts;  // descending odd parts, then the k ones
    for (size_t i = gamma.mult.size(); i-- > 0;)
      for (long r = 0; r < gamma.mult[i]; ++r)
        parts.push_back(2 * static_cast<long>(i + 1) + 1);
    for (int r = 0; r < k; ++r) parts.push_back(1);
    detail::gen_with_part_list(n, parts, f);
  });
}

// --------------------------------------------------------------------------
// Polygon gluings: fixed-point-free involutions on 2n points, sharded by the
// partner of point 0 (2n-1 shards).
// --------------------------------------------------------------------------

namespace detail {

template <class F>
void involutions_rec(std::vector<int>& alpha, std::vector<char>& used,
                     int points, int scan_from, F& f) {
  int a = scan_from;
  while (a < points && used[a]) ++a;
  if (a == points) {
    f(alpha);
    return;
  }
  used[a] = 1;
  for (int b = a + 1; b < points; ++b) {
    if (used[b]) continue;
    used[b] = 1;
    alpha[a] = b;
    alpha[b] = a;
    involutions_rec(alpha, used, points, a + 1, f);
    used[b] = 0;
  }
  used[a] = 0;
}

}  // namespace detail

// One shard: point 0 paired with shard+1. The callback receives the raw
// involution images; wrap in GluedMap only when the object itself is needed.
template <class F>
void for_each_involution_shard(int points, int shard, F&& f) {
  assert(points >= 2 && shard + 1 < points);
  std::vector<int> alpha(points, -1);
  std::vector<char> used(points, 0);
  alpha[0] = shard + 1;
  alpha[shard + 1] = 0;
  used[0] = used[shard + 1] = 1;
  detail::involutions_rec(alpha, used, points, 1, f);
}

template <class F>
void for_each_involution(int points, F&& f) {
  if (points == 0) return;
  for (int s = 0; s + 1 < points; ++s)
    for_each_involution_shard(points, s, f);
}

template <class F>
void for_each_glued_map(int n, F&& f, const EnumConfig& cfg = {}) {
  check_gluing_cap(n, cfg);
  for_each_involution(2 * n,
                      [&](const std::vector<int>& a) { f(GluedMap(a)); });
}

namespace detail {

inline int vertex_cycle_count(const std::vector<int>& alpha,
                              std::vector<char>& seen) {
  const int m = static_cast<int>(alpha.size());
  std::fill(seen.begin(), seen.end(), 0);
  int l = 0;
  for (int i = 0; i < m; ++i) {
    if (seen[i]) continue;
    ++l;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      j = (alpha[j] + 1) % m;
    }
  }
  return l;
}

// Vertex degrees (cycle lengths of gamma∘alpha, +1 on the cycle through 0);
// returns false as soon as a degree < 3 shows up when `all_at_least_3`.
inline bool degrees_all_at_least_3(const std::vector<int>& alpha,
                                   std::vector<char>& seen) {
  const int m = static_cast<int>(alpha.size());
  std::fill(seen.begin(), seen.end(), 0);
  for (int i = 0; i < m; ++i) {
    if (seen[i]) continue;
    int len = 0;
    bool has0 = false;
    int j = i;
    while (!seen[j]) {
      seen[j] = 1;
      if (j == 0) has0 = true;
      ++len;
      j = (alpha[j] + 1) % m;
    }
    if (len + (has0 ? 1 : 0) < 3) return false;
  }
  return true;
}

}  // namespace detail

// Counts of genus-g gluings of the 2n-gon, indexed by g. Row sum (2n-1)!!.
inline std::vector<Int> epsilon_brute(int n, const EnumConfig& cfg = {}) {
  if (n < 0) throw InvalidInputError("negative edge count");
  if (n == 0) return {Int(1)};
  check_gluing_cap(n, cfg);
  const int shards = 2 * n - 1;
  auto partial = run_sharded<std::vector<unsigned long>>(
      shards, cfg.threads, [&](int s) {
        std::vector<unsigned long> counts(n / 2 + 1, 0);
        std::vector<char> seen(2 * n, 0);
        for_each_involution_shard(2 * n, s, [&](const std::vector<int>& a) {
          int l = detail::vertex_cycle_count(a, seen);
          assert((n + 1 - l) % 2 == 0);
          counts[(n + 1 - l) / 2] += 1;
        });
        return counts;
      });
  std::vector<Int> out(n / 2 + 1, Int(0));
  for (const auto& p : partial)
    for (size_t g = 0; g < p.size(); ++g) out[g] += p[g];
  return out;
}

// Counts of genus-g shapes (every vertex degree >= 3, plant included at the
// root) among gluings of the 2n-gon.
inline std::vector<Int> shapes_brute(int n, const EnumConfig& cfg = {}) {
  if (n < 0) throw InvalidInputError("negative edge count");
  if (n == 0) return {Int(0)};
  check_gluing_cap(n, cfg);
  const int shards = 2 * n - 1;
  auto partial = run_sharded<std::vector<unsigned long>>(
      shards, cfg.threads, [&](int s) {
        std::vector<unsigned long> counts(n / 2 + 1, 0);
        std::vector<char> seen(2 * n, 0);
        for_each_involution_shard(2 * n, s, [&](const std::vector<int>& a) {
          if (!detail::degrees_all_at_least_3(a, seen)) return;
          int l = detail::vertex_cycle_count(a, seen);
          counts[(n + 1 - l) / 2] += 1;
        });
        return counts;
      });
  std::vector<Int> out(n / 2 + 1, Int(0));
  for (const auto& p : partial)
    for (size_t g = 0; g < p.size(); ++g) out[g] += p[g];
  return out;
}

// --------------------------------------------------------------------------
// O-tree side brute force.
// --------------------------------------------------------------------------

namespace detail {

// Flattened cycle structure of one O-permutation, for tight inner loops.
struct SigmaCycles {
  int genus = 0;
  std::vector<int> elems;    // cycles back to back, ascending minima
  std::vector<int> offsets;  // cycle i = elems[offsets[i]..offsets[i+1])
};

inline SigmaCycles flatten(const OPermutation& op) {
  SigmaCycles sc;
  sc.genus = op.genus();
  sc.offsets.push_back(0);
  for (const auto& c : op.cycles_by_min()) {
    sc.elems.insert(sc.elems.end(), c.begin(), c.end());
    sc.offsets.push_back(static_cast<int>(sc.elems.size()));
  }
  return sc;
}

// The first cycle contains vertex 0 (ascending minima), so the plant's +1
// applies to it alone.
inline bool shape_check(const std::vector<int>& tree_deg,
                        const SigmaCycles& sc) {
  const int cycles = static_cast<int>(sc.offsets.size()) - 1;
  for (int c = 0; c < cycles; ++c) {
    int d = (c == 0) ? 1 : 0;
    for (int i = sc.offsets[c]; i < sc.offsets[c + 1]; ++i)
      d += tree_deg[sc.elems[i]];
    if (d < 3) return false;
  }
  return true;
}

inline std::vector<int> tree_degrees(const PlaneTree& t) {
  std::vector<int> deg(t.vertices());
  for (int v = 0; v < t.vertices(); ++v) deg[v] = t.tree_degree(v);
  return deg;
}

}  // namespace detail

// |R_g(n)| for all g at once: pairs (plane tree with n edges, O-permutation
// on n+1 vertices) whose merged vertices all have degree >= 3.
inline std::vector<Int> otree_shape_brute(int n, const EnumConfig& cfg = {}) {
  if (n < 0) throw InvalidInputError("negative edge count");
  check_elem_cap(n + 1, cfg);
  std::vector<detail::SigmaCycles> sigmas;
  for_each_opermutation(
      n + 1, std::nullopt,
      [&](const OPermutation& op) { sigmas.push_back(detail::flatten(op)); },
      cfg);
  auto trees = all_plane_trees(n, cfg);
  auto partial = run_sharded<std::vector<unsigned long>>(
      static_cast<int>(trees.size()), cfg.threads, [&](int ti) {
        std::vector<unsigned long> counts((n + 1) / 2 + 1, 0);
        auto deg = detail::tree_degrees(trees[ti]);
        for (const auto& sc : sigmas)
          if (detail::shape_check(deg, sc)) counts[sc.genus] += 1;
        return counts;
      });
  std::vector<Int> out((n + 1) / 2 + 1, Int(0));
  for (const auto& p : partial)
    for (size_t g = 0; g < p.size(); ++g) out[g] += p[g];
  return out;
}

// Streams R_{g,t,k}: O-trees with the (t,k) signature whose underlying-graph
// degrees are all >= 3. For k = 0 the filter never rejects.
template <class F>
void for_each_R_gtk(int g, int t, int k, F&& f, const EnumConfig& cfg = {}) {
  const int n_edges = 2 * g + t + k - 1;
  if (n_edges < 0) return;
  auto trees = all_plane_trees(n_edges, cfg);
  std::vector<std::vector<int>> degs;
  degs.reserve(trees.size());
  for (const auto& t2 : trees) degs.push_back(detail::tree_degrees(t2));
  for_each_opermutation_tk(g, t, k, [&](const OPermutation& op) {
    auto sc = detail::flatten(op);
    for (size_t ti = 0; ti < trees.size(); ++ti)
      if (detail::shape_check(degs[ti], sc)) f(OTree(trees[ti], op));
  }, cfg);
}

inline Int count_R_gtk(int g, int t, int k, const EnumConfig& cfg = {}) {
  const int n_edges = 2 * g + t + k - 1;
  if (n_edges < 0) return 0;
  auto trees = all_plane_trees(n_edges, cfg);
  std::vector<std::vector<int>> degs;
  degs.reserve(trees.size());
  for (const auto& t2 : trees) degs.push_back(detail::tree_degrees(t2));
  unsigned long count = 0;
  for_each_opermutation_tk(g, t, k, [&](const OPermutation& op) {
    auto sc = detail::flatten(op);
    for (const auto& d : degs)
      if (detail::shape_check(d, sc)) ++count;
  }, cfg);
  return Int(count);
}

// --------------------------------------------------------------------------
// Degree-sequence multiset comparison: every genus-g gluing of the 2n-gon,
// taken 2^{2g} times, against every O-tree in E_0(n) x O_g(n+1).
// --------------------------------------------------------------------------

struct DegreeMultisetReport {
  Verdict verdict;
  Int map_side_objects{0};
  Int tree_side_objects{0};
};

inline DegreeMultisetReport degree_multiset_check(int n, int g,
                                                  const EnumConfig& cfg = {}) {
  using Key = std::vector<int>;
  DegreeMultisetReport rep;

  std::map<Key, Int> map_side;
  if (n == 0) {
    if (g == 0) map_side[{1}] = 1;  // the one-vertex map, plant only
  } else {
    check_gluing_cap(n, cfg);
    const int shards = 2 * n - 1;
    auto partial = run_sharded<std::map<Key, unsigned long>>(
        shards, cfg.threads, [&](int s) {
          std::map<Key, unsigned long> acc;
          for_each_involution_shard(2 * n, s, [&](const std::vector<int>& a) {
            GluedMap m(a);
            if (m.genus() != g) return;
            acc[m.degree_multiset()] += 1;
          });
          return acc;
        });
    for (const auto& p : partial)
      for (const auto& [k, v] : p) map_side[k] += v;
  }
  const Int scale = pow2(2 * g);
  for (auto& [k, v] : map_side) {
    rep.map_side_objects += v;
    v *= scale;
  }

  std::map<Key, Int> tree_side;
  {
    std::vector<OPermutation> sigmas = all_opermutations(n + 1, g, cfg);
    auto trees = all_plane_trees(n, cfg);
    auto partial = run_sharded<std::map<Key, unsigned long>>(
        static_cast<int>(trees.size()), cfg.threads, [&](int ti) {
          std::map<Key, unsigned long> acc;
          for (const auto& op : sigmas) {
            OTree ot(trees[ti], op);
            acc[underlying_graph(ot).degree_multiset()] += 1;
          }
          return acc;
        });
    for (const auto& p : partial)
      for (const auto& [k, v] : p) tree_side[k] += v;
    for (const auto& [k, v] : tree_side) rep.tree_side_objects += v;
  }

  if (map_side == tree_side) {
    rep.verdict = Verdict::ok();
    return rep;
  }
  std::ostringstream w;
  w << "degree multisets differ at n=" << n << " g=" << g << ": ";
  std::map<Key, char> keys;
  for (const auto& [k, v] : map_side) keys[k] = 0;
  for (const auto& [k, v] : tree_side) keys[k] = 0;
  for (const auto& [k, unused] : keys) {
    auto mi = map_side.find(k);
    auto ti = tree_side.find(k);
    Int mv = mi == map_side.end() ? Int(0) : mi->second;
    Int tv = ti == tree_side.end() ? Int(0) : ti->second;
    if (mv != tv) {
      w << "degrees [";
      for (size_t i = 0; i < k.size(); ++i) w << (i ? "," : "") << k[i];
      w << "] map-side " << mv.get_str() << " tree-side " << tv.get_str();
      break;
    }
  }
  rep.verdict = Verdict::fail(w.str());
  return rep;
}

}  // namespace unimap
