#pragma once

#include <algorithm>
#include <string>
#include <vector>

#include "unimap/errors.hpp"

namespace unimap {

// Permutation of {0..n-1} stored in one-line (image) form.
class Permutation {
 public:
  Permutation() = default;

  explicit Permutation(std::vector<int> images) : img_(std::move(images)) {
    const int n = static_cast<int>(img_.size());
    std::vector<char> seen(n, 0);
    for (int v : img_) {
      if (v < 0 || v >= n || seen[v])
        throw InvalidInputError("permutation images are not a bijection");
      seen[v] = 1;
    }
  }

  static Permutation identity(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    return Permutation(std::move(img));
  }

  // Elements absent from `cycles` are fixed points.
  static Permutation from_cycles(int n,
                                 const std::vector<std::vector<int>>& cycles) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    std::vector<char> seen(n, 0);
    for (const auto& c : cycles) {
      for (size_t i = 0; i < c.size(); ++i) {
        int a = c[i];
        int b = c[(i + 1) % c.size()];
        if (a < 0 || a >= n || seen[a])
          throw InvalidInputError("cycles are not disjoint or out of range");
        seen[a] = 1;
        img[a] = b;
      }
    }
    return Permutation(std::move(img));
  }

  int size() const { return static_cast<int>(img_.size()); }
  int operator()(int i) const { return img_[i]; }
  const std::vector<int>& images() const { return img_; }

  int preimage(int v) const {
    for (int i = 0; i < size(); ++i)
      if (img_[i] == v) return i;
    throw InvalidInputError("preimage: value out of range");
  }

  // Cycles each written starting at their minimum, ordered by ascending minima
  // (so the cycle containing 0 comes first).
  std::vector<std::vector<int>> cycles_by_min() const {
    const int n = size();
    std::vector<std::vector<int>> out;
    std::vector<char> done(n, 0);
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      std::vector<int> c;
      int j = i;
      while (!done[j]) {
        done[j] = 1;
        c.push_back(j);
        j = img_[j];
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  int cycle_count() const {
    const int n = size();
    int cnt = 0;
    std::vector<char> done(n, 0);
    for (int i = 0; i < n; ++i) {
      if (done[i]) continue;
      ++cnt;
      for (int j = i; !done[j]; j = img_[j]) done[j] = 1;
    }
    return cnt;
  }

  bool operator==(const Permutation& o) const { return img_ == o.img_; }

 private:
  std::vector<int> img_;
};

// Canonical form: each cycle starts at its minimum and cycles are ordered so
// that the minima descend left to right.
inline std::vector<std::vector<int>> cycles_canonical(const Permutation& p) {
  auto c = p.cycles_by_min();
  std::reverse(c.begin(), c.end());
  return c;
}

inline Permutation permutation_from_canonical(
    int n, const std::vector<std::vector<int>>& cycles) {
  return Permutation::from_cycles(n, cycles);
}

// Permutation whose cycles all have odd length.
class OPermutation {
 public:
  OPermutation() = default;

  explicit OPermutation(Permutation p) : perm_(std::move(p)) {
    cycles_ = perm_.cycles_by_min();
    for (const auto& c : cycles_) {
      if (c.size() % 2 == 0)
        throw EvenCycleError("cycle of even length " +
                             std::to_string(c.size()));
      if (c.size() == 1)
        ++k_;
      else
        ++t_;
    }
    const int n = perm_.size();
    const int l = static_cast<int>(cycles_.size());
    // n and the cycle count have the same parity when all cycles are odd.
    g_ = (n - l) / 2;
  }

  const Permutation& perm() const { return perm_; }
  int size() const { return perm_.size(); }
  int operator()(int i) const { return perm_(i); }
  int genus() const { return g_; }
  int long_cycles() const { return t_; }
  int fixed_points() const { return k_; }
  int cycle_count() const { return static_cast<int>(cycles_.size()); }
  const std::vector<std::vector<int>>& cycles_by_min() const { return cycles_; }

  std::vector<std::vector<int>> cycles_canonical() const {
    auto c = cycles_;
    std::reverse(c.begin(), c.end());
    return c;
  }

  bool is_fixed_point(int i) const { return perm_(i) == i; }

  // Multiset of (odd) cycle lengths, descending.
  std::vector<int> cycle_type() const {
    std::vector<int> t;
    t.reserve(cycles_.size());
    for (const auto& c : cycles_) t.push_back(static_cast<int>(c.size()));
    std::sort(t.rbegin(), t.rend());
    return t;
  }

  bool operator==(const OPermutation& o) const { return perm_ == o.perm_; }

 private:
  Permutation perm_;
  std::vector<std::vector<int>> cycles_;
  int g_ = 0, t_ = 0, k_ = 0;
};

struct OStats {
  int g = 0;
  int t = 0;
  int k = 0;
  std::vector<int> cycle_type;
};

inline OStats opermutation_stats(const OPermutation& op) {
  return {op.genus(), op.long_cycles(), op.fixed_points(), op.cycle_type()};
}

}  // namespace unimap
