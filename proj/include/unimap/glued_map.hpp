#pragma once

#include <algorithm>
#include <cassert>
#include <utility>
#include <vector>

#include "unimap/errors.hpp"

namespace unimap {

// Unicellular map with n edges given as a fixed-point-free involution alpha
// on the 2n polygon sides 0..2n-1. The vertex permutation is gamma∘alpha
// with gamma the cyclic successor i -> i+1 (mod 2n); its cycles are the map
// vertices and the cycle containing side 0 is the root vertex.
class GluedMap {
 public:
  explicit GluedMap(std::vector<int> alpha) : alpha_(std::move(alpha)) {
    const int m = static_cast<int>(alpha_.size());
    if (m % 2 != 0) throw InvalidInputError("gluing needs an even side count");
    for (int i = 0; i < m; ++i) {
      if (alpha_[i] < 0 || alpha_[i] >= m || alpha_[alpha_[i]] != i)
        throw InvalidInputError("gluing is not an involution");
      if (alpha_[i] == i)
        throw InvalidInputError("gluing has a fixed point");
    }
  }

  static GluedMap from_pairs(int n,
                             const std::vector<std::pair<int, int>>& pairs) {
    std::vector<int> alpha(2 * n, -1);
    for (const auto& [a, b] : pairs) {
      if (a < 0 || b < 0 || a >= 2 * n || b >= 2 * n || alpha[a] != -1 ||
          alpha[b] != -1 || a == b)
        throw InvalidInputError("invalid side pairing");
      alpha[a] = b;
      alpha[b] = a;
    }
    return GluedMap(std::move(alpha));
  }

  int edges() const { return static_cast<int>(alpha_.size()) / 2; }
  const std::vector<int>& alpha() const { return alpha_; }

  int vertex_image(int i) const {
    return (alpha_[i] + 1) % static_cast<int>(alpha_.size());
  }

  std::vector<std::vector<int>> vertex_cycles() const {
    const int m = static_cast<int>(alpha_.size());
    std::vector<std::vector<int>> out;
    std::vector<char> seen(m, 0);
    for (int i = 0; i < m; ++i) {
      if (seen[i]) continue;
      std::vector<int> c;
      int j = i;
      while (!seen[j]) {
        seen[j] = 1;
        c.push_back(j);
        j = vertex_image(j);
      }
      out.push_back(std::move(c));
    }
    return out;
  }

  int genus() const {
    const int n = edges();
    int l = 0;
    const int m = 2 * n;
    std::vector<char> seen(m, 0);
    for (int i = 0; i < m; ++i) {
      if (seen[i]) continue;
      ++l;
      for (int j = i; !seen[j]; j = vertex_image(j)) seen[j] = 1;
    }
    assert((n + 1 - l) % 2 == 0);
    return (n + 1 - l) / 2;
  }

  // Vertex degrees are the cycle lengths of the vertex permutation, plus one
  // at the root vertex for the plant edge. Returned sorted ascending.
  std::vector<int> degree_multiset() const {
    auto cycles = vertex_cycles();
    std::vector<int> deg;
    deg.reserve(cycles.size());
    for (size_t i = 0; i < cycles.size(); ++i) {
      int d = static_cast<int>(cycles[i].size());
      if (std::find(cycles[i].begin(), cycles[i].end(), 0) != cycles[i].end())
        d += 1;
      deg.push_back(d);
    }
    std::sort(deg.begin(), deg.end());
    return deg;
  }

  bool is_shape() const {
    auto deg = degree_multiset();
    return !deg.empty() && deg.front() >= 3;
  }

  bool operator==(const GluedMap& o) const { return alpha_ == o.alpha_; }

 private:
  std::vector<int> alpha_;
};

}  // namespace unimap
