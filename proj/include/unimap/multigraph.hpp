#pragma once

#include <algorithm>
#include <utility>
#include <vector>

namespace unimap {

// Vertex-rooted multigraph (loops and multiple edges allowed). When `plant`
// is set the root vertex gets one extra degree for the plant edge.
struct Multigraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> edges;  // unordered pairs, first <= second
  int root = 0;
  bool plant = true;

  std::vector<int> degrees() const {
    std::vector<int> deg(vertex_count, 0);
    for (const auto& [a, b] : edges) {
      deg[a] += 1;
      deg[b] += 1;  // a loop contributes 2 to its vertex
    }
    if (plant && vertex_count > 0) deg[root] += 1;
    return deg;
  }

  std::vector<int> degree_multiset() const {
    auto deg = degrees();
    std::sort(deg.begin(), deg.end());
    return deg;
  }
};

}  // namespace unimap
