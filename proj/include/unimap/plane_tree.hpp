#pragma once

#include <string>
#include <utility>
#include <vector>

#include "unimap/errors.hpp"

namespace unimap {

// Rooted (planted) plane tree, canonically encoded as a balanced-parenthesis
// word read off the boundary walk. Vertices carry their left-to-right
// depth-first numbers, root = 0.
//
// Corners (sectors): a tree with n edges has 2n+1 of them, indexed 0..2n in
// boundary-walk order starting just after the plant edge. Around a vertex
// with m children there are m+1 corner slots; slot j sits immediately before
// child j (slot m is the last one, before the walk leaves the vertex). The
// plant edge splits the root corner, which is why the root gets one extra.
class PlaneTree {
 public:
  PlaneTree() { build(); }

  explicit PlaneTree(std::string code) : code_(std::move(code)) { build(); }

  static PlaneTree single_vertex() { return PlaneTree(std::string()); }

  int edges() const { return n_; }
  int vertices() const { return n_ + 1; }
  const std::string& code() const { return code_; }

  int parent(int v) const { return parent_[v]; }
  const std::vector<int>& children(int v) const { return kids_[v]; }

  // Degree in the tree itself; the plant is accounted for by callers.
  int tree_degree(int v) const {
    return static_cast<int>(kids_[v].size()) + (v == 0 ? 0 : 1);
  }

  bool is_leaf(int v) const { return v != 0 && kids_[v].empty(); }

  int corner_count() const { return 2 * n_ + 1; }
  int corner_vertex(int c) const { return corner_vertex_[c]; }
  int corner_slot(int c) const { return corner_slot_[c]; }
  int corner_slots(int v) const { return static_cast<int>(kids_[v].size()) + 1; }
  int corner_id(int v, int slot) const { return vertex_corners_[v][slot]; }
  const std::vector<int>& vertex_corners(int v) const {
    return vertex_corners_[v];
  }

  bool operator==(const PlaneTree& o) const { return code_ == o.code_; }
  bool operator<(const PlaneTree& o) const { return code_ < o.code_; }

 private:
  void build() {
    const size_t len = code_.size();
    if (len % 2 != 0) throw InvalidInputError("tree code has odd length");
    n_ = static_cast<int>(len / 2);
    parent_.assign(n_ + 1, -1);
    kids_.assign(n_ + 1, {});
    int cur = 0, next = 1;
    for (char ch : code_) {
      if (ch == '(') {
        if (next > n_) throw InvalidInputError("unbalanced tree code");
        parent_[next] = cur;
        kids_[cur].push_back(next);
        cur = next++;
      } else if (ch == ')') {
        cur = parent_[cur];
        if (cur == -1) throw InvalidInputError("unbalanced tree code");
      } else {
        throw InvalidInputError("tree code must consist of '(' and ')'");
      }
    }
    if (cur != 0 || next != n_ + 1)
      throw InvalidInputError("unbalanced tree code");

    corner_vertex_.assign(2 * n_ + 1, 0);
    corner_slot_.assign(2 * n_ + 1, 0);
    vertex_corners_.assign(n_ + 1, {});
    std::vector<int> cursor(n_ + 1, 0);
    cur = 0;
    record_corner(0, 0);
    for (int p = 0; p < 2 * n_; ++p) {
      if (code_[p] == '(')
        cur = kids_[cur][cursor[cur]++];
      else
        cur = parent_[cur];
      record_corner(p + 1, cur);
    }
  }

  void record_corner(int c, int v) {
    corner_vertex_[c] = v;
    corner_slot_[c] = static_cast<int>(vertex_corners_[v].size());
    vertex_corners_[v].push_back(c);
  }

  std::string code_;
  int n_ = 0;
  std::vector<int> parent_;
  std::vector<std::vector<int>> kids_;
  std::vector<int> corner_vertex_, corner_slot_;
  std::vector<std::vector<int>> vertex_corners_;
};

// Mutable child-list view used for tree surgery. Vertex ids are stable
// handles; canonical() renumbers the reachable part by left-to-right DFS and
// reports the old-id -> new-id map (-1 for detached vertices).
struct TreeScaffold {
  std::vector<std::vector<int>> kids;
  std::vector<int> parent;
  int root = 0;

  static TreeScaffold of(const PlaneTree& t) {
    TreeScaffold s;
    s.kids.resize(t.vertices());
    s.parent.resize(t.vertices());
    for (int v = 0; v < t.vertices(); ++v) {
      s.kids[v] = t.children(v);
      s.parent[v] = t.parent(v);
    }
    return s;
  }

  int add_vertex() {
    kids.emplace_back();
    parent.push_back(-1);
    return static_cast<int>(kids.size()) - 1;
  }

  std::pair<PlaneTree, std::vector<int>> canonical() const {
    std::vector<int> map(kids.size(), -1);
    std::string code;
    int next = 0;
    map[root] = next++;
    std::vector<std::pair<int, int>> st;
    st.emplace_back(root, 0);
    while (!st.empty()) {
      auto& [v, ci] = st.back();
      if (ci < static_cast<int>(kids[v].size())) {
        int c = kids[v][ci++];
        code.push_back('(');
        map[c] = next++;
        st.emplace_back(c, 0);
      } else {
        st.pop_back();
        if (!st.empty()) code.push_back(')');
      }
    }
    return {PlaneTree(std::move(code)), std::move(map)};
  }
};

}  // namespace unimap
