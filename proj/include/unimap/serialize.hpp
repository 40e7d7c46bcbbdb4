#pragma once

#include <json.hpp>

#include <string>
#include <vector>

#include "unimap/glued_map.hpp"
#include "unimap/otree.hpp"
#include "unimap/permutation.hpp"
#include "unimap/plane_tree.hpp"
#include "unimap/sign.hpp"

namespace unimap {

// Canonical text forms used by the CLI and fixtures. Elements are printed
// 1-based; internally everything is 0-based.

inline std::string to_text(const Permutation& p) {
  std::string out = "[";
  for (int i = 0; i < p.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(p(i) + 1);
  }
  out += ']';
  return out;
}

inline std::string to_text(const PlaneTree& t) { return t.code(); }

inline std::string to_text(const GluedMap& m) {
  std::string out = "[";
  bool first = true;
  const auto& a = m.alpha();
  for (int i = 0; i < static_cast<int>(a.size()); ++i) {
    if (a[i] < i) continue;
    if (!first) out += ',';
    first = false;
    out += '[' + std::to_string(i + 1) + ',' + std::to_string(a[i] + 1) + ']';
  }
  out += ']';
  return out;
}

inline std::string cycle_text(const OPermutation& op) {
  std::string out;
  for (const auto& c : op.cycles_canonical()) {
    out += '(';
    for (size_t i = 0; i < c.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(c[i] + 1);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

inline nlohmann::json to_json(const Permutation& p) { return to_text(p); }

inline nlohmann::json to_json(const OPermutation& op) {
  return {{"images", to_text(op.perm())}, {"cycles", cycle_text(op)}};
}

inline nlohmann::json to_json(const PlaneTree& t) { return t.code(); }

inline nlohmann::json to_json(const OTree& ot) {
  return {{"tree", ot.tree.code()},
          {"sigma", to_text(ot.sigma.perm())},
          {"genus", ot.genus()}};
}

inline nlohmann::json to_json(const GluedMap& m) { return to_text(m); }

inline nlohmann::json to_json(const SignSeq& s) { return sign_text(s); }

}  // namespace unimap
