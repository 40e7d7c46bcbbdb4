#pragma once

#include <string>
#include <vector>

namespace unimap {

enum class Sign : int { Plus = 1, Minus = -1 };

using SignSeq = std::vector<Sign>;

inline char sign_char(Sign s) { return s == Sign::Plus ? '+' : '-'; }

inline std::string sign_text(const SignSeq& s) {
  std::string out = "(";
  for (size_t i = 0; i < s.size(); ++i) {
    if (i) out += ',';
    out += sign_char(s[i]);
  }
  out += ')';
  return out;
}

}  // namespace unimap
