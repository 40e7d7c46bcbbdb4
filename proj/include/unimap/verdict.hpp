#pragma once

#include <string>
#include <utility>

namespace unimap {

// Outcome of an identity/consistency check. A failing verdict always carries
// a witness describing the first counterexample found.
struct Verdict {
  bool pass = true;
  std::string witness;

  static Verdict ok() { return {}; }
  static Verdict fail(std::string w) { return {false, std::move(w)}; }
  explicit operator bool() const { return pass; }

  // Keeps the first failure.
  Verdict& operator&=(const Verdict& o) {
    if (pass && !o.pass) *this = o;
    return *this;
  }
};

}  // namespace unimap
