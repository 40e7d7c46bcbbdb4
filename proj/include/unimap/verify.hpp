#pragma once

#include <json.hpp>

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <optional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "unimap/analyze.hpp"
#include "unimap/bijection.hpp"
#include "unimap/count.hpp"
#include "unimap/enumerate.hpp"
#include "unimap/serialize.hpp"
#include "unimap/verdict.hpp"

namespace unimap {

// Optional sink receiving one JSON record per checked item (--trace).
using TraceSink = std::function<void(const nlohmann::json&)>;

namespace detail {

inline void trace(const TraceSink* sink, nlohmann::json j) {
  if (sink && *sink) (*sink)(std::move(j));
}

inline std::string seq_text(const std::vector<int>& seq) {
  std::string out = "[";
  for (size_t i = 0; i < seq.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(seq[i] + 1);
  }
  return out + "]";
}

}  // namespace detail

// Round trips psi∘phi over all of S_n and phi∘psi over all (O-permutation,
// sign sequence) pairs, and checks the image partition
// n! = sum_g 2^{n-2g-1} |O_g(n)|.
inline Verdict verify_phi(int n_max, const TraceSink* sink = nullptr) {
  for (int n = 0; n <= n_max; ++n) {
    std::map<int, Int> genus_count;
    std::vector<int> seq(n);
    std::iota(seq.begin(), seq.end(), 0);
    do {
      PhiResult r = phi(seq);
      const int expected_signs = n == 0 ? 0 : n - 2 * r.op.genus() - 1;
      if (static_cast<int>(r.signs.size()) != expected_signs)
        return Verdict::fail("phi sign count wrong for " +
                             detail::seq_text(seq));
      auto back = psi(r.op, r.signs);
      detail::trace(sink, {{"check", "phi"},
                           {"sequence", detail::seq_text(seq)},
                           {"cycles", cycle_text(r.op)},
                           {"signs", sign_text(r.signs)},
                           {"round_trip", back == seq}});
      if (back != seq)
        return Verdict::fail("psi(phi(s)) != s for s=" +
                             detail::seq_text(seq));
      genus_count[r.op.genus()] += 1;
    } while (std::next_permutation(seq.begin(), seq.end()));

    // Forward direction pairs and the image partition.
    Int total(0);
    for (int g = 0; 2 * g <= std::max(0, n - 1); ++g) {
      Int count(0);
      Verdict bad = Verdict::ok();
      for_each_opermutation(n, g, [&](const OPermutation& op) {
        if (!bad.pass) return;
        count += 1;
        const int signs_len = n == 0 ? 0 : n - 2 * g - 1;
        std::vector<Sign> signs(signs_len, Sign::Plus);
        for (long mask = 0; mask < (1L << signs_len); ++mask) {
          for (int b = 0; b < signs_len; ++b)
            signs[b] = (mask >> b) & 1 ? Sign::Minus : Sign::Plus;
          auto seq2 = psi(op, signs);
          PhiResult r2 = phi(seq2);
          if (!(r2.op == op) || r2.signs != signs) {
            bad = Verdict::fail("phi(psi(op,s)) != (op,s) for op=" +
                                cycle_text(op) + " s=" + sign_text(signs));
            return;
          }
        }
      });
      if (!bad.pass) return bad;
      Int fiber = pow2(std::max(0, n - 2 * g - 1)) * count;
      if (n >= 1 && fiber != genus_count[g])
        return Verdict::fail("genus class sizes disagree at n=" +
                             std::to_string(n) + " g=" + std::to_string(g));
      total += fiber;
    }
    if (n >= 1 && total != factorial(n))
      return Verdict::fail("image partition identity fails at n=" +
                           std::to_string(n));
  }
  return Verdict::ok();
}

// Contraction/expansion round trips in both directions plus the counting law
// (n+1) Cat(n) = 2(2n-1) Cat(n-1).
inline Verdict verify_remy(int n_max, const TraceSink* sink = nullptr) {
  for (int n = 1; n <= n_max; ++n) {
    Int pairs(0);
    std::map<std::pair<std::string, int>, int> hits;
    for_each_plane_tree(n, [&](const PlaneTree& t) {
      for (int v = 0; v < t.vertices(); ++v) {
        auto rc = remy_contract(t, v);
        auto ex = remy_expand(rc.tree, rc.corner, rc.sign);
        detail::trace(sink, {{"check", "remy"},
                             {"tree", t.code()},
                             {"vertex", v},
                             {"sign", std::string(1, sign_char(rc.sign))},
                             {"corner", rc.corner}});
        if (!(ex.tree == t) || ex.vertex != v)
          throw DisagreementError("contract/expand round trip fails on " +
                                  t.code() + " at vertex " +
                                  std::to_string(v));
        pairs += 1;
      }
    });
    // Other direction: every (smaller tree, corner, sign) expands to a
    // distinct (tree, vertex) pair and contracts back.
    Int triples(0);
    for_each_plane_tree(n - 1, [&](const PlaneTree& t) {
      for (int c = 0; c < t.corner_count(); ++c) {
        for (Sign s : {Sign::Plus, Sign::Minus}) {
          auto ex = remy_expand(t, c, s);
          auto rc = remy_contract(ex.tree, ex.vertex);
          if (!(rc.tree == t) || rc.corner != c || rc.sign != s)
            throw DisagreementError("expand/contract round trip fails on " +
                                    t.code() + " corner " + std::to_string(c));
          hits[{ex.tree.code(), ex.vertex}] += 1;
          triples += 1;
        }
      }
    });
    if (pairs != triples || pairs != Int(n + 1) * catalan(n) ||
        triples != Int(2) * Int(2 * n - 1) * catalan(n - 1))
      return Verdict::fail("counting law fails at n=" + std::to_string(n));
    for (const auto& [key, mult] : hits)
      if (mult != 1)
        return Verdict::fail("expansion hits a pair twice at n=" +
                             std::to_string(n));
    if (Int(static_cast<long>(hits.size())) != pairs)
      return Verdict::fail("expansion is not onto at n=" + std::to_string(n));
  }
  return Verdict::ok();
}

// Permissible-sector counts: every O-tree in R_{g,t,k} with at most
// `max_edges` edges has exactly 2g+t-k-1 permissible sectors.
inline Verdict verify_permissible(int max_edges,
                                  const TraceSink* sink = nullptr) {
  for (int g = 1; 2 * g <= max_edges; ++g) {
    for (int t = 1; t <= g; ++t) {
      for (int k = 0; 2 * g + t + k - 1 <= max_edges; ++k) {
        const int expected = 2 * g + t - k - 1;
        Verdict bad = Verdict::ok();
        for_each_R_gtk(g, t, k, [&](const OTree& ot) {
          if (!bad.pass) return;
          auto pc = permissible_corners(ot);
          detail::trace(sink, {{"check", "permissible"},
                               {"tree", ot.tree.code()},
                               {"sigma", to_text(ot.sigma.perm())},
                               {"count", pc.size()}});
          if (static_cast<int>(pc.size()) != expected)
            bad = Verdict::fail(
                "permissible count " + std::to_string(pc.size()) + " != " +
                std::to_string(expected) + " on tree " + ot.tree.code() +
                " sigma " + to_text(ot.sigma.perm()));
        });
        if (!bad.pass) return bad;
      }
    }
  }
  return Verdict::ok();
}

// Round trips of the 1-cycle elimination in both directions plus the
// counting law k |R_{g,t,k}| = (2g+t-k) |R_{g,t,k-1}|.
inline Verdict verify_pi(int max_edges, const TraceSink* sink = nullptr) {
  for (int g = 1; 2 * g <= max_edges; ++g) {
    for (int t = 1; t <= g; ++t) {
      std::vector<Int> card;  // |R_{g,t,k}| for k = 0,1,...
      for (int k = 0; 2 * g + t + k - 1 <= max_edges; ++k) {
        Int count(0);
        Verdict bad = Verdict::ok();
        for_each_R_gtk(g, t, k, [&](const OTree& ot) {
          count += 1;
          if (!bad.pass || k == 0) return;
          for (int v = 0; v < ot.sigma.size(); ++v) {
            if (!ot.sigma.is_fixed_point(v)) continue;
            auto fwd = pi_forward(ot, v);
            if (!corner_is_permissible(fwd.out, fwd.corner)) {
              bad = Verdict::fail("pi produced a non-permissible corner");
              return;
            }
            auto inv = pi_inverse(fwd.out, fwd.corner);
            detail::trace(sink, {{"check", "pi"},
                                 {"tree", ot.tree.code()},
                                 {"sigma", to_text(ot.sigma.perm())},
                                 {"vertex", v},
                                 {"corner", fwd.corner}});
            if (!(inv.out == ot) || inv.vertex != v) {
              bad = Verdict::fail("pi round trip fails on tree " +
                                  ot.tree.code() + " sigma " +
                                  to_text(ot.sigma.perm()) + " vertex " +
                                  std::to_string(v));
              return;
            }
          }
        });
        if (!bad.pass) return bad;
        card.push_back(count);
        if (k >= 1) {
          Int lhs = Int(k) * card[k];
          Int rhs = Int(2 * g + t - k) * card[k - 1];
          if (lhs != rhs)
            return Verdict::fail(
                "k|R_{g,t,k}| = (2g+t-k)|R_{g,t,k-1}| fails at g=" +
                std::to_string(g) + " t=" + std::to_string(t) +
                " k=" + std::to_string(k) + ": " + lhs.get_str() + " vs " +
                rhs.get_str());
        }
      }
      // Inverse direction over every permissible corner.
      for (int k = 0; 2 * g + t + k - 1 <= max_edges - 1; ++k) {
        Verdict bad = Verdict::ok();
        for_each_R_gtk(g, t, k, [&](const OTree& ot) {
          if (!bad.pass) return;
          for (int c : permissible_corners(ot)) {
            auto inv = pi_inverse(ot, c);
            if (inv.out.sigma.fixed_points() != k + 1 ||
                !is_shape_tree(inv.out)) {
              bad = Verdict::fail("pi inverse left R at g=" +
                                  std::to_string(g));
              return;
            }
            auto fwd = pi_forward(inv.out, inv.vertex);
            if (!(fwd.out == ot) || fwd.corner != c) {
              bad = Verdict::fail("pi inverse/forward round trip fails");
              return;
            }
          }
        });
        if (!bad.pass) return bad;
      }
    }
  }
  return Verdict::ok();
}

// Splitting at every non-minimal element of every O-permutation on up to
// n_max elements: round trips, the 2g count of valid split points, and the
// class identity 2g |O_g(n)| = sum_k 2^{2k} |O^{(2k+1)}_{g-k}(n)|.
inline Verdict verify_nonminimal(int n_max, const TraceSink* sink = nullptr) {
  for (int n = 1; n <= n_max; ++n) {
    const int g_cap = (n - 1) / 2;
    std::vector<Int> class_size(g_cap + 1, Int(0));
    std::vector<std::vector<int>> cycle_counts(g_cap + 1);
    Verdict bad = Verdict::ok();
    for (int g = 0; g <= g_cap && bad.pass; ++g) {
      for_each_opermutation(n, g, [&](const OPermutation& op) {
        if (!bad.pass) return;
        class_size[g] += 1;
        cycle_counts[g].push_back(op.cycle_count());
        std::vector<char> is_min(n, 0);
        for (const auto& c : op.cycles_by_min()) is_min[c.front()] = 1;
        int nonminimal = 0;
        for (int i = 0; i < n; ++i) {
          if (is_min[i]) continue;
          ++nonminimal;
          auto split = decompose_nonminimal(op, i);
          if (static_cast<int>(split.labeled_minima.size()) % 2 != 1 ||
              split.labeled_minima.size() < 3) {
            bad = Verdict::fail("split arity wrong");
            return;
          }
          auto [back, elem] = compose_nonminimal(
              split.reduced, split.labeled_minima, split.signs);
          detail::trace(sink, {{"check", "nonminimal"},
                               {"cycles", cycle_text(op)},
                               {"element", i + 1},
                               {"reduced", cycle_text(split.reduced)},
                               {"signs", sign_text(split.signs)}});
          if (!(back == op) || elem != i) {
            bad = Verdict::fail("nonminimal round trip fails on " +
                                cycle_text(op) + " at " + std::to_string(i + 1));
            return;
          }
        }
        if (nonminimal != 2 * g) {
          bad = Verdict::fail("O-permutation of genus " + std::to_string(g) +
                              " has " + std::to_string(nonminimal) +
                              " non-minimal elements");
          return;
        }
      });
    }
    if (!bad.pass) return bad;
    for (int g = 1; g <= g_cap; ++g) {
      Int lhs = Int(2 * g) * class_size[g];
      Int rhs(0);
      for (int k = 1; k <= g; ++k)
        for (int l : cycle_counts[g - k])
          rhs += pow2(2 * k) * binomial(l, 2 * k + 1);
      if (lhs != rhs)
        return Verdict::fail("class identity fails at n=" + std::to_string(n) +
                             " g=" + std::to_string(g) + ": " + lhs.get_str() +
                             " vs " + rhs.get_str());
    }
  }
  return Verdict::ok();
}

// Branch decomposition of O_{g,t,0}: round trips both ways and the counting
// law a_{g,t} = (2g+t-1)(2g+t-2)(a_{g-1,t} + a_{g-1,t-1}).
inline Verdict verify_beta(int sum_max, const TraceSink* sink = nullptr) {
  std::map<std::pair<int, int>, Int> counted;
  auto class_count = [&](int g, int t) -> Int {
    if (g == 0 && t == 0) return 1;
    if (t < 1 || t > g) return 0;
    auto it = counted.find({g, t});
    if (it != counted.end()) return it->second;
    Int c(0);
    for_each_opermutation_tk(g, t, 0, [&](const OPermutation&) { c += 1; });
    counted[{g, t}] = c;
    return c;
  };
  for (int g = 1; 2 * g + 1 <= sum_max; ++g) {
    for (int t = 1; t <= g && 2 * g + t <= sum_max; ++t) {
      const int n = 2 * g + t;
      Int cases_long(0), cases_short(0);
      Verdict bad = Verdict::ok();
      for_each_opermutation_tk(g, t, 0, [&](const OPermutation& op) {
        if (!bad.pass) return;
        BetaBranch br = beta_decompose(op);
        (br.long_case ? cases_long : cases_short) += 1;
        OPermutation back = beta_compose(br);
        detail::trace(sink, {{"check", "beta"},
                             {"cycles", cycle_text(op)},
                             {"case", br.long_case ? "G" : "F"},
                             {"reduced", cycle_text(br.reduced)}});
        if (!(back == op)) {
          bad = Verdict::fail("branch round trip fails on " + cycle_text(op));
          return;
        }
        const int want_t = br.long_case ? t : t - 1;
        if (br.reduced.genus() != g - 1 ||
            br.reduced.long_cycles() != want_t ||
            br.reduced.fixed_points() != 0) {
          bad = Verdict::fail("branch lands in the wrong class for " +
                              cycle_text(op));
        }
      });
      if (!bad.pass) return bad;
      Int expect_long = Int(n - 1) * Int(n - 2) * class_count(g - 1, t);
      Int expect_short = Int(n - 1) * Int(n - 2) * class_count(g - 1, t - 1);
      if (cases_long != expect_long || cases_short != expect_short)
        return Verdict::fail(
            "branch class sizes fail at g=" + std::to_string(g) +
            " t=" + std::to_string(t) + ": long " + cases_long.get_str() +
            "/" + expect_long.get_str() + ", short " + cases_short.get_str() +
            "/" + expect_short.get_str());
    }
  }
  return Verdict::ok();
}

// Same for the O-tree branch decomposition (genus >= 2 classes), including
// the law n|R_{g,t,0}| = 2(2n-3) 2(2n-5) ((n-2)|R_{g-1,t,0}| + 2(2n-7)|R_{g-1,t-1,0}|).
inline Verdict verify_kappadec(int max_edges, const TraceSink* sink = nullptr) {
  auto r_count = [&](int g, int t) -> Int {
    if (g < 1 || t < 1 || t > g) return 0;
    return count_R_gtk(g, t, 0);
  };
  for (int g = 2; 2 * g <= max_edges; ++g) {
    for (int t = 1; t <= g && 2 * g + t - 1 <= max_edges; ++t) {
      const int n = 2 * g + t;
      Int labeled(0);
      Verdict bad = Verdict::ok();
      for_each_R_gtk(g, t, 0, [&](const OTree& ot) {
        if (!bad.pass) return;
        for (int v = 0; v < ot.sigma.size(); ++v) {
          labeled += 1;
          KappaBranch br = kappa_decompose(ot, v);
          auto [back, vv] = kappa_compose(br);
          detail::trace(sink, {{"check", "kappadec"},
                               {"tree", ot.tree.code()},
                               {"sigma", to_text(ot.sigma.perm())},
                               {"vertex", v},
                               {"case", br.long_case ? "K" : "J"}});
          if (!(back == ot) || vv != v) {
            bad = Verdict::fail("tree branch round trip fails on " +
                                ot.tree.code() + " sigma " +
                                to_text(ot.sigma.perm()) + " vertex " +
                                std::to_string(v));
            return;
          }
          if (br.reduced.sigma.fixed_points() != 0 ||
              br.reduced.genus() != g - 1) {
            bad = Verdict::fail("tree branch lands in the wrong class");
            return;
          }
        }
      });
      if (!bad.pass) return bad;
      Int rhs = Int(2) * Int(2 * n - 3) * Int(2) * Int(2 * n - 5) *
                (Int(n - 2) * r_count(g - 1, t) +
                 Int(2) * Int(2 * n - 7) * r_count(g - 1, t - 1));
      if (labeled != rhs)
        return Verdict::fail("tree branch counting law fails at g=" +
                             std::to_string(g) + " t=" + std::to_string(t) +
                             ": " + labeled.get_str() + " vs " +
                             rhs.get_str());
    }
  }
  return Verdict::ok();
}

// Degree-sequence multisets (map side, weighted 2^{2g}) against the O-tree
// side.
inline Verdict verify_degmultiset(int n, int g, const EnumConfig& cfg = {}) {
  return degree_multiset_check(n, g, cfg).verdict;
}

// Series identities for one genus: the K* substitution, the P_g denominator
// form, and agreement of the series coefficients with the closed counting
// formula.
inline Verdict verify_series(int g, long order) {
  Verdict v = verify_kstar_substitution(g, order);
  v &= verify_P_reconstruction(g, order);
  if (!v) return v;
  TruncSeries c = C_series(g, order);
  for (long n = 0; n <= order; ++n) {
    Rat got = c.coeff(n);
    if (!is_integer(got))
      return Verdict::fail("C_" + std::to_string(g) + " coefficient at z^" +
                           std::to_string(n) + " is not an integer");
    if (got != Rat(epsilon_closed(g, n)))
      return Verdict::fail("C_" + std::to_string(g) + " coefficient at z^" +
                           std::to_string(n) + " is " + rat_str(got) +
                           ", closed form gives " +
                           epsilon_closed(g, n).get_str());
  }
  return Verdict::ok();
}

}  // namespace unimap
