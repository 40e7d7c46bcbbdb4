#pragma once

#include <functional>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "unimap/count.hpp"
#include "unimap/errors.hpp"
#include "unimap/ints.hpp"
#include "unimap/poly.hpp"
#include "unimap/verdict.hpp"

namespace unimap {

// b_i = a_i^2 - a_{i-1} a_{i+1} with a_{-1} = a_{n+1} = 0.
inline std::vector<Int> L_op(const std::vector<Int>& a) {
  const size_t n = a.size();
  std::vector<Int> b(n);
  for (size_t i = 0; i < n; ++i) {
    Int left = i == 0 ? Int(0) : a[i - 1];
    Int right = i + 1 == n ? Int(0) : a[i + 1];
    b[i] = a[i] * a[i] - left * right;
  }
  return b;
}

struct SeqReport {
  std::string id;
  int depth_requested = 0;
  int depth_reached = 0;  // deepest level that came out nonnegative
  bool pass = false;
  int violation_depth = -1;  // first level with a negative entry
  long violation_index = -1;
};

// Applies L repeatedly; passes when every level up to `depth` is nonnegative.
inline SeqReport k_log_concave(std::string id, std::vector<Int> a, int depth) {
  SeqReport rep;
  rep.id = std::move(id);
  rep.depth_requested = depth;
  for (int d = 1; d <= depth; ++d) {
    a = L_op(a);
    for (size_t i = 0; i < a.size(); ++i) {
      if (a[i] < 0) {
        rep.violation_depth = d;
        rep.violation_index = static_cast<long>(i);
        return rep;
      }
    }
    rep.depth_reached = d;
  }
  rep.pass = true;
  return rep;
}

// --------------------------------------------------------------------------
// Exact real-root counting over the rationals via Sturm chains.
// --------------------------------------------------------------------------

namespace detail {

inline std::vector<ExactPoly> sturm_chain(const ExactPoly& p) {
  std::vector<ExactPoly> chain;
  chain.push_back(primitive_part(p));
  ExactPoly d = p.derivative();
  if (!d.is_zero()) chain.push_back(primitive_part(d));
  while (chain.size() >= 2 && !chain.back().is_zero() &&
         chain.back().degree() >= 0) {
    const ExactPoly& a = chain[chain.size() - 2];
    const ExactPoly& b = chain.back();
    if (b.degree() == 0) break;
    auto [q, r] = poly_divmod(a, b);
    if (r.is_zero()) break;
    chain.push_back(primitive_part(-r));
  }
  return chain;
}

inline int sign_of(const Rat& v) { return v > 0 ? 1 : (v < 0 ? -1 : 0); }

// Sign variations with zeros skipped. With that convention V(x) equals the
// right-hand limit V(x+), so V(a) - V(b) counts roots in the half-open
// interval (a, b].
inline int variations(const std::vector<int>& signs) {
  int count = 0;
  int prev = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (prev != 0 && s != prev) ++count;
    prev = s;
  }
  return count;
}

inline int variations_at(const std::vector<ExactPoly>& chain, const Rat& x) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) signs.push_back(sign_of(p.eval(x)));
  return variations(signs);
}

// dir = +1 for +infinity, -1 for -infinity.
inline int variations_at_infinity(const std::vector<ExactPoly>& chain,
                                  int dir) {
  std::vector<int> signs;
  signs.reserve(chain.size());
  for (const auto& p : chain) {
    if (p.is_zero()) {
      signs.push_back(0);
      continue;
    }
    int s = sign_of(p.coeff(p.degree()));
    if (dir < 0 && p.degree() % 2 == 1) s = -s;
    signs.push_back(s);
  }
  return variations(signs);
}

}  // namespace detail

// Exact count of distinct real roots of p in the interval with the stated
// endpoint inclusion.
inline long sturm_roots(const ExactPoly& p, const Rat& lo, const Rat& hi,
                        bool open_lo, bool closed_hi) {
  if (p.is_zero()) throw ZeroPolynomialError("root counting on zero");
  if (!(lo < hi)) throw InvalidInputError("need lo < hi");
  ExactPoly sf = square_free_part(p);
  if (sf.degree() <= 0) return 0;
  auto chain = detail::sturm_chain(sf);
  long count = detail::variations_at(chain, lo) - detail::variations_at(chain, hi);
  if (!open_lo && sf.eval(lo) == 0) count += 1;
  if (!closed_hi && sf.eval(hi) == 0) count -= 1;
  return count;
}

// Distinct real roots over the whole line.
inline long count_real_roots(const ExactPoly& p) {
  if (p.is_zero()) throw ZeroPolynomialError("root counting on zero");
  ExactPoly sf = square_free_part(p);
  if (sf.degree() <= 0) return 0;
  auto chain = detail::sturm_chain(sf);
  return detail::variations_at_infinity(chain, -1) -
         detail::variations_at_infinity(chain, +1);
}

struct RootReport {
  std::string id;
  int degree = 0;
  int zero_multiplicity = 0;
  long distinct_real_roots = 0;
  long roots_in_interval = 0;  // distinct roots inside the queried interval
  bool real_rooted = false;    // every complex root is real
  bool located = false;        // every root lies in the queried interval
};

namespace detail {

// A polynomial has only real roots iff its square-free part splits over the
// reals, i.e. has as many distinct real roots as its degree. Location claims
// then reduce to counting distinct roots of the square-free part inside the
// interval.
inline RootReport root_report(std::string id, const ExactPoly& p,
                              const Rat& lo, const Rat& hi, bool open_lo,
                              bool closed_hi) {
  RootReport rep;
  rep.id = std::move(id);
  rep.degree = p.degree();
  rep.zero_multiplicity = p.root_zero_multiplicity();
  ExactPoly sf = square_free_part(p);
  if (sf.degree() <= 0) {
    rep.real_rooted = true;
    rep.located = true;
    return rep;
  }
  rep.distinct_real_roots = count_real_roots(sf);
  rep.roots_in_interval = sturm_roots(sf, lo, hi, open_lo, closed_hi);
  rep.real_rooted = rep.distinct_real_roots == sf.degree();
  rep.located = rep.real_rooted && rep.roots_in_interval == sf.degree();
  return rep;
}

}  // namespace detail

// A_g has only real zeros, all in (-1, 0]. A failure here is a bug, not a
// conjecture event.
inline std::vector<RootReport> check_A_realroots(int g_max) {
  std::vector<RootReport> out;
  for (int g = 1; g <= g_max; ++g)
    out.push_back(detail::root_report("A_" + std::to_string(g), A_poly(g),
                                      Rat(-1), Rat(0), true, true));
  return out;
}

// Conjecture probe: K_g real-rooted with zeros in (-1/4, 0].
inline std::vector<RootReport> check_K_conjecture(int g_max) {
  std::vector<RootReport> out;
  for (int g = 1; g <= g_max; ++g)
    out.push_back(detail::root_report("K_" + std::to_string(g), K_poly(g),
                                      Rat(-1, 4), Rat(0), true, true));
  return out;
}

// Conjecture probe: S_g real-rooted (no location claim; the interval column
// reports [-1, 0], where all roots land when the K_g conjecture holds).
inline std::vector<RootReport> check_S_conjecture(int g_max) {
  std::vector<RootReport> out;
  for (int g = 1; g <= g_max; ++g) {
    RootReport rep = detail::root_report("S_" + std::to_string(g), S_poly(g),
                                         Rat(-1), Rat(0), false, true);
    rep.located = true;  // not part of the claim
    out.push_back(rep);
  }
  return out;
}

// --------------------------------------------------------------------------
// Log-concavity transfer along a two-term recurrence
//   b_{g,t} = p_{g,t} b_{g-1,t} + q_{g,t} b_{g-1,t-1}.
// The three hypotheses: the base row is log-concave, every p- and q-row is
// log-concave, and p_{g,t-1} q_{g,t+1} + p_{g,t+1} q_{g,t-1} <= 2 p_{g,t} q_{g,t}.
// --------------------------------------------------------------------------

inline Verdict log_transfer_check(
    const std::vector<std::vector<Rat>>& p_rows,
    const std::vector<std::vector<Rat>>& q_rows,
    const std::vector<Rat>& b1_row) {
  auto log_concave = [](const std::vector<Rat>& r) -> long {
    for (size_t i = 1; i + 1 < r.size(); ++i)
      if (r[i] * r[i] < r[i - 1] * r[i + 1]) return static_cast<long>(i);
    return -1;
  };
  auto nonneg = [](const std::vector<Rat>& r) -> long {
    for (size_t i = 0; i < r.size(); ++i)
      if (r[i] < 0) return static_cast<long>(i);
    return -1;
  };
  if (long i = nonneg(b1_row); i >= 0)
    return Verdict::fail("base row negative at t=" + std::to_string(i));
  if (long i = log_concave(b1_row); i >= 0)
    return Verdict::fail("base row not log-concave at t=" + std::to_string(i));
  if (p_rows.size() != q_rows.size())
    return Verdict::fail("p and q row counts differ");
  for (size_t g = 0; g < p_rows.size(); ++g) {
    const auto& p = p_rows[g];
    const auto& q = q_rows[g];
    if (p.size() != q.size())
      return Verdict::fail("p and q lengths differ in row " + std::to_string(g));
    if (long i = nonneg(p); i >= 0)
      return Verdict::fail("p row " + std::to_string(g) + " negative at " +
                           std::to_string(i));
    if (long i = nonneg(q); i >= 0)
      return Verdict::fail("q row " + std::to_string(g) + " negative at " +
                           std::to_string(i));
    if (long i = log_concave(p); i >= 0)
      return Verdict::fail("p row " + std::to_string(g) +
                           " not log-concave at t=" + std::to_string(i));
    if (long i = log_concave(q); i >= 0)
      return Verdict::fail("q row " + std::to_string(g) +
                           " not log-concave at t=" + std::to_string(i));
    for (size_t t = 1; t + 1 < p.size(); ++t) {
      if (p[t - 1] * q[t + 1] + p[t + 1] * q[t - 1] > Rat(2) * p[t] * q[t])
        return Verdict::fail("cross inequality fails in row " +
                             std::to_string(g) + " at t=" + std::to_string(t));
    }
  }
  return Verdict::ok();
}

// The two instantiations used for {a_{g,t}} and {kappa_{g,t}}.
inline Verdict log_transfer_check_a(int g_max, int t_max) {
  std::vector<std::vector<Rat>> p;
  for (int g = 2; g <= g_max; ++g) {
    std::vector<Rat> row;
    for (int t = 0; t <= t_max; ++t)
      row.emplace_back(Int(2 * g + t - 1) * Int(2 * g + t - 2));
    p.push_back(std::move(row));
  }
  std::vector<Rat> b1{Rat(0), Rat(a_gt(1, 1))};
  return log_transfer_check(p, p, b1);
}

inline Verdict log_transfer_check_kappa(int g_max, int t_max) {
  std::vector<std::vector<Rat>> p, q;
  for (int g = 2; g <= g_max; ++g) {
    std::vector<Rat> prow, qrow;
    for (int t = 0; t <= t_max; ++t) {
      const long m = 2 * g + t;
      prow.push_back(Rat(Int(2 * m - 3) * Int(2 * m - 5) * Int(m - 2)) /
                     Rat(Int(m)));
      qrow.push_back(Rat(Int(2) * Int(2 * m - 3) * Int(2 * m - 5) *
                         Int(2 * m - 7)) /
                     Rat(Int(m)));
    }
    p.push_back(std::move(prow));
    q.push_back(std::move(qrow));
  }
  std::vector<Rat> b1{Rat(0), Rat(kappa_gt(1, 1))};
  return log_transfer_check(p, q, b1);
}

}  // namespace unimap
