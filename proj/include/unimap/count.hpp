#pragma once

#include <mutex>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include "unimap/errors.hpp"
#include "unimap/ints.hpp"
#include "unimap/partition.hpp"
#include "unimap/poly.hpp"
#include "unimap/series.hpp"
#include "unimap/verdict.hpp"

namespace unimap {

// Triangle of values indexed by (g,t), 1 <= t <= g, zero outside.
struct CountTable {
  int g_max = 0;
  std::vector<std::vector<Int>> rows;  // rows[g-1][t-1]

  Int at(int g, int t) const {
    if (g < 1 || t < 1 || t > g || g > g_max) return 0;
    return rows[g - 1][t - 1];
  }
};

// Number of O-permutations on 2g+t+k elements whose cycle type is k ones plus
// the odd parts 2i+1 with multiplicities from gamma.
inline Int a_gamma_k(const Partition& gamma, long k) {
  const long g = gamma.weight();
  const long t = gamma.parts();
  Int den = factorial(k);
  for (size_t i = 0; i < gamma.mult.size(); ++i) {
    if (gamma.mult[i] == 0) continue;
    Int part(2 * static_cast<long>(i + 1) + 1);
    Int pw;
    mpz_pow_ui(pw.get_mpz_t(), part.get_mpz_t(),
               static_cast<unsigned long>(gamma.mult[i]));
    den *= factorial(gamma.mult[i]) * pw;
  }
  return exact_div(factorial(2 * g + t + k), den);
}

inline Int a_gt_closed(int g, int t) {
  if (g < 1 || t < 1 || t > g) return 0;
  Int sum(0);
  for_each_partition_with_parts(g, t,
                                [&](const Partition& p) { sum += a_gamma_k(p, 0); });
  return sum;
}

namespace detail {

inline CountTable a_table_recursion(int g_max) {
  CountTable t;
  t.g_max = g_max;
  t.rows.assign(g_max, {});
  for (int g = 1; g <= g_max; ++g) {
    t.rows[g - 1].assign(g, Int(0));
    for (int tt = 1; tt <= g; ++tt) {
      if (g == 1) {
        t.rows[0][0] = 2;
        continue;
      }
      Int prev = t.at(g - 1, tt) + t.at(g - 1, tt - 1);
      t.rows[g - 1][tt - 1] =
          Int(2 * g + tt - 1) * Int(2 * g + tt - 2) * prev;
    }
  }
  return t;
}

inline CountTable kappa_table_recursion(int g_max) {
  CountTable t;
  t.g_max = g_max;
  t.rows.assign(g_max, {});
  for (int g = 1; g <= g_max; ++g) {
    t.rows[g - 1].assign(g, Int(0));
    for (int tt = 1; tt <= g; ++tt) {
      if (g == 1) {
        t.rows[0][0] = 1;
        continue;
      }
      const long m = 2 * g + tt;
      Int rhs = Int(2 * m - 3) * Int(2 * m - 5) *
                (Int(m - 2) * t.at(g - 1, tt) +
                 Int(2) * Int(2 * m - 7) * t.at(g - 1, tt - 1));
      t.rows[g - 1][tt - 1] = exact_div(rhs, Int(m));
    }
  }
  return t;
}

}  // namespace detail

// Counts of O-permutations of genus g on 2g+t elements with no 1-cycles,
// computed both from the closed sum over partitions and from the two-term
// recursion; any disagreement is a fatal internal error.
inline CountTable a_table(int g_max) {
  static std::mutex mu;
  static CountTable memo;
  std::scoped_lock lk(mu);
  if (memo.g_max < g_max) {
    CountTable rec = detail::a_table_recursion(g_max);
    for (int g = 1; g <= g_max; ++g)
      for (int t = 1; t <= g; ++t) {
        Int closed = a_gt_closed(g, t);
        if (closed != rec.at(g, t))
          throw DisagreementError(
              "a(" + std::to_string(g) + "," + std::to_string(t) +
              "): closed form " + closed.get_str() + " vs recursion " +
              rec.at(g, t).get_str());
      }
    memo = std::move(rec);
  }
  CountTable out;
  out.g_max = g_max;
  out.rows.assign(memo.rows.begin(), memo.rows.begin() + g_max);
  return out;
}

// kappa_{g,t} = Cat(2g+t-1) a_{g,t} / 2^{2g}, cross-checked against the
// recursion; both integrality and agreement are enforced.
inline CountTable kappa_table(int g_max) {
  static std::mutex mu;
  static CountTable memo;
  std::scoped_lock lk(mu);
  if (memo.g_max < g_max) {
    CountTable rec = detail::kappa_table_recursion(g_max);
    CountTable a = a_table(g_max);
    for (int g = 1; g <= g_max; ++g)
      for (int t = 1; t <= g; ++t) {
        Int closed =
            exact_div(catalan(2 * g + t - 1) * a.at(g, t), pow2(2 * g));
        if (closed != rec.at(g, t))
          throw DisagreementError(
              "kappa(" + std::to_string(g) + "," + std::to_string(t) +
              "): closed form " + closed.get_str() + " vs recursion " +
              rec.at(g, t).get_str());
      }
    memo = std::move(rec);
  }
  CountTable out;
  out.g_max = g_max;
  out.rows.assign(memo.rows.begin(), memo.rows.begin() + g_max);
  return out;
}

inline Int a_gt(int g, int t) { return g >= 1 ? a_table(g).at(g, t) : 0; }
inline Int kappa_gt(int g, int t) {
  return g >= 1 ? kappa_table(g).at(g, t) : 0;
}

// kappa*_g(n) = kappa_{g,t} with n = 2g+t-1, supported on 2g <= n <= 3g-1;
// genus 0 is identically zero.
inline Int kappa_star(int g, long n) {
  if (g < 1) return 0;
  const long t = n - 2 * g + 1;
  if (t < 1 || t > g) return 0;
  return kappa_gt(g, static_cast<int>(t));
}

// (n+1) k*_g(n) = (n-1)(2n-1)(2n-3) k*_{g-1}(n-2) + 2(2n-1)(2n-3)(2n-5) k*_{g-1}(n-3),
// asserted over the support for 2 <= g <= g_max.
inline Verdict kappa_star_recursion_check(int g_max) {
  for (int g = 2; g <= g_max; ++g) {
    for (long n = 2 * g; n <= 3 * g - 1; ++n) {
      Int lhs = Int(n + 1) * kappa_star(g, n);
      Int rhs = Int(n - 1) * Int(2 * n - 1) * Int(2 * n - 3) *
                    kappa_star(g - 1, n - 2) +
                Int(2) * Int(2 * n - 1) * Int(2 * n - 3) * Int(2 * n - 5) *
                    kappa_star(g - 1, n - 3);
      if (lhs != rhs)
        return Verdict::fail("kappa* recursion fails at g=" +
                             std::to_string(g) + " n=" + std::to_string(n) +
                             ": " + lhs.get_str() + " vs " + rhs.get_str());
    }
  }
  return Verdict::ok();
}

// Number of shapes of genus g with n edges.
inline Int s_gn(int g, long n) {
  if (g < 1) return 0;
  Int sum(0);
  for (int t = 1; t <= g; ++t)
    sum += kappa_gt(g, t) * binomial(2 * g + t - 1, n - (2 * g + t - 1));
  return sum;
}

// Number of genus-g gluings of the 2n-gon, from the closed sum. Genus 0
// gives the Catalan numbers.
inline Int epsilon_closed(int g, long n) {
  if (g == 0) return catalan(n);
  if (g < 0 || n < 2 * g) return 0;
  Int sum(0);
  const Int cat = catalan(n);
  CountTable a = a_table(g);
  for (int t = 1; t <= g; ++t)
    sum += cat * binomial(n + 1, 2 * g + t) * a.at(g, t);
  return exact_div(sum, pow2(2 * g));
}

// Fill the two-term recursion table; every division must be exact.
// rows[g][n] for 0 <= g <= g_max, 0 <= n <= n_max.
inline std::vector<std::vector<Int>> epsilon_hz(int g_max, long n_max) {
  std::vector<std::vector<Int>> e(g_max + 1,
                                  std::vector<Int>(n_max + 1, Int(0)));
  for (long n = 0; n <= n_max; ++n) e[0][n] = catalan(n);
  for (int g = 1; g <= g_max; ++g) {
    for (long n = 2 * g; n <= n_max; ++n) {
      Int rhs = Int(2) * Int(2 * n - 1) * (n - 1 >= 0 ? e[g][n - 1] : Int(0)) +
                Int(n - 1) * Int(2 * n - 1) * Int(2 * n - 3) *
                    (n - 2 >= 0 ? e[g - 1][n - 2] : Int(0));
      e[g][n] = exact_div(rhs, Int(n + 1));
    }
  }
  return e;
}

// --- generating polynomials ------------------------------------------------

// S_g(z) = sum_t kappa_{g,t} z^{2g+t-1} (1+z)^{2g+t-1}; coefficients s_g(n).
inline ExactPoly S_poly(int g) {
  if (g < 1) throw InvalidInputError("S_g needs g >= 1");
  CountTable k = kappa_table(g);
  ExactPoly acc;
  const ExactPoly one_plus_z({Rat(1), Rat(1)});
  for (int t = 1; t <= g; ++t) {
    ExactPoly pw = ExactPoly::constant(Rat(1));
    for (int i = 0; i < 2 * g + t - 1; ++i) pw = pw * one_plus_z;
    acc = acc + (pw * Rat(k.at(g, t))).shifted_up(2 * g + t - 1);
  }
  return acc;
}

// P_g(z) = sum_t kappa_{g,t} z^{2g+t-1} (1-4z)^{g-t}.
inline ExactPoly P_poly(int g) {
  if (g < 1) throw InvalidInputError("P_g needs g >= 1");
  CountTable k = kappa_table(g);
  ExactPoly acc;
  const ExactPoly one_minus_4z({Rat(1), Rat(-4)});
  for (int t = 1; t <= g; ++t) {
    ExactPoly pw = ExactPoly::constant(Rat(1));
    for (int i = 0; i < g - t; ++i) pw = pw * one_minus_4z;
    acc = acc + (pw * Rat(k.at(g, t))).shifted_up(2 * g + t - 1);
  }
  return acc;
}

// K_g(x) = sum_t kappa_{g,t} x^t and A_g(x) = sum_t a_{g,t} x^t.
inline ExactPoly K_poly(int g) {
  if (g < 1) throw InvalidInputError("K_g needs g >= 1");
  CountTable k = kappa_table(g);
  std::vector<Rat> c(g + 1, Rat(0));
  for (int t = 1; t <= g; ++t) c[t] = Rat(k.at(g, t));
  return ExactPoly(std::move(c));
}

inline ExactPoly A_poly(int g) {
  if (g < 1) throw InvalidInputError("A_g needs g >= 1");
  CountTable a = a_table(g);
  std::vector<Rat> c(g + 1, Rat(0));
  for (int t = 1; t <= g; ++t) c[t] = Rat(a.at(g, t));
  return ExactPoly(std::move(c));
}

inline ExactPoly B_poly(int g) { return A_poly(g).shifted_up(2 * g); }
inline ExactPoly H_poly(int g) { return K_poly(g).shifted_up(2 * g); }

// --- series ----------------------------------------------------------------

// C_g(z) = sum_t kappa_{g,t} z^{2g+t-1} / (1-4z)^{2g+t-1/2}, as a truncated
// series; every half-integer power is the integer series (1-4z)^{-1/2} times
// an integer negative power.
inline TruncSeries C_series(int g, long order) {
  if (g < 1) throw InvalidInputError("C_g needs g >= 1");
  CountTable k = kappa_table(g);
  const TruncSeries inv_sqrt = TruncSeries::inv_sqrt_one_minus_4z(order);
  TruncSeries acc(order);
  for (int t = 1; t <= g; ++t) {
    TruncSeries term =
        TruncSeries::neg_pow_one_minus_4z(2 * g + t - 1, order) * inv_sqrt;
    acc = acc + (term * Rat(k.at(g, t))).shifted_up(2 * g + t - 1);
  }
  return acc;
}

namespace detail {

inline Verdict series_equal(const TruncSeries& lhs, const TruncSeries& rhs,
                            const std::string& what) {
  for (long k = 0; k <= lhs.order(); ++k)
    if (lhs.coeff(k) != rhs.coeff(k))
      return Verdict::fail(what + ": coefficient of z^" + std::to_string(k) +
                           " differs: " + rat_str(lhs.coeff(k)) + " vs " +
                           rat_str(rhs.coeff(k)));
  return Verdict::ok();
}

}  // namespace detail

// C_g(z) == (1-4z)^{-1/2} K*_g(z/(1-4z)), expanding the right side through
// the substitution.
inline Verdict verify_kstar_substitution(int g, long order) {
  std::vector<Rat> kcoeffs(3 * g, Rat(0));
  for (long n = 2 * g; n <= 3 * g - 1; ++n) kcoeffs[n] = Rat(kappa_star(g, n));
  ExactPoly kstar_poly(std::move(kcoeffs));
  TruncSeries u =
      TruncSeries::neg_pow_one_minus_4z(1, order).shifted_up(1);  // z/(1-4z)
  TruncSeries rhs = compose_poly(kstar_poly, u) *
                    TruncSeries::inv_sqrt_one_minus_4z(order);
  return detail::series_equal(C_series(g, order), rhs,
                              "K* substitution at g=" + std::to_string(g));
}

// C_g(z) == (1+u)/(1-u) * S_g(u/(1-u)) with u = zC_0(z)^2 = C_0(z)-1.
inline Verdict verify_functional_relation(int g, long order) {
  const TruncSeries c0 = TruncSeries::catalan_series(order);
  const TruncSeries one = TruncSeries::constant(Rat(1), order);
  TruncSeries u = c0 - one;
  // Defining property of the Catalan series.
  Verdict v = detail::series_equal(TruncSeries::z(order) * c0 * c0, u,
                                   "z C_0^2 = C_0 - 1");
  if (!v) return v;
  TruncSeries inv_1mu = (one - u).reciprocal();
  TruncSeries rhs =
      (one + u) * inv_1mu * compose_poly(S_poly(g), u * inv_1mu);
  return detail::series_equal(
      C_series(g, order), rhs,
      "shape functional relation at g=" + std::to_string(g));
}

// C_g(z) == P_g(z) / (1-4z)^{3g-1/2}.
inline Verdict verify_P_reconstruction(int g, long order) {
  TruncSeries rhs = TruncSeries::from_poly(P_poly(g), order) *
                    TruncSeries::neg_pow_one_minus_4z(3 * g - 1, order) *
                    TruncSeries::inv_sqrt_one_minus_4z(order);
  return detail::series_equal(C_series(g, order), rhs,
                              "P_g reconstruction at g=" + std::to_string(g));
}

// Exponential generating function identities in y (x marking t):
//   1 + sum a_{g,t}/(2g+t)! y^{2g+t} x^t          = ((1+y)/(1-y))^{x/2} e^{-xy}
//   1 + 2 sum kappa_{g,t}/(2(2g+t)-3)!! y^{2g+t} x^t = ((1+y)/(1-y))^{x}  e^{-2xy}
inline std::pair<Verdict, Verdict> verify_egf(long order) {
  const long N = order;
  TruncSeries one_plus(N), one_minus(N);
  one_plus.set_coeff(0, 1);
  one_minus.set_coeff(0, 1);
  if (N >= 1) {
    one_plus.set_coeff(1, 1);
    one_minus.set_coeff(1, -1);
  }
  TruncSeries log_ratio = one_plus.log() - one_minus.log();
  const ExactPoly x = ExactPoly::monomial(Rat(1), 1);

  auto build = [&](const Rat& log_scale, const Rat& lin_scale) {
    BivarSeries f(N);
    for (long m = 1; m <= N; ++m) {
      Rat c = log_ratio.coeff(m) * log_scale;
      if (m == 1) c += lin_scale;
      f = f + BivarSeries::monomial(x * c, m, N);
    }
    return f.exp();
  };

  const int g_cap = static_cast<int>(N / 2);
  CountTable a = a_table(std::max(1, g_cap));
  CountTable k = kappa_table(std::max(1, g_cap));

  auto check = [&](const BivarSeries& rhs, bool kappa_side) -> Verdict {
    for (long m = 0; m <= N; ++m) {
      const ExactPoly& pm = rhs.coeff(m);
      for (int t = 0; t <= std::max<long>(pm.degree(), m); ++t) {
        Rat got = pm.coeff(t);
        Rat want(0);
        if (m == 0 && t == 0) want = 1;
        if (t >= 1 && (m - t) % 2 == 0 && m - t >= 2) {
          int g = static_cast<int>((m - t) / 2);
          if (t <= g) {
            if (kappa_side)
              want = Rat(Int(2) * k.at(g, t)) /
                     Rat(double_factorial(2 * m - 3));
            else
              want = Rat(a.at(g, t)) / Rat(factorial(m));
          }
        }
        if (got != want)
          return Verdict::fail(std::string(kappa_side ? "kappa" : "a") +
                               "-EGF: coefficient of y^" + std::to_string(m) +
                               " x^" + std::to_string(t) + " is " +
                               rat_str(got) + ", expected " + rat_str(want));
      }
    }
    return Verdict::ok();
  };

  Verdict va = check(build(Rat(1, 2), Rat(-1)), false);
  Verdict vk = check(build(Rat(1), Rat(-2)), true);
  return {va, vk};
}

// B_g(x) = x^3 (x(x+1) B_{g-1}(x))'' for 2 <= g <= g_max.
inline Verdict verify_adif(int g_max) {
  const ExactPoly xx1 = ExactPoly({Rat(0), Rat(0), Rat(1)}) +
                        ExactPoly({Rat(0), Rat(1)});  // x^2 + x
  for (int g = 2; g <= g_max; ++g) {
    ExactPoly lhs = B_poly(g);
    ExactPoly rhs =
        (xx1 * B_poly(g - 1)).derivative().derivative().shifted_up(3);
    if (!(lhs == rhs))
      return Verdict::fail("B recurrence fails at g=" + std::to_string(g) +
                           ": " + lhs.str() + " vs " + rhs.str());
  }
  return Verdict::ok();
}

// dH_g/dx = -6x^2 H_{g-1} + 3x^2(12x+1) H'_{g-1} + 12x^3(6x+1) H''_{g-1}
//           + 4x^4(4x+1) H'''_{g-1}.
inline Verdict verify_dh(int g_max) {
  for (int g = 2; g <= g_max; ++g) {
    ExactPoly h = H_poly(g - 1);
    ExactPoly d1 = h.derivative();
    ExactPoly d2 = d1.derivative();
    ExactPoly d3 = d2.derivative();
    ExactPoly rhs = ExactPoly({Rat(0), Rat(0), Rat(-6)}) * h +
                    ExactPoly({Rat(0), Rat(0), Rat(3), Rat(36)}) * d1 +
                    ExactPoly({Rat(0), Rat(0), Rat(0), Rat(12), Rat(72)}) * d2 +
                    ExactPoly({Rat(0), Rat(0), Rat(0), Rat(0), Rat(4), Rat(16)}) * d3;
    ExactPoly lhs = H_poly(g).derivative();
    if (!(lhs == rhs))
      return Verdict::fail("H derivative recurrence fails at g=" +
                           std::to_string(g) + ": " + lhs.str() + " vs " +
                           rhs.str());
  }
  return Verdict::ok();
}

}  // namespace unimap
