#include <gtest/gtest.h>

#include <random>

#include "unimap/analyze.hpp"
#include "unimap/poly.hpp"
#include "unimap/series.hpp"

namespace unimap {
namespace {

ExactPoly P(std::initializer_list<long> coeffs) {
  std::vector<Rat> c;
  for (long v : coeffs) c.emplace_back(v);
  return ExactPoly(std::move(c));
}

TEST(ExactPoly, Arithmetic) {
  ExactPoly a = P({1, 2});      // 1 + 2x
  ExactPoly b = P({0, 0, 3});   // 3x^2
  EXPECT_EQ((a * b).coeffs(), P({0, 0, 3, 6}).coeffs());
  EXPECT_EQ((a + b - a), b);
  EXPECT_EQ(a.derivative(), P({2}));
  EXPECT_EQ(b.derivative(), P({0, 6}));
  EXPECT_EQ(a.eval(Rat(3)), Rat(7));
  EXPECT_EQ(P({}).degree(), -1);
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(b.root_zero_multiplicity(), 2);
  EXPECT_EQ(b.shifted_down(2), P({3}));
  EXPECT_THROW(a.shifted_down(1), NonIntegralError);
}

TEST(ExactPoly, DivmodAndGcd) {
  ExactPoly a = P({-1, 0, 1});  // (x-1)(x+1)
  ExactPoly b = P({-1, 1});     // x-1
  auto [q, r] = poly_divmod(a, b);
  EXPECT_EQ(q, P({1, 1}));
  EXPECT_TRUE(r.is_zero());
  EXPECT_EQ(poly_gcd(a, b), b);
  EXPECT_THROW(poly_divmod(a, ExactPoly()), ZeroPolynomialError);

  // Square-free part of (x-1)^2 (x+2).
  ExactPoly p = b * b * P({2, 1});
  ExactPoly sf = square_free_part(p);
  EXPECT_EQ(sf.degree(), 2);
  EXPECT_EQ(sf.eval(Rat(1)), Rat(0));
  EXPECT_EQ(sf.eval(Rat(-2)), Rat(0));
}

TEST(Sturm, TextbookCases) {
  // x^2 + x on (-2, 0]: roots -1 and 0.
  EXPECT_EQ(sturm_roots(P({0, 1, 1}), Rat(-2), Rat(0), true, true), 2);
  // Same poly on (-1, 0]: -1 is excluded by the open end.
  EXPECT_EQ(sturm_roots(P({0, 1, 1}), Rat(-1), Rat(0), true, true), 1);
  // ... and included when closed.
  EXPECT_EQ(sturm_roots(P({0, 1, 1}), Rat(-1), Rat(0), false, true), 2);
  // x^2 + 1 has no real roots.
  EXPECT_EQ(sturm_roots(P({1, 0, 1}), Rat(-10), Rat(10), true, true), 0);
  EXPECT_EQ(count_real_roots(P({1, 0, 1})), 0);
  // 24x + 40x^2 on (-1, 0]: roots -3/5 and 0.
  EXPECT_EQ(sturm_roots(P({0, 24, 40}), Rat(-1), Rat(0), true, true), 2);
  EXPECT_THROW(sturm_roots(ExactPoly(), Rat(0), Rat(1), true, true),
               ZeroPolynomialError);
}

TEST(Sturm, MultiplicitiesDoNotConfuseCounts) {
  // (x-1)^3 (x+4)^2 x: distinct real roots 1, -4, 0.
  ExactPoly p = P({-1, 1}) * P({-1, 1}) * P({-1, 1}) * P({4, 1}) * P({4, 1}) *
                P({0, 1});
  EXPECT_EQ(count_real_roots(p), 3);
  EXPECT_EQ(sturm_roots(p, Rat(-4), Rat(1), false, true), 3);
  EXPECT_EQ(sturm_roots(p, Rat(-4), Rat(1), true, false), 1);
}

TEST(Sturm, AppendedRationalRootRaisesCountByOne) {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> num(-12, 12);
  std::uniform_int_distribution<int> den(1, 6);
  for (int trial = 0; trial < 50; ++trial) {
    // Random polynomial of degree 3 with no root at the sampled point.
    ExactPoly p = P({num(rng), num(rng), num(rng), 1});
    Rat r(num(rng), den(rng));
    r.canonicalize();
    if (p.eval(r) == 0) continue;
    const Rat lo(-13), hi(13);
    long base = sturm_roots(p, lo, hi, true, true);
    ExactPoly q = p * (ExactPoly::monomial(Rat(1), 1) - ExactPoly::constant(r));
    EXPECT_EQ(sturm_roots(q, lo, hi, true, true), base + 1);
  }
}

TEST(TruncSeries, ArithmeticAndInverses) {
  const long N = 12;
  TruncSeries c0 = TruncSeries::catalan_series(N);
  // z C_0^2 = C_0 - 1.
  TruncSeries lhs = TruncSeries::z(N) * c0 * c0;
  TruncSeries rhs = c0 - TruncSeries::constant(Rat(1), N);
  EXPECT_EQ(lhs, rhs);

  // reciprocal of (1-4z) against the closed form.
  TruncSeries geo(N);
  geo.set_coeff(0, 1);
  if (N >= 1) geo.set_coeff(1, -4);
  EXPECT_EQ(geo.reciprocal(), TruncSeries::neg_pow_one_minus_4z(1, N));

  // (1-4z)^{-1/2} squared is (1-4z)^{-1}.
  TruncSeries inv_sqrt = TruncSeries::inv_sqrt_one_minus_4z(N);
  EXPECT_EQ(inv_sqrt * inv_sqrt, TruncSeries::neg_pow_one_minus_4z(1, N));

  EXPECT_THROW(TruncSeries(3) + TruncSeries(4), OrderMismatchError);
}

TEST(TruncSeries, ExpLogRoundTrip) {
  const long N = 10;
  TruncSeries u(N);
  u.set_coeff(1, Rat(2));
  u.set_coeff(3, Rat(-1, 3));
  u.set_coeff(7, Rat(5, 2));
  EXPECT_EQ(u.exp().log(), u);

  TruncSeries one_plus = TruncSeries::constant(Rat(1), N);
  one_plus.set_coeff(1, 1);
  TruncSeries log1p = one_plus.log();
  for (long k = 1; k <= N; ++k) {
    Rat want(1, static_cast<unsigned long>(k));
    if (k % 2 == 0) want = -want;
    EXPECT_EQ(log1p.coeff(k), want);
  }
  EXPECT_THROW(u.log(), InvalidInputError);
  EXPECT_THROW(one_plus.exp(), InvalidInputError);
}

TEST(TruncSeries, Composition) {
  const long N = 8;
  // Composing the Catalan series with z/(1+z)... check against direct data:
  // compose_poly of x^2 with series u equals u*u.
  TruncSeries u(N);
  u.set_coeff(1, 3);
  u.set_coeff(2, -2);
  ExactPoly sq = ExactPoly::monomial(Rat(1), 2);
  EXPECT_EQ(compose_poly(sq, u), u * u);

  TruncSeries s = TruncSeries::catalan_series(N);
  EXPECT_EQ(s.compose(u).coeff(0), Rat(1));
}

TEST(BivarSeries, ExpMatchesHandExpansion) {
  const long N = 6;
  // exp(x y) has y^m coefficient x^m / m!.
  BivarSeries f =
      BivarSeries::monomial(ExactPoly::monomial(Rat(1), 1), 1, N);
  BivarSeries e = f.exp();
  for (long m = 0; m <= N; ++m) {
    ExactPoly want = ExactPoly::monomial(Rat(Int(1), factorial(m)), m);
    EXPECT_EQ(e.coeff(m), want) << "m=" << m;
  }
  EXPECT_EQ(e.log(), f);
}

}  // namespace
}  // namespace unimap
