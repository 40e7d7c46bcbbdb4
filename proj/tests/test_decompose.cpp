#include <gtest/gtest.h>

#include "unimap/bijection.hpp"
#include "unimap/count.hpp"
#include "unimap/enumerate.hpp"
#include "unimap/serialize.hpp"
#include "unimap/verify.hpp"

namespace unimap {
namespace {

SignSeq signs_of(const std::string& s) {
  SignSeq out;
  for (char c : s) out.push_back(c == '+' ? Sign::Plus : Sign::Minus);
  return out;
}

TEST(Nonminimal, SplitOfThreeCycle) {
  // (123) split at element 2: three labeled 1-cycles and signs (-,+).
  OPermutation op(Permutation({1, 2, 0}));
  auto split = decompose_nonminimal(op, 1);
  EXPECT_EQ(cycle_text(split.reduced), "(3)(2)(1)");
  EXPECT_EQ(split.labeled_minima, std::vector<int>({2, 1, 0}));
  EXPECT_EQ(sign_text(split.signs), "(-,+)");
  EXPECT_EQ(split.reduced.genus(), 0);

  auto [back, elem] = compose_nonminimal(split.reduced, split.labeled_minima,
                                         split.signs);
  EXPECT_EQ(back, op);
  EXPECT_EQ(elem, 1);
}

TEST(Nonminimal, MinimalElementRejected) {
  OPermutation op(Permutation({1, 2, 0}));
  EXPECT_THROW(decompose_nonminimal(op, 0), MinimalElementError);
  // The identity has no non-minimal elements at all.
  OPermutation id5(Permutation::identity(5));
  for (int i = 0; i < 5; ++i)
    EXPECT_THROW(decompose_nonminimal(id5, i), MinimalElementError);
}

TEST(Nonminimal, ComposeValidatesArity) {
  OPermutation id3(Permutation::identity(3));
  EXPECT_THROW(compose_nonminimal(id3, {0}, {}), ArityMismatchError);
  EXPECT_THROW(compose_nonminimal(id3, {2, 1, 0}, signs_of("+")),
               ArityMismatchError);
  EXPECT_NO_THROW(compose_nonminimal(id3, {2, 1, 0}, signs_of("+-")));
}

TEST(Nonminimal, PreservesUnlabeledCycles) {
  // Cycle multiset outside the split cycle is untouched.
  OPermutation op(Permutation::from_cycles(8, {{0, 4, 3}, {1, 5, 6}}));
  auto split = decompose_nonminimal(op, 4);
  std::multiset<std::vector<int>> before, after;
  for (const auto& c : op.cycles_by_min())
    if (std::find(c.begin(), c.end(), 4) == c.end()) before.insert(c);
  std::set<int> labeled(split.labeled_minima.begin(),
                        split.labeled_minima.end());
  for (const auto& c : split.reduced.cycles_by_min())
    if (!labeled.count(c.front())) after.insert(c);
  EXPECT_EQ(before, after);
}

TEST(Nonminimal, ExhaustiveUpTo9) {
  EXPECT_TRUE(verify_nonminimal(9).pass);
}

TEST(Beta, SmallestCase) {
  // (123) is the only element of O_{1,1,0} up to the two cyclic orders; its
  // top cycle has length 3, so the branch deletes it entirely.
  OPermutation op(Permutation({1, 2, 0}));
  BetaBranch br = beta_decompose(op);
  EXPECT_FALSE(br.long_case);
  EXPECT_EQ(br.reduced.size(), 0);
  EXPECT_EQ(br.i, 0);
  EXPECT_EQ(br.j, 1);
  EXPECT_EQ(beta_compose(br), op);
}

TEST(Beta, RejectsFixedPoints) {
  EXPECT_THROW(beta_decompose(OPermutation(Permutation::identity(3))),
               InvalidInputError);
}

TEST(Beta, LongCaseRoundTrip) {
  // A 5-cycle: removing sigma^{-1}(n-1) and n-1 leaves a 3-cycle.
  OPermutation op(Permutation::from_cycles(5, {{0, 2, 1, 3, 4}}));
  BetaBranch br = beta_decompose(op);
  EXPECT_TRUE(br.long_case);
  EXPECT_EQ(br.reduced.size(), 3);
  EXPECT_EQ(br.reduced.genus(), 1);
  EXPECT_EQ(beta_compose(br), op);
}

TEST(Beta, ExhaustiveWithCountingLaw) {
  EXPECT_TRUE(verify_beta(9).pass);
}

TEST(Beta, CoversFullBranchDomain) {
  // Compose over the whole branch domain for (g,t) = (2,1) and land back.
  // Long case: reduced in O_{1,1,0}, j in 0..3, anchor in 0..2.
  int built = 0;
  for_each_opermutation_tk(1, 1, 0, [&](const OPermutation& red) {
    for (int j = 0; j <= 3; ++j) {
      for (int anchor = 0; anchor <= 2; ++anchor) {
        BetaBranch br{true, red, anchor, j};
        OPermutation op = beta_compose(br);
        EXPECT_EQ(op.genus(), 2);
        EXPECT_EQ(op.long_cycles(), 1);
        EXPECT_EQ(op.fixed_points(), 0);
        BetaBranch back = beta_decompose(op);
        EXPECT_TRUE(back.long_case);
        EXPECT_EQ(back.reduced, red);
        EXPECT_EQ(back.i, anchor);
        EXPECT_EQ(back.j, j);
        ++built;
      }
    }
  });
  EXPECT_EQ(built, 2 * 4 * 3);  // a_{2,1} = 24 long-case elements
}

TEST(KappaDec, RejectsGenusOne) {
  for_each_R_gtk(1, 1, 0, [&](const OTree& ot) {
    EXPECT_THROW(kappa_decompose(ot, 0), InvalidInputError);
  });
}

TEST(KappaDec, RoundTripOnR210) {
  int labeled = 0;
  for_each_R_gtk(2, 1, 0, [&](const OTree& ot) {
    for (int v = 0; v < ot.sigma.size(); ++v) {
      KappaBranch br = kappa_decompose(ot, v);
      auto [back, vv] = kappa_compose(br);
      ASSERT_EQ(back, ot);
      ASSERT_EQ(vv, v);
      ++labeled;
    }
  });
  EXPECT_EQ(labeled, 5 * 336);  // n |R_{2,1,0}| = 5 * Cat(4) * 24
}

TEST(KappaDec, CountingLawMatchesClosedForm) {
  // n |R_{g,t,0}| = 2(2n-3) 2(2n-5) ((n-2)|R_{g-1,t,0}| + 2(2n-7)|R_{g-1,t-1,0}|)
  // with |R_{g,t,0}| = Cat(2g+t-1) a_{g,t}, for g = 2.
  for (int t = 1; t <= 2; ++t) {
    const int n = 4 + t;
    Int lhs = Int(n) * catalan(2 * 2 + t - 1) * a_gt(2, t);
    Int rhs = Int(2) * Int(2 * n - 3) * Int(2) * Int(2 * n - 5) *
              (Int(n - 2) * catalan(2 + t - 1) * a_gt(1, t) +
               Int(2) * Int(2 * n - 7) * catalan(2 + t - 2) * a_gt(1, t - 1));
    EXPECT_EQ(lhs, rhs) << "t=" << t;
  }
}

TEST(KappaDec, ExhaustiveUpTo6Edges) {
  EXPECT_TRUE(verify_kappadec(6).pass);
}

}  // namespace
}  // namespace unimap
