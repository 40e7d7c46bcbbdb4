#include <gtest/gtest.h>

#include "unimap/bijection.hpp"
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

TEST(Phi, WorkedExample) {
  // 78326154 -> (8)(7)(6)(3)(2)(154) with signs (-,+,-,-,+).
  std::vector<int> seq{6, 7, 2, 1, 5, 0, 4, 3};
  PhiResult r = phi(seq);
  EXPECT_EQ(cycle_text(r.op), "(8)(7)(6)(3)(2)(1 5 4)");
  EXPECT_EQ(sign_text(r.signs), "(-,+,-,-,+)");
  EXPECT_EQ(r.op.genus(), 1);
  EXPECT_EQ(psi(r.op, r.signs), seq);
}

TEST(Phi, TinyCases) {
  // Length-1 sequence.
  PhiResult one = phi({0});
  EXPECT_EQ(cycle_text(one.op), "(1)");
  EXPECT_TRUE(one.signs.empty());
  EXPECT_EQ(psi(one.op, {}), std::vector<int>({0}));

  // "21" -> (2)(1) with sign (+); "12" -> (2)(1) with sign (-).
  PhiResult a = phi({1, 0});
  EXPECT_EQ(cycle_text(a.op), "(2)(1)");
  EXPECT_EQ(sign_text(a.signs), "(+)");
  PhiResult b = phi({0, 1});
  EXPECT_EQ(cycle_text(b.op), "(2)(1)");
  EXPECT_EQ(sign_text(b.signs), "(-)");
}

TEST(Phi, SingleCycleIffOddAndStartsAtMin) {
  for (int n = 1; n <= 7; ++n) {
    std::vector<int> seq(n);
    for (int i = 0; i < n; ++i) seq[i] = i;
    do {
      PhiResult r = phi(seq);
      bool single = r.op.cycle_count() == 1;
      EXPECT_EQ(single, n % 2 == 1 && seq.front() == 0);
    } while (std::next_permutation(seq.begin(), seq.end()));
  }
}

TEST(Psi, LengthMismatch) {
  OPermutation op(Permutation::identity(3));
  EXPECT_THROW(psi(op, signs_of("+")), LengthMismatchError);
  EXPECT_NO_THROW(psi(op, signs_of("+-")));
}

TEST(Phi, ExhaustiveRoundTripsUpTo8) {
  EXPECT_TRUE(verify_phi(8).pass);
}

TEST(Permissible, CountsOnSmallClasses) {
  // R_{1,1,0}: four O-trees, two permissible sectors each.
  int count = 0;
  for_each_R_gtk(1, 1, 0, [&](const OTree& ot) {
    ++count;
    EXPECT_EQ(permissible_corners(ot).size(), 2u);
  });
  EXPECT_EQ(count, 4);

  // R_{1,1,2}: four O-trees, no permissible sectors.
  count = 0;
  for_each_R_gtk(1, 1, 2, [&](const OTree& ot) {
    ++count;
    EXPECT_EQ(permissible_corners(ot).size(), 0u);
  });
  EXPECT_EQ(count, 4);
}

TEST(Permissible, RejectsNonShapeTrees) {
  // Identity sigma on a path: merged degrees are 1 and 2.
  OTree ot(PlaneTree("(())"), OPermutation(Permutation::identity(3)));
  EXPECT_THROW(permissible_corners(ot), NotAShapeTreeError);
}

TEST(Permissible, ExhaustiveCountLaw) {
  EXPECT_TRUE(verify_permissible(7).pass);
}

TEST(Pi, GeneratesEightLabeledTreesFromR110) {
  // |R_{1,1,1}| = 8 maps onto (R_{1,1,0} O-tree, permissible corner) pairs.
  std::map<std::pair<std::string, std::string>, std::set<int>> images;
  int count = 0;
  for_each_R_gtk(1, 1, 1, [&](const OTree& ot) {
    for (int v = 0; v < ot.sigma.size(); ++v) {
      if (!ot.sigma.is_fixed_point(v)) continue;
      ++count;
      auto fwd = pi_forward(ot, v);
      EXPECT_TRUE(corner_is_permissible(fwd.out, fwd.corner));
      images[{fwd.out.tree.code(), to_text(fwd.out.sigma.perm())}].insert(
          fwd.corner);
    }
  });
  EXPECT_EQ(count, 8);
  EXPECT_EQ(images.size(), 4u);  // the four R_{1,1,0} O-trees
  for (const auto& [key, corners] : images) EXPECT_EQ(corners.size(), 2u);
}

TEST(Pi, ErrorsOnBadInputs) {
  // (T, (123)) has no 1-cycle vertices.
  OTree ot(PlaneTree("(())"), OPermutation(Permutation({1, 2, 0})));
  EXPECT_THROW(pi_forward(ot, 1), NotOneCycleError);
  // Last corner around the merged vertex is not permissible.
  auto pc = permissible_corners(ot);
  for (int c = 0; c < ot.tree.corner_count(); ++c) {
    if (std::find(pc.begin(), pc.end(), c) == pc.end())
      EXPECT_THROW(pi_inverse(ot, c), NotPermissibleError);
    else
      EXPECT_NO_THROW(pi_inverse(ot, c));
  }
}

TEST(Pi, ExhaustiveRoundTripsUpTo7Edges) {
  EXPECT_TRUE(verify_pi(7).pass);
}

}  // namespace
}  // namespace unimap
