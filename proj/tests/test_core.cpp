#include <gtest/gtest.h>

#include "unimap/glued_map.hpp"
#include "unimap/ints.hpp"
#include "unimap/otree.hpp"
#include "unimap/partition.hpp"
#include "unimap/permutation.hpp"
#include "unimap/serialize.hpp"

namespace unimap {
namespace {

TEST(Ints, Basics) {
  EXPECT_EQ(factorial(8), Int(40320));
  EXPECT_EQ(double_factorial(-1), Int(1));
  EXPECT_EQ(double_factorial(1), Int(1));
  EXPECT_EQ(double_factorial(15), Int(2027025));
  EXPECT_EQ(binomial(5, 2), Int(10));
  EXPECT_EQ(binomial(4, -1), Int(0));
  EXPECT_EQ(binomial(4, 7), Int(0));
  EXPECT_EQ(catalan(9), Int(4862));
  EXPECT_EQ(pow2(10), Int(1024));
  EXPECT_EQ(exact_div(Int(40), Int(8)), Int(5));
  EXPECT_THROW(exact_div(Int(40), Int(7)), NonIntegralError);
}

TEST(Permutation, ValidationAndCycles) {
  EXPECT_THROW(Permutation({0, 0, 1}), InvalidInputError);
  EXPECT_THROW(Permutation({0, 3}), InvalidInputError);

  // Identity on three elements: canonical cycles (3)(2)(1).
  auto c = cycles_canonical(Permutation::identity(3));
  ASSERT_EQ(c.size(), 3u);
  EXPECT_EQ(c[0], std::vector<int>({2}));
  EXPECT_EQ(c[1], std::vector<int>({1}));
  EXPECT_EQ(c[2], std::vector<int>({0}));

  // The transposition (12) is its own canonical form.
  auto c2 = cycles_canonical(Permutation({1, 0}));
  ASSERT_EQ(c2.size(), 1u);
  EXPECT_EQ(c2[0], std::vector<int>({0, 1}));
}

TEST(Permutation, CanonicalFormOfWorkedExample) {
  // (154)(2)(3)(6)(7)(8) reordered canonically: (8)(7)(6)(3)(2)(154).
  Permutation p = Permutation::from_cycles(8, {{0, 4, 3}});
  auto c = cycles_canonical(p);
  ASSERT_EQ(c.size(), 6u);
  EXPECT_EQ(c[0], std::vector<int>({7}));
  EXPECT_EQ(c[1], std::vector<int>({6}));
  EXPECT_EQ(c[2], std::vector<int>({5}));
  EXPECT_EQ(c[3], std::vector<int>({2}));
  EXPECT_EQ(c[4], std::vector<int>({1}));
  EXPECT_EQ(c[5], std::vector<int>({0, 4, 3}));
  EXPECT_EQ(cycle_text(OPermutation(p)), "(8)(7)(6)(3)(2)(1 5 4)");
}

TEST(Permutation, RebuildFromCanonicalForm) {
  // Rebuilding from the canonical cycles returns the original, S_n for n<=7.
  for (int n = 0; n <= 7; ++n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    do {
      Permutation p(img);
      EXPECT_EQ(Permutation::from_cycles(n, cycles_canonical(p)), p);
    } while (std::next_permutation(img.begin(), img.end()));
  }
}

TEST(OPermutation, StatsExamples) {
  // Single 3-cycle: genus 1.
  OPermutation a(Permutation({1, 2, 0}));
  auto sa = opermutation_stats(a);
  EXPECT_EQ(sa.g, 1);
  EXPECT_EQ(sa.t, 1);
  EXPECT_EQ(sa.k, 0);
  EXPECT_EQ(sa.cycle_type, std::vector<int>({3}));

  // Identity on five elements.
  auto sb = opermutation_stats(OPermutation(Permutation::identity(5)));
  EXPECT_EQ(sb.g, 0);
  EXPECT_EQ(sb.t, 0);
  EXPECT_EQ(sb.k, 5);

  // (123)(4)(567): genus 2, one fixed point.
  OPermutation c(
      Permutation::from_cycles(7, {{0, 1, 2}, {4, 5, 6}}));
  auto sc = opermutation_stats(c);
  EXPECT_EQ(sc.g, 2);
  EXPECT_EQ(sc.t, 2);
  EXPECT_EQ(sc.k, 1);
  EXPECT_EQ(sc.cycle_type, std::vector<int>({3, 3, 1}));

  EXPECT_THROW(OPermutation(Permutation({1, 0})), EvenCycleError);
}

TEST(GluedMap, Validation) {
  EXPECT_THROW(GluedMap({0, 1}), InvalidInputError);           // fixed points
  EXPECT_THROW(GluedMap({1, 0, 2, 3}), InvalidInputError);     // fixed points
  EXPECT_THROW(GluedMap(std::vector<int>{1, 0, 3}), InvalidInputError);
}

TEST(GluedMap, SingleEdge) {
  // n=1 has a unique gluing: the one-edge plane tree, two vertices.
  GluedMap m({1, 0});
  EXPECT_EQ(m.genus(), 0);
  EXPECT_EQ(m.vertex_cycles().size(), 2u);
  EXPECT_EQ(m.degree_multiset(), std::vector<int>({1, 2}));
  EXPECT_FALSE(m.is_shape());
}

TEST(GluedMap, TorusSquare) {
  // Opposite-side gluing of the square: one vertex of degree 4 (+1 plant),
  // genus 1, and it is a shape.
  GluedMap m = GluedMap::from_pairs(2, {{0, 2}, {1, 3}});
  EXPECT_EQ(m.genus(), 1);
  EXPECT_EQ(m.degree_multiset(), std::vector<int>({5}));
  EXPECT_TRUE(m.is_shape());

  // The other two gluings of the square are plane trees.
  EXPECT_EQ(GluedMap::from_pairs(2, {{0, 1}, {2, 3}}).genus(), 0);
  EXPECT_EQ(GluedMap::from_pairs(2, {{0, 3}, {1, 2}}).genus(), 0);

  EXPECT_EQ(to_text(m), "[[1,3],[2,4]]");
}

TEST(GluedMap, PathDegrees) {
  // A 2-edge path rooted at an end: degrees {1,2} plus the plant.
  GluedMap m = GluedMap::from_pairs(2, {{0, 3}, {1, 2}});
  EXPECT_EQ(m.degree_multiset(), std::vector<int>({1, 2, 2}));
}

TEST(UnderlyingGraph, IdentitySigmaKeepsTree) {
  // Path 1-2-3 rooted at an end with sigma = id: the path itself.
  PlaneTree t("(())");
  OTree ot(t, OPermutation(Permutation::identity(3)));
  Multigraph g = underlying_graph(ot);
  EXPECT_EQ(g.vertex_count, 3);
  EXPECT_EQ(g.degree_multiset(), std::vector<int>({1, 2, 2}));
  EXPECT_FALSE(is_shape_tree(ot));
}

TEST(UnderlyingGraph, ThreeCycleMergesPathIntoLoops) {
  // Path with sigma = (123): one vertex carrying two loops, degree 4+1.
  PlaneTree t("(())");
  OTree ot(t, OPermutation(Permutation({1, 2, 0})));
  Multigraph g = underlying_graph(ot);
  EXPECT_EQ(g.vertex_count, 1);
  ASSERT_EQ(g.edges.size(), 2u);
  EXPECT_EQ(g.edges[0], std::make_pair(0, 0));
  EXPECT_EQ(g.degree_multiset(), std::vector<int>({5}));
  EXPECT_TRUE(is_shape_tree(ot));
}

TEST(UnderlyingGraph, DegreeSumIsTwiceEdges) {
  // Sum of merged degrees without the plant is twice the edge count.
  PlaneTree t("(()())()");
  OPermutation s(Permutation::from_cycles(5, {{0, 2, 4}}));
  OTree ot(t, s);
  Multigraph g = underlying_graph(ot);
  g.plant = false;
  int sum = 0;
  for (int d : g.degrees()) sum += d;
  EXPECT_EQ(sum, 2 * t.edges());
}

TEST(Partition, WithParts) {
  auto p32 = partitions_with_parts(3, 2);  // only 2+1
  ASSERT_EQ(p32.size(), 1u);
  EXPECT_EQ(p32[0].mult, std::vector<long>({1, 1}));
  EXPECT_EQ(p32[0].weight(), 3);
  EXPECT_EQ(p32[0].parts(), 2);

  auto p11 = partitions_with_parts(1, 1);
  ASSERT_EQ(p11.size(), 1u);
  EXPECT_EQ(p11[0].mult, std::vector<long>({1}));

  auto p52 = partitions_with_parts(5, 2);  // 4+1 and 3+2
  ASSERT_EQ(p52.size(), 2u);
  EXPECT_EQ(p52[0].part_list(), std::vector<long>({4, 1}));
  EXPECT_EQ(p52[1].part_list(), std::vector<long>({3, 2}));
}

TEST(Serialize, CanonicalTextForms) {
  EXPECT_EQ(to_text(Permutation({1, 0, 2})), "[2,1,3]");
  EXPECT_EQ(to_text(PlaneTree("(()())")), "(()())");
  EXPECT_EQ(to_text(GluedMap::from_pairs(2, {{0, 3}, {1, 2}})),
            "[[1,4],[2,3]]");
}

}  // namespace
}  // namespace unimap
