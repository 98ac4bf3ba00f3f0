#include <gtest/gtest.h>

#include <set>
#include <sstream>

#include "taugraph/enumerate.hpp"
#include "taugraph/families.hpp"
#include "taugraph/oracle.hpp"

using namespace taugraph;

// Free-tree counts and class scans below were produced by networkx
// (tests/oracle/oracle.py) and match the published tree counts.
TEST(Trees, Counts) {
  const std::size_t expected[] = {1, 1, 1, 2, 3, 6, 11, 23, 47, 106, 235, 551};
  for (int n = 1; n <= 12; ++n) EXPECT_EQ(gen_trees(n).size(), expected[n - 1]) << n;
}

TEST(Trees, OutputsAreTreesInKeyOrder) {
  const auto trees = gen_trees(8);
  for (std::size_t i = 0; i < trees.size(); ++i) {
    EXPECT_TRUE(is_tree(trees[i]));
    if (i > 0) {
      EXPECT_LT(canonical_key(trees[i - 1]), canonical_key(trees[i]));
    }
  }
}

TEST(Trees, AgreeWithPrueferEnumeration) {
  for (int n = 2; n <= 9; ++n) {
    std::set<CanonicalKey> labelled;
    oracle::for_each_labeled_tree(n, [&](const Graph& t) { labelled.insert(tree_key(t)); });
    std::set<CanonicalKey> generated;
    for (const auto& t : gen_trees(n)) generated.insert(tree_key(t));
    EXPECT_EQ(labelled, generated) << n;
  }
}

TEST(Cyclic, CountsAgainstTheFilterOracle) {
  for (int n = 3; n <= 6; ++n) {
    std::set<oracle::BruteKey> ours;
    for (const auto& g : gen_unicyclic(n)) {
      EXPECT_EQ(classify(g), GraphClass::unicyclic);
      ours.insert(oracle::brute_force_key(g));
    }
    EXPECT_EQ(ours, oracle::connected_classes(n, n)) << n;
  }
  for (int n = 4; n <= 6; ++n) {
    std::set<oracle::BruteKey> ours;
    for (const auto& g : gen_bicyclic(n)) {
      EXPECT_EQ(classify(g), GraphClass::bicyclic);
      ours.insert(oracle::brute_force_key(g));
    }
    EXPECT_EQ(ours, oracle::connected_classes(n, n + 1)) << n;
  }
}

TEST(Cyclic, Counts) {
  const std::size_t uni[] = {1, 2, 5, 13, 33, 89, 240};
  for (int n = 3; n <= 9; ++n) EXPECT_EQ(gen_unicyclic(n).size(), uni[n - 3]) << n;
  const std::size_t bi[] = {1, 5, 19, 67, 236};
  for (int n = 4; n <= 8; ++n) EXPECT_EQ(gen_bicyclic(n).size(), bi[n - 4]) << n;
  EXPECT_EQ(gen_unicyclic(3).front().size(), 3U);
}

TEST(Cyclic, BicyclicFiveHasTwoOrThreeCycles) {
  for (const auto& g : gen_bicyclic(5)) {
    const auto c = simple_cycles(g).size();
    EXPECT_TRUE(c == 2 || c == 3) << describe(g);
  }
}

TEST(Conjugated, Counts) {
  const std::size_t expected[] = {1, 1, 2, 5, 15, 49};
  for (int n = 2; n <= 12; n += 2) EXPECT_EQ(gen_conjugated_trees(n).size(), expected[n / 2 - 1]) << n;
}

TEST(Bounds, Rejected) {
  EXPECT_THROW(gen_trees(13), EnumerationBoundError);
  EXPECT_THROW(gen_trees(0), EnumerationBoundError);
  EXPECT_THROW(gen_unicyclic(11), EnumerationBoundError);
  EXPECT_THROW(gen_unicyclic(2), EnumerationBoundError);
  EXPECT_THROW(gen_bicyclic(10), EnumerationBoundError);
  EXPECT_THROW(gen_bicyclic(3), EnumerationBoundError);
  EXPECT_THROW(gen_conjugated_trees(7), EnumerationBoundError);
  EXPECT_THROW(gen_conjugated_trees(14), EnumerationBoundError);
  EnumerationLimits wide;
  wide.tree = 13;
  EXPECT_EQ(gen_trees(13, wide).size(), 1301U);
  wide.tree = 17;
  EXPECT_THROW(gen_trees(17, wide), EnumerationBoundError);
}

TEST(Parallel, ResultsIndependentOfThreads) {
  const auto one = gen_bicyclic(7, {}, 1);
  const auto four = gen_bicyclic(7, {}, 4);
  EXPECT_EQ(one, four);
  EXPECT_EQ(gen_trees(10, {}, 1), gen_trees(10, {}, 3));
}

struct Scan {
  EnumClass cls;
  int n;
  std::size_t count;
  std::int64_t min_tau;
  std::int64_t max_tau;
};

TEST(Scans, MatchOracle) {
  const Scan scans[] = {
      {EnumClass::tree, 4, 2, 7, 10},           {EnumClass::tree, 7, 11, 13, 33},
      {EnumClass::tree, 10, 106, 19, 70},       {EnumClass::tree, 12, 551, 23, 102},
      {EnumClass::unicyclic, 4, 2, 7, 8},       {EnumClass::unicyclic, 5, 5, 9, 13},
      {EnumClass::unicyclic, 9, 240, 17, 51},   {EnumClass::bicyclic, 5, 5, 9, 12},
      {EnumClass::bicyclic, 6, 19, 11, 19},     {EnumClass::bicyclic, 8, 236, 15, 38},
      {EnumClass::conjugated_tree, 6, 2, 19, 24}, {EnumClass::conjugated_tree, 12, 49, 40, 102},
  };
  for (const auto& s : scans) {
    const auto r = extremal_scan(s.cls, s.n);
    EXPECT_EQ(r.count, s.count) << to_string(s.cls) << s.n;
    EXPECT_EQ(r.min_tau, s.min_tau) << to_string(s.cls) << s.n;
    EXPECT_EQ(r.max_tau, s.max_tau) << to_string(s.cls) << s.n;
  }
}

TEST(Scans, Witnesses) {
  const auto uni5 = extremal_scan(EnumClass::unicyclic, 5);
  EXPECT_TRUE(uni5.max_witnessed_by(construct({FamilyId::U2, 5, 0})));
  EXPECT_TRUE(uni5.min_witnessed_by(construct({FamilyId::U1, 5, 0})));
  const auto bi6 = extremal_scan(EnumClass::bicyclic, 6);
  EXPECT_TRUE(bi6.min_witnessed_by(construct({FamilyId::B1, 6, 0})));
  EXPECT_TRUE(bi6.min_witnessed_by(construct({FamilyId::B1prime, 6, 0})));
  EXPECT_TRUE(bi6.max_witnessed_by(construct({FamilyId::B2prime, 6, 0})));
  const auto uni4 = extremal_scan(EnumClass::unicyclic, 4);
  EXPECT_TRUE(uni4.max_witnessed_by(construct({FamilyId::cycle, 4, 0})));
  EXPECT_FALSE(uni4.max_witnessed_by(construct({FamilyId::U2, 4, 0})));
}

TEST(Scans, TwoCycleBicyclicMaxima) {
  const std::int64_t expected[] = {9, 16, 24, 34};
  for (int n = 5; n <= 8; ++n) {
    std::vector<Graph> two;
    for (const auto& g : gen_bicyclic(n))
      if (simple_cycles(g).size() == 2) two.push_back(g);
    const auto r = summarize(EnumClass::bicyclic, n, two);
    EXPECT_EQ(r.max_tau, expected[n - 5]);
    EXPECT_TRUE(r.max_witnessed_by(construct({FamilyId::B2, n, 0})));
  }
}

TEST(Csv, Format) {
  std::ostringstream out;
  write_report_csv_header(out);
  write_report_csv_row(out, extremal_scan(EnumClass::conjugated_tree, 6));
  EXPECT_EQ(out.str(), "class,n,count,min_tau,max_tau,min_witnesses,max_witnesses\nconjugated-tree,6,2,19,24,1,1\n");
  EXPECT_EQ(parse_enum_class("conjugated-tree"), EnumClass::conjugated_tree);
  EXPECT_FALSE(parse_enum_class("forest").has_value());
}
