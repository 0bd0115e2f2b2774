#include "fixtures.hpp"

#include <gtest/gtest.h>

namespace {

using namespace dualfilter;

TEST(Oracle, AllDiffExample) {
  const auto inst = fixtures::filtering_alldiff();
  const auto rep = oracle::enumerate(inst);
  EXPECT_EQ(rep.supports.size(), 3u);
  EXPECT_EQ(rep.z_star, 0);
  const std::vector<long> expected{0, 3, 3, 0, 3, 3, 0};
  for (std::size_t k = 0; k < expected.size(); ++k) EXPECT_EQ(*rep.z_restricted[k], expected[k]);
  EXPECT_EQ(rep.ac_set(inst), fixtures::edge_set({{0, 0}, {1, 1}, {2, 2}}));
}

TEST(Oracle, PathExample) {
  const auto inst = fixtures::filtering_path();
  const auto rep = oracle::enumerate(inst);
  EXPECT_EQ(rep.supports.size(), 4u);
  EXPECT_EQ(rep.z_star, 0);
  EXPECT_EQ(rep.ac_set(inst), fixtures::edge_set({{0, 1}, {1, 2}, {2, 5}}));
}

TEST(Oracle, MarksEdgesOnNoSupport) {
  const auto inst = fixtures::alldiff(3, {0, 1, 2},
                                      {{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {2, 0, 0}, {2, 1, 0}, {2, 2, 0}}, 5);
  const auto rep = oracle::enumerate(inst);
  EXPECT_FALSE(rep.z_restricted[1]);
  EXPECT_FALSE(rep.exact_rc[1]);
  EXPECT_FALSE(rep.consistent[1]);
}

TEST(Oracle, NoSupportThrows) {
  const auto inst = fixtures::alldiff(2, {0, 1}, {{0, 0, 0}, {1, 0, 0}}, 0);
  EXPECT_THROW(oracle::enumerate(inst), InfeasibleConstraint);
}

TEST(Oracle, SizeGuards) {
  EXPECT_THROW(oracle::enumerate(fixtures::complete_alldiff(9)), SizeGuardExceeded);
  std::vector<std::tuple<int, int, Cost>> arcs;
  for (int v = 0; v < 12; ++v) arcs.emplace_back(v, v + 1, 0);
  EXPECT_THROW(oracle::enumerate(fixtures::dag(13, arcs, 0)), SizeGuardExceeded);
  EXPECT_NO_THROW(oracle::enumerate(fixtures::complete_alldiff(6)));
}

TEST(Oracle, IncompatibilityCheck) {
  const auto inst = fixtures::filtering_alldiff();
  EXPECT_TRUE(oracle::check_incompatible(inst, fixtures::edge_set({{0, 0}, {0, 1}})));
  EXPECT_TRUE(oracle::check_incompatible(inst, fixtures::edge_set({{0, 0}, {1, 0}})));
  EXPECT_FALSE(oracle::check_incompatible(inst, fixtures::edge_set({{0, 0}, {1, 1}})));
}

TEST(Oracle, AgreesWithLinearProgramming) {
  std::mt19937 rng(17);
  for (int t = 0; t < 40; ++t) {
    const auto inst = t % 2 ? fixtures::random_dag(rng) : fixtures::random_alldiff(rng);
    const auto rep = oracle::enumerate(inst);
    EXPECT_EQ(optimal_value(inst), rep.z_star);
    EXPECT_EQ(exact_reduced_costs(inst), rep.exact_rc);
  }
}

}  // namespace
