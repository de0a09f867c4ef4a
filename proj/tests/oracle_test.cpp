#include <gtest/gtest.h>

#include <cmath>

#include "gelab/oracle.hpp"
#include "support/corpus.hpp"

namespace gelab {
namespace {

using testing::complete;
using testing::cycle;
using testing::path;

TEST(BruteForceTest, IndependentSetCounts) {
  // Independent sets of a path are counted by Fibonacci numbers.
  std::vector<std::size_t> fib{2, 3, 5, 8, 13, 21, 34, 55};
  for (std::size_t n = 1; n <= fib.size(); ++n) EXPECT_EQ(oracle::independent_sets(path(n)).size(), fib[n - 1]);
  EXPECT_EQ(oracle::independent_sets(complete(6)).size(), 7u);
  EXPECT_EQ(oracle::independent_sets(Graph(5)).size(), 32u);
}

TEST(BruteForceTest, MaximalSets) {
  EXPECT_EQ(oracle::maximal_independent_sets(cycle(5)).size(), 5u);
  EXPECT_EQ(oracle::maximal_independent_sets(complete(4)).size(), 4u);
  auto within = oracle::maximal_independent_sets(path(3), bits::from_list({0, 1}));
  EXPECT_EQ(within.size(), 2u);
}

TEST(BruteForceTest, Alpha) {
  EXPECT_EQ(oracle::brute_alpha(cycle(5)), 2u);
  EXPECT_EQ(oracle::brute_alpha(testing::petersen()), 4u);
  EXPECT_EQ(oracle::brute_alpha(testing::hypercube(3)), 4u);
  EXPECT_EQ(oracle::brute_alpha(Graph(0)), 0u);
  EXPECT_THROW(oracle::brute_alpha(Graph(21)), CapExceeded);
}

TEST(BruteForceTest, MaxWeight) {
  std::vector<Rational> w{Rational(1, 3), Rational(2, 3)};
  EXPECT_EQ(oracle::brute_max_weight(complete(2), w), Rational(2, 3));
  std::vector<double> c5(5, 0.2);
  EXPECT_DOUBLE_EQ(oracle::brute_max_weight(cycle(5), c5), 0.4);
}

TEST(BruteEntropyTest, ClosedForms) {
  EXPECT_NEAR(oracle::brute_entropy(cycle(5), Distribution::uniform(5)), std::log2(2.5), 1e-9);
  EXPECT_NEAR(oracle::brute_entropy(complete(4), Distribution::uniform(4)), 2.0, 1e-9);
  EXPECT_NEAR(oracle::brute_entropy(Graph(4), Distribution::uniform(4)), 0.0, 1e-12);
  EXPECT_NEAR(oracle::brute_entropy(path(3), Distribution::uniform(3)), std::log2(3.0) - 2.0 / 3.0, 1e-9);
  // K2 with (1/3, 2/3): the minimiser is a = P, giving the Shannon entropy.
  double shannon = -(1.0 / 3) * std::log2(1.0 / 3) - (2.0 / 3) * std::log2(2.0 / 3);
  EXPECT_NEAR(oracle::brute_entropy(complete(2), Distribution({Rational(1, 3), Rational(2, 3)})), shannon, 1e-9);
  EXPECT_THROW(oracle::brute_entropy(Graph(11), Distribution::uniform(11)), CapExceeded);
}

}  // namespace
}  // namespace gelab
