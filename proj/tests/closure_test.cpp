#include <gtest/gtest.h>

#include <algorithm>
#include <random>

#include "oracles.hpp"
#include "sgraph/closure.hpp"
#include "sgraph/expr.hpp"
#include "support.hpp"

using namespace sgraph;

namespace {

template <StarSemiring S>
std::vector<label_t<S>> weights() {
  if constexpr (std::is_same_v<label_t<S>, bool>)
    return {false, true};
  else
    return {ExtRational(0), ExtRational(1), ExtRational(2), ExtRational(3), ExtRational::infinity()};
}

template <typename S>
class ClosureOracle : public ::testing::Test {};

using Stars = ::testing::Types<BoolSemiring, TropicalSemiring, MaxMinSemiring>;
TYPED_TEST_SUITE(ClosureOracle, Stars);

TYPED_TEST(ClosureOracle, EqualsSumOverSimplePaths) {
  using S = TypeParam;
  std::mt19937_64 rng(2024);
  for (int i = 0; i < 200; ++i) {
    const auto g = oracle::random_lgraph<S>(rng, 6, weights<S>());
    EXPECT_EQ(transitive_closure<S>(g), oracle::simple_path_closure<S>(g));
  }
}

TYPED_TEST(ClosureOracle, EliminationOrderDoesNotMatter) {
  using S = TypeParam;
  std::mt19937_64 rng(77);
  for (int i = 0; i < 100; ++i) {
    const auto g = oracle::random_lgraph<S>(rng, 6, weights<S>());
    std::vector<std::string> order;
    for (const auto& [v, _] : g) order.push_back(v);
    const auto base = transitive_closure<S>(g);
    std::shuffle(order.begin(), order.end(), rng);
    EXPECT_EQ((transitive_closure<S, std::string>(g, order)), base);
  }
}

TYPED_TEST(ClosureOracle, ClosureIsIdempotent) {
  using S = TypeParam;
  std::mt19937_64 rng(78);
  for (int i = 0; i < 100; ++i) {
    const auto c = closure<S>(oracle::random_lgraph<S>(rng, 6, weights<S>()));
    EXPECT_EQ(closure<S>(c), c);
  }
}

TEST(Closure, TropicalShortestPaths) {
  const auto c = closure<TropicalSemiring>(to_lgraph(parse_expr<TropicalSemiring>("a -[1]-> b + b -[2]-> c")));
  using L = LGraph<TropicalSemiring, std::string>;
  const L expected = {{"a", {{"a", ExtRational(0)}, {"b", ExtRational(1)}, {"c", ExtRational(3)}}},
                      {"b", {{"b", ExtRational(0)}, {"c", ExtRational(2)}}},
                      {"c", {{"c", ExtRational(0)}}}};
  EXPECT_EQ(c, expected);
}

TEST(Closure, BandwidthWidestPaths) {
  const auto c = closure<MaxMinSemiring>(
      to_lgraph(parse_expr<MaxMinSemiring>("a -[5]-> b + b -[2]-> c + a -[1]-> c")));
  EXPECT_EQ(c.at("a").at("c"), ExtRational(2));
  EXPECT_TRUE(c.at("a").at("a").is_infinite());
}

TEST(Closure, RejectsBadOrder) {
  const auto g = to_lgraph(parse_expr<BoolSemiring>("a -> b"));
  EXPECT_THROW((transitive_closure<BoolSemiring, std::string>(g, {"a"})), std::invalid_argument);
  EXPECT_THROW((transitive_closure<BoolSemiring, std::string>(g, {"a", "a"})), std::invalid_argument);
  EXPECT_THROW((transitive_closure<BoolSemiring, std::string>(g, {"a", "c"})), std::invalid_argument);
}

TEST(Preorder, IsReflexiveTransitiveReachability) {
  std::mt19937_64 rng(31);
  for (int i = 0; i < 500; ++i) {
    const auto t = test::random_tree<BoolSemiring>(rng, 12);
    auto expected = oracle::reachability(t);
    for (const auto& v : leaf_set(t)) expected.emplace(v, v);
    EXPECT_EQ(to_preorder(t), expected) << print_expr<BoolSemiring>(t);
  }
}

TEST(StrictOrder, AcyclicTermsGiveIrreflexiveReachability) {
  std::mt19937_64 rng(32);
  int acyclic = 0;
  for (int i = 0; i < 1000; ++i) {
    const auto t = test::random_tree<BoolSemiring>(rng, 8, 8);
    const auto reach = oracle::reachability(t);
    const bool cyclic = std::any_of(reach.begin(), reach.end(), [](const auto& e) { return e.first == e.second; });
    const auto o = to_strict_partial_order(t);
    if (cyclic) {
      EXPECT_TRUE(std::holds_alternative<CycleError>(o)) << print_expr<BoolSemiring>(t);
      continue;
    }
    ++acyclic;
    ASSERT_TRUE(std::holds_alternative<StrictOrder<std::string>>(o)) << print_expr<BoolSemiring>(t);
    EXPECT_EQ(std::get<StrictOrder<std::string>>(o).relation, reach);
    EXPECT_EQ(std::get<StrictOrder<std::string>>(o).elements, leaf_set(t));
  }
  EXPECT_GT(acyclic, 100);
}

TEST(StrictOrder, GraftedCyclesAlwaysCollapse) {
  std::mt19937_64 rng(33);
  for (int i = 0; i < 1000; ++i) {
    const auto t = oracle::graft_two_cycle(rng, test::random_tree<BoolSemiring>(rng, 12), 4);
    EXPECT_TRUE(std::holds_alternative<CycleError>(to_strict_partial_order(t))) << print_expr<BoolSemiring>(t);
  }
}

TEST(StrictOrder, CycleIsAbsorbing) {
  std::mt19937_64 rng(34);
  const auto bottom = parse_expr<BoolSemiring>("x -> y + y -> x");
  for (int i = 0; i < 300; ++i) {
    const auto t = test::random_tree<BoolSemiring>(rng, 12);
    for (const auto& combined : {overlay<BoolSemiring, std::string>(t, bottom),
                                 connect<BoolSemiring, std::string>(t, bottom),
                                 connect<BoolSemiring, std::string>(bottom, t)})
      EXPECT_TRUE(std::holds_alternative<CycleError>(to_strict_partial_order(combined)));
  }
}

TEST(StrictOrder, Examples) {
  const auto chain = to_strict_partial_order(parse_expr<BoolSemiring>("a -> b -> c"));
  ASSERT_TRUE(std::holds_alternative<StrictOrder<std::string>>(chain));
  EXPECT_EQ(std::get<StrictOrder<std::string>>(chain).relation.size(), 3u);
  EXPECT_TRUE(std::holds_alternative<CycleError>(to_strict_partial_order(parse_expr<BoolSemiring>("a -> a"))));
  const auto single = to_strict_partial_order(parse_expr<BoolSemiring>("a"));
  ASSERT_TRUE(std::holds_alternative<StrictOrder<std::string>>(single));
  EXPECT_TRUE(std::get<StrictOrder<std::string>>(single).relation.empty());
}

}  // namespace
