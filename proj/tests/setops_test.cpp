#include <gtest/gtest.h>

#include <random>

#include "sgraph/expr.hpp"
#include "sgraph/setops.hpp"
#include "support.hpp"

using namespace sgraph;
using namespace sgraph::tset;

namespace {

TEST(Sets, DuplicateLeafCountsTwiceInSizeOnceInSet) {
  const auto t = parse_expr<UnitSemiring>("b + b");
  EXPECT_EQ(size(t), 2u);
  EXPECT_EQ(set_size(t), 1u);
  EXPECT_EQ(elements(t), (std::set<std::string>{"b"}));
}

TEST(Sets, Operations) {
  const auto s = insert(std::string("a"), singleton(std::string("b")));
  EXPECT_TRUE(member(std::string("a"), s));
  EXPECT_FALSE(member(std::string("c"), s));
  const auto u = set_union(s, singleton(std::string("c")));
  EXPECT_EQ(elements(u), (std::set<std::string>{"a", "b", "c"}));
  const auto e = erase(std::string("a"), u);
  ASSERT_TRUE(e);
  EXPECT_EQ(elements(*e), (std::set<std::string>{"b", "c"}));
  EXPECT_FALSE(erase(std::string("b"), singleton(std::string("b"))));
  EXPECT_TRUE(equivalent(parse_expr<UnitSemiring>("a + b"), parse_expr<UnitSemiring>("b + a + a")));
}

TEST(Sets, CartesianProduct) {
  const auto p = cartesian_product(parse_expr<UnitSemiring>("a + b"), parse_expr<UnitSemiring>("x + y + y"));
  std::set<std::pair<std::string, std::string>> expected = {{"a", "x"}, {"a", "y"}, {"b", "x"}, {"b", "y"}};
  EXPECT_EQ(elements(p), expected);
  EXPECT_EQ(size(p), 6u);
}

TEST(Sets, MatchStdSetOracle) {
  std::mt19937_64 rng(11);
  for (int i = 0; i < 300; ++i) {
    const auto s = test::random_tree<UnitSemiring>(rng, 8, 6);
    const auto t = test::random_tree<UnitSemiring>(rng, 8, 6);
    std::set<std::string> oracle;
    for (const auto& x : to_list(s)) oracle.insert(x);
    EXPECT_EQ(elements(s), oracle);
    for (const auto& x : to_list(t)) oracle.insert(x);
    EXPECT_EQ(elements(set_union(s, t)), oracle);
    oracle.erase("a");
    const auto e = erase(std::string("a"), set_union(s, t));
    EXPECT_EQ(e ? elements(*e) : std::set<std::string>{}, oracle);
  }
}

}  // namespace
