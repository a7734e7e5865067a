#include <gtest/gtest.h>

#include <random>

#include "sgraph/expr.hpp"
#include "sgraph/tree.hpp"
#include "support.hpp"

using namespace sgraph;

namespace {

using T = Tree<TropicalSemiring, std::string>;

TEST(Tree, ConstructorsAndAccessors) {
  const auto t = connect<TropicalSemiring, std::string>(ExtRational(3), T::leaf("a"), T::leaf("b"));
  ASSERT_FALSE(t.is_leaf());
  EXPECT_EQ(t.label(), ExtRational(3));
  EXPECT_EQ(t.left().leaf_value(), "a");
  EXPECT_EQ(t.right().leaf_value(), "b");
  const auto o = overlay<TropicalSemiring, std::string>(T::leaf("a"), T::leaf("b"));
  const auto c = connect<TropicalSemiring, std::string>(T::leaf("a"), T::leaf("b"));
  EXPECT_TRUE(o.label().is_infinite());
  EXPECT_EQ(c.label(), ExtRational(0));
}

TEST(Tree, StructuralEquality) {
  const auto x = parse_expr<TropicalSemiring>("a -[1]-> (b + c)");
  const auto y = parse_expr<TropicalSemiring>("a -[1]-> (b + c)");
  const auto z = parse_expr<TropicalSemiring>("a -[2]-> (b + c)");
  EXPECT_EQ(x, y);
  EXPECT_NE(x, z);
  EXPECT_NE(x, parse_expr<TropicalSemiring>("a -[1]-> (c + b)"));
}

TEST(Tree, LeavesNestsToTheRight) {
  const auto t = leaves<BoolSemiring, std::string>(std::vector<std::string>{"a", "b", "c"});
  EXPECT_EQ(print_expr<BoolSemiring>(t), "a + (b + c)");
  EXPECT_THROW((leaves<BoolSemiring, std::string>(std::vector<std::string>{})), std::invalid_argument);
}

TEST(Tree, FoldSizeAndList) {
  const auto t = parse_expr<BoolSemiring>("(b + a) -> (b + c)");
  EXPECT_EQ(size(t), 4u);
  EXPECT_EQ(to_list(t), (std::vector<std::string>{"b", "a", "b", "c"}));
  EXPECT_EQ(leaf_set(t), (std::set<std::string>{"a", "b", "c"}));
  EXPECT_TRUE(has_leaf(std::string("c"), t));
  EXPECT_FALSE(has_leaf(std::string("d"), t));
  const auto depth = fold([](const std::string&) { return 0; },
                          [](bool, int l, int r) { return 1 + std::max(l, r); }, t);
  EXPECT_EQ(depth, 2);
}

TEST(Tree, MapKeepsShapeAndLabels) {
  const auto t = parse_expr<TropicalSemiring>("a -[2]-> b + c");
  const auto m = map([](const std::string& s) { return s + s; }, t);
  EXPECT_EQ(print_expr<TropicalSemiring>(m), "aa -[2]-> bb + cc");
}

TEST(Tree, BindSubstitutesLeaves) {
  const auto t = parse_expr<BoolSemiring>("a -> b");
  const auto r = bind(t, [](const std::string& s) {
    return s == "a" ? parse_expr<BoolSemiring>("x + y") : Tree<BoolSemiring, std::string>::leaf(s);
  });
  EXPECT_EQ(print_expr<BoolSemiring>(r), "(x + y) -> b");
}

TEST(Tree, FilterCollapsesAndEmpties) {
  const auto t = parse_expr<BoolSemiring>("a -> (b + c)");
  const auto no_b = filter([](const std::string& s) { return s != "b"; }, t);
  ASSERT_TRUE(no_b);
  EXPECT_EQ(print_expr<BoolSemiring>(*no_b), "a -> c");
  const auto none = filter([](const std::string&) { return false; }, t);
  EXPECT_FALSE(none);
  const auto all = filter([](const std::string&) { return true; }, t);
  ASSERT_TRUE(all);
  EXPECT_EQ(*all, t);
}

TEST(Tree, FilterMatchesListOracle) {
  std::mt19937_64 rng(5);
  for (int i = 0; i < 300; ++i) {
    const auto t = test::random_tree<BoolSemiring>(rng, 10);
    const auto keep = [](const std::string& s) { return s != "a"; };
    const auto f = filter(keep, t);
    std::vector<std::string> expected;
    for (const auto& x : to_list(t))
      if (keep(x)) expected.push_back(x);
    if (expected.empty())
      EXPECT_FALSE(f);
    else
      EXPECT_EQ(to_list(*f), expected);
  }
}

TEST(Tree, LiftNodeTreatsEmptyAsUnit) {
  using O = OptionalTree<BoolSemiring, std::string>;
  const O a = Tree<BoolSemiring, std::string>::leaf("a");
  EXPECT_EQ(lift_node<BoolSemiring>(true, O{}, a), a);
  EXPECT_EQ(lift_node<BoolSemiring>(true, a, O{}), a);
  EXPECT_FALSE(lift_node<BoolSemiring>(false, O{}, O{}));
  EXPECT_EQ(print_expr<BoolSemiring>(*lift_node<BoolSemiring>(true, a, a)), "a -> a");
}

}  // namespace
