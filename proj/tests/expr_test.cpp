#include <gtest/gtest.h>

#include <random>

#include "sgraph/expr.hpp"
#include "support.hpp"

using namespace sgraph;

namespace {

TEST(Parser, Precedence) {
  using T = Tree<BoolSemiring, std::string>;
  const auto a = T::leaf("a"), b = T::leaf("b"), c = T::leaf("c");
  EXPECT_EQ(parse_expr<BoolSemiring>("a + b"), T::node(false, a, b));
  EXPECT_EQ(parse_expr<BoolSemiring>("(a + b) -> c"), T::node(true, T::node(false, a, b), c));
  EXPECT_EQ(parse_expr<BoolSemiring>("a + b -> c"), T::node(false, a, T::node(true, b, c)));
  EXPECT_EQ(parse_expr<BoolSemiring>("a + b + c"), T::node(false, T::node(false, a, b), c));
  EXPECT_EQ(parse_expr<BoolSemiring>("a -> b -> c"), T::node(true, T::node(true, a, b), c));
}

TEST(Parser, LabelledArrows) {
  const auto t = parse_expr<TropicalSemiring>("a -[1]-> b + b -[2]-> c");
  ASSERT_FALSE(t.is_leaf());
  EXPECT_TRUE(t.label().is_infinite());
  EXPECT_EQ(t.left().label(), ExtRational(1));
  EXPECT_EQ(t.right().label(), ExtRational(2));
  EXPECT_EQ(parse_expr<TropicalSemiring>("a -[ 1.5 ]-> b").label(), ExtRational(3, 2));
  EXPECT_EQ(parse_expr<BoolSemiring>("a -[false]-> b"), parse_expr<BoolSemiring>("a + b"));
  EXPECT_EQ(parse_expr<UnitSemiring>("a -[()]-> b"), parse_expr<UnitSemiring>("a + b"));
}

TEST(Parser, QuotedLeaves) {
  const auto t = parse_expr<BoolSemiring>(R"("new york" -> "a\"b" -> "x\\y")");
  EXPECT_EQ(to_list(t), (std::vector<std::string>{"new york", "a\"b", "x\\y"}));
  EXPECT_EQ(print_expr<BoolSemiring>(t), R"("new york" -> "a\"b" -> "x\\y")");
}

TEST(Parser, ErrorsReportPositions) {
  auto pos = [](std::string_view text) -> std::size_t {
    try {
      parse_expr<TropicalSemiring>(text);
    } catch (const ParseError& e) {
      return e.position();
    }
    return std::string::npos;
  };
  EXPECT_EQ(pos("a +"), 3u);
  EXPECT_EQ(pos("a -[x]-> b"), 4u);
  EXPECT_EQ(pos("(a"), 2u);
  EXPECT_EQ(pos("a b"), 2u);
  EXPECT_EQ(pos(""), 0u);
  EXPECT_EQ(pos("a -[1> b"), 4u);
  EXPECT_EQ(pos("\"abc"), 0u);
  EXPECT_THROW(parse_expr<CountingSemiring>("a -[1.5]-> b"), ParseError);
  EXPECT_THROW(parse_expr<BoolSemiring>("a -[1]-> b"), ParseError);
}

template <typename S>
class RoundTrip : public ::testing::Test {};

using All = ::testing::Types<UnitSemiring, BoolSemiring, TropicalSemiring, MaxMinSemiring, CountingSemiring>;
TYPED_TEST_SUITE(RoundTrip, All);

TYPED_TEST(RoundTrip, PrintThenParseIsIdentity) {
  using S = TypeParam;
  std::mt19937_64 rng(500);
  for (int i = 0; i < 500; ++i) {
    const auto t = test::random_tree<S>(rng, 12, 6);
    const auto text = print_expr<S>(t);
    EXPECT_EQ(parse_expr<S>(text), t) << text;
  }
}

TYPED_TEST(RoundTrip, JsonEncodingIsIdentity) {
  using S = TypeParam;
  std::mt19937_64 rng(501);
  for (int i = 0; i < 500; ++i) {
    const auto t = test::random_tree<S>(rng, 12, 6);
    const auto j = tree_to_json<S>(t);
    EXPECT_EQ(tree_from_json<S>(nlohmann::json::parse(j.dump())), t) << j.dump();
  }
}

TEST(Json, Encoding) {
  const auto t = parse_expr<TropicalSemiring>("a -[1.5]-> b");
  EXPECT_EQ(tree_to_json<TropicalSemiring>(t).dump(),
            R"({"l":{"leaf":"a"},"node":"1.5","r":{"leaf":"b"}})");
  EXPECT_THROW(tree_from_json<TropicalSemiring>(nlohmann::json::parse(R"({"node":1})")), std::invalid_argument);
  EXPECT_THROW(tree_from_json<TropicalSemiring>(nlohmann::json::parse(R"({"leaf":3})")), std::invalid_argument);
  EXPECT_THROW(tree_from_json<CountingSemiring>(
                   nlohmann::json::parse(R"({"node":"x","l":{"leaf":"a"},"r":{"leaf":"b"}})")),
               std::invalid_argument);
}

}  // namespace
