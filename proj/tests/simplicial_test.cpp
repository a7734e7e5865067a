#include <gtest/gtest.h>

#include <random>

#include "sgraph/expr.hpp"
#include "sgraph/simplicial.hpp"
#include "support.hpp"

using namespace sgraph;

namespace {

using SS = SimplicialSet<std::string>;

// A set of leaf positions forms a simplex iff every pair of them meets at a
// connect node; the simplex lists their names in tree order.
SS brute_force(const Tree<BoolSemiring, std::string>& t) {
  const test::LeafPaths<BoolSemiring> lp(t);
  const auto n = lp.names.size();
  SS out;
  for (std::size_t mask = 1; mask < (std::size_t{1} << n); ++mask) {
    std::vector<std::size_t> pos;
    for (std::size_t i = 0; i < n; ++i)
      if (mask >> i & 1) pos.push_back(i);
    bool connected = true;
    for (std::size_t a = 0; a < pos.size() && connected; ++a)
      for (std::size_t b = a + 1; b < pos.size() && connected; ++b) connected = lp.lca_label(pos[a], pos[b]);
    if (!connected) continue;
    Simplex<std::string> s;
    for (auto i : pos) s.push_back(lp.names[i]);
    out.insert(std::move(s));
  }
  return out;
}

TEST(Simplicial, SingleEdgeHasThreeSimplices) {
  const SS expected = {{"a"}, {"b"}, {"a", "b"}};
  EXPECT_EQ(to_simplicial_set(parse_expr<BoolSemiring>("a -> b")), expected);
}

TEST(Simplicial, TriangleIsFilled) {
  const auto ss = to_simplicial_set(parse_expr<BoolSemiring>("a -> b -> c"));
  EXPECT_EQ(ss.size(), 7u);
  EXPECT_TRUE(ss.contains({"a", "b", "c"}));
  const auto hollow = to_simplicial_set(parse_expr<BoolSemiring>("a -> b + a -> c + b -> c"));
  EXPECT_EQ(hollow.size(), 6u);
  EXPECT_FALSE(hollow.contains({"a", "b", "c"}));
}

TEST(Simplicial, MatchesBruteForceOracle) {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 500; ++i) {
    const auto t = test::random_tree<BoolSemiring>(rng, 8);
    EXPECT_EQ(to_simplicial_set(t), brute_force(t)) << print_expr<BoolSemiring>(t);
  }
}

TEST(Simplicial, ResultsAreFaceClosed) {
  std::mt19937_64 rng(4);
  for (int i = 0; i < 300; ++i) EXPECT_TRUE(is_valid(to_simplicial_set(test::random_tree<BoolSemiring>(rng, 10))));
  EXPECT_FALSE(is_valid(SS{{"a", "b"}}));
  EXPECT_TRUE(is_valid(SS{{"a", "b"}, {"a"}, {"b"}}));
}

TEST(Simplicial, SimplexAndOrdering) {
  const auto s = simplex<std::string>(std::vector<std::string>{"a", "b", "c"});
  EXPECT_EQ(print_expr<BoolSemiring>(s), "a -> (b -> c)");
  EXPECT_THROW(simplex<std::string>(std::vector<std::string>{}), std::invalid_argument);
  const auto sorted = sorted_simplices(to_simplicial_set(s));
  ASSERT_EQ(sorted.size(), 7u);
  EXPECT_EQ(sorted.front(), Simplex<std::string>{"a"});
  EXPECT_EQ(sorted[3], (Simplex<std::string>{"a", "b"}));
  EXPECT_EQ(sorted.back(), (Simplex<std::string>{"a", "b", "c"}));
}

}  // namespace
