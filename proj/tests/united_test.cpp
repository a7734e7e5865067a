#include <gtest/gtest.h>

#include "sgraph/united.hpp"

using namespace sgraph;
using namespace sgraph::united;

namespace {

std::vector<std::uint64_t> zero_to_twenty() {
  std::vector<std::uint64_t> out;
  for (std::uint64_t t = 0; t <= 20; ++t) out.push_back(t);
  return out;
}

TEST(United, TimeModelExhaustive) {
  const auto samples = zero_to_twenty();
  const auto r = check_united_laws(time_model(), std::span<const std::uint64_t>(samples));
  EXPECT_TRUE(r.all_pass());
  EXPECT_EQ(r.verdict("unit-sharing"), Verdict::pass);
  EXPECT_EQ(r.verdict("containment-3d"), Verdict::pass);
  EXPECT_EQ(r.verdict("zero-coincidence"), Verdict::skip);
  EXPECT_EQ(r.verdict("no-inverses"), Verdict::pass);
  EXPECT_EQ(r.results.size(), std::size(united_law_names));
}

TEST(United, SetsAndOptionalGraphs) {
  const auto sets = powerset({1, 2, 3});
  EXPECT_EQ(sets.size(), 8u);
  const auto rs = check_united_laws(set_union_model({1, 2, 3}), std::span<const std::set<int>>(sets));
  EXPECT_TRUE(rs.all_pass());
  EXPECT_EQ(rs.verdict("zero-coincidence"), Verdict::pass);

  const std::vector<std::string> u = {"a", "b", "c"};
  const auto graphs = optional_graph_samples(u);
  const auto rg = check_united_laws(optional_graph_model(u), std::span<const OptionalGraphTree>(graphs));
  for (const auto& law : rg.results) EXPECT_NE(law.verdict, Verdict::fail) << law.law << ": " << law.counterexample;
  EXPECT_EQ(rg.verdict("zero-coincidence"), Verdict::pass);
}

TEST(United, MaxPlusIsNotUnited) {
  const auto samples = max_plus_samples();
  const auto r = check_united_laws(max_plus(), std::span<const std::int64_t>(samples));
  EXPECT_EQ(r.verdict("unit-sharing"), Verdict::fail);
  EXPECT_EQ(r.at("unit-sharing").counterexample, "-inf, 0");
  EXPECT_EQ(r.verdict("containment-left"), Verdict::fail);
  EXPECT_EQ(r.verdict("overlay-associativity"), Verdict::pass);
  EXPECT_EQ(r.verdict("left-distributivity"), Verdict::pass);
  EXPECT_EQ(r.verdict("overlay-idempotence"), Verdict::pass);
}

TEST(United, CollapseChecks) {
  const std::vector<Unit> unit = {Unit{}};
  EXPECT_TRUE(check_collapse(trivial_structure(), std::span<const Unit>(unit)).collapsed());

  const bool bools[] = {false, true};
  const auto b = check_collapse(boolean_with_identified_units(), std::span<const bool>(bools));
  ASSERT_EQ(b.violations.size(), 1u);
  EXPECT_EQ(b.violations[0].sample, "true");
  EXPECT_EQ(b.violations[0].failed_step, "a = 1*a (unit of *)");

  const int points[] = {0, 1};
  const auto l = check_collapse(two_point_lattice_collapsed(), std::span<const int>(points));
  ASSERT_EQ(l.violations.size(), 1u);
  EXPECT_EQ(l.violations[0].sample, "1");

  auto distinct = boolean_with_identified_units();
  distinct.one = true;
  EXPECT_THROW(check_collapse(distinct, std::span<const bool>(bools)), std::invalid_argument);
}

TEST(United, EvalTime) {
  const auto prog = SPTerm::seq(SPTerm::par(SPTerm::leaf(3), SPTerm::leaf(5)), SPTerm::leaf(2));
  EXPECT_EQ(eval_time(prog), 7u);
  EXPECT_EQ(eval_time(SPTerm::empty()), 0u);
  EXPECT_EQ(eval_time(SPTerm::par(SPTerm::empty(), SPTerm::leaf(4))), 4u);
  EXPECT_EQ(check_time_homomorphism(1000, 1).verdict, Verdict::pass);
}

TEST(United, ReportLookup) {
  const auto samples = zero_to_twenty();
  const auto r = check_united_laws(time_model(), std::span<const std::uint64_t>(samples));
  EXPECT_THROW(r.at("no-such-law"), std::out_of_range);
  const std::vector<std::uint64_t> none;
  EXPECT_THROW(check_united_laws(time_model(), std::span<const std::uint64_t>(none)), std::invalid_argument);
}

TEST(United, SuiteRowsMatchExpectations) {
  const auto rows = run_united_suite();
  for (const auto& r : rows) EXPECT_TRUE(r.ok()) << r.instance << " " << r.law << " " << r.detail;
  const auto unit_sharing = std::find_if(rows.begin(), rows.end(), [](const SuiteRow& r) {
    return r.instance == "tropical-max-plus" && r.law == "unit-sharing";
  });
  ASSERT_NE(unit_sharing, rows.end());
  EXPECT_EQ(unit_sharing->verdict, Verdict::fail);
}

}  // namespace
