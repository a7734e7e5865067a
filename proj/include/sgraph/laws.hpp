#pragma once

#include <cstddef>
#include <cstdint>
#include <memory>
#include <optional>
#include <random>
#include <string>
#include <string_view>
#include <vector>

#include <nlohmann/json.hpp>

#include "sgraph/semiring.hpp"
#include "sgraph/tree.hpp"

namespace sgraph::laws {

/// How a tree is read when checking a law.
enum class Target { set, simplicial, graph, lgraph, preorder, order, size };

inline constexpr Target all_targets[] = {Target::set,      Target::simplicial, Target::graph, Target::lgraph,
                                         Target::preorder, Target::order,      Target::size};

std::optional<Target> target_from_name(std::string_view name);
std::string_view target_name(Target t);

/// Which semirings a target accepts: sets need the trivial semiring,
/// simplicial sets, graphs and (pre)orders need booleans, and edge-labelled
/// graphs and tree size take any semiring.
bool compatible(SemiringId sr, Target t);

/// Label expression inside a law: zero, one, a label variable, or a sum or
/// product of label expressions.
struct LabelTerm {
  enum class Kind { zero, one, var, plus, times };
  Kind kind = Kind::one;
  int var = 0;
  std::shared_ptr<const LabelTerm> a, b;
};

/// Tree expression inside a law, over tree/leaf variables.
struct Term {
  enum class Kind { var, node };
  Kind kind = Kind::var;
  int var = 0;
  LabelTerm label;
  std::shared_ptr<const Term> left, right;
};

/// Tree variables range over random trees; leaf variables over single
/// leaves; distinct-leaf variables over leaves pairwise different from the
/// other distinct-leaf variables of the same law.
enum class VarKind { tree, leaf, distinct_leaf };

enum class Expect { must_hold, must_fail, skip };

std::string_view to_string(Expect e);

struct Cell {
  SemiringId semiring;
  Target target;
  Expect expect;
};

enum class Mode { direct, modulo_closure };

struct Law {
  std::string name;
  std::string formula;  // human-readable statement, e.g. "a + b = b + a"
  std::vector<VarKind> vars;
  int label_vars = 0;
  Term lhs, rhs;
  Mode mode = Mode::direct;
  std::vector<Cell> cells;

  Expect expect(SemiringId sr, Target t) const;
};

/// Every law with its expected verdict per (semiring, target).
const std::vector<Law>& catalog();
const Law* find_law(std::string_view name);

/// Seeded random tree generator. Deterministic for a fixed seed; leaves are
/// drawn from the first `alphabet` names a, b, c, ...
struct TreeGen {
  std::uint64_t seed = 42;
  std::size_t max_leaves = 12;
  std::size_t alphabet = 4;
};

std::string leaf_name(std::size_t i);

/// Random engine for case `index` of a run seeded with `seed`.
std::mt19937_64 case_engine(std::uint64_t seed, std::uint64_t index);

/// Uniform integer in [0, n).
std::size_t draw_below(std::mt19937_64& rng, std::size_t n);

template <Semiring S>
Tree<S, std::string> random_tree(std::mt19937_64& rng, const TreeGen& gen, std::size_t leaf_count) {
  using T = Tree<S, std::string>;
  if (leaf_count <= 1) return T::leaf(leaf_name(draw_below(rng, gen.alphabet)));
  static const auto pool = S::label_pool();
  const auto left = 1 + draw_below(rng, leaf_count - 1);
  auto label = pool[draw_below(rng, pool.size())];
  auto l = random_tree<S>(rng, gen, left);
  auto r = random_tree<S>(rng, gen, leaf_count - left);
  return T::node(std::move(label), std::move(l), std::move(r));
}

/// One random tree with between 1 and `max_leaves` leaves.
template <Semiring S>
Tree<S, std::string> random_tree(std::mt19937_64& rng, const TreeGen& gen) {
  if (gen.max_leaves < 1) throw std::invalid_argument("TreeGen: max_leaves must be at least 1");
  return random_tree<S>(rng, gen, 1 + draw_below(rng, gen.max_leaves));
}

/// `n` trees; tree i comes from `case_engine(gen.seed, i)`.
template <Semiring S>
std::vector<Tree<S, std::string>> generate(const TreeGen& gen, std::size_t n) {
  std::vector<Tree<S, std::string>> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto rng = case_engine(gen.seed, i);
    out.push_back(random_tree<S>(rng, gen));
  }
  return out;
}

/// Evidence that a law's two sides differ for one case.
struct Counterexample {
  std::uint64_t seed = 0;
  std::size_t case_index = 0;
  nlohmann::json bindings;  // variable name -> tree json, label name -> label json
  std::string lhs, rhs;     // instantiated sides in expression syntax
  nlohmann::json lhs_value, rhs_value;
};

struct CellReport {
  std::string law;
  SemiringId semiring;
  Target target;
  Expect expect;
  std::size_t cases = 0;     // cases evaluated
  std::size_t failures = 0;  // cases where the sides differed
  std::optional<Counterexample> witness;

  /// must_hold: no failures; must_fail: a witness exists; skip: always.
  bool ok() const;
};

/// Result of evaluating one case.
struct CaseOutcome {
  bool holds = true;
  Counterexample detail;
};

/// Evaluate case `index` of `law` for (sr, t). Regenerates the same
/// bindings for the same seed and index, so stored witnesses replay.
CaseOutcome run_case(const Law& law, SemiringId sr, Target t, const TreeGen& gen, std::size_t index);

/// Run `cases` cases. A must_fail cell stops at its first counterexample.
/// Throws std::invalid_argument for an incompatible (sr, t).
CellReport check_law(const Law& law, SemiringId sr, Target t, std::size_t cases, const TreeGen& gen);

struct SuiteOptions {
  std::optional<std::string> law;
  std::optional<SemiringId> semiring;
  std::optional<Target> target;
  std::size_t cases = 1000;
  TreeGen gen;
};

/// Runs every catalog cell matching the filters; skip cells are reported
/// without running.
std::vector<CellReport> run_suite(const SuiteOptions& options);

/// Decomposition subsumes associativity and distributivity: wherever both
/// generalised decomposition cells pass, those cells must pass too.
/// Returns a description of every violated implication.
std::vector<std::string> redundancy_violations(const std::vector<CellReport>& reports);

nlohmann::json report_to_json(const std::vector<CellReport>& reports);

}  // namespace sgraph::laws
