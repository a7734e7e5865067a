#pragma once

#include <cstdint>
#include <functional>
#include <memory>
#include <random>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

#include "sgraph/graph.hpp"
#include "sgraph/tree.hpp"

namespace sgraph::united {

/// Two monoids on one carrier: overlay (+) and connect (·). They form a
/// united monoid when their declared units coincide; `check_united_laws`
/// tests that and everything it implies.
template <typename T>
struct MonoidPair {
  using Op = std::function<T(const T&, const T&)>;

  std::string name;
  Op overlay;
  T overlay_unit;
  Op connect;
  T connect_unit;
  std::optional<T> zero;  // declared absorbing element, if any
  std::function<bool(const T&, const T&)> equal = std::equal_to<T>{};
  std::function<std::string(const T&)> show;
};

enum class Verdict { pass, fail, skip };

std::string_view to_string(Verdict v);

struct LawResult {
  std::string law;
  Verdict verdict = Verdict::pass;
  std::string counterexample;
};

struct Report {
  std::string instance;
  std::vector<LawResult> results;

  const LawResult& at(std::string_view law) const;
  Verdict verdict(std::string_view law) const { return at(law).verdict; }
  bool all_pass() const;
};

/// Law names in report order.
inline constexpr std::string_view united_law_names[] = {
    "overlay-unit",       "connect-unit",        "unit-sharing",          "overlay-associativity",
    "connect-associativity", "overlay-commutativity", "left-distributivity", "right-distributivity",
    "overlay-idempotence", "containment-left",    "containment-right",     "containment-both",
    "containment-3d",     "zero-coincidence",    "no-inverses"};

namespace detail {

class LawRecorder {
public:
  explicit LawRecorder(std::string law) { result_.law = std::move(law); }
  void fail(std::string witness) {
    if (result_.verdict != Verdict::fail) result_.counterexample = std::move(witness);
    result_.verdict = Verdict::fail;
  }
  void skip() { result_.verdict = Verdict::skip; }
  bool failed() const { return result_.verdict == Verdict::fail; }
  LawResult take() { return std::move(result_); }

private:
  LawResult result_;
};

}  // namespace detail

template <typename T>
Report check_united_laws(const MonoidPair<T>& m, std::span<const T> samples) {
  if (samples.empty()) throw std::invalid_argument("check_united_laws: no samples");
  auto eq = [&](const T& x, const T& y) { return m.equal(x, y); };
  auto add = [&](const T& x, const T& y) { return m.overlay(x, y); };
  auto mul = [&](const T& x, const T& y) { return m.connect(x, y); };
  auto show = [&](std::initializer_list<const T*> xs) {
    std::string out;
    for (const T* x : xs) out += (out.empty() ? "" : ", ") + (m.show ? m.show(*x) : std::string("?"));
    return out;
  };

  Report report{m.name, {}};
  using detail::LawRecorder;

  auto unary = [&](std::string law, auto holds) {
    LawRecorder r(std::move(law));
    for (const auto& a : samples)
      if (!holds(a)) {
        r.fail(show({&a}));
        break;
      }
    report.results.push_back(r.take());
  };
  auto binary = [&](std::string law, auto holds) {
    LawRecorder r(std::move(law));
    for (const auto& a : samples) {
      for (const auto& b : samples)
        if (!holds(a, b)) {
          r.fail(show({&a, &b}));
          break;
        }
      if (r.failed()) break;
    }
    report.results.push_back(r.take());
  };
  auto ternary = [&](std::string law, auto holds) {
    LawRecorder r(std::move(law));
    for (const auto& a : samples) {
      for (const auto& b : samples) {
        for (const auto& c : samples)
          if (!holds(a, b, c)) {
            r.fail(show({&a, &b, &c}));
            break;
          }
        if (r.failed()) break;
      }
      if (r.failed()) break;
    }
    report.results.push_back(r.take());
  };

  const T& e_add = m.overlay_unit;
  const T& e_mul = m.connect_unit;

  unary("overlay-unit", [&](const T& a) { return eq(add(a, e_add), a) && eq(add(e_add, a), a); });
  unary("connect-unit", [&](const T& a) { return eq(mul(a, e_mul), a) && eq(mul(e_mul, a), a); });
  {
    LawRecorder r("unit-sharing");
    if (!eq(e_add, e_mul)) r.fail(show({&e_add, &e_mul}));
    report.results.push_back(r.take());
  }
  ternary("overlay-associativity",
          [&](const T& a, const T& b, const T& c) { return eq(add(add(a, b), c), add(a, add(b, c))); });
  ternary("connect-associativity",
          [&](const T& a, const T& b, const T& c) { return eq(mul(mul(a, b), c), mul(a, mul(b, c))); });
  binary("overlay-commutativity", [&](const T& a, const T& b) { return eq(add(a, b), add(b, a)); });
  ternary("left-distributivity",
          [&](const T& a, const T& b, const T& c) { return eq(mul(a, add(b, c)), add(mul(a, b), mul(a, c))); });
  ternary("right-distributivity",
          [&](const T& a, const T& b, const T& c) { return eq(mul(add(a, b), c), add(mul(a, c), mul(b, c))); });
  unary("overlay-idempotence", [&](const T& a) { return eq(add(a, a), a); });
  binary("containment-left", [&](const T& a, const T& b) { return eq(mul(a, b), add(mul(a, b), a)); });
  binary("containment-right", [&](const T& a, const T& b) { return eq(mul(a, b), add(mul(a, b), b)); });
  binary("containment-both", [&](const T& a, const T& b) { return eq(mul(a, b), add(add(mul(a, b), a), b)); });
  ternary("containment-3d", [&](const T& a, const T& b, const T& c) {
    const T abc = mul(mul(a, b), c);
    T rhs = add(abc, mul(a, b));
    rhs = add(rhs, mul(a, c));
    rhs = add(rhs, mul(b, c));
    rhs = add(add(add(rhs, a), b), c);
    return eq(abc, rhs);
  });

  {
    LawRecorder r("zero-coincidence");
    if (!m.zero) {
      r.skip();
    } else {
      const T& z = *m.zero;
      for (const auto& a : samples) {
        const bool absorbs = eq(add(a, z), z) && eq(add(z, a), z) && eq(mul(a, z), z) && eq(mul(z, a), z);
        if (!absorbs) {
          r.fail(show({&a, &z}));
          break;
        }
      }
    }
    report.results.push_back(r.take());
  }

  {
    LawRecorder r("no-inverses");
    bool exercised = false;
    for (const auto& a : samples) {
      for (const auto& b : samples) {
        const bool sums_to_unit = eq(add(a, b), e_add) || eq(mul(a, b), e_mul);
        if (!sums_to_unit) continue;
        exercised = true;
        if (!eq(a, e_add) || !eq(b, e_add)) {
          r.fail(show({&a, &b}));
          break;
        }
      }
      if (r.failed()) break;
    }
    if (!exercised && !r.failed()) r.skip();
    report.results.push_back(r.take());
  }
  return report;
}

/// Semiring-shaped structure for the 0 = 1 collapse check.
template <typename T>
struct SemiringStructure {
  std::string name;
  std::function<T(const T&, const T&)> plus;
  std::function<T(const T&, const T&)> times;
  T zero;
  T one;
  std::function<bool(const T&, const T&)> equal = std::equal_to<T>{};
  std::function<std::string(const T&)> show;
};

template <typename T>
struct BoundedLattice {
  std::string name;
  std::function<T(const T&, const T&)> join;
  T bottom;
  std::function<T(const T&, const T&)> meet;
  T top;
  std::function<bool(const T&, const T&)> equal = std::equal_to<T>{};
  std::function<std::string(const T&)> show;
};

struct CollapseViolation {
  std::string sample;
  std::string failed_step;
};

struct CollapseReport {
  std::string structure;
  std::vector<CollapseViolation> violations;

  /// True when every sample equals the shared unit, i.e. the structure
  /// really is a single point.
  bool collapsed() const { return violations.empty(); }
};

/// With 0 = 1 every element must satisfy a = 1⊗a = 0⊗a = 0. Each sample is
/// pushed through that chain; a sample for which a step fails is reported
/// together with the step.
template <typename T>
CollapseReport check_collapse(const SemiringStructure<T>& s, std::span<const T> samples) {
  if (!s.equal(s.zero, s.one)) throw std::invalid_argument("check_collapse: units are not identified");
  CollapseReport report{s.name, {}};
  for (const auto& a : samples) {
    const T unit_step = s.times(s.one, a);
    const T zero_step = s.times(s.zero, a);
    std::string failed;
    if (!s.equal(a, unit_step))
      failed = "a = 1*a (unit of *)";
    else if (!s.equal(unit_step, zero_step))
      failed = "1*a = 0*a (postulated 0 = 1)";
    else if (!s.equal(zero_step, s.zero))
      failed = "0*a = 0 (zero of *)";
    else if (!s.equal(a, s.zero))
      failed = "a = 0";
    if (!failed.empty()) report.violations.push_back({s.show ? s.show(a) : "?", failed});
  }
  return report;
}

/// Lattice version of the chain: a = 1∧a = 1∧(0∨a) = 0∧(0∨a) = 0.
template <typename T>
CollapseReport check_collapse(const BoundedLattice<T>& l, std::span<const T> samples) {
  if (!l.equal(l.bottom, l.top)) throw std::invalid_argument("check_collapse: units are not identified");
  CollapseReport report{l.name, {}};
  for (const auto& a : samples) {
    const T s1 = l.meet(l.top, a);
    const T s2 = l.meet(l.top, l.join(l.bottom, a));
    const T s3 = l.meet(l.bottom, l.join(l.bottom, a));
    std::string failed;
    if (!l.equal(a, s1))
      failed = "a = 1^a (unit of ^)";
    else if (!l.equal(s1, s2))
      failed = "1^a = 1^(0va) (unit of v)";
    else if (!l.equal(s2, s3))
      failed = "1^(0va) = 0^(0va) (postulated 0 = 1)";
    else if (!l.equal(s3, l.bottom))
      failed = "0^(0va) = 0 (absorption)";
    if (!failed.empty()) report.violations.push_back({l.show ? l.show(a) : "?", failed});
  }
  return report;
}

/// Series-parallel program used by the execution-time cost model.
class SPTerm {
public:
  static SPTerm empty();
  static SPTerm leaf(std::uint64_t duration);
  static SPTerm par(SPTerm a, SPTerm b);
  static SPTerm seq(SPTerm a, SPTerm b);

  enum class Kind { empty, leaf, par, seq };
  Kind kind() const { return cell_->kind; }
  std::uint64_t duration() const { return cell_->duration; }
  const SPTerm& left() const { return *cell_->left; }
  const SPTerm& right() const { return *cell_->right; }

private:
  struct Cell {
    Kind kind;
    std::uint64_t duration = 0;
    std::shared_ptr<const SPTerm> left, right;
  };
  explicit SPTerm(std::shared_ptr<const Cell> c) : cell_(std::move(c)) {}
  std::shared_ptr<const Cell> cell_;
};

/// Parallel takes the maximum, sequence the sum, the empty program costs 0.
std::uint64_t eval_time(const SPTerm& t);

// Catalog instances.

/// (N, max, +, 0).
MonoidPair<std::uint64_t> time_model();

/// Sentinel for -inf in the max-plus carrier.
inline constexpr std::int64_t neg_inf = INT64_MIN;

/// Tropical max-plus: unit of max is -inf, unit of + is 0.
MonoidPair<std::int64_t> max_plus();
std::vector<std::int64_t> max_plus_samples();

/// Finite sets with union as both operations.
MonoidPair<std::set<int>> set_union_model(std::set<int> universe);
std::vector<std::set<int>> powerset(const std::set<int>& universe);

using OptionalGraphTree = OptionalTree<BoolSemiring, std::string>;

/// Possibly empty graph expressions; equality is graph equality. The
/// complete graph on `universe` (with self-loops) is declared as zero.
MonoidPair<OptionalGraphTree> optional_graph_model(const std::vector<std::string>& universe);
std::vector<OptionalGraphTree> optional_graph_samples(const std::vector<std::string>& universe);

SemiringStructure<bool> boolean_with_identified_units();
SemiringStructure<Unit> trivial_structure();
BoundedLattice<int> two_point_lattice_collapsed();

}  // namespace sgraph::united

namespace sgraph::united {

/// Checks eval_time(par a b) = max, eval_time(seq a b) = sum and
/// eval_time(empty) = 0 on `count` random series-parallel terms.
LawResult check_time_homomorphism(std::size_t count, std::uint64_t seed);

/// One row of the united-monoid suite.
struct SuiteRow {
  std::string instance;
  std::string law;
  Verdict verdict;
  bool expected_fail = false;
  std::string detail;

  /// Skips are always acceptable; otherwise the verdict must match.
  bool ok() const { return verdict == Verdict::skip || (verdict == Verdict::fail) == expected_fail; }
};

/// The registered instances (time model, sets, optional graphs, max-plus),
/// the collapse checks and the time homomorphism, with expected outcomes.
std::vector<SuiteRow> run_united_suite();

}  // namespace sgraph::united
