#include "sgraph/laws.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <variant>

#include "sgraph/closure.hpp"
#include "sgraph/expr.hpp"
#include "sgraph/graph.hpp"
#include "sgraph/lgraph.hpp"
#include "sgraph/render.hpp"
#include "sgraph/simplicial.hpp"

namespace sgraph::laws {

namespace {

constexpr std::string_view target_names[] = {"set", "simplicial", "graph", "lgraph", "preorder", "order", "size"};

// ---------------------------------------------------------------------------
// Term builders

LabelTerm lleaf(LabelTerm::Kind k, int var = 0) {
  LabelTerm t;
  t.kind = k;
  t.var = var;
  return t;
}
LabelTerm lzero() { return lleaf(LabelTerm::Kind::zero); }
LabelTerm lone() { return lleaf(LabelTerm::Kind::one); }
LabelTerm lvar(int i) { return lleaf(LabelTerm::Kind::var, i); }
LabelTerm lbin(LabelTerm::Kind k, LabelTerm a, LabelTerm b) {
  return {k, 0, std::make_shared<const LabelTerm>(std::move(a)), std::make_shared<const LabelTerm>(std::move(b))};
}
LabelTerm lplus(LabelTerm a, LabelTerm b) { return lbin(LabelTerm::Kind::plus, std::move(a), std::move(b)); }
LabelTerm ltimes(LabelTerm a, LabelTerm b) { return lbin(LabelTerm::Kind::times, std::move(a), std::move(b)); }

Term v(int i) {
  Term t;
  t.var = i;
  return t;
}
Term node(LabelTerm s, Term l, Term r) {
  return {Term::Kind::node, 0, std::move(s), std::make_shared<const Term>(std::move(l)),
          std::make_shared<const Term>(std::move(r))};
}
Term ov(Term l, Term r) { return node(lzero(), std::move(l), std::move(r)); }
Term to(Term l, Term r) { return node(lone(), std::move(l), std::move(r)); }
Term to(LabelTerm s, Term l, Term r) { return node(std::move(s), std::move(l), std::move(r)); }

// ---------------------------------------------------------------------------
// Cell tables

constexpr SemiringId kUnit = SemiringId::unit;
constexpr SemiringId kBool = SemiringId::boolean;
constexpr SemiringId kTrop = SemiringId::tropical;
constexpr SemiringId kMaxMin = SemiringId::maxmin;
constexpr SemiringId kCount = SemiringId::count;

class Cells {
public:
  Cells& hold(Target t, std::initializer_list<SemiringId> srs) { return add(t, srs, Expect::must_hold); }
  Cells& fail(Target t, std::initializer_list<SemiringId> srs) { return add(t, srs, Expect::must_fail); }
  Cells& skip(Target t, std::initializer_list<SemiringId> srs) { return add(t, srs, Expect::skip); }

  // set, simplicial, graph, preorder and order all hold.
  Cells& hold_unlabelled() {
    hold(Target::set, {kUnit});
    for (auto t : {Target::simplicial, Target::graph, Target::preorder, Target::order}) hold(t, {kBool});
    return *this;
  }
  // Holds for idempotent semirings on lgraph, fails for counting.
  Cells& idempotent_lgraph() {
    hold(Target::lgraph, {kUnit, kBool, kTrop, kMaxMin});
    return fail(Target::lgraph, {kCount});
  }

  std::vector<Cell> take() { return std::move(cells_); }

private:
  Cells& add(Target t, std::initializer_list<SemiringId> srs, Expect e) {
    for (auto sr : srs) cells_.push_back({sr, t, e});
    return *this;
  }
  std::vector<Cell> cells_;
};

Law make_law(std::string name, std::string formula, std::vector<VarKind> vars, int label_vars, Term lhs, Term rhs,
             Cells cells, Mode mode = Mode::direct) {
  return Law{std::move(name), std::move(formula), std::move(vars), label_vars, std::move(lhs), std::move(rhs),
             mode,          cells.take()};
}

std::vector<Law> build_catalog() {
  using VK = VarKind;
  const std::vector<VK> trees3 = {VK::tree, VK::tree, VK::tree};
  const std::vector<VK> trees2 = {VK::tree, VK::tree};
  const std::vector<VK> distinct3 = {VK::distinct_leaf, VK::distinct_leaf, VK::distinct_leaf};
  const auto a = v(0), b = v(1), c = v(2);
  const auto x = lvar(0), y = lvar(1);

  std::vector<Law> out;

  out.push_back(make_law("overlay-associativity", "(a + b) + c = a + (b + c)", trees3, 0, ov(ov(a, b), c),
                         ov(a, ov(b, c)),
                         Cells()
                             .hold_unlabelled()
                             .hold(Target::lgraph, {kUnit, kBool, kTrop, kMaxMin, kCount})
                             .hold(Target::size, {kUnit, kCount})));

  out.push_back(make_law("connect-associativity", "(a -[x]-> b) -[x]-> c = a -[x]-> (b -[x]-> c)", trees3, 1,
                         to(x, to(x, a, b), c), to(x, a, to(x, b, c)),
                         Cells().hold_unlabelled().idempotent_lgraph().hold(Target::size, {kUnit, kCount})));

  out.push_back(make_law("mixed-associativity", "(a -[x]-> b) -[y]-> c = a -[x]-> (b -[y]-> c)", trees3, 2,
                         to(y, to(x, a, b), c), to(x, a, to(y, b, c)),
                         Cells()
                             .hold(Target::set, {kUnit})
                             .hold(Target::lgraph, {kUnit})
                             .fail(Target::simplicial, {kBool})
                             .fail(Target::graph, {kBool})
                             .fail(Target::lgraph, {kBool, kTrop, kMaxMin, kCount})));

  out.push_back(make_law("overlay-commutativity", "a + b = b + a", trees2, 0, ov(a, b), ov(b, a),
                         Cells()
                             .hold_unlabelled()
                             .hold(Target::lgraph, {kUnit, kBool, kTrop, kMaxMin, kCount})
                             .hold(Target::size, {kUnit, kCount})));

  out.push_back(make_law("overlay-idempotence", "a + a = a", {VK::tree}, 0, ov(a, a), a,
                         Cells().hold_unlabelled().idempotent_lgraph().fail(Target::size, {kUnit, kCount})));

  out.push_back(make_law("containment", "a -> b = (a -> b) + a + b", trees2, 0, to(a, b), ov(ov(to(a, b), a), b),
                         Cells().hold_unlabelled().idempotent_lgraph()));

  out.push_back(make_law("left-distributivity", "a -[x]-> (b + c) = (a -[x]-> b) + (a -[x]-> c)", trees3, 1,
                         to(x, a, ov(b, c)), ov(to(x, a, b), to(x, a, c)),
                         Cells().hold_unlabelled().idempotent_lgraph()));

  out.push_back(make_law("right-distributivity", "(a + b) -[x]-> c = (a -[x]-> c) + (b -[x]-> c)", trees3, 1,
                         to(x, ov(a, b), c), ov(to(x, a, c), to(x, b, c)),
                         Cells().hold_unlabelled().idempotent_lgraph()));

  out.push_back(make_law("decomposition", "(a -> b) -> c = (a -> b) + (a -> c) + (b -> c)", trees3, 0,
                         to(to(a, b), c), ov(ov(to(a, b), to(a, c)), to(b, c)),
                         Cells()
                             .hold(Target::set, {kUnit})
                             .fail(Target::simplicial, {kBool})
                             .hold(Target::graph, {kBool})
                             .hold(Target::preorder, {kBool})
                             .hold(Target::order, {kBool})
                             .idempotent_lgraph()));

  auto decomposition_cells = [] {
    return Cells()
        .fail(Target::simplicial, {kBool})
        .hold(Target::graph, {kBool})
        .hold(Target::preorder, {kBool})
        .hold(Target::order, {kBool})
        .idempotent_lgraph();
  };
  out.push_back(make_law("generalised-decomposition-left",
                         "(a -[x]-> b) -[y]-> c = a -[x]-> b + a -[y]-> c + b -[y]-> c", trees3, 2,
                         to(y, to(x, a, b), c), ov(ov(to(x, a, b), to(y, a, c)), to(y, b, c)),
                         decomposition_cells()));
  out.push_back(make_law("generalised-decomposition-right",
                         "a -[x]-> (b -[y]-> c) = a -[x]-> b + a -[x]-> c + b -[y]-> c", trees3, 2,
                         to(x, a, to(y, b, c)), ov(ov(to(x, a, b), to(x, a, c)), to(y, b, c)),
                         decomposition_cells()));

  // Over distinct vertices decomposition holds for every semiring, counting
  // included: each edge is produced exactly once on both sides.
  auto vertex_decomposition_cells = [] {
    return Cells()
        .fail(Target::simplicial, {kBool})
        .hold(Target::graph, {kBool})
        .hold(Target::lgraph, {kUnit, kBool, kTrop, kMaxMin, kCount});
  };
  out.push_back(make_law("vertex-decomposition-left",
                         "(a -[x]-> b) -[y]-> c = a -[x]-> b + a -[y]-> c + b -[y]-> c (distinct vertices)",
                         distinct3, 2, to(y, to(x, a, b), c), ov(ov(to(x, a, b), to(y, a, c)), to(y, b, c)),
                         vertex_decomposition_cells()));
  out.push_back(make_law("vertex-decomposition-right",
                         "a -[x]-> (b -[y]-> c) = a -[x]-> b + a -[x]-> c + b -[y]-> c (distinct vertices)",
                         distinct3, 2, to(x, a, to(y, b, c)), ov(ov(to(x, a, b), to(x, a, c)), to(y, b, c)),
                         vertex_decomposition_cells()));

  out.push_back(make_law("parallel-unit", "a = a -[0]-> a (a a leaf)", {VK::leaf}, 0, a, to(lzero(), a, a),
                         Cells()
                             .hold(Target::set, {kUnit})
                             .hold(Target::simplicial, {kBool})
                             .hold(Target::graph, {kBool})
                             .hold(Target::lgraph, {kUnit, kBool, kTrop, kMaxMin, kCount})));

  out.push_back(make_law("parallel-composition", "a -[x]-> b + a -[y]-> b = a -[x+y]-> b (a, b leaves)",
                         {VK::leaf, VK::leaf}, 2, ov(to(x, a, b), to(y, a, b)), to(lplus(x, y), a, b),
                         Cells()
                             .hold(Target::set, {kUnit})
                             .hold(Target::simplicial, {kBool})
                             .hold(Target::graph, {kBool})
                             .hold(Target::lgraph, {kUnit, kBool, kTrop, kMaxMin, kCount})));

  out.push_back(make_law("sequential-unit", "a = a -> a (a a leaf, modulo closure)", {VK::leaf}, 0, a, to(a, a),
                         Cells().hold(Target::lgraph, {kBool, kTrop, kMaxMin}).skip(Target::lgraph, {kUnit, kCount}),
                         Mode::modulo_closure));

  out.push_back(make_law("sequential-composition",
                         "a -[x]-> b + b -[y]-> c = a -[x]-> b + b -[y]-> c + a -[x*y]-> c (modulo closure)",
                         trees3, 2, ov(to(x, a, b), to(y, b, c)),
                         ov(ov(to(x, a, b), to(y, b, c)), to(ltimes(x, y), a, c)),
                         Cells().hold(Target::lgraph, {kBool, kTrop, kMaxMin}).skip(Target::lgraph, {kUnit, kCount}),
                         Mode::modulo_closure));

  out.push_back(make_law("reflexivity", "a = a -> a (a a leaf)", {VK::leaf}, 0, a, to(a, a),
                         Cells()
                             .hold(Target::preorder, {kBool})
                             .fail(Target::graph, {kBool})
                             .fail(Target::order, {kBool})));

  out.push_back(make_law("transitivity", "a -> b + b -> c = a -> b + b -> c + a -> c", trees3, 0,
                         ov(to(a, b), to(b, c)), ov(ov(to(a, b), to(b, c)), to(a, c)),
                         Cells()
                             .hold(Target::preorder, {kBool})
                             .hold(Target::order, {kBool})
                             .fail(Target::graph, {kBool})));

  // A self-loop on a leaf stands for the cycle error.
  const auto bottom = to(b, b);
  out.push_back(make_law("cycle", "a -> a = b -> b (a, b leaves)", {VK::leaf, VK::leaf}, 0, to(a, a), bottom,
                         Cells()
                             .hold(Target::order, {kBool})
                             .fail(Target::preorder, {kBool})
                             .fail(Target::graph, {kBool})));

  const std::vector<VK> tree_and_leaf = {VK::tree, VK::leaf};
  auto zero_cells = [] { return Cells().hold(Target::order, {kBool}).fail(Target::graph, {kBool}); };
  out.push_back(make_law("zero-overlay", "a + (b -> b) = b -> b (b a leaf)", tree_and_leaf, 0, ov(a, bottom), bottom,
                         zero_cells()));
  out.push_back(make_law("zero-connect-left", "(b -> b) -> a = b -> b (b a leaf)", tree_and_leaf, 0, to(bottom, a),
                         bottom, zero_cells()));
  out.push_back(make_law("zero-connect-right", "a -> (b -> b) = b -> b (b a leaf)", tree_and_leaf, 0, to(a, bottom),
                         bottom, zero_cells()));

  return out;
}

// ---------------------------------------------------------------------------
// Evaluation

template <Semiring S>
using Value = std::variant<std::set<std::string>, SimplicialSet<std::string>, Graph<std::string>,
                           LGraph<S, std::string>, Relation<std::string>, OrderOutcome<std::string>, std::size_t>;

template <Semiring S>
struct Bindings {
  std::vector<Tree<S, std::string>> trees;
  std::vector<label_t<S>> labels;
};

template <Semiring S>
label_t<S> eval_label(const LabelTerm& l, const Bindings<S>& b) {
  switch (l.kind) {
    case LabelTerm::Kind::zero: return S::zero();
    case LabelTerm::Kind::one: return S::one();
    case LabelTerm::Kind::var: return b.labels.at(static_cast<std::size_t>(l.var));
    case LabelTerm::Kind::plus: return S::plus(eval_label(*l.a, b), eval_label(*l.b, b));
    case LabelTerm::Kind::times: break;
  }
  return S::times(eval_label(*l.a, b), eval_label(*l.b, b));
}

template <Semiring S>
Tree<S, std::string> instantiate(const Term& t, const Bindings<S>& b) {
  if (t.kind == Term::Kind::var) return b.trees.at(static_cast<std::size_t>(t.var));
  return Tree<S, std::string>::node(eval_label(t.label, b), instantiate(*t.left, b), instantiate(*t.right, b));
}

template <Semiring S>
Value<S> interpret(Target target, Mode mode, const Tree<S, std::string>& t) {
  switch (target) {
    case Target::set: return leaf_set(t);
    case Target::size: return size(t);
    case Target::lgraph: {
      auto g = to_lgraph(t);
      if (mode == Mode::direct) return g;
      if constexpr (StarSemiring<S>) {
        return closure<S, std::string>(g);
      } else {
        throw std::invalid_argument("closure needs a semiring with star");
      }
    }
    default: break;
  }
  if constexpr (std::is_same_v<S, BoolSemiring>) {
    switch (target) {
      case Target::simplicial: return to_simplicial_set(t);
      case Target::graph: return to_graph(t);
      case Target::preorder: return to_preorder(t);
      case Target::order: return to_strict_partial_order(t);
      default: break;
    }
  }
  throw std::invalid_argument("target " + std::string(target_name(target)) + " needs another semiring");
}

template <Semiring S>
nlohmann::json value_to_json(const Value<S>& value) {
  return std::visit(
      [](const auto& x) -> nlohmann::json {
        using X = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<X, std::set<std::string>>) return set_to_json(x);
        else if constexpr (std::is_same_v<X, SimplicialSet<std::string>>) return simplicial_to_json(x);
        else if constexpr (std::is_same_v<X, Graph<std::string>>) return graph_to_json(x);
        else if constexpr (std::is_same_v<X, LGraph<S, std::string>>) return lgraph_to_json<S>(x);
        else if constexpr (std::is_same_v<X, Relation<std::string>>) return preorder_to_json(x);
        else if constexpr (std::is_same_v<X, OrderOutcome<std::string>>) return order_to_json(x);
        else return size_to_json(x);
      },
      value);
}

std::string var_name(std::size_t i) { return std::string(1, static_cast<char>('a' + i)); }
std::string label_var_name(std::size_t i) { return std::string(1, static_cast<char>('x' + i)); }

template <Semiring S>
Bindings<S> draw_bindings(const Law& law, const TreeGen& gen, std::mt19937_64& rng) {
  using T = Tree<S, std::string>;
  Bindings<S> b;
  std::vector<std::size_t> unused;
  for (std::size_t i = 0; i < gen.alphabet; ++i) unused.push_back(i);
  for (auto kind : law.vars) {
    switch (kind) {
      case VarKind::tree: b.trees.push_back(random_tree<S>(rng, gen)); break;
      case VarKind::leaf: b.trees.push_back(T::leaf(leaf_name(draw_below(rng, gen.alphabet)))); break;
      case VarKind::distinct_leaf: {
        if (unused.empty()) throw std::invalid_argument("law " + law.name + " needs a larger alphabet");
        const auto k = draw_below(rng, unused.size());
        b.trees.push_back(T::leaf(leaf_name(unused[k])));
        unused.erase(unused.begin() + static_cast<std::ptrdiff_t>(k));
        break;
      }
    }
  }
  const auto pool = S::label_pool();
  for (int i = 0; i < law.label_vars; ++i) b.labels.push_back(pool[draw_below(rng, pool.size())]);
  return b;
}

template <Semiring S>
CaseOutcome run_case_typed(const Law& law, Target target, const TreeGen& gen, std::size_t index) {
  auto rng = case_engine(gen.seed, index);
  const auto b = draw_bindings<S>(law, gen, rng);
  const auto lhs = instantiate(law.lhs, b);
  const auto rhs = instantiate(law.rhs, b);
  const auto lv = interpret<S>(target, law.mode, lhs);
  const auto rv = interpret<S>(target, law.mode, rhs);

  CaseOutcome out;
  out.holds = lv == rv;
  if (out.holds) return out;

  auto& ce = out.detail;
  ce.seed = gen.seed;
  ce.case_index = index;
  ce.bindings = nlohmann::json::object();
  for (std::size_t i = 0; i < b.trees.size(); ++i) ce.bindings[var_name(i)] = tree_to_json<S>(b.trees[i]);
  for (std::size_t i = 0; i < b.labels.size(); ++i) ce.bindings[label_var_name(i)] = S::to_json(b.labels[i]);
  ce.lhs = print_expr<S>(lhs);
  ce.rhs = print_expr<S>(rhs);
  ce.lhs_value = value_to_json<S>(lv);
  ce.rhs_value = value_to_json<S>(rv);
  return out;
}

}  // namespace

std::optional<Target> target_from_name(std::string_view name) {
  for (auto t : all_targets)
    if (target_name(t) == name) return t;
  return std::nullopt;
}

std::string_view target_name(Target t) { return target_names[static_cast<std::size_t>(t)]; }

bool compatible(SemiringId sr, Target t) {
  switch (t) {
    case Target::set: return sr == SemiringId::unit;
    case Target::lgraph:
    case Target::size: return true;
    default: break;
  }
  return sr == SemiringId::boolean;
}

std::string_view to_string(Expect e) {
  switch (e) {
    case Expect::must_hold: return "must_hold";
    case Expect::must_fail: return "must_fail";
    case Expect::skip: break;
  }
  return "skip";
}

Expect Law::expect(SemiringId sr, Target t) const {
  for (const auto& c : cells)
    if (c.semiring == sr && c.target == t) return c.expect;
  return Expect::skip;
}

const std::vector<Law>& catalog() {
  static const std::vector<Law> laws = build_catalog();
  return laws;
}

const Law* find_law(std::string_view name) {
  for (const auto& law : catalog())
    if (law.name == name) return &law;
  return nullptr;
}

std::string leaf_name(std::size_t i) {
  std::string out;
  do {
    out.insert(out.begin(), static_cast<char>('a' + i % 26));
    i /= 26;
  } while (i-- > 0);
  return out;
}

std::mt19937_64 case_engine(std::uint64_t seed, std::uint64_t index) {
  // splitmix64 of (seed, index) so neighbouring cases get unrelated streams.
  std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return std::mt19937_64(z ^ (z >> 31));
}

std::size_t draw_below(std::mt19937_64& rng, std::size_t n) {
  if (n == 0) throw std::invalid_argument("draw_below: empty range");
  // Rejection sampling keeps the draw unbiased and identical on every platform.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
  std::uint64_t r;
  do r = rng();
  while (r >= limit);
  return static_cast<std::size_t>(r % n);
}

bool CellReport::ok() const {
  switch (expect) {
    case Expect::must_hold: return failures == 0;
    case Expect::must_fail: return witness.has_value();
    case Expect::skip: break;
  }
  return true;
}

CaseOutcome run_case(const Law& law, SemiringId sr, Target t, const TreeGen& gen, std::size_t index) {
  if (!compatible(sr, t))
    throw std::invalid_argument("semiring " + std::string(semiring_name(sr)) + " cannot be read as " +
                                std::string(target_name(t)));
  return dispatch(sr, [&]<typename S>(std::type_identity<S>) { return run_case_typed<S>(law, t, gen, index); });
}

CellReport check_law(const Law& law, SemiringId sr, Target t, std::size_t cases, const TreeGen& gen) {
  CellReport report{law.name, sr, t, law.expect(sr, t), 0, 0, std::nullopt};
  if (!compatible(sr, t))
    throw std::invalid_argument("semiring " + std::string(semiring_name(sr)) + " cannot be read as " +
                                std::string(target_name(t)));
  for (std::size_t i = 0; i < cases; ++i) {
    auto outcome = run_case(law, sr, t, gen, i);
    ++report.cases;
    if (outcome.holds) continue;
    ++report.failures;
    if (!report.witness) report.witness = std::move(outcome.detail);
    if (report.expect == Expect::must_fail) break;
  }
  return report;
}

std::vector<CellReport> run_suite(const SuiteOptions& options) {
  std::vector<CellReport> out;
  for (const auto& law : catalog()) {
    if (options.law && law.name != *options.law) continue;
    for (const auto& cell : law.cells) {
      if (options.semiring && cell.semiring != *options.semiring) continue;
      if (options.target && cell.target != *options.target) continue;
      if (cell.expect == Expect::skip) {
        out.push_back(CellReport{law.name, cell.semiring, cell.target, Expect::skip, 0, 0, std::nullopt});
        continue;
      }
      out.push_back(check_law(law, cell.semiring, cell.target, options.cases, options.gen));
    }
  }
  return out;
}

std::vector<std::string> redundancy_violations(const std::vector<CellReport>& reports) {
  auto find = [&](std::string_view law, SemiringId sr, Target t) -> const CellReport* {
    for (const auto& r : reports)
      if (r.law == law && r.semiring == sr && r.target == t) return &r;
    return nullptr;
  };
  std::vector<std::string> out;
  for (const auto& r : reports) {
    if (r.law != "generalised-decomposition-left") continue;
    const auto* right = find("generalised-decomposition-right", r.semiring, r.target);
    const bool decomposition_holds =
        r.expect != Expect::skip && r.failures == 0 && right && right->expect != Expect::skip && right->failures == 0;
    if (!decomposition_holds) continue;
    for (std::string_view derived :
         {"overlay-associativity", "connect-associativity", "left-distributivity", "right-distributivity"}) {
      const auto* d = find(derived, r.semiring, r.target);
      if (d && d->failures > 0)
        out.push_back(std::string(derived) + " fails on " + std::string(semiring_name(r.semiring)) + "/" +
                      std::string(target_name(r.target)) + " although decomposition holds");
    }
  }
  return out;
}

nlohmann::json report_to_json(const std::vector<CellReport>& reports) {
  auto cells = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json j = {{"law", r.law},
                        {"semiring", semiring_name(r.semiring)},
                        {"target", target_name(r.target)},
                        {"expect", to_string(r.expect)},
                        {"cases", r.cases},
                        {"failures", r.failures},
                        {"ok", r.ok()}};
    if (r.witness) {
      const auto& w = *r.witness;
      j["witness"] = {{"seed", w.seed},       {"case", w.case_index},         {"bindings", w.bindings},
                      {"lhs", w.lhs},         {"rhs", w.rhs},                 {"lhs_value", w.lhs_value},
                      {"rhs_value", w.rhs_value}};
    }
    cells.push_back(std::move(j));
  }
  return cells;
}

}  // namespace sgraph::laws
