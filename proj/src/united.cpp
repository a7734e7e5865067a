#include "sgraph/united.hpp"

#include <algorithm>
#include <sstream>

namespace sgraph::united {

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::pass: return "pass";
    case Verdict::fail: return "fail";
    case Verdict::skip: break;
  }
  return "skip";
}

const LawResult& Report::at(std::string_view law) const {
  for (const auto& r : results)
    if (r.law == law) return r;
  throw std::out_of_range("united report has no law " + std::string(law));
}

bool Report::all_pass() const {
  return std::none_of(results.begin(), results.end(), [](const LawResult& r) { return r.verdict == Verdict::fail; });
}

SPTerm SPTerm::empty() { return SPTerm(std::make_shared<const Cell>(Cell{Kind::empty, 0, nullptr, nullptr})); }

SPTerm SPTerm::leaf(std::uint64_t duration) {
  return SPTerm(std::make_shared<const Cell>(Cell{Kind::leaf, duration, nullptr, nullptr}));
}

SPTerm SPTerm::par(SPTerm a, SPTerm b) {
  return SPTerm(std::make_shared<const Cell>(
      Cell{Kind::par, 0, std::make_shared<const SPTerm>(std::move(a)), std::make_shared<const SPTerm>(std::move(b))}));
}

SPTerm SPTerm::seq(SPTerm a, SPTerm b) {
  return SPTerm(std::make_shared<const Cell>(
      Cell{Kind::seq, 0, std::make_shared<const SPTerm>(std::move(a)), std::make_shared<const SPTerm>(std::move(b))}));
}

std::uint64_t eval_time(const SPTerm& t) {
  switch (t.kind()) {
    case SPTerm::Kind::empty: return 0;
    case SPTerm::Kind::leaf: return t.duration();
    case SPTerm::Kind::par: return std::max(eval_time(t.left()), eval_time(t.right()));
    case SPTerm::Kind::seq: break;
  }
  return eval_time(t.left()) + eval_time(t.right());
}

MonoidPair<std::uint64_t> time_model() {
  MonoidPair<std::uint64_t> m;
  m.name = "time";
  m.overlay = [](std::uint64_t a, std::uint64_t b) { return std::max(a, b); };
  m.overlay_unit = 0;
  m.connect = [](std::uint64_t a, std::uint64_t b) { return a + b; };
  m.connect_unit = 0;
  m.show = [](std::uint64_t a) { return std::to_string(a); };
  return m;
}

namespace {

std::int64_t max_plus_add(std::int64_t a, std::int64_t b) {
  if (a == neg_inf || b == neg_inf) return neg_inf;
  return a + b;
}

std::string show_set(const std::set<int>& s) {
  std::ostringstream os;
  os << '{';
  bool first = true;
  for (int x : s) {
    os << (first ? "" : ",") << x;
    first = false;
  }
  os << '}';
  return os.str();
}

std::string show_graph(const Graph<std::string>& g) {
  std::ostringstream os;
  os << "V={";
  bool first = true;
  for (const auto& v : g.vertices) {
    os << (first ? "" : ",") << v;
    first = false;
  }
  os << "} E={";
  first = true;
  for (const auto& [u, v] : g.edges) {
    os << (first ? "" : ",") << u << "->" << v;
    first = false;
  }
  os << '}';
  return os.str();
}

}  // namespace

MonoidPair<std::int64_t> max_plus() {
  MonoidPair<std::int64_t> m;
  m.name = "tropical-max-plus";
  m.overlay = [](std::int64_t a, std::int64_t b) { return std::max(a, b); };
  m.overlay_unit = neg_inf;
  m.connect = max_plus_add;
  m.connect_unit = 0;
  m.show = [](std::int64_t a) { return a == neg_inf ? std::string("-inf") : std::to_string(a); };
  return m;
}

std::vector<std::int64_t> max_plus_samples() { return {neg_inf, -2, -1, 0, 1, 2, 3}; }

MonoidPair<std::set<int>> set_union_model(std::set<int> universe) {
  MonoidPair<std::set<int>> m;
  m.name = "sets";
  auto unite = [](const std::set<int>& a, const std::set<int>& b) {
    std::set<int> out = a;
    out.insert(b.begin(), b.end());
    return out;
  };
  m.overlay = unite;
  m.connect = unite;
  m.zero = std::move(universe);
  m.show = show_set;
  return m;
}

std::vector<std::set<int>> powerset(const std::set<int>& universe) {
  const std::vector<int> xs(universe.begin(), universe.end());
  std::vector<std::set<int>> out;
  for (std::size_t mask = 0; mask < (std::size_t{1} << xs.size()); ++mask) {
    std::set<int> s;
    for (std::size_t i = 0; i < xs.size(); ++i)
      if (mask & (std::size_t{1} << i)) s.insert(xs[i]);
    out.push_back(std::move(s));
  }
  return out;
}

MonoidPair<OptionalGraphTree> optional_graph_model(const std::vector<std::string>& universe) {
  if (universe.empty()) throw std::invalid_argument("optional_graph_model: empty universe");
  using G = Tree<BoolSemiring, std::string>;
  MonoidPair<OptionalGraphTree> m;
  m.name = "optional-graphs";
  m.overlay = [](const OptionalGraphTree& x, const OptionalGraphTree& y) { return lift_node<BoolSemiring>(false, x, y); };
  m.connect = [](const OptionalGraphTree& x, const OptionalGraphTree& y) { return lift_node<BoolSemiring>(true, x, y); };
  const G all = leaves<BoolSemiring, std::string>(universe);
  m.zero = connect<BoolSemiring, std::string>(all, all);
  m.equal = [](const OptionalGraphTree& x, const OptionalGraphTree& y) { return to_graph(x) == to_graph(y); };
  m.show = [](const OptionalGraphTree& x) { return show_graph(to_graph(x)); };
  return m;
}

std::vector<OptionalGraphTree> optional_graph_samples(const std::vector<std::string>& universe) {
  using G = Tree<BoolSemiring, std::string>;
  std::vector<OptionalGraphTree> out;
  out.push_back(std::nullopt);
  for (const auto& u : universe) out.push_back(G::leaf(u));
  for (const auto& u : universe)
    for (const auto& v : universe) out.push_back(connect<BoolSemiring, std::string>(G::leaf(u), G::leaf(v)));
  if (universe.size() >= 2) {
    out.push_back(overlay<BoolSemiring, std::string>(G::leaf(universe[0]), G::leaf(universe[1])));
    out.push_back(clique<std::string>(universe));
  }
  return out;
}

SemiringStructure<bool> boolean_with_identified_units() {
  SemiringStructure<bool> s;
  s.name = "bool-identified-units";
  s.plus = [](bool a, bool b) { return a || b; };
  s.times = [](bool a, bool b) { return a && b; };
  s.zero = false;
  s.one = false;
  s.show = [](bool a) { return std::string(a ? "true" : "false"); };
  return s;
}

SemiringStructure<Unit> trivial_structure() {
  SemiringStructure<Unit> s;
  s.name = "trivial";
  s.plus = [](Unit, Unit) { return Unit{}; };
  s.times = [](Unit, Unit) { return Unit{}; };
  s.show = [](Unit) { return std::string("()"); };
  return s;
}

BoundedLattice<int> two_point_lattice_collapsed() {
  BoundedLattice<int> l;
  l.name = "two-point-lattice";
  l.join = [](int a, int b) { return std::max(a, b); };
  l.bottom = 0;
  l.meet = [](int a, int b) { return std::min(a, b); };
  l.top = 0;
  l.show = [](int a) { return std::to_string(a); };
  return l;
}

}  // namespace sgraph::united

namespace sgraph::united {

namespace {

SPTerm random_sp(std::mt19937_64& rng, int depth) {
  const auto pick = rng() % (depth <= 0 ? 2 : 4);
  switch (pick) {
    case 0: return SPTerm::empty();
    case 1: return SPTerm::leaf(rng() % 21);
    case 2: return SPTerm::par(random_sp(rng, depth - 1), random_sp(rng, depth - 1));
    default: break;
  }
  return SPTerm::seq(random_sp(rng, depth - 1), random_sp(rng, depth - 1));
}

std::string show_sp(const SPTerm& t) {
  switch (t.kind()) {
    case SPTerm::Kind::empty: return "()";
    case SPTerm::Kind::leaf: return std::to_string(t.duration());
    case SPTerm::Kind::par: return "(" + show_sp(t.left()) + " | " + show_sp(t.right()) + ")";
    case SPTerm::Kind::seq: break;
  }
  return "(" + show_sp(t.left()) + " ; " + show_sp(t.right()) + ")";
}

template <typename T>
void add_report(std::vector<SuiteRow>& rows, const Report& report, std::initializer_list<std::string_view> expected_fail) {
  for (const auto& r : report.results) {
    const bool expect_fail = std::find(expected_fail.begin(), expected_fail.end(), r.law) != expected_fail.end();
    rows.push_back({report.instance, r.law, r.verdict, expect_fail, r.counterexample});
  }
}

void add_collapse(std::vector<SuiteRow>& rows, const CollapseReport& report, bool expect_violation) {
  std::string detail;
  for (const auto& v : report.violations) detail += (detail.empty() ? "" : "; ") + v.sample + ": " + v.failed_step;
  rows.push_back({report.structure, "collapse", report.collapsed() ? Verdict::pass : Verdict::fail, expect_violation,
                  detail});
}

}  // namespace

LawResult check_time_homomorphism(std::size_t count, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  LawResult result{"time-homomorphism", Verdict::pass, {}};
  if (eval_time(SPTerm::empty()) != 0) {
    result.verdict = Verdict::fail;
    result.counterexample = "empty program";
    return result;
  }
  for (std::size_t i = 0; i < count; ++i) {
    const auto a = random_sp(rng, 3);
    const auto b = random_sp(rng, 3);
    const bool par_ok = eval_time(SPTerm::par(a, b)) == std::max(eval_time(a), eval_time(b));
    const bool seq_ok = eval_time(SPTerm::seq(a, b)) == eval_time(a) + eval_time(b);
    if (!par_ok || !seq_ok) {
      result.verdict = Verdict::fail;
      result.counterexample = show_sp(a) + ", " + show_sp(b);
      break;
    }
  }
  return result;
}

std::vector<SuiteRow> run_united_suite() {
  std::vector<SuiteRow> rows;

  std::vector<std::uint64_t> times;
  for (std::uint64_t t = 0; t <= 20; ++t) times.push_back(t);
  add_report<std::uint64_t>(rows, check_united_laws(time_model(), std::span<const std::uint64_t>(times)), {});
  const auto hom = check_time_homomorphism(1000, 7);
  rows.push_back({"time", hom.law, hom.verdict, false, hom.counterexample});

  const std::set<int> universe = {1, 2, 3};
  const auto sets = powerset(universe);
  add_report<std::set<int>>(rows, check_united_laws(set_union_model(universe), std::span<const std::set<int>>(sets)), {});

  const std::vector<std::string> vertices = {"a", "b", "c"};
  const auto graphs = optional_graph_samples(vertices);
  add_report<OptionalGraphTree>(
      rows, check_united_laws(optional_graph_model(vertices), std::span<const OptionalGraphTree>(graphs)), {});

  const auto mp = max_plus_samples();
  add_report<std::int64_t>(rows, check_united_laws(max_plus(), std::span<const std::int64_t>(mp)),
                           {"unit-sharing", "containment-left", "containment-right", "containment-both",
                            "containment-3d", "no-inverses"});

  const std::vector<Unit> unit_samples = {Unit{}};
  add_collapse(rows, check_collapse(trivial_structure(), std::span<const Unit>(unit_samples)), false);
  const bool bools[] = {false, true};
  add_collapse(rows, check_collapse(boolean_with_identified_units(), std::span<const bool>(bools)), true);
  const std::vector<int> two_points = {0, 1};
  add_collapse(rows, check_collapse(two_point_lattice_collapsed(), std::span<const int>(two_points)), true);
  return rows;
}

}  // namespace sgraph::united
