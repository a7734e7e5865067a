#include "sgraph/cli.hpp"

#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include <CLI11.hpp>

#include "sgraph/closure.hpp"
#include "sgraph/expr.hpp"
#include "sgraph/graph.hpp"
#include "sgraph/laws.hpp"
#include "sgraph/lgraph.hpp"
#include "sgraph/render.hpp"
#include "sgraph/simplicial.hpp"
#include "sgraph/united.hpp"

namespace sgraph::cli {

namespace {

using laws::Target;

struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Config {
  std::string expr;
  std::string file;
  std::string semiring;
  std::string target;
  std::string format;
  std::string variant;
  std::vector<std::string> part_p, part_q;
  bool strict = false;
};

std::string read_input(const Config& c) {
  if (!c.expr.empty() && !c.file.empty()) throw UsageError("give either -e or a file, not both");
  if (!c.expr.empty()) return c.expr;
  if (c.file.empty()) throw UsageError("no input: give -e EXPR or a file");
  if (c.file == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(c.file);
  if (!in) throw UsageError("cannot read " + c.file);
  return {std::istreambuf_iterator<char>(in), {}};
}

/// Input starting with '{' is the canonical tree json; anything else is an
/// expression.
template <Semiring S>
Tree<S, std::string> load_tree(const std::string& text) {
  const auto start = text.find_first_not_of(" \t\r\n");
  if (start != std::string::npos && text[start] == '{') {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text);
    } catch (const nlohmann::json::parse_error& e) {
      throw InputError(std::string("tree json: ") + e.what());
    }
    try {
      return tree_from_json<S>(j);
    } catch (const std::invalid_argument& e) {
      throw InputError(e.what());
    }
  }
  return parse_expr<S>(text);
}

SemiringId pick_semiring(const std::string& name, Target t) {
  if (name.empty()) return t == Target::set ? SemiringId::unit : SemiringId::boolean;
  auto sr = semiring_from_name(name);
  if (!sr) throw UsageError("unknown semiring '" + name + "'");
  return *sr;
}

Target pick_target(const std::string& name, Target fallback) {
  if (name.empty()) return fallback;
  auto t = laws::target_from_name(name);
  if (!t) throw UsageError("unknown target '" + name + "'");
  return *t;
}

void require_compatible(SemiringId sr, Target t) {
  if (!laws::compatible(sr, t))
    throw UsageError("target " + std::string(laws::target_name(t)) + " does not accept semiring " +
                     std::string(semiring_name(sr)));
}

GraphVariant<std::string> pick_variant(const Config& c) {
  if (c.variant == "undirected") return Undirected{};
  if (c.variant == "reflexive") return Reflexive{};
  if (c.variant == "bipartite") {
    Bipartite<std::string> b;
    for (const auto& v : c.part_p) b.parts[v] = Part::P;
    for (const auto& v : c.part_q) {
      if (b.parts.contains(v)) throw UsageError("vertex '" + v + "' is in both parts");
      b.parts[v] = Part::Q;
    }
    return b;
  }
  throw UsageError("unknown variant '" + c.variant + "'");
}

void emit_json(std::ostream& out, const nlohmann::json& j) { out << j.dump() << '\n'; }

[[noreturn]] void unsupported(const std::string& format, Target t) {
  throw UsageError("format " + format + " is not available for target " + std::string(laws::target_name(t)));
}

int emit_order(std::ostream& out, const std::string& format, const OrderOutcome<std::string>& o) {
  if (std::holds_alternative<CycleError>(o)) {
    emit_json(out, cycle_error_json());
    return cycle_error;
  }
  const auto& so = std::get<StrictOrder<std::string>>(o);
  if (format == "dot")
    out << relation_to_dot(so.elements, so.relation);
  else
    emit_json(out, order_to_json(o));
  return ok;
}

template <Semiring S>
int eval_with(const Config& c, Target t, const std::string& format, std::ostream& out) {
  const auto tree = load_tree<S>(read_input(c));
  if (!c.variant.empty() && t != Target::graph) throw UsageError("--variant needs target graph");

  if (format == "tree") {
    emit_json(out, tree_to_json<S>(tree));
    return ok;
  }
  if (format == "expr") {
    out << print_expr<S>(tree) << '\n';
    return ok;
  }
  const bool dot = format == "dot";

  switch (t) {
    case Target::set: {
      const auto elements = leaf_set(tree);
      if (dot)
        out << render_dot(elements, {}, true);
      else
        emit_json(out, set_to_json(elements));
      return ok;
    }
    case Target::size:
      if (dot) unsupported(format, t);
      emit_json(out, size_to_json(size(tree)));
      return ok;
    case Target::lgraph: {
      const auto g = to_lgraph(tree);
      if (dot)
        out << lgraph_to_dot<S>(g);
      else
        emit_json(out, lgraph_to_json<S>(g));
      return ok;
    }
    default:
      break;
  }

  if constexpr (std::is_same_v<S, BoolSemiring>) {
    switch (t) {
      case Target::simplicial:
        if (dot) unsupported(format, t);
        emit_json(out, simplicial_to_json(to_simplicial_set(tree)));
        return ok;
      case Target::graph: {
        bool directed = true;
        Graph<std::string> g;
        if (c.variant.empty()) {
          g = to_graph(tree);
        } else {
          const auto mode = pick_variant(c);
          directed = !std::holds_alternative<Undirected>(mode);
          try {
            g = to_variant_graph(mode, tree);
          } catch (const std::invalid_argument& e) {
            throw UsageError(e.what());
          }
        }
        if (dot)
          out << graph_to_dot(g, directed);
        else
          emit_json(out, graph_to_json(g));
        return ok;
      }
      case Target::preorder: {
        const auto r = to_preorder(tree);
        if (dot)
          out << relation_to_dot(leaf_set(tree), r);
        else
          emit_json(out, relation_to_json(leaf_set(tree), r));
        return ok;
      }
      case Target::order:
        return emit_order(out, format, to_strict_partial_order(tree));
      default:
        break;
    }
  }
  throw UsageError("unsupported semiring/target pair");
}

int eval_command(const Config& c, const std::string& default_format, std::ostream& out) {
  const auto t = pick_target(c.target, Target::graph);
  const auto sr = pick_semiring(c.semiring, t);
  const auto format = c.format.empty() ? default_format : c.format;
  if (format != "json" && format != "dot" && format != "tree" && format != "expr")
    throw UsageError("unknown format '" + format + "'");
  // tree and expr print the input itself, so any semiring goes.
  if (format == "json" || format == "dot") require_compatible(sr, t);
  return dispatch(sr, [&]<typename S>(std::type_identity<S>) { return eval_with<S>(c, t, format, out); });
}

template <Semiring S>
int closure_with(const Config& c, Target t, const std::string& format, std::ostream& out) {
  const auto tree = load_tree<S>(read_input(c));
  const bool dot = format == "dot";
  if (t == Target::lgraph) {
    if constexpr (StarSemiring<S>) {
      const auto g = to_lgraph(tree);
      if (c.strict) {
        const auto tc = transitive_closure<S>(g);
        for (const auto& [u, row] : tc)
          if (row.contains(u)) {
            emit_json(out, cycle_error_json());
            return cycle_error;
          }
        if (dot)
          out << lgraph_to_dot<S>(tc);
        else
          emit_json(out, lgraph_to_json<S>(tc));
        return ok;
      }
      const auto closed = closure<S>(g);
      if (dot)
        out << lgraph_to_dot<S>(closed);
      else
        emit_json(out, lgraph_to_json<S>(closed));
      return ok;
    } else {
      throw UsageError("semiring " + std::string(S::name) + " has no star; closure is undefined");
    }
  }
  if constexpr (std::is_same_v<S, BoolSemiring>) {
    if (c.strict || t == Target::order) return emit_order(out, format, to_strict_partial_order(tree));
    const auto r = to_preorder(tree);
    if (dot)
      out << relation_to_dot(leaf_set(tree), r);
    else
      emit_json(out, relation_to_json(leaf_set(tree), r));
    return ok;
  }
  throw UsageError("unsupported semiring/target pair");
}

int closure_command(const Config& c, std::ostream& out) {
  const auto t = pick_target(c.target, Target::lgraph);
  if (t != Target::lgraph && t != Target::graph && t != Target::preorder && t != Target::order)
    throw UsageError("closure supports targets lgraph, graph, preorder and order");
  const auto sr = pick_semiring(c.semiring, t);
  require_compatible(sr, t);
  const auto format = c.format.empty() ? std::string("json") : c.format;
  if (format != "json" && format != "dot") throw UsageError("closure supports formats json and dot");
  return dispatch(sr, [&]<typename S>(std::type_identity<S>) { return closure_with<S>(c, t, format, out); });
}

struct CheckConfig {
  std::string suite = "laws";
  std::string law, semiring, target, format;
  std::size_t cases = 1000;
  std::uint64_t seed = 42;
  std::size_t max_leaves = 12;
  std::size_t alphabet = 4;
};

int check_laws(const CheckConfig& c, std::ostream& out, std::ostream& err) {
  laws::SuiteOptions opt;
  if (!c.law.empty()) {
    if (!laws::find_law(c.law)) throw UsageError("unknown law '" + c.law + "'");
    opt.law = c.law;
  }
  if (!c.semiring.empty()) opt.semiring = pick_semiring(c.semiring, Target::lgraph);
  if (!c.target.empty()) opt.target = pick_target(c.target, Target::lgraph);
  if (opt.semiring && opt.target) require_compatible(*opt.semiring, *opt.target);
  if (c.max_leaves < 1 || c.alphabet < 1) throw UsageError("--max-leaves and --alphabet must be positive");
  opt.cases = c.cases;
  opt.gen = {c.seed, c.max_leaves, c.alphabet};

  const auto reports = laws::run_suite(opt);
  const auto violations = laws::redundancy_violations(reports);
  const nlohmann::json j = {{"cells", laws::report_to_json(reports)}, {"redundancy_violations", violations}};
  emit_json(out, j);

  bool all_ok = violations.empty();
  for (const auto& r : reports)
    if (!r.ok()) {
      all_ok = false;
      err << "mismatch: " << r.law << " " << semiring_name(r.semiring) << "/" << laws::target_name(r.target)
          << " expected " << laws::to_string(r.expect) << ", " << r.failures << " failures in " << r.cases
          << " cases\n";
    }
  for (const auto& v : violations) err << "redundancy: " << v << '\n';
  return all_ok ? ok : law_failure;
}

int check_united(std::ostream& out, std::ostream& err) {
  const auto rows = united::run_united_suite();
  std::size_t w_instance = 8, w_law = 3;
  for (const auto& r : rows) w_instance = std::max(w_instance, r.instance.size()), w_law = std::max(w_law, r.law.size());
  auto pad = [](const std::string& s, std::size_t w) { return s + std::string(w - s.size() + 2, ' '); };
  out << pad("instance", w_instance) << pad("law", w_law) << pad("verdict", 7) << "expected\n";
  bool all_ok = true;
  for (const auto& r : rows) {
    out << pad(r.instance, w_instance) << pad(r.law, w_law) << pad(std::string(united::to_string(r.verdict)), 7)
        << (r.expected_fail ? "fail" : "pass") << '\n';
    if (!r.ok()) {
      all_ok = false;
      err << "unexpected verdict: " << r.instance << " " << r.law;
      if (!r.detail.empty()) err << " (" << r.detail << ")";
      err << '\n';
    }
  }
  return all_ok ? ok : law_failure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Semiring-labelled algebraic graph expressions", "sgraph"};
  app.require_subcommand(1);

  Config cfg;
  auto add_input = [&](CLI::App* sub) {
    sub->add_option("-e,--expr", cfg.expr, "expression text");
    sub->add_option("file", cfg.file, "input file (expression or tree json; - for stdin)");
    sub->add_option("--semiring", cfg.semiring, "unit|bool|tropical|maxmin|count");
    sub->add_option("--target", cfg.target, "set|simplicial|graph|lgraph|preorder|order|size");
    sub->add_option("--format", cfg.format, "json|dot|tree|expr");
  };

  auto* eval = app.add_subcommand("eval", "interpret an expression (json by default)");
  auto* exp = app.add_subcommand("export", "interpret an expression (dot by default)");
  for (auto* sub : {eval, exp}) {
    add_input(sub);
    sub->add_option("--variant", cfg.variant, "graph variant: undirected|reflexive|bipartite");
    sub->add_option("--part-p", cfg.part_p, "bipartite: vertices of part P")->delimiter(',');
    sub->add_option("--part-q", cfg.part_q, "bipartite: vertices of part Q")->delimiter(',');
  }

  auto* clo = app.add_subcommand("closure", "reflexive-transitive closure of an expression");
  add_input(clo);
  clo->add_flag("--strict", cfg.strict, "strict partial order; exit 3 on a cycle");

  CheckConfig chk;
  auto* check = app.add_subcommand("check", "run a law suite");
  check->add_option("--suite", chk.suite, "laws|united");
  check->add_option("--law", chk.law, "only this law");
  check->add_option("--semiring", chk.semiring, "only this semiring");
  check->add_option("--target", chk.target, "only this target");
  check->add_option("--cases", chk.cases, "cases per cell");
  check->add_option("--seed", chk.seed, "generator seed");
  check->add_option("--max-leaves", chk.max_leaves, "largest generated tree");
  check->add_option("--alphabet", chk.alphabet, "number of distinct leaf names");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return ok;
  } catch (const CLI::CallForAllHelp&) {
    out << app.help("", CLI::AppFormatMode::All);
    return ok;
  } catch (const CLI::ParseError& e) {
    err << "sgraph: " << e.what() << '\n';
    return usage_error;
  }

  try {
    if (*eval) return eval_command(cfg, "json", out);
    if (*exp) return eval_command(cfg, "dot", out);
    if (*clo) return closure_command(cfg, out);
    if (chk.suite == "laws") return check_laws(chk, out, err);
    if (chk.suite == "united") return check_united(out, err);
    throw UsageError("unknown suite '" + chk.suite + "'");
  } catch (const ParseError& e) {
    err << "sgraph: parse error: " << e.what() << '\n';
    return parse_error;
  } catch (const InputError& e) {
    err << "sgraph: parse error: " << e.what() << '\n';
    return parse_error;
  } catch (const UsageError& e) {
    err << "sgraph: " << e.what() << '\n';
    return usage_error;
  }
}

}  // namespace sgraph::cli
