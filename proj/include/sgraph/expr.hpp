#pragma once

#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>

#include <nlohmann/json.hpp>

#include "sgraph/tree.hpp"

// Text syntax for trees:
//
//   expr   := term ('+' term)*
//   term   := factor (arrow factor)*
//   arrow  := '->' | '-[' LABEL ']->'
//   factor := IDENT | STRING | '(' expr ')'
//
// '+' is overlay and binds loosest. Arrows bind tighter and chain to the
// LEFT: `a -[x]-> b -[y]-> c` is `(a -[x]-> b) -[y]-> c`. Mixed-label
// connection is not associative, so the grouping matters.
namespace sgraph {

class ParseError : public std::runtime_error {
public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at offset " + std::to_string(position)), position_(position) {}
  std::size_t position() const { return position_; }

private:
  std::size_t position_;
};

/// Semiring-independent parse tree; labels are kept as literal text.
struct RawExpr {
  enum class Kind { leaf, overlay, arrow };
  Kind kind = Kind::leaf;
  std::string text;              // leaf name, or label literal of a labelled arrow
  bool labelled = false;         // arrow written as -[...]->
  std::size_t label_offset = 0;  // where the label literal starts
  std::shared_ptr<const RawExpr> left, right;
};

RawExpr parse_raw(std::string_view text);

/// Leaf names matching [A-Za-z0-9_]+ print bare; anything else is quoted.
std::string quote_leaf(std::string_view name);

namespace detail {

template <Semiring S>
Tree<S, std::string> lower(const RawExpr& e) {
  using T = Tree<S, std::string>;
  switch (e.kind) {
    case RawExpr::Kind::leaf: return T::leaf(e.text);
    case RawExpr::Kind::overlay: return T::node(S::zero(), lower<S>(*e.left), lower<S>(*e.right));
    case RawExpr::Kind::arrow: break;
  }
  auto label = S::one();
  if (e.labelled) {
    auto parsed = S::parse_label(e.text);
    if (!parsed)
      throw ParseError("invalid " + std::string(S::name) + " label '" + e.text + "'", e.label_offset);
    label = *parsed;
  }
  return T::node(std::move(label), lower<S>(*e.left), lower<S>(*e.right));
}

template <Semiring S>
void print(const Tree<S, std::string>& t, std::string& out) {
  if (t.is_leaf()) {
    out += quote_leaf(t.leaf_value());
    return;
  }
  auto is_overlay = [](const Tree<S, std::string>& x) { return !x.is_leaf() && S::is_zero(x.label()); };
  auto group = [&](const Tree<S, std::string>& x, bool parens) {
    if (parens) out += '(';
    print<S>(x, out);
    if (parens) out += ')';
  };
  if (is_overlay(t)) {
    group(t.left(), false);
    out += " + ";
    group(t.right(), is_overlay(t.right()));
    return;
  }
  group(t.left(), is_overlay(t.left()));
  if (t.label() == S::one())
    out += " -> ";
  else
    out += " -[" + S::render(t.label()) + "]-> ";
  group(t.right(), !t.right().is_leaf());
}

}  // namespace detail

template <Semiring S>
Tree<S, std::string> parse_expr(std::string_view text) {
  return detail::lower<S>(parse_raw(text));
}

/// Inverse of `parse_expr`: re-parsing the output gives the same tree.
template <Semiring S>
std::string print_expr(const Tree<S, std::string>& t) {
  std::string out;
  detail::print<S>(t, out);
  return out;
}

/// Canonical encoding: {"leaf": name} or {"node": label, "l": ..., "r": ...}.
template <Semiring S>
nlohmann::json tree_to_json(const Tree<S, std::string>& t) {
  if (t.is_leaf()) return {{"leaf", t.leaf_value()}};
  return {{"node", S::to_json(t.label())}, {"l", tree_to_json<S>(t.left())}, {"r", tree_to_json<S>(t.right())}};
}

std::string json_scalar_text(const nlohmann::json& j);

template <Semiring S>
Tree<S, std::string> tree_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw std::invalid_argument("tree json: expected an object");
  if (j.contains("leaf")) {
    if (!j.at("leaf").is_string()) throw std::invalid_argument("tree json: leaf must be a string");
    return Tree<S, std::string>::leaf(j.at("leaf").get<std::string>());
  }
  if (!j.contains("node") || !j.contains("l") || !j.contains("r"))
    throw std::invalid_argument("tree json: expected leaf or node/l/r");
  auto label = S::parse_label(json_scalar_text(j.at("node")));
  if (!label) throw std::invalid_argument("tree json: invalid label " + j.at("node").dump());
  return Tree<S, std::string>::node(*label, tree_from_json<S>(j.at("l")), tree_from_json<S>(j.at("r")));
}

}  // namespace sgraph
