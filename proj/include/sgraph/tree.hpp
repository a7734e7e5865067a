#pragma once

#include <cstddef>
#include <functional>
#include <memory>
#include <optional>
#include <set>
#include <span>
#include <stdexcept>
#include <type_traits>
#include <utility>
#include <variant>
#include <vector>

#include "sgraph/semiring.hpp"

namespace sgraph {

/// Binary tree with `A`-labelled leaves and internal nodes labelled by
/// elements of the semiring `S`.
///
/// A node labelled with zero is an overlay, a node labelled with one is a
/// plain connection. Trees are immutable; subtrees are shared between the
/// trees built from them. There is no empty tree: use `OptionalTree`.
template <Semiring S, typename A>
class Tree {
public:
  using semiring_type = S;
  using label_type = label_t<S>;
  using leaf_type = A;

  static Tree leaf(A value) { return Tree(std::make_shared<const Cell>(Cell{std::move(value)})); }

  static Tree node(label_type label, Tree left, Tree right) {
    return Tree(std::make_shared<const Cell>(Cell{Branch{std::move(label), std::move(left), std::move(right)}}));
  }

  bool is_leaf() const { return std::holds_alternative<A>(cell_->data); }
  const A& leaf_value() const { return std::get<A>(cell_->data); }
  const label_type& label() const { return std::get<Branch>(cell_->data).label; }
  const Tree& left() const { return std::get<Branch>(cell_->data).left; }
  const Tree& right() const { return std::get<Branch>(cell_->data).right; }

  /// Structural equality: same shape, same node labels, same leaves.
  friend bool operator==(const Tree& x, const Tree& y) {
    if (x.cell_ == y.cell_) return true;
    if (x.is_leaf() != y.is_leaf()) return false;
    if (x.is_leaf()) return x.leaf_value() == y.leaf_value();
    return x.label() == y.label() && x.left() == y.left() && x.right() == y.right();
  }

private:
  struct Branch {
    label_type label;
    Tree left;
    Tree right;
  };
  struct Cell {
    std::variant<A, Branch> data;
  };

  explicit Tree(std::shared_ptr<const Cell> cell) : cell_(std::move(cell)) {}

  std::shared_ptr<const Cell> cell_;
};

/// A possibly empty tree; `std::nullopt` plays the role of the empty structure.
template <Semiring S, typename A>
using OptionalTree = std::optional<Tree<S, A>>;

template <Semiring S, typename A>
Tree<S, A> leaf(A value) {
  return Tree<S, A>::leaf(std::move(value));
}

template <Semiring S, typename A>
Tree<S, A> connect(label_t<S> label, Tree<S, A> x, Tree<S, A> y) {
  return Tree<S, A>::node(std::move(label), std::move(x), std::move(y));
}

/// `x ◇ y`: a zero-labelled node. Purely syntactic, nothing is simplified.
template <Semiring S, typename A>
Tree<S, A> overlay(Tree<S, A> x, Tree<S, A> y) {
  return Tree<S, A>::node(S::zero(), std::move(x), std::move(y));
}

/// `x -> y`: a one-labelled node.
template <Semiring S, typename A>
Tree<S, A> connect(Tree<S, A> x, Tree<S, A> y) {
  return Tree<S, A>::node(S::one(), std::move(x), std::move(y));
}

/// Catamorphism. `node_fn(s, ·, ·)` has to be associative for every label
/// `s`; that obligation is checked by the law suite, not here.
template <Semiring S, typename A, typename LeafFn, typename NodeFn>
auto fold(LeafFn&& leaf_fn, NodeFn&& node_fn, const Tree<S, A>& t)
    -> std::invoke_result_t<LeafFn&, const A&> {
  if (t.is_leaf()) return std::invoke(leaf_fn, t.leaf_value());
  return std::invoke(node_fn, t.label(), fold(leaf_fn, node_fn, t.left()), fold(leaf_fn, node_fn, t.right()));
}

/// Right-nested overlay of the given leaves: [a, b, c] -> a ◇ (b ◇ c).
template <Semiring S, typename A>
Tree<S, A> leaves(std::span<const A> xs) {
  if (xs.empty()) throw std::invalid_argument("leaves: empty sequence");
  auto t = Tree<S, A>::leaf(xs.back());
  for (auto i = xs.size() - 1; i-- > 0;) t = overlay<S, A>(Tree<S, A>::leaf(xs[i]), std::move(t));
  return t;
}

template <Semiring S, typename A>
Tree<S, A> leaves(const std::vector<A>& xs) {
  return leaves<S, A>(std::span<const A>(xs));
}

/// Apply `f` to every leaf, keeping the shape and the node labels.
template <Semiring S, typename A, typename F>
auto map(F&& f, const Tree<S, A>& t) -> Tree<S, std::decay_t<std::invoke_result_t<F&, const A&>>> {
  using B = std::decay_t<std::invoke_result_t<F&, const A&>>;
  return fold(
      [&](const A& a) { return Tree<S, B>::leaf(std::invoke(f, a)); },
      [](const label_t<S>& s, Tree<S, B> x, Tree<S, B> y) { return Tree<S, B>::node(s, std::move(x), std::move(y)); },
      t);
}

/// Graft `f(a)` on every leaf `a`.
template <Semiring S, typename A, typename F>
auto bind(const Tree<S, A>& t, F&& f) -> std::invoke_result_t<F&, const A&> {
  using Result = std::invoke_result_t<F&, const A&>;
  return fold([&](const A& a) -> Result { return std::invoke(f, a); },
              [](const label_t<S>& s, Result x, Result y) { return Result::node(s, std::move(x), std::move(y)); }, t);
}

/// Number of leaves, counting repeats.
template <Semiring S, typename A>
std::size_t size(const Tree<S, A>& t) {
  return fold([](const A&) -> std::size_t { return 1; },
              [](const label_t<S>&, std::size_t x, std::size_t y) { return x + y; }, t);
}

namespace detail {

template <Semiring S, typename A, typename F>
void for_each_leaf(const Tree<S, A>& t, F& f) {
  if (t.is_leaf()) {
    f(t.leaf_value());
    return;
  }
  for_each_leaf(t.left(), f);
  for_each_leaf(t.right(), f);
}

}  // namespace detail

/// Leaves in left-to-right order.
template <Semiring S, typename A>
std::vector<A> to_list(const Tree<S, A>& t) {
  std::vector<A> out;
  auto push = [&](const A& a) { out.push_back(a); };
  detail::for_each_leaf(t, push);
  return out;
}

template <Semiring S, typename A>
std::set<A> leaf_set(const Tree<S, A>& t) {
  std::set<A> out;
  auto insert = [&](const A& a) { out.insert(a); };
  detail::for_each_leaf(t, insert);
  return out;
}

template <Semiring S, typename A>
bool has_leaf(const A& a, const Tree<S, A>& t) {
  if (t.is_leaf()) return t.leaf_value() == a;
  return has_leaf(a, t.left()) || has_leaf(a, t.right());
}

/// Remove every leaf failing `p`. A node with a single surviving child is
/// replaced by that child; the result is empty iff no leaf survives.
template <Semiring S, typename A, typename Pred>
OptionalTree<S, A> filter(Pred&& p, const Tree<S, A>& t) {
  if (t.is_leaf()) {
    if (std::invoke(p, t.leaf_value())) return t;
    return std::nullopt;
  }
  auto l = filter(p, t.left());
  auto r = filter(p, t.right());
  if (l && r) {
    // Reuse the original node when nothing below it changed.
    if (*l == t.left() && *r == t.right()) return t;
    return Tree<S, A>::node(t.label(), std::move(*l), std::move(*r));
  }
  return l ? std::move(l) : std::move(r);
}

/// Node combinator lifted to possibly empty trees; the empty tree is its unit.
template <Semiring S, typename A>
OptionalTree<S, A> lift_node(const label_t<S>& label, const OptionalTree<S, A>& x, const OptionalTree<S, A>& y) {
  if (!x) return y;
  if (!y) return x;
  return Tree<S, A>::node(label, *x, *y);
}

}  // namespace sgraph
