#pragma once

#include <cstddef>
#include <utility>

#include "sgraph/tree.hpp"

// Nonempty finite sets as trees over the trivial semiring. Two sets are
// equal when their leaf sets are equal; the tree shape carries no meaning.
namespace sgraph::tset {

template <typename A>
using TSet = Tree<UnitSemiring, A>;

template <typename A>
TSet<A> singleton(A a) {
  return TSet<A>::leaf(std::move(a));
}

template <typename A>
TSet<A> insert(A a, const TSet<A>& s) {
  return overlay<UnitSemiring, A>(singleton(std::move(a)), s);
}

template <typename A>
bool member(const A& a, const TSet<A>& s) {
  return has_leaf(a, s);
}

template <typename A>
TSet<A> set_union(const TSet<A>& s, const TSet<A>& t) {
  return overlay<UnitSemiring, A>(s, t);
}

template <typename A>
OptionalTree<UnitSemiring, A> erase(const A& a, const TSet<A>& s) {
  return filter([&](const A& x) { return !(x == a); }, s);
}

template <typename A>
std::set<A> elements(const TSet<A>& s) {
  return leaf_set(s);
}

// Tree size counts repeated leaves; the set size must not.
template <typename A>
std::size_t set_size(const TSet<A>& s) {
  return leaf_set(s).size();
}

template <typename A, typename B>
TSet<std::pair<A, B>> cartesian_product(const TSet<A>& s, const TSet<B>& t) {
  return bind(s, [&](const A& a) { return map([&](const B& b) { return std::pair<A, B>(a, b); }, t); });
}

template <typename A>
bool equivalent(const TSet<A>& s, const TSet<A>& t) {
  return leaf_set(s) == leaf_set(t);
}

}  // namespace sgraph::tset
