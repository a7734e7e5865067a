#pragma once

#include <map>
#include <utility>

#include "sgraph/tree.hpp"

namespace sgraph {

/// Edge-labelled graph as an adjacency map: vertex -> (target -> label).
///
/// Invariants: no stored label is zero, and every edge target is also a key
/// of the outer map. Maps iterate in vertex order.
template <Semiring S, typename A>
using LGraph = std::map<A, std::map<A, label_t<S>>>;

template <Semiring S, typename A>
LGraph<S, A> lg_vertex(const A& a) {
  return {{a, {}}};
}

namespace detail {

template <Semiring S, typename A>
void add_edge(LGraph<S, A>& g, const A& u, const A& v, const label_t<S>& label) {
  auto& out = g[u];
  auto it = out.find(v);
  if (it == out.end()) {
    if (!S::is_zero(label)) out.emplace(v, label);
    return;
  }
  it->second = S::plus(it->second, label);
  if (S::is_zero(it->second)) out.erase(it);
}

}  // namespace detail

/// Keywise union; labels of parallel edges combine with ⊕.
template <Semiring S, typename A>
LGraph<S, A> lg_overlay(LGraph<S, A> g, const LGraph<S, A>& h) {
  for (const auto& [u, out] : h) {
    g.try_emplace(u);
    for (const auto& [v, label] : out) detail::add_edge<S, A>(g, u, v, label);
  }
  return g;
}

/// Overlay plus an `s`-labelled edge from every vertex of g to every vertex
/// of h. A zero label adds nothing.
template <Semiring S, typename A>
LGraph<S, A> lg_connect(const label_t<S>& s, const LGraph<S, A>& g, const LGraph<S, A>& h) {
  LGraph<S, A> out = lg_overlay<S, A>(g, h);
  if (S::is_zero(s)) return out;
  for (const auto& [u, _] : g)
    for (const auto& [v, __] : h) detail::add_edge<S, A>(out, u, v, s);
  return out;
}

template <Semiring S, typename A>
LGraph<S, A> to_lgraph(const Tree<S, A>& t) {
  return fold([](const A& a) { return lg_vertex<S, A>(a); },
              [](const label_t<S>& s, LGraph<S, A> x, LGraph<S, A> y) { return lg_connect<S, A>(s, x, y); }, t);
}

/// Stored label, or zero when the edge is absent.
template <Semiring S, typename A>
label_t<S> edge_label(const LGraph<S, A>& g, const A& u, const A& v) {
  if (auto it = g.find(u); it != g.end())
    if (auto jt = it->second.find(v); jt != it->second.end()) return jt->second;
  return S::zero();
}

template <Semiring S, typename A>
bool is_sparse(const LGraph<S, A>& g) {
  for (const auto& [u, out] : g)
    for (const auto& [v, label] : out)
      if (S::is_zero(label)) return false;
  return true;
}

template <Semiring S, typename A>
bool keys_closed(const LGraph<S, A>& g) {
  for (const auto& [u, out] : g)
    for (const auto& [v, label] : out)
      if (!g.contains(v)) return false;
  return true;
}

}  // namespace sgraph
