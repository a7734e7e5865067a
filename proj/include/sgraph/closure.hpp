#pragma once

#include <cstddef>
#include <set>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "sgraph/lgraph.hpp"

namespace sgraph {

/// Adds ① to every self-loop label.
template <Semiring S, typename A>
LGraph<S, A> reflexive_closure(LGraph<S, A> g) {
  for (auto& [u, out] : g) {
    auto it = out.find(u);
    const auto label = S::plus(it == out.end() ? S::zero() : it->second, S::one());
    if (S::is_zero(label)) {
      if (it != out.end()) out.erase(it);
    } else if (it == out.end()) {
      out.emplace(u, label);
    } else {
      it->second = label;
    }
  }
  return g;
}

/// Floyd-Warshall-Kleene all-pairs closure, eliminating vertices in the
/// given order. Entry (i, j) of the result is the ⊕-sum over all nonempty
/// walks from i to j of the ⊗-product of their labels.
template <StarSemiring S, typename A>
LGraph<S, A> transitive_closure(const LGraph<S, A>& g, const std::vector<A>& order) {
  const std::size_t n = order.size();
  if (n != g.size()) throw std::invalid_argument("transitive_closure: order must list every vertex once");
  std::map<A, std::size_t> index;
  for (std::size_t i = 0; i < n; ++i)
    if (g.contains(order[i])) index.emplace(order[i], i);
  if (index.size() != n) throw std::invalid_argument("transitive_closure: order must list every vertex once");

  std::vector<label_t<S>> d(n * n, S::zero());
  for (const auto& [u, out] : g) {
    const auto iu = index.at(u);
    for (const auto& [v, label] : out) d[iu * n + index.at(v)] = label;
  }

  std::vector<label_t<S>> row(n), col(n);
  for (std::size_t k = 0; k < n; ++k) {
    const auto loop = S::star(d[k * n + k]);
    for (std::size_t i = 0; i < n; ++i) {
      col[i] = S::times(d[i * n + k], loop);
      row[i] = d[k * n + i];
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (S::is_zero(col[i])) continue;
      for (std::size_t j = 0; j < n; ++j) d[i * n + j] = S::plus(d[i * n + j], S::times(col[i], row[j]));
    }
  }

  LGraph<S, A> out;
  for (std::size_t i = 0; i < n; ++i) {
    auto& adj = out[order[i]];
    for (std::size_t j = 0; j < n; ++j)
      if (!S::is_zero(d[i * n + j])) adj.emplace(order[j], d[i * n + j]);
  }
  return out;
}

/// Closure in sorted vertex order.
template <StarSemiring S, typename A>
LGraph<S, A> transitive_closure(const LGraph<S, A>& g) {
  std::vector<A> order;
  order.reserve(g.size());
  for (const auto& [u, _] : g) order.push_back(u);
  return transitive_closure<S, A>(g, order);
}

/// Reflexive-transitive closure: the normal form for sequential composition.
template <StarSemiring S, typename A>
LGraph<S, A> closure(const LGraph<S, A>& g) {
  return reflexive_closure<S, A>(transitive_closure<S, A>(g));
}

template <typename A>
using Relation = std::set<std::pair<A, A>>;

template <typename A>
Relation<A> to_preorder(const Tree<BoolSemiring, A>& t) {
  Relation<A> out;
  for (const auto& [u, adj] : closure<BoolSemiring, A>(to_lgraph(t)))
    for (const auto& [v, _] : adj) out.emplace(u, v);
  return out;
}

template <typename A>
struct StrictOrder {
  std::set<A> elements;
  Relation<A> relation;

  friend bool operator==(const StrictOrder&, const StrictOrder&) = default;
};

/// The absorbing "cycle error" value.
struct CycleError {
  friend bool operator==(CycleError, CycleError) = default;
};

template <typename A>
using OrderOutcome = std::variant<StrictOrder<A>, CycleError>;

/// Transitive closure without the reflexive step; any self-loop left
/// afterwards means the term is cyclic.
template <typename A>
OrderOutcome<A> to_strict_partial_order(const Tree<BoolSemiring, A>& t) {
  StrictOrder<A> order;
  for (const auto& [u, adj] : transitive_closure<BoolSemiring, A>(to_lgraph(t))) {
    order.elements.insert(u);
    for (const auto& [v, _] : adj) {
      if (u == v) return CycleError{};
      order.relation.emplace(u, v);
    }
  }
  return order;
}

}  // namespace sgraph
