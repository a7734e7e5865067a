#pragma once

#include <algorithm>
#include <map>
#include <set>
#include <span>
#include <stdexcept>
#include <utility>
#include <variant>
#include <vector>

#include "sgraph/simplicial.hpp"
#include "sgraph/tree.hpp"

namespace sgraph {

/// Directed graph as the pair (V, E) with E ⊆ V × V.
template <typename A>
struct Graph {
  std::set<A> vertices;
  std::set<std::pair<A, A>> edges;

  friend bool operator==(const Graph&, const Graph&) = default;
};

template <typename A>
Graph<A> graph_vertex(const A& a) {
  return {{a}, {}};
}

template <typename A>
Graph<A> graph_overlay(Graph<A> x, const Graph<A>& y) {
  x.vertices.insert(y.vertices.begin(), y.vertices.end());
  x.edges.insert(y.edges.begin(), y.edges.end());
  return x;
}

/// Union of both graphs plus every edge from a vertex of x to a vertex of y.
template <typename A>
Graph<A> graph_connect(const Graph<A>& x, const Graph<A>& y) {
  Graph<A> out = graph_overlay(x, y);
  for (const auto& u : x.vertices)
    for (const auto& v : y.vertices) out.edges.emplace(u, v);
  return out;
}

template <typename A>
Graph<A> to_graph(const Tree<BoolSemiring, A>& t) {
  return fold([](const A& a) { return graph_vertex(a); },
              [](bool s, Graph<A> x, Graph<A> y) { return s ? graph_connect(x, y) : graph_overlay(std::move(x), y); },
              t);
}

/// Empty tree maps to the empty graph.
template <typename A>
Graph<A> to_graph(const OptionalTree<BoolSemiring, A>& t) {
  return t ? to_graph(*t) : Graph<A>{};
}

template <typename A>
bool edges_within_vertices(const Graph<A>& g) {
  return std::all_of(g.edges.begin(), g.edges.end(), [&](const auto& e) {
    return g.vertices.contains(e.first) && g.vertices.contains(e.second);
  });
}

/// Every vertex connected to every later vertex; same tree as `simplex`.
template <typename A>
Tree<BoolSemiring, A> clique(std::span<const A> xs) {
  return simplex<A>(xs);
}

template <typename A>
Tree<BoolSemiring, A> clique(const std::vector<A>& xs) {
  return simplex<A>(xs);
}

template <typename A, typename Pred>
OptionalTree<BoolSemiring, A> induce(Pred&& p, const Tree<BoolSemiring, A>& t) {
  return filter(std::forward<Pred>(p), t);
}

/// Induces on {x, y} first so only a tiny graph is ever built.
template <typename A>
bool has_edge(const A& x, const A& y, const Tree<BoolSemiring, A>& t) {
  auto sub = induce([&](const A& a) { return a == x || a == y; }, t);
  if (!sub) return false;
  return to_graph(*sub).edges.contains({x, y});
}

enum class Part { P, Q };

template <typename A>
using PartAssignment = std::map<A, Part>;

struct Undirected {};
struct Reflexive {};
template <typename A>
struct Bipartite {
  PartAssignment<A> parts;
};

template <typename A>
using GraphVariant = std::variant<Undirected, Reflexive, Bipartite<A>>;

/// Interpret the tree as an undirected, reflexive or bipartite graph by
/// normalising the plain directed graph.
///
/// Undirected edges are stored with the smaller endpoint first. Bipartite
/// mode drops edges inside a part and rejects a partial assignment.
template <typename A>
Graph<A> to_variant_graph(const GraphVariant<A>& mode, const Tree<BoolSemiring, A>& t) {
  Graph<A> g = to_graph(t);
  if (std::holds_alternative<Undirected>(mode)) {
    std::set<std::pair<A, A>> edges;
    for (const auto& [u, v] : g.edges) edges.insert(v < u ? std::pair(v, u) : std::pair(u, v));
    g.edges = std::move(edges);
  } else if (std::holds_alternative<Reflexive>(mode)) {
    for (const auto& v : g.vertices) g.edges.emplace(v, v);
  } else {
    const auto& parts = std::get<Bipartite<A>>(mode).parts;
    for (const auto& v : g.vertices)
      if (!parts.contains(v)) throw std::invalid_argument("to_variant_graph: vertex without a part");
    std::erase_if(g.edges, [&](const auto& e) { return parts.at(e.first) == parts.at(e.second); });
  }
  return g;
}

}  // namespace sgraph
