#pragma once

#include <cstddef>
#include <set>
#include <string>
#include <string_view>
#include <utility>

#include <nlohmann/json.hpp>

#include "sgraph/closure.hpp"
#include "sgraph/graph.hpp"
#include "sgraph/lgraph.hpp"
#include "sgraph/simplicial.hpp"

// JSON and DOT renderings of interpretation results. JSON objects have
// sorted keys and are dumped compactly, so output is byte-stable.
namespace sgraph {

inline nlohmann::json set_to_json(const std::set<std::string>& elements) {
  return {{"elements", elements}};
}

inline nlohmann::json simplicial_to_json(const SimplicialSet<std::string>& ss) {
  return {{"simplices", sorted_simplices(ss)}};
}

inline nlohmann::json graph_to_json(const Graph<std::string>& g) {
  auto edges = nlohmann::json::array();
  for (const auto& [u, v] : g.edges) edges.push_back({u, v});
  return {{"edges", edges}, {"vertices", g.vertices}};
}

template <Semiring S>
nlohmann::json lgraph_to_json(const LGraph<S, std::string>& g) {
  auto edges = nlohmann::json::array();
  auto vertices = nlohmann::json::array();
  for (const auto& [u, out] : g) {
    vertices.push_back(u);
    for (const auto& [v, label] : out) edges.push_back({{"from", u}, {"label", S::to_json(label)}, {"to", v}});
  }
  return {{"edges", edges}, {"vertices", vertices}};
}

inline nlohmann::json relation_to_json(const std::set<std::string>& vertices, const Relation<std::string>& r) {
  auto pairs = nlohmann::json::array();
  for (const auto& [u, v] : r) pairs.push_back({u, v});
  return {{"relation", pairs}, {"vertices", vertices}};
}

inline nlohmann::json preorder_to_json(const Relation<std::string>& r) {
  std::set<std::string> vertices;
  for (const auto& [u, v] : r) vertices.insert(u), vertices.insert(v);
  return relation_to_json(vertices, r);
}

inline nlohmann::json cycle_error_json() { return {{"error", "cycle"}}; }

inline nlohmann::json order_to_json(const OrderOutcome<std::string>& o) {
  if (std::holds_alternative<CycleError>(o)) return cycle_error_json();
  const auto& so = std::get<StrictOrder<std::string>>(o);
  return relation_to_json(so.elements, so.relation);
}

inline nlohmann::json size_to_json(std::size_t n) { return {{"size", n}}; }

std::string dot_quote(std::string_view s);

struct DotEdge {
  std::string from, to;
  std::string label;  // empty: no label attribute
};

/// Vertices that appear in no edge are emitted as bare nodes, then all
/// edges in the given (sorted) order.
std::string render_dot(const std::set<std::string>& vertices, const std::vector<DotEdge>& edges, bool directed);

inline std::string graph_to_dot(const Graph<std::string>& g, bool directed = true) {
  std::vector<DotEdge> edges;
  for (const auto& [u, v] : g.edges) edges.push_back({u, v, {}});
  return render_dot(g.vertices, edges, directed);
}

template <Semiring S>
std::string lgraph_to_dot(const LGraph<S, std::string>& g) {
  std::set<std::string> vertices;
  std::vector<DotEdge> edges;
  for (const auto& [u, out] : g) {
    vertices.insert(u);
    for (const auto& [v, label] : out) edges.push_back({u, v, S::render(label)});
  }
  return render_dot(vertices, edges, true);
}

inline std::string relation_to_dot(const std::set<std::string>& vertices, const Relation<std::string>& r) {
  std::vector<DotEdge> edges;
  for (const auto& [u, v] : r) edges.push_back({u, v, {}});
  return render_dot(vertices, edges, true);
}

}  // namespace sgraph
