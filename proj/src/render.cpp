#include "sgraph/render.hpp"

namespace sgraph {

std::string dot_quote(std::string_view s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string render_dot(const std::set<std::string>& vertices, const std::vector<DotEdge>& edges, bool directed) {
  std::set<std::string> touched;
  for (const auto& e : edges) touched.insert(e.from), touched.insert(e.to);

  std::string out = directed ? "digraph {\n" : "graph {\n";
  for (const auto& v : vertices)
    if (!touched.contains(v)) out += "  " + dot_quote(v) + ";\n";
  const char* arrow = directed ? " -> " : " -- ";
  for (const auto& e : edges) {
    out += "  " + dot_quote(e.from) + arrow + dot_quote(e.to);
    if (!e.label.empty()) out += " [label=" + dot_quote(e.label) + "]";
    out += ";\n";
  }
  out += "}\n";
  return out;
}

}  // namespace sgraph
