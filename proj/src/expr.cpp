#include "sgraph/expr.hpp"

#include <cctype>

namespace sgraph {

namespace {

bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) || c == '_'; }

class Parser {
public:
  explicit Parser(std::string_view text) : text_(text) {}

  RawExpr parse() {
    auto e = expr();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return e;
  }

private:
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(what, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool lookahead(std::string_view s) {
    skip_ws();
    return text_.substr(pos_, s.size()) == s;
  }

  static std::shared_ptr<const RawExpr> box(RawExpr e) { return std::make_shared<const RawExpr>(std::move(e)); }

  RawExpr expr() {
    auto lhs = term();
    while (lookahead("+")) {
      ++pos_;
      RawExpr node;
      node.kind = RawExpr::Kind::overlay;
      node.left = box(std::move(lhs));
      node.right = box(term());
      lhs = std::move(node);
    }
    return lhs;
  }

  RawExpr term() {
    auto lhs = factor();
    for (;;) {
      RawExpr node;
      node.kind = RawExpr::Kind::arrow;
      if (lookahead("->")) {
        pos_ += 2;
      } else if (lookahead("-[")) {
        pos_ += 2;
        node.labelled = true;
        node.label_offset = pos_;
        const auto close = text_.find("]->", pos_);
        if (close == std::string_view::npos) fail("unterminated label, expected ']->'");
        auto label = text_.substr(pos_, close - pos_);
        while (!label.empty() && std::isspace(static_cast<unsigned char>(label.front()))) {
          label.remove_prefix(1);
          ++node.label_offset;
        }
        while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back()))) label.remove_suffix(1);
        if (label.empty()) fail("empty label");
        node.text = std::string(label);
        pos_ = close + 3;
      } else {
        return lhs;
      }
      node.left = box(std::move(lhs));
      node.right = box(factor());
      lhs = std::move(node);
    }
  }

  RawExpr factor() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    const char c = text_[pos_];
    if (c == '(') {
      ++pos_;
      auto e = expr();
      if (!lookahead(")")) fail("expected ')'");
      ++pos_;
      return e;
    }
    RawExpr leaf;
    if (c == '"') {
      const auto open = pos_++;
      std::string name;
      for (;;) {
        if (pos_ >= text_.size()) throw ParseError("unterminated string", open);
        char d = text_[pos_++];
        if (d == '"') break;
        if (d == '\\') {
          if (pos_ >= text_.size()) fail("unterminated escape");
          d = text_[pos_++];
          if (d != '"' && d != '\\') fail("unknown escape");
        }
        name += d;
      }
      leaf.text = std::move(name);
      return leaf;
    }
    if (!is_ident_char(c)) fail("unexpected '" + std::string(1, c) + "'");
    const auto start = pos_;
    while (pos_ < text_.size() && is_ident_char(text_[pos_])) ++pos_;
    leaf.text = std::string(text_.substr(start, pos_ - start));
    return leaf;
  }

  std::string_view text_;
  std::size_t pos_ = 0;
};

}  // namespace

RawExpr parse_raw(std::string_view text) { return Parser(text).parse(); }

std::string quote_leaf(std::string_view name) {
  bool bare = !name.empty();
  for (char c : name) bare = bare && is_ident_char(c);
  if (bare) return std::string(name);
  std::string out = "\"";
  for (char c : name) {
    if (c == '"' || c == '\\') out += '\\';
    out += c;
  }
  out += '"';
  return out;
}

std::string json_scalar_text(const nlohmann::json& j) {
  if (j.is_string()) return j.get<std::string>();
  if (j.is_boolean()) return j.get<bool>() ? "true" : "false";
  if (j.is_number_unsigned()) return std::to_string(j.get<std::uint64_t>());
  if (j.is_number_integer()) return std::to_string(j.get<std::int64_t>());
  return j.dump();
}

}  // namespace sgraph
