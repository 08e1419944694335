#pragma once

// Minimal DOT syntax checker for the subset this project emits:
//   digraph NAME { stmt* }
//   stmt := ID [attrs] ';' | ID '->' ID [attrs] ';' | ID '[' ... ']' ';'
// Quoted strings and bare identifiers; attrs are k=v lists in brackets.

#include <cctype>
#include <stdexcept>
#include <string>
#include <vector>

namespace dotcheck {

struct ParsedDot {
  int nodes = 0;
  int edges = 0;
};

namespace detail {

struct Lexer {
  const std::string& text;
  size_t pos = 0;

  explicit Lexer(const std::string& t) : text(t) {}

  void skip_space() {
    while (pos < text.size() && std::isspace(uint8_t(text[pos]))) ++pos;
  }

  // returns "", "id", "str" or a single punctuation char
  std::pair<std::string, std::string> next() {
    skip_space();
    if (pos >= text.size()) return {"", ""};
    char c = text[pos];
    if (c == '"') {
      std::string value;
      ++pos;
      while (pos < text.size() && text[pos] != '"') {
        if (text[pos] == '\\' && pos + 1 < text.size()) ++pos;
        value += text[pos++];
      }
      if (pos >= text.size()) throw std::runtime_error("unterminated string");
      ++pos;
      return {"str", value};
    }
    if (std::isalnum(uint8_t(c)) || c == '_' || c == '.') {
      std::string value;
      while (pos < text.size() &&
             (std::isalnum(uint8_t(text[pos])) || text[pos] == '_' || text[pos] == '.'))
        value += text[pos++];
      return {"id", value};
    }
    if (c == '-' && pos + 1 < text.size() && text[pos + 1] == '>') {
      pos += 2;
      return {"->", "->"};
    }
    ++pos;
    return {std::string(1, c), std::string(1, c)};
  }

  std::pair<std::string, std::string> peek() {
    size_t save = pos;
    auto t = next();
    pos = save;
    return t;
  }
};

inline void parse_attrs(Lexer& lex) {
  auto open = lex.next();
  if (open.first != "[") throw std::runtime_error("expected [");
  while (true) {
    auto t = lex.next();
    if (t.first == "]") break;
    if (t.first != "id" && t.first != "str") throw std::runtime_error("expected key");
    auto eq = lex.next();
    if (eq.first != "=") throw std::runtime_error("expected =");
    auto v = lex.next();
    if (v.first != "id" && v.first != "str") throw std::runtime_error("expected value");
    auto sep = lex.peek();
    if (sep.first == ",") lex.next();
  }
}

}  // namespace detail

inline ParsedDot parse_dot(const std::string& text) {
  detail::Lexer lex(text);
  ParsedDot out;
  auto kw = lex.next();
  if (kw.first != "id" || kw.second != "digraph")
    throw std::runtime_error("expected digraph");
  auto name = lex.next();
  if (name.first != "id" && name.first != "str")
    throw std::runtime_error("expected graph name");
  if (lex.next().first != "{") throw std::runtime_error("expected {");
  while (true) {
    auto t = lex.next();
    if (t.first == "}") break;
    if (t.first == "") throw std::runtime_error("unexpected end of input");
    if (t.first != "id" && t.first != "str") throw std::runtime_error("expected id");
    auto follow = lex.peek();
    if (follow.first == "=") {  // graph-level attribute
      lex.next();
      auto v = lex.next();
      if (v.first != "id" && v.first != "str") throw std::runtime_error("expected value");
    } else if (follow.first == "->") {
      lex.next();
      auto dst = lex.next();
      if (dst.first != "id" && dst.first != "str") throw std::runtime_error("expected node");
      if (lex.peek().first == "[") detail::parse_attrs(lex);
      ++out.edges;
    } else if (t.second == "node" || t.second == "edge" || t.second == "graph") {
      detail::parse_attrs(lex);  // default-attribute statement
    } else {
      if (follow.first == "[") detail::parse_attrs(lex);
      ++out.nodes;
    }
    if (lex.peek().first == ";") lex.next();
  }
  return out;
}

}  // namespace dotcheck
