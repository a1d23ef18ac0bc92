#include <cctype>
#include <sstream>

#include "gcl/formula.hpp"

namespace gcl {

namespace {

class Parser {
 public:
  Parser(std::string_view text, int agents) : text_(text), agents_(agents) {}

  Formula parse_all() {
    Formula f = parse_implies();
    skip_ws();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return f;
  }

 private:
  [[noreturn]] void fail(const std::string& message) const { throw ParseError(message, pos_); }

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  bool accept(std::string_view tok) {
    skip_ws();
    if (text_.substr(pos_, tok.size()) == tok) {
      pos_ += tok.size();
      return true;
    }
    return false;
  }

  void expect(std::string_view tok) {
    if (!accept(tok)) fail("expected '" + std::string(tok) + "'");
  }

  Formula parse_implies() {
    Formula lhs = parse_or();
    if (accept("->")) return Formula::implication(lhs, parse_implies());
    return lhs;
  }

  Formula parse_or() {
    Formula acc = parse_and();
    while (accept("|")) acc = Formula::disjunction(acc, parse_and());
    return acc;
  }

  Formula parse_and() {
    Formula acc = parse_unary();
    while (accept("&")) acc = Formula::conjunction(acc, parse_unary());
    return acc;
  }

  Formula parse_unary() {
    skip_ws();
    if (pos_ >= text_.size()) fail("unexpected end of input");
    if (accept("~")) return Formula::negation(parse_unary());
    // "->" is never a prefix of a unary formula, so a bare '<' opens a coalition.
    if (accept("<")) {
      Coalition c = parse_ids('>');
      return Formula::coalition(c, parse_unary());
    }
    if (accept("[")) {
      Coalition c = parse_ids(']');
      return Formula::dual(c, parse_unary());
    }
    if (accept("(")) {
      Formula f = parse_implies();
      expect(")");
      return f;
    }
    char ch = text_[pos_];
    if (std::isalpha(static_cast<unsigned char>(ch)) || ch == '_') {
      std::size_t start = pos_;
      while (pos_ < text_.size() &&
             (std::isalnum(static_cast<unsigned char>(text_[pos_])) || text_[pos_] == '_')) {
        ++pos_;
      }
      std::string ident(text_.substr(start, pos_ - start));
      if (ident == "true") return Formula::top();
      if (ident == "false") return Formula::bottom();
      return Formula::atom(std::move(ident));
    }
    fail("expected a formula");
  }

  Coalition parse_ids(char close) {
    const std::string closer(1, close);
    if (accept(closer)) return Coalition::empty();
    if (accept("*")) {
      expect(closer);
      return Coalition::full(agents_);
    }
    Coalition c;
    do {
      c = c.with(parse_agent());
    } while (accept(","));
    expect(closer);
    return c;
  }

  Agent parse_agent() {
    skip_ws();
    std::size_t start = pos_;
    long value = 0;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) {
      value = value * 10 + (text_[pos_] - '0');
      if (value > 1'000'000) break;
      ++pos_;
    }
    if (pos_ == start) fail("expected an agent index");
    if (value >= agents_) {
      pos_ = start;
      std::ostringstream msg;
      msg << "agent index " << value << " out of range for " << agents_ << " agent(s)";
      fail(msg.str());
    }
    return static_cast<Agent>(value);
  }

  std::string_view text_;
  int agents_;
  std::size_t pos_ = 0;
};

void render_into(const Formula& f, std::string& out) {
  switch (f.kind()) {
    case FormulaKind::Top:
      out += "true";
      return;
    case FormulaKind::Atom:
      out += f.atom_name();
      return;
    case FormulaKind::Coal: {
      out += '<';
      bool first = true;
      for (Agent a : f.coal().members()) {
        if (!first) out += ',';
        out += std::to_string(a);
        first = false;
      }
      out += "> ";
      render_into(f.child(), out);
      return;
    }
    case FormulaKind::And:
      out += '(';
      render_into(f.left(), out);
      out += " & ";
      render_into(f.right(), out);
      out += ')';
      return;
    case FormulaKind::Not:
      break;
  }

  const Formula& g = f.child();
  if (g.is_top()) {
    out += "false";
    return;
  }
  if (g.kind() == FormulaKind::Coal && g.child().kind() == FormulaKind::Not) {
    out += '[';
    bool first = true;
    for (Agent a : g.coal().members()) {
      if (!first) out += ',';
      out += std::to_string(a);
      first = false;
    }
    out += "] ";
    render_into(g.child().child(), out);
    return;
  }
  if (g.kind() == FormulaKind::And && g.right().kind() == FormulaKind::Not) {
    out += '(';
    if (g.left().kind() == FormulaKind::Not) {
      render_into(g.left().child(), out);
      out += " | ";
    } else {
      render_into(g.left(), out);
      out += " -> ";
    }
    render_into(g.right().child(), out);
    out += ')';
    return;
  }
  out += '~';
  render_into(g, out);
}

}  // namespace

Formula parse(std::string_view text, AgentCount agents) {
  return Parser(text, agents.value()).parse_all();
}

std::string render(const Formula& f) {
  std::string out;
  render_into(f, out);
  return out;
}

}  // namespace gcl
