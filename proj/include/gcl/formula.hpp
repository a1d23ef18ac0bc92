#pragma once

#include <cstddef>
#include <memory>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "gcl/coalition.hpp"

namespace gcl {

/// Constructors of the language: the five productions of the grammar.
/// Derived connectives are encoded with these (bottom is ~true).
enum class FormulaKind { Top, Atom, Not, And, Coal };

/// Immutable formula tree with structural equality.
///
/// Nodes are shared; copying a Formula is cheap. Each node caches its
/// structural hash, modal depth and size.
class Formula {
 public:
  static Formula top();
  static Formula bottom();
  static Formula atom(std::string name);
  static Formula negation(Formula f);
  static Formula conjunction(Formula a, Formula b);
  static Formula coalition(Coalition c, Formula f);

  // Derived connectives.
  static Formula disjunction(Formula a, Formula b);
  static Formula implication(Formula a, Formula b);
  static Formula equivalence(Formula a, Formula b);
  /// [C] f, i.e. ~<C>~f.
  static Formula dual(Coalition c, Formula f);

  /// Left fold with `&`; the empty conjunction is `true`.
  static Formula conjunction_of(const std::vector<Formula>& items);
  /// Left fold with `|`; the empty disjunction is `false`.
  static Formula disjunction_of(const std::vector<Formula>& items);

  FormulaKind kind() const noexcept { return node_->kind; }
  bool is_top() const noexcept { return kind() == FormulaKind::Top; }
  bool is_bottom() const noexcept { return kind() == FormulaKind::Not && child().is_top(); }

  const std::string& atom_name() const;
  /// Operand of `~` and of `<C>`.
  const Formula& child() const;
  const Formula& left() const;
  const Formula& right() const;
  Coalition coal() const;

  std::size_t hash() const noexcept { return node_->hash; }
  int modal_depth() const noexcept { return node_->depth; }
  std::size_t size() const noexcept { return node_->size; }

  /// Union of all coalitions appearing in the formula.
  Coalition agents_mentioned() const noexcept { return node_->agents; }

  bool operator==(const Formula& other) const noexcept;
  bool operator!=(const Formula& other) const noexcept { return !(*this == other); }
  /// Arbitrary but fixed structural order, for ordered containers.
  bool operator<(const Formula& other) const noexcept { return compare(other) < 0; }
  int compare(const Formula& other) const noexcept;

 private:
  struct Node {
    Node(FormulaKind k, std::string n, Coalition c, std::vector<Formula> ks)
        : kind(k), name(std::move(n)), coal(c), kids(std::move(ks)) {}

    FormulaKind kind;
    std::string name;
    Coalition coal;
    std::vector<Formula> kids;
    std::size_t hash = 0;
    int depth = 0;
    std::size_t size = 1;
    Coalition agents;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Node node);

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const noexcept { return f.hash(); }
};

/// 0 for true and atoms; max over operands for ~ and &; one more than the
/// operand for <C>.
inline int modal_depth(const Formula& f) { return f.modal_depth(); }

/// Names of all atoms occurring in `f`.
std::set<std::string> atoms_of(const Formula& f);

/// Syntax error carrying the byte offset into the input.
class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position)
      : std::runtime_error(message + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const noexcept { return position_; }

 private:
  std::size_t position_;
};

/// Parses the ASCII formula grammar.
///
///   formula := implies
///   implies := or ("->" implies)?
///   or      := and ("|" and)*
///   and     := unary ("&" unary)*
///   unary   := "~" unary | "<" ids ">" unary | "[" ids "]" unary
///            | "true" | "false" | ident | "(" formula ")"
///   ids     := "" | "*" | number ("," number)*
///
/// `[C] f` becomes ~<C>~f, `false` becomes ~true and `*` is the grand
/// coalition. Throws ParseError on malformed text or agent indices outside
/// 0..agents-1.
Formula parse(std::string_view text, AgentCount agents);

/// Prints a formula so that parse(render(f)) == f. Conjunctions are always
/// parenthesized; `|`, `->` and `[C]` are used where the tree has the
/// corresponding encoded shape.
std::string render(const Formula& f);

}  // namespace gcl
