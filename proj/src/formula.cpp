#include "gcl/formula.hpp"

#include <algorithm>
#include <functional>

namespace gcl {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::make(Node node) {
  std::size_t h = static_cast<std::size_t>(node.kind) * 0x100000001b3ULL;
  int depth = 0;
  std::size_t size = 1;
  Coalition agents = node.coal;
  switch (node.kind) {
    case FormulaKind::Top:
      break;
    case FormulaKind::Atom:
      h = mix(h, std::hash<std::string>{}(node.name));
      break;
    case FormulaKind::Not:
    case FormulaKind::And:
      for (const Formula& k : node.kids) {
        h = mix(h, k.hash());
        depth = std::max(depth, k.modal_depth());
        size += k.size();
        agents = agents | k.agents_mentioned();
      }
      break;
    case FormulaKind::Coal: {
      const Formula& k = node.kids.front();
      h = mix(mix(h, node.coal.mask()), k.hash());
      depth = k.modal_depth() + 1;
      size += k.size();
      agents = agents | k.agents_mentioned();
      break;
    }
  }
  node.hash = h;
  node.depth = depth;
  node.size = size;
  node.agents = agents;
  return Formula(std::make_shared<const Node>(std::move(node)));
}

Formula Formula::top() {
  static const Formula t = make(Node{FormulaKind::Top, {}, {}, {}});
  return t;
}

Formula Formula::bottom() {
  static const Formula b = negation(top());
  return b;
}

Formula Formula::atom(std::string name) {
  return make(Node{FormulaKind::Atom, std::move(name), {}, {}});
}

Formula Formula::negation(Formula f) {
  return make(Node{FormulaKind::Not, {}, {}, {std::move(f)}});
}

Formula Formula::conjunction(Formula a, Formula b) {
  return make(Node{FormulaKind::And, {}, {}, {std::move(a), std::move(b)}});
}

Formula Formula::coalition(Coalition c, Formula f) {
  return make(Node{FormulaKind::Coal, {}, c, {std::move(f)}});
}

Formula Formula::disjunction(Formula a, Formula b) {
  return negation(conjunction(negation(std::move(a)), negation(std::move(b))));
}

Formula Formula::implication(Formula a, Formula b) {
  return negation(conjunction(std::move(a), negation(std::move(b))));
}

Formula Formula::equivalence(Formula a, Formula b) {
  return conjunction(implication(a, b), implication(b, a));
}

Formula Formula::dual(Coalition c, Formula f) {
  return negation(coalition(c, negation(std::move(f))));
}

Formula Formula::conjunction_of(const std::vector<Formula>& items) {
  if (items.empty()) return top();
  Formula acc = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) acc = conjunction(acc, items[i]);
  return acc;
}

Formula Formula::disjunction_of(const std::vector<Formula>& items) {
  if (items.empty()) return bottom();
  Formula acc = items.front();
  for (std::size_t i = 1; i < items.size(); ++i) acc = disjunction(acc, items[i]);
  return acc;
}

const std::string& Formula::atom_name() const {
  if (kind() != FormulaKind::Atom) throw std::logic_error("atom_name on non-atom");
  return node_->name;
}

const Formula& Formula::child() const {
  if (kind() != FormulaKind::Not && kind() != FormulaKind::Coal) {
    throw std::logic_error("child on formula without a single operand");
  }
  return node_->kids.front();
}

const Formula& Formula::left() const {
  if (kind() != FormulaKind::And) throw std::logic_error("left on non-conjunction");
  return node_->kids[0];
}

const Formula& Formula::right() const {
  if (kind() != FormulaKind::And) throw std::logic_error("right on non-conjunction");
  return node_->kids[1];
}

Coalition Formula::coal() const {
  if (kind() != FormulaKind::Coal) throw std::logic_error("coal on non-modal formula");
  return node_->coal;
}

bool Formula::operator==(const Formula& other) const noexcept {
  if (node_ == other.node_) return true;
  if (hash() != other.hash()) return false;
  return compare(other) == 0;
}

int Formula::compare(const Formula& other) const noexcept {
  if (node_ == other.node_) return 0;
  if (kind() != other.kind()) return kind() < other.kind() ? -1 : 1;
  switch (kind()) {
    case FormulaKind::Top:
      return 0;
    case FormulaKind::Atom:
    {
      int c = node_->name.compare(other.node_->name);
      return c < 0 ? -1 : (c > 0 ? 1 : 0);
    }
    case FormulaKind::Coal:
      if (node_->coal != other.node_->coal) return node_->coal < other.node_->coal ? -1 : 1;
      break;
    default:
      break;
  }
  for (std::size_t i = 0; i < node_->kids.size(); ++i) {
    int c = node_->kids[i].compare(other.node_->kids[i]);
    if (c != 0) return c;
  }
  return 0;
}

std::set<std::string> atoms_of(const Formula& f) {
  std::set<std::string> out;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    switch (g.kind()) {
      case FormulaKind::Top:
        break;
      case FormulaKind::Atom:
        out.insert(g.atom_name());
        break;
      case FormulaKind::Not:
      case FormulaKind::Coal:
        walk(g.child());
        break;
      case FormulaKind::And:
        walk(g.left());
        walk(g.right());
        break;
    }
  };
  walk(f);
  return out;
}

}  // namespace gcl
