#include "topobelief/formula.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <unordered_set>

#include "topobelief/error.hpp"

namespace topobelief {

struct Formula::Node {
  Op op;
  std::string name;
  std::vector<Formula> children;
  std::size_t size;
  int depth;
  std::size_t hash;
};

int arity(Op op) {
  switch (op) {
    case Op::Atom:
    case Op::Top:
    case Op::Bot:
      return 0;
    case Op::Not:
    case Op::K:
    case Op::Box:
    case Op::Bel:
      return 1;
    case Op::And:
    case Op::Or:
    case Op::Implies:
    case Op::Iff:
      return 2;
  }
  return 0;
}

bool is_modal(Op op) { return op == Op::K || op == Op::Box || op == Op::Bel; }

namespace {

std::size_t mix(std::size_t seed, std::size_t v) {
  return seed ^ (v + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::make(Op op, std::vector<Formula> children) {
  if (static_cast<int>(children.size()) != arity(op) || op == Op::Atom)
    throw ArgumentError("wrong number of operands for formula node");
  std::size_t size = 1;
  int depth = 0;
  std::size_t h = mix(0, static_cast<std::size_t>(op));
  for (const Formula& c : children) {
    size += c.size();
    depth = std::max(depth, c.modal_depth());
    h = mix(h, c.hash());
  }
  if (is_modal(op)) ++depth;
  auto node = std::make_shared<const Node>(Node{op, {}, std::move(children), size, depth, h});
  return Formula(std::move(node));
}

Formula Formula::atom(std::string name) {
  std::size_t h = mix(0, std::hash<std::string>{}(name));
  return Formula(std::make_shared<const Node>(Node{Op::Atom, std::move(name), {}, 1, 0, h}));
}

Formula Formula::top() { return make(Op::Top, {}); }
Formula Formula::bot() { return make(Op::Bot, {}); }
Formula Formula::neg(Formula f) { return make(Op::Not, {std::move(f)}); }
Formula Formula::conj(Formula a, Formula b) { return make(Op::And, {std::move(a), std::move(b)}); }
Formula Formula::disj(Formula a, Formula b) { return make(Op::Or, {std::move(a), std::move(b)}); }
Formula Formula::implies(Formula a, Formula b) {
  return make(Op::Implies, {std::move(a), std::move(b)});
}
Formula Formula::iff(Formula a, Formula b) { return make(Op::Iff, {std::move(a), std::move(b)}); }
Formula Formula::know(Formula f) { return make(Op::K, {std::move(f)}); }
Formula Formula::box(Formula f) { return make(Op::Box, {std::move(f)}); }
Formula Formula::bel(Formula f) { return make(Op::Bel, {std::move(f)}); }

Formula Formula::modal(Op op, Formula f) {
  if (!is_modal(op)) throw ArgumentError("not a modal operator");
  return make(op, {std::move(f)});
}

Op Formula::op() const { return node_->op; }
const std::string& Formula::name() const { return node_->name; }
const Formula& Formula::lhs() const {
  assert(!node_->children.empty());
  return node_->children[0];
}
const Formula& Formula::rhs() const {
  assert(node_->children.size() == 2);
  return node_->children[1];
}
const std::vector<Formula>& Formula::children() const { return node_->children; }
std::size_t Formula::size() const { return node_->size; }
int Formula::modal_depth() const { return node_->depth; }
std::size_t Formula::hash() const { return node_->hash; }

std::size_t Formula::count(Op op) const {
  std::size_t n = node_->op == op ? 1 : 0;
  for (const Formula& c : node_->children) n += c.count(op);
  return n;
}

std::set<std::string> Formula::atoms() const {
  std::set<std::string> out;
  std::function<void(const Formula&)> walk = [&](const Formula& f) {
    if (f.op() == Op::Atom) out.insert(f.name());
    for (const Formula& c : f.children()) walk(c);
  };
  walk(*this);
  return out;
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.size() != b.size()) return false;
  return (a <=> b) == std::strong_ordering::equal;
}

std::strong_ordering operator<=>(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return std::strong_ordering::equal;
  if (auto c = a.op() <=> b.op(); c != 0) return c;
  if (a.op() == Op::Atom) return a.name() <=> b.name();
  const auto& ac = a.children();
  const auto& bc = b.children();
  for (std::size_t i = 0; i < ac.size(); ++i) {
    if (auto c = ac[i] <=> bc[i]; c != 0) return c;
  }
  return std::strong_ordering::equal;
}

Formula substitute(const Formula& f, const std::map<std::string, Formula>& subst) {
  if (f.op() == Op::Atom) {
    auto it = subst.find(f.name());
    return it == subst.end() ? f : it->second;
  }
  if (f.children().empty()) return f;
  std::vector<Formula> kids;
  kids.reserve(f.children().size());
  for (const Formula& c : f.children()) kids.push_back(substitute(c, subst));
  return Formula::make(f.op(), std::move(kids));
}

Formula translate(const Formula& f, Translation map) {
  if (f.children().empty()) return f;
  std::vector<Formula> kids;
  kids.reserve(f.children().size());
  for (const Formula& c : f.children()) kids.push_back(translate(c, map));
  switch (map) {
    case Translation::BoxToK:
      if (f.op() == Op::Box) return Formula::know(kids[0]);
      break;
    case Translation::BelToKDiaBox:
      if (f.op() == Op::Bel) return Formula::know(Formula::dia(Formula::box(kids[0])));
      break;
    case Translation::BelToBelDiaBox:
      if (f.op() == Op::Bel) return Formula::bel(Formula::dia(Formula::box(kids[0])));
      break;
  }
  return Formula::make(f.op(), std::move(kids));
}

std::vector<Formula> subformulas(const Formula& f) {
  std::vector<Formula> out;
  std::unordered_set<Formula, FormulaHash> seen;
  std::function<void(const Formula&)> walk = [&](const Formula& g) {
    if (seen.count(g)) return;
    for (const Formula& c : g.children()) walk(c);
    seen.insert(g);
    out.push_back(g);
  };
  walk(f);
  return out;
}

}  // namespace topobelief
