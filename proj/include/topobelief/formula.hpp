#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <memory>
#include <set>
#include <string>
#include <string_view>
#include <vector>

namespace topobelief {

/// Node kinds of the trimodal language. The duals (hatK, dia, hatB) have no node of their
/// own: they are stored as Not(Op(Not ...)).
enum class Op { Atom, Top, Bot, Not, And, Or, Implies, Iff, K, Box, Bel };

int arity(Op op);
bool is_modal(Op op);

/// Immutable formula tree. Copies share structure; equality and ordering are structural.
class Formula {
 public:
  static Formula atom(std::string name);
  static Formula top();
  static Formula bot();
  static Formula neg(Formula f);
  static Formula conj(Formula a, Formula b);
  static Formula disj(Formula a, Formula b);
  static Formula implies(Formula a, Formula b);
  static Formula iff(Formula a, Formula b);
  static Formula know(Formula f);
  static Formula box(Formula f);
  static Formula bel(Formula f);
  static Formula hat_k(Formula f) { return neg(know(neg(std::move(f)))); }
  static Formula dia(Formula f) { return neg(box(neg(std::move(f)))); }
  static Formula hat_b(Formula f) { return neg(bel(neg(std::move(f)))); }
  /// Unary modal node for K, Box or Bel.
  static Formula modal(Op op, Formula f);
  /// Builds a node of the given kind from children; `children.size()` must match the arity.
  static Formula make(Op op, std::vector<Formula> children);

  Op op() const;
  /// Atom name; empty for other kinds.
  const std::string& name() const;
  /// Operand of a unary node or left operand of a binary node.
  const Formula& lhs() const;
  const Formula& rhs() const;
  const Formula& arg() const { return lhs(); }
  const std::vector<Formula>& children() const;

  /// Number of nodes in the tree.
  std::size_t size() const;
  int modal_depth() const;
  /// Number of nodes of the given kind.
  std::size_t count(Op op) const;
  std::set<std::string> atoms() const;
  std::size_t hash() const;

  friend bool operator==(const Formula& a, const Formula& b);
  friend std::strong_ordering operator<=>(const Formula& a, const Formula& b);

 private:
  struct Node;
  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  std::shared_ptr<const Node> node_;
};

/// Parses the ASCII surface syntax. Throws ParseError with the offending offset.
///
///   formula := iff ; iff := imp ("<->" imp)* ; imp := or ("->" imp)? ;
///   or := and ("|" and)* ; and := unary ("&" unary)* ;
///   unary := ("!" | "~" | "K" | "B" | "box" | "dia" | "hatK" | "hatB") unary | atom ;
///   atom := "true" | "false" | IDENT | "(" formula ")"
///
/// `->` and `<->` associate to the right, `&` and `|` to the left.
Formula parse(std::string_view text);

/// Minimal-parenthesis rendering; Not(Op(Not f)) is printed with the dual keyword.
std::string to_text(const Formula& f);

/// Simultaneous replacement of atoms by formulas. Atoms absent from `subst` are kept.
Formula substitute(const Formula& f, const std::map<std::string, Formula>& subst);

enum class Translation {
  BoxToK,       ///< every Box becomes K
  BelToKDiaBox, ///< every Bel phi becomes K dia box phi
  BelToBelDiaBox,  ///< every Bel phi becomes Bel dia box phi
};

/// Structural recursion replacing only the operator named by `map`; innermost first.
Formula translate(const Formula& f, Translation map);

/// `f` and all of its descendants, deduplicated; children precede parents.
std::vector<Formula> subformulas(const Formula& f);

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

}  // namespace topobelief
