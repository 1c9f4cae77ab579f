// Surface syntax: tokenizer, recursive-descent parser and printer.

#include <cctype>
#include <optional>

#include "topobelief/error.hpp"
#include "topobelief/formula.hpp"

namespace topobelief {
namespace {

enum class Tok {
  End, LParen, RParen, Not, And, Or, Imp, Iff,
  K, B, Box, Dia, HatK, HatB, True, False, Ident,
};

struct Token {
  Tok kind;
  std::size_t offset;
  std::string text;
};

bool is_atom_name(std::string_view w) {
  if (w.empty() || !(w[0] >= 'a' && w[0] <= 'z')) return false;
  for (char c : w) {
    if (!((c >= 'a' && c <= 'z') || (c >= '0' && c <= '9') || c == '_')) return false;
  }
  return true;
}

std::vector<Token> tokenize(std::string_view s) {
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < s.size()) {
    const char c = s[i];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++i;
      continue;
    }
    const std::size_t at = i;
    switch (c) {
      case '(': out.push_back({Tok::LParen, at, "("}); ++i; continue;
      case ')': out.push_back({Tok::RParen, at, ")"}); ++i; continue;
      case '!':
      case '~': out.push_back({Tok::Not, at, std::string(1, c)}); ++i; continue;
      case '&': out.push_back({Tok::And, at, "&"}); ++i; continue;
      case '|': out.push_back({Tok::Or, at, "|"}); ++i; continue;
      default: break;
    }
    if (s.substr(i, 2) == "->") {
      out.push_back({Tok::Imp, at, "->"});
      i += 2;
      continue;
    }
    if (s.substr(i, 3) == "<->") {
      out.push_back({Tok::Iff, at, "<->"});
      i += 3;
      continue;
    }
    if (std::isalpha(static_cast<unsigned char>(c))) {
      std::size_t j = i;
      while (j < s.size() &&
             (std::isalnum(static_cast<unsigned char>(s[j])) || s[j] == '_')) {
        ++j;
      }
      std::string word(s.substr(i, j - i));
      i = j;
      Tok kind;
      if (word == "K") kind = Tok::K;
      else if (word == "B") kind = Tok::B;
      else if (word == "box") kind = Tok::Box;
      else if (word == "dia") kind = Tok::Dia;
      else if (word == "hatK") kind = Tok::HatK;
      else if (word == "hatB") kind = Tok::HatB;
      else if (word == "true") kind = Tok::True;
      else if (word == "false") kind = Tok::False;
      else if (is_atom_name(word)) kind = Tok::Ident;
      else throw ParseError(at, "unknown operator token '" + word + "'");
      out.push_back({kind, at, std::move(word)});
      continue;
    }
    throw ParseError(at, std::string("unexpected character '") + c + "'");
  }
  out.push_back({Tok::End, s.size(), ""});
  return out;
}

class Parser {
 public:
  explicit Parser(std::vector<Token> toks) : toks_(std::move(toks)) {}

  Formula parse_all() {
    Formula f = parse_iff();
    if (peek().kind != Tok::End) fail("unexpected '" + peek().text + "'");
    return f;
  }

 private:
  const Token& peek() const { return toks_[pos_]; }
  const Token& take() { return toks_[pos_++]; }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(peek().offset, what); }

  Formula parse_iff() {
    Formula lhs = parse_imp();
    if (peek().kind == Tok::Iff) {
      take();
      return Formula::iff(lhs, parse_iff());
    }
    return lhs;
  }

  Formula parse_imp() {
    Formula lhs = parse_or();
    if (peek().kind == Tok::Imp) {
      take();
      return Formula::implies(lhs, parse_imp());
    }
    return lhs;
  }

  Formula parse_or() {
    Formula f = parse_and();
    while (peek().kind == Tok::Or) {
      take();
      f = Formula::disj(f, parse_and());
    }
    return f;
  }

  Formula parse_and() {
    Formula f = parse_unary();
    while (peek().kind == Tok::And) {
      take();
      f = Formula::conj(f, parse_unary());
    }
    return f;
  }

  Formula parse_unary() {
    switch (peek().kind) {
      case Tok::Not: take(); return Formula::neg(parse_unary());
      case Tok::K: take(); return Formula::know(parse_unary());
      case Tok::B: take(); return Formula::bel(parse_unary());
      case Tok::Box: take(); return Formula::box(parse_unary());
      case Tok::Dia: take(); return Formula::dia(parse_unary());
      case Tok::HatK: take(); return Formula::hat_k(parse_unary());
      case Tok::HatB: take(); return Formula::hat_b(parse_unary());
      default: return parse_atom();
    }
  }

  Formula parse_atom() {
    switch (peek().kind) {
      case Tok::True: take(); return Formula::top();
      case Tok::False: take(); return Formula::bot();
      case Tok::Ident: return Formula::atom(take().text);
      case Tok::LParen: {
        take();
        Formula f = parse_iff();
        if (peek().kind != Tok::RParen) fail("expected ')'");
        take();
        return f;
      }
      case Tok::End: fail("expected a formula, found end of input");
      default: fail("expected a formula, found '" + peek().text + "'");
    }
  }

  std::vector<Token> toks_;
  std::size_t pos_ = 0;
};

// Binding strength, loosest first.
constexpr int kIff = 1, kImp = 2, kOr = 3, kAnd = 4, kUnary = 5;

int precedence(Op op) {
  switch (op) {
    case Op::Iff: return kIff;
    case Op::Implies: return kImp;
    case Op::Or: return kOr;
    case Op::And: return kAnd;
    default: return kUnary;
  }
}

// Dual keyword when f has the shape Not(M(Not g)); g is returned through `inner`.
std::optional<const char*> dual_keyword(const Formula& f, const Formula** inner) {
  if (f.op() != Op::Not) return std::nullopt;
  const Formula& m = f.arg();
  if (!is_modal(m.op()) || m.arg().op() != Op::Not) return std::nullopt;
  *inner = &m.arg().arg();
  switch (m.op()) {
    case Op::K: return "hatK";
    case Op::Box: return "dia";
    default: return "hatB";
  }
}

void render(const Formula& f, int min_prec, std::string& out) {
  const int prec = precedence(f.op());
  const bool paren = prec < min_prec;
  if (paren) out += '(';
  switch (f.op()) {
    case Op::Atom: out += f.name(); break;
    case Op::Top: out += "true"; break;
    case Op::Bot: out += "false"; break;
    case Op::Iff:
      render(f.lhs(), kImp, out);
      out += " <-> ";
      render(f.rhs(), kIff, out);
      break;
    case Op::Implies:
      render(f.lhs(), kOr, out);
      out += " -> ";
      render(f.rhs(), kImp, out);
      break;
    case Op::Or:
      render(f.lhs(), kOr, out);
      out += " | ";
      render(f.rhs(), kAnd, out);
      break;
    case Op::And:
      render(f.lhs(), kAnd, out);
      out += " & ";
      render(f.rhs(), kUnary, out);
      break;
    default: {
      const Formula* inner = nullptr;
      if (auto kw = dual_keyword(f, &inner)) {
        out += *kw;
        out += ' ';
        render(*inner, kUnary, out);
        break;
      }
      switch (f.op()) {
        case Op::Not: out += "! "; break;
        case Op::K: out += "K "; break;
        case Op::Box: out += "box "; break;
        default: out += "B "; break;
      }
      render(f.arg(), kUnary, out);
    }
  }
  if (paren) out += ')';
}

}  // namespace

Formula parse(std::string_view text) { return Parser(tokenize(text)).parse_all(); }

std::string to_text(const Formula& f) {
  std::string out;
  render(f, kIff, out);
  return out;
}

}  // namespace topobelief
