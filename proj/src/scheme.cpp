#include "topobelief/scheme.hpp"

#include <array>
#include <utility>

#include "topobelief/error.hpp"

namespace topobelief {
namespace {

// Generic modal templates; '*' stands for the modality.
constexpr std::array<std::pair<std::string_view, std::string_view>, 6> kGeneric{{
    {"K", "* (phi -> psi) -> (* phi -> * psi)"},
    {"D", "* phi -> ! * ! phi"},
    {"T", "* phi -> phi"},
    {"4", "* phi -> * * phi"},
    {".2", "! * ! * phi -> * ! * ! phi"},
    {"5", "! * phi -> * ! * phi"},
}};

constexpr std::array<std::pair<std::string_view, std::string_view>, 3> kModalities{{
    {"K", "K"}, {"box", "box"}, {"B", "B"},
}};

constexpr std::array<std::pair<std::string_view, std::string_view>, 10> kNamed{{
    {"sPI", "B phi -> K B phi"},
    {"sNI", "! B phi -> K ! B phi"},
    {"KB", "K phi -> B phi"},
    {"FB", "B phi -> B K phi"},
    {"RB", "B phi -> B box phi"},
    {"wF", "B phi -> dia phi"},
    {"CB", "B (box phi | box ! box phi)"},
    {"KI", "K phi -> box phi"},
    {"EQ", "B phi <-> K dia box phi"},
    {"CPL", "phi -> (psi -> phi)"},
}};

Scheme from_text(std::string name, std::string_view text) {
  Formula pattern = parse(text);
  std::vector<std::string> vars;
  for (const std::string& a : pattern.atoms()) {
    if (a == kPhi || a == kPsi) vars.push_back(a);
  }
  return Scheme{std::move(name), std::move(pattern), std::move(vars)};
}

}  // namespace

Scheme scheme(std::string_view name) {
  for (const auto& [label, text] : kNamed) {
    if (label == name) return from_text(std::string(name), text);
  }
  for (const auto& [label, text] : kGeneric) {
    for (const auto& [suffix, keyword] : kModalities) {
      if (std::string(label) + "_" + std::string(suffix) != name) continue;
      std::string expanded;
      for (char c : text) {
        if (c == '*') expanded += keyword;
        else expanded += c;
      }
      return from_text(std::string(name), expanded);
    }
  }
  throw ArgumentError("unknown scheme '" + std::string(name) + "'");
}

std::vector<std::string> scheme_names() {
  std::vector<std::string> out;
  for (const auto& [suffix, keyword] : kModalities) {
    for (const auto& [label, text] : kGeneric) out.push_back(std::string(label) + "_" + std::string(suffix));
  }
  for (const auto& [label, text] : kNamed) out.emplace_back(label);
  return out;
}

Rule necessitation(Op modality) {
  switch (modality) {
    case Op::K: return {"Nec_K", Op::K};
    case Op::Box: return {"Nec_box", Op::Box};
    case Op::Bel: return {"Nec_B", Op::Bel};
    default: throw ArgumentError("necessitation needs a modal operator");
  }
}

Formula instantiate(const Scheme& s, const std::map<std::string, Formula>& subst) {
  std::map<std::string, Formula> used;
  for (const std::string& v : s.metavars) {
    auto it = subst.find(v);
    if (it == subst.end()) {
      throw ArgumentError("scheme " + s.name + ": metavariable '" + v + "' is unbound");
    }
    used.emplace(v, it->second);
  }
  return substitute(s.pattern, used);
}

}  // namespace topobelief
