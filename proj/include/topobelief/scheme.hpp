#pragma once

#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "topobelief/formula.hpp"

namespace topobelief {

/// An axiom scheme: a template whose metavariables are the atoms listed in `metavars`.
///
/// Catalogue names follow the usual labels. The generic modal schemes take a modality
/// suffix: K_K, D_box, 4_B, .2_K, 5_box, ... The relational ones are sPI, sNI, KB, FB,
/// RB, wF, CB, KI and EQ. CPL is one propositional tautology standing in for the
/// classical base.
struct Scheme {
  std::string name;
  Formula pattern;
  std::vector<std::string> metavars;
};

/// Inference rule "from |- phi infer |- M phi".
struct Rule {
  std::string name;
  Op modality;
};

/// Metavariable atom names used in scheme templates.
inline constexpr std::string_view kPhi = "phi";
inline constexpr std::string_view kPsi = "psi";

/// Looks up a scheme by name; throws ArgumentError for unknown names.
Scheme scheme(std::string_view name);

/// Every scheme the catalogue knows, in a fixed order.
std::vector<std::string> scheme_names();

/// Necessitation rule for K, Box or Bel.
Rule necessitation(Op modality);

/// Homomorphic substitution of every metavariable. Throws ArgumentError if one is unbound.
Formula instantiate(const Scheme& s, const std::map<std::string, Formula>& subst);

}  // namespace topobelief
