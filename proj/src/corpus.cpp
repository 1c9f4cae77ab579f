#include "topobelief/corpus.hpp"

#include <unordered_set>

namespace topobelief {
namespace {

std::vector<Formula> thin(std::vector<Formula> layer, std::size_t cap) {
  if (layer.size() <= cap || cap == 0) return layer;
  std::vector<Formula> kept;
  kept.reserve(cap);
  // Evenly spaced picks so every wrapping modality stays represented.
  for (std::size_t i = 0; i < cap; ++i) kept.push_back(layer[i * layer.size() / cap]);
  return kept;
}

}  // namespace

std::vector<Formula> formula_corpus(const CorpusOptions& options) {
  std::vector<Formula> base;
  for (const std::string& a : options.atoms) base.push_back(Formula::atom(a));
  if (!options.atoms.empty()) {
    const Formula p = Formula::atom(options.atoms.front());
    const Formula q = Formula::atom(options.atoms.back());
    base.push_back(Formula::neg(p));
    base.push_back(Formula::conj(p, q));
    base.push_back(Formula::disj(p, Formula::neg(q)));
    base.push_back(Formula::implies(p, q));
  }
  base.push_back(Formula::top());

  std::vector<Formula> out;
  std::unordered_set<Formula, FormulaHash> seen;
  auto keep = [&](const std::vector<Formula>& layer) {
    for (const Formula& f : layer) {
      if (seen.insert(f).second) out.push_back(f);
    }
  };
  keep(base);

  std::vector<Formula> prev = base;
  for (int depth = 1; depth <= options.max_depth; ++depth) {
    std::vector<Formula> wrapped;
    for (Op m : options.modalities) {
      for (const Formula& f : prev) {
        wrapped.push_back(Formula::modal(m, f));
        wrapped.push_back(Formula::modal(m, Formula::neg(f)));
      }
    }
    std::vector<Formula> layer = wrapped;
    const std::size_t w = wrapped.size();
    for (std::size_t i = 0; i < w; ++i) {
      layer.push_back(Formula::conj(wrapped[i], prev[i % prev.size()]));
      layer.push_back(Formula::implies(wrapped[i], wrapped[(i * 7 + 3) % w]));
    }
    prev = thin(std::move(layer), options.layer_cap);
    keep(prev);
  }
  return out;
}

}  // namespace topobelief
