#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "topobelief/formula.hpp"

namespace topobelief {

struct CorpusOptions {
  std::vector<Op> modalities{Op::K, Op::Box, Op::Bel};
  std::vector<std::string> atoms{"p", "q"};
  int max_depth = 3;
  /// Upper bound on the number of formulas kept per modal-depth layer.
  std::size_t layer_cap = 300;
};

/// Deterministic test corpus. Layer 0 holds Boolean combinations of the atoms; layer k
/// wraps every modality around (the negations of) layer k-1 and mixes the results with
/// conjunctions and implications. Every formula has modal depth at most `max_depth`
/// and uses only the listed modalities. Duplicates are removed, generation order is kept.
std::vector<Formula> formula_corpus(const CorpusOptions& options = {});

}  // namespace topobelief
