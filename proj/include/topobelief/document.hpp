#pragma once

#include <string>
#include <string_view>
#include <variant>

#include "topobelief/model.hpp"
#include "topobelief/relational.hpp"

namespace topobelief {

/// A parsed model document:
///
///   { "type": "subset" | "relational",
///     "worlds": n,
///     "opens": [[...], ...]      explicit topology (subset only)
///     "subbasis": [[...], ...]   generated topology (subset only, alternative to opens)
///     "rel": [[from, to], ...]   relational only
///     "valuation": { "atom": [...], ... } }
using ModelDocument = std::variant<SubsetModel, RelationalModel>;

/// Parses and validates a document. Throws DocumentError, TopologyError or RangeError.
ModelDocument load_document(std::string_view json_text);
ModelDocument load_document_file(const std::string& path);

/// Canonical dump: sorted keys, two-space indent, trailing newline. Subset models are
/// always written with explicit "opens" in canonical order.
std::string dump_document(const SubsetModel& m);
std::string dump_document(const RelationalModel& m);
std::string dump_document(const ModelDocument& doc);

}  // namespace topobelief
