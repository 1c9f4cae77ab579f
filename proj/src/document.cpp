#include "topobelief/document.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

#include "topobelief/error.hpp"

namespace topobelief {

using nlohmann::json;

namespace {

int read_world(const json& j, int n, const std::string& where) {
  if (!j.is_number_integer()) throw DocumentError(where + ": world index must be an integer");
  const auto x = j.get<long long>();
  if (x < 0 || x >= n) {
    throw RangeError(where + ": world " + std::to_string(x) + " outside 0.." + std::to_string(n - 1));
  }
  return static_cast<int>(x);
}

WorldSet read_set(const json& j, int n, const std::string& where) {
  if (!j.is_array()) throw DocumentError(where + ": expected an array of world indices");
  WorldSet s;
  for (const json& e : j) s |= WorldSet::singleton(read_world(e, n, where));
  return s;
}

std::vector<WorldSet> read_family(const json& j, int n, const std::string& where) {
  if (!j.is_array()) throw DocumentError(where + ": expected an array of sets");
  std::vector<WorldSet> out;
  for (const json& e : j) out.push_back(read_set(e, n, where));
  return out;
}

Valuation read_valuation(const json& doc, int n) {
  Valuation v;
  if (!doc.contains("valuation")) return v;
  const json& j = doc.at("valuation");
  if (!j.is_object()) throw DocumentError("\"valuation\" must be an object");
  for (const auto& [atom, set] : j.items()) {
    if (parse(atom).op() != Op::Atom) throw DocumentError("valuation key '" + atom + "' is not an atom");
    v[atom] = read_set(set, n, "valuation of '" + atom + "'");
  }
  return v;
}

void reject_keys(const json& doc, std::initializer_list<const char*> keys, const std::string& type) {
  for (const char* k : keys) {
    if (doc.contains(k)) {
      throw DocumentError(std::string("key \"") + k + "\" is not allowed in a " + type + " document");
    }
  }
}

json set_json(WorldSet s) { return json(s.members()); }

json valuation_json(const Valuation& v) {
  json out = json::object();
  for (const auto& [atom, set] : v) out[atom] = set_json(set);
  return out;
}

}  // namespace

ModelDocument load_document(std::string_view json_text) {
  json doc;
  try {
    doc = json::parse(json_text);
  } catch (const json::parse_error& e) {
    throw DocumentError(std::string("malformed JSON: ") + e.what());
  }
  if (!doc.is_object()) throw DocumentError("model document must be a JSON object");
  for (const auto& [key, _] : doc.items()) {
    if (key != "type" && key != "worlds" && key != "opens" && key != "subbasis" && key != "rel" &&
        key != "valuation") {
      throw DocumentError("unknown key \"" + key + "\"");
    }
  }
  std::string type = "subset";
  if (doc.contains("type")) {
    if (!doc.at("type").is_string()) throw DocumentError("\"type\" must be a string");
    type = doc.at("type").get<std::string>();
  }
  if (!doc.contains("worlds") || !doc.at("worlds").is_number_integer()) {
    throw DocumentError("\"worlds\" must be present and an integer");
  }
  const auto worlds = doc.at("worlds").get<long long>();
  if (worlds < 1 || worlds > kMaxWorlds) {
    throw RangeError("\"worlds\" must lie in 1.." + std::to_string(kMaxWorlds));
  }
  const int n = static_cast<int>(worlds);

  try {
    if (type == "subset") {
      reject_keys(doc, {"rel"}, type);
      const bool has_opens = doc.contains("opens");
      const bool has_subbasis = doc.contains("subbasis");
      if (has_opens == has_subbasis) {
        throw DocumentError("a subset document needs exactly one of \"opens\" and \"subbasis\"");
      }
      Topology t = has_opens ? Topology::from_opens(n, read_family(doc.at("opens"), n, "opens"))
                             : [&] {
                                 const auto sub = read_family(doc.at("subbasis"), n, "subbasis");
                                 return Topology::generate_from_subbasis(n, sub);
                               }();
      return SubsetModel(std::move(t), read_valuation(doc, n));
    }
    if (type == "relational") {
      reject_keys(doc, {"opens", "subbasis"}, type);
      if (!doc.contains("rel") || !doc.at("rel").is_array()) {
        throw DocumentError("a relational document needs a \"rel\" array");
      }
      std::vector<std::pair<int, int>> rel;
      for (const json& p : doc.at("rel")) {
        if (!p.is_array() || p.size() != 2) throw DocumentError("rel: each entry must be [from, to]");
        rel.emplace_back(read_world(p[0], n, "rel"), read_world(p[1], n, "rel"));
      }
      return RelationalModel(n, rel, read_valuation(doc, n));
    }
  } catch (const json::exception& e) {
    throw DocumentError(std::string("malformed document: ") + e.what());
  } catch (const ParseError& e) {
    throw DocumentError(std::string("bad atom name in valuation: ") + e.what());
  }
  throw DocumentError("unknown document type \"" + type + "\"");
}

ModelDocument load_document_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw DocumentError("cannot open model document '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return load_document(buf.str());
}

std::string dump_document(const SubsetModel& m) {
  json doc;
  doc["type"] = "subset";
  doc["worlds"] = m.size();
  json opens = json::array();
  for (WorldSet o : m.topology.opens()) opens.push_back(set_json(o));
  doc["opens"] = std::move(opens);
  doc["valuation"] = valuation_json(m.valuation);
  return doc.dump(2) + "\n";
}

std::string dump_document(const RelationalModel& m) {
  json doc;
  doc["type"] = "relational";
  doc["worlds"] = m.size();
  json rel = json::array();
  for (auto [from, to] : m.pairs()) rel.push_back(json::array({from, to}));
  doc["rel"] = std::move(rel);
  doc["valuation"] = valuation_json(m.valuation());
  return doc.dump(2) + "\n";
}

std::string dump_document(const ModelDocument& doc) {
  return std::visit([](const auto& m) { return dump_document(m); }, doc);
}

}  // namespace topobelief
