#include <fstream>
#include <istream>
#include <ostream>

#include <json.hpp>

#include "monolog/errors.hpp"
#include "monolog/model.hpp"

namespace monolog {

namespace {

using nlohmann::json;

std::vector<std::string> string_list(const json& j, const std::string& where) {
  if (!j.is_array()) throw FileFormatError(where + ": expected a list of element ids");
  std::vector<std::string> out;
  for (const auto& e : j) {
    if (e.is_string()) {
      out.push_back(e.get<std::string>());
    } else if (e.is_number_integer()) {
      out.push_back(std::to_string(e.get<long long>()));
    } else {
      throw FileFormatError(where + ": element ids must be strings or integers");
    }
  }
  return out;
}

SubsetRelation relation_from(const json& j, const FiniteModel& m, const std::string& where) {
  if (j.is_string()) {
    const auto kind = j.get<std::string>();
    if (kind == "subset") return SubsetRelation::subset(m.size());
    if (kind == "superset") return SubsetRelation::superset(m.size());
    if (kind == "equality") return SubsetRelation::equality(m.size());
    throw FileFormatError(where + ": unknown relation shorthand '" + kind + "'");
  }
  if (!j.is_array()) throw FileFormatError(where + ": expected a shorthand string or a list of pairs");
  SubsetRelation r(m.size());
  for (const auto& pair : j) {
    if (!pair.is_array() || pair.size() != 2) throw FileFormatError(where + ": each pair must be [subset, subset]");
    r.insert(m.subset_of(string_list(pair[0], where)), m.subset_of(string_list(pair[1], where)));
  }
  return r;
}

}  // namespace

FiniteModel read_model(std::istream& in) {
  json doc;
  try {
    doc = json::parse(in);
  } catch (const json::parse_error& e) {
    throw FileFormatError(std::string("model file is not valid JSON: ") + e.what());
  }
  if (!doc.is_object()) throw FileFormatError("model file must be an object");
  try {
    FiniteModel m(string_list(doc.value("universe", json::array()), "universe"));
    if (doc.contains("concepts")) {
      for (const auto& [name, ids] : doc["concepts"].items())
        m.interpret(ConceptSymbol(name), m.subset_of(string_list(ids, "concepts." + name)));
    }
    if (doc.contains("contexts")) {
      for (const auto& [id, rel] : doc["contexts"].items())
        m.interpret(ContextSymbol(id), relation_from(rel, m, "contexts." + id));
    }
    return m;
  } catch (const ModelError& e) {
    if (e.kind() == ModelError::Kind::UniverseCapExceeded) throw;
    throw FileFormatError(e.what());
  } catch (const SyntaxError& e) {
    throw FileFormatError(e.what());
  }
}

FiniteModel load_model(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::ios_base::failure("cannot open " + path);
  return read_model(in);
}

void write_model(std::ostream& out, const FiniteModel& m, int indent) {
  json doc;
  doc["universe"] = m.universe();
  doc["concepts"] = json::object();
  for (const auto& [c, ext] : m.concepts()) doc["concepts"][c.name()] = m.elements_of(ext);
  doc["contexts"] = json::object();
  for (const auto& [p, rel] : m.contexts()) {
    if (rel == SubsetRelation::subset(m.size())) {
      doc["contexts"][p.id()] = "subset";
    } else if (rel == SubsetRelation::superset(m.size())) {
      doc["contexts"][p.id()] = "superset";
    } else if (rel == SubsetRelation::equality(m.size())) {
      doc["contexts"][p.id()] = "equality";
    } else {
      json pairs = json::array();
      for (const auto& [a, b] : rel.pairs()) pairs.push_back(json::array({json(m.elements_of(a)), json(m.elements_of(b))}));
      doc["contexts"][p.id()] = pairs;
    }
  }
  out << doc.dump(indent) << '\n';
}

}  // namespace monolog
