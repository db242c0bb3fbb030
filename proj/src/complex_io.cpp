#include "bredonite/complex_io.hpp"

#include <fstream>
#include <sstream>

#include "bredonite/error.hpp"

namespace bredonite {

namespace {

template <typename T>
T field(const nlohmann::json& obj, const char* key, const char* where) {
  if (!obj.is_object() || !obj.contains(key))
    throw ParseError(std::string(where) + " is missing field '" + key + "'");
  try {
    return obj.at(key).get<T>();
  } catch (const nlohmann::json::exception&) {
    throw ParseError(std::string(where) + " field '" + key + "' has the wrong type");
  }
}

}  // namespace

GCWComplex complex_from_json(const nlohmann::json& j) {
  if (!j.is_object()) throw ParseError("complex file must contain a JSON object");
  for (const auto& [key, _] : j.items())
    if (key != "group" && key != "cells" && key != "boundary")
      throw ParseError("complex file has unknown field '" + key + "'");
  for (const char* key : {"group", "cells", "boundary"})
    if (!j.contains(key)) throw ParseError(std::string("complex file is missing field '") + key + "'");
  FiniteGroup g = construct_group(field<std::string>(j, "group", "complex"));

  std::vector<Cell> cells;
  const auto& jc = j.at("cells");
  if (!jc.is_array()) throw ParseError("'cells' must be an array");
  for (const auto& c : jc) {
    Cell cell;
    cell.id = field<std::string>(c, "id", "cell");
    cell.dim = field<int>(c, "dim", "cell");
    cell.stabilizer.elems = field<std::vector<Element>>(c, "stabilizer", "cell");
    std::sort(cell.stabilizer.elems.begin(), cell.stabilizer.elems.end());
    cells.push_back(std::move(cell));
  }

  std::vector<BoundaryRecord> records;
  const auto& jb = j.at("boundary");
  if (!jb.is_array()) throw ParseError("'boundary' must be an array");
  for (const auto& r : jb) {
    BoundaryRecord rec;
    rec.from = field<std::string>(r, "from", "boundary record");
    rec.to = field<std::string>(r, "to", "boundary record");
    rec.a = field<Element>(r, "a", "boundary record");
    rec.deg = field<long long>(r, "deg", "boundary record");
    records.push_back(std::move(rec));
  }
  return normalize(GCWComplex(std::move(g), std::move(cells), std::move(records)));
}

GCWComplex parse_complex(std::string_view text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw ParseError(std::string("malformed JSON: ") + e.what());
  }
  return complex_from_json(j);
}

GCWComplex load_complex(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot read complex file '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return parse_complex(ss.str());
}

nlohmann::ordered_json complex_to_json(const GCWComplex& raw) {
  if (raw.group().spec().empty()) throw ValidationError("complex group has no group-spec and cannot be serialized");
  const GCWComplex x = normalize(raw);
  nlohmann::ordered_json j;
  j["group"] = x.group().spec();
  j["cells"] = nlohmann::ordered_json::array();
  for (const auto& c : x.cells()) {
    nlohmann::ordered_json jc;
    jc["id"] = c.id;
    jc["dim"] = c.dim;
    jc["stabilizer"] = c.stabilizer.elems;
    j["cells"].push_back(std::move(jc));
  }
  j["boundary"] = nlohmann::ordered_json::array();
  for (const auto& r : x.boundary()) {
    nlohmann::ordered_json jr;
    jr["from"] = r.from;
    jr["to"] = r.to;
    jr["a"] = r.a;
    jr["deg"] = r.deg;
    j["boundary"].push_back(std::move(jr));
  }
  return j;
}

std::string dump_complex(const GCWComplex& x) { return complex_to_json(x).dump(2) + "\n"; }

}  // namespace bredonite
