#include "filiform/json_io.hpp"

#include <nlohmann/json.hpp>

#include <stdexcept>

namespace filiform {

namespace {

using nlohmann::json;

json value_array(const Vec& v) {
  json out = json::array();
  for (const auto& [idx, c] : v.nonzero()) out.push_back(json::array({idx, c.str()}));
  return out;
}

Vec vec_from_value_array(const json& arr, int dim) {
  Vec v(dim);
  for (const auto& pair : arr) {
    if (!pair.is_array() || pair.size() != 2)
      throw std::invalid_argument("table JSON: each value entry must be [index, \"p/q\"]");
    const int idx = pair.at(0).get<int>();
    if (idx < 1 || idx > dim) throw std::invalid_argument("table JSON: value index out of range");
    v.set_coord(idx, Rational::parse(pair.at(1).get<std::string>()));
  }
  return v;
}

json table_to_json_obj(const StructureTable& table) {
  json brackets = json::array();
  for (const auto& [pair, value] : table.entries()) {
    json entry;
    entry["i"] = pair.first;
    entry["j"] = pair.second;
    entry["value"] = value_array(value);
    brackets.push_back(std::move(entry));
  }
  json out;
  out["dim"] = table.dim();
  out["basis"] = table.basis();
  out["brackets"] = std::move(brackets);
  out["name"] = table.name();
  return out;
}

json matrix_to_json_obj(const Matrix& m) {
  json entries = json::array();
  for (int r = 1; r <= m.size(); ++r)
    for (int c = 1; c <= m.size(); ++c)
      if (!m.at(r, c).is_zero()) {
        json cell;
        cell["row"] = r;
        cell["col"] = c;
        cell["value"] = m.at(r, c).str();
        entries.push_back(std::move(cell));
      }
  json out;
  out["size"] = m.size();
  out["entries"] = std::move(entries);
  return out;
}

json fingerprint_to_json_obj(const Fingerprint& fp) {
  json out;
  out["lowerCentral"] = fp.lower_central;
  out["derived"] = fp.derived;
  out["center"] = fp.center;
  out["leftAnnihilator"] = fp.left_annihilator;
  out["rightAnnihilator"] = fp.right_annihilator;
  out["squaresIdeal"] = fp.squares_ideal;
  return out;
}

}  // namespace

std::string to_json(const StructureTable& table) { return table_to_json_obj(table).dump(); }

StructureTable table_from_json(std::string_view text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("table JSON: parse error: ") + e.what());
  }
  try {
    const int dim = doc.at("dim").get<int>();
    if (dim < 1) throw std::invalid_argument("table JSON: dim must be positive");
    auto basis = doc.at("basis").get<std::vector<std::string>>();
    std::string name = doc.contains("name") ? doc.at("name").get<std::string>() : "";
    StructureTable table(dim, std::move(basis), std::move(name));
    for (const auto& entry : doc.at("brackets")) {
      const int i = entry.at("i").get<int>();
      const int j = entry.at("j").get<int>();
      if (i < 1 || i > dim || j < 1 || j > dim)
        throw std::invalid_argument("table JSON: bracket index out of range");
      table.set_bracket(i, j, vec_from_value_array(entry.at("value"), dim));
    }
    return table;
  } catch (const json::exception& e) {
    throw std::invalid_argument(std::string("table JSON: malformed document: ") + e.what());
  }
}

std::string to_json(const Matrix& matrix) { return matrix_to_json_obj(matrix).dump(); }

std::string to_json(const MatrixRep& rep) {
  json images = json::array();
  for (const auto& m : rep.images) images.push_back(matrix_to_json_obj(m));
  json out;
  out["family"] = family_name(rep.algebra.tag);
  out["dim"] = rep.dim;
  out["images"] = std::move(images);
  return out.dump();
}

std::string to_json(const IdentityReport& report) {
  json violations = json::array();
  for (const auto& v : report.violations) {
    json entry;
    entry["i"] = v.i;
    entry["j"] = v.j;
    entry["k"] = v.k;
    entry["residual"] = value_array(v.residual);
    violations.push_back(std::move(entry));
  }
  json out;
  out["law"] = law_name(report.law);
  out["checked"] = report.checked;
  out["violations"] = std::move(violations);
  return out.dump();
}

std::string to_json(const Fingerprint& fp) { return fingerprint_to_json_obj(fp).dump(); }

std::string to_json_line(const RowCheckResult& result) {
  json params = json::array();
  for (const auto& v : result.params.values) params.push_back(v.str());
  json out;
  out["row"] = result.row;
  out["sample"] = result.sample;
  out["params"] = std::move(params);
  out["leibniz_violations"] = result.leibniz_violations;
  out["ideal_ok"] = result.ideal_ok;
  out["quotient_ok"] = result.quotient_ok;
  out["action_ok"] = result.action_ok;
  out["fingerprint"] = fingerprint_to_json_obj(result.fingerprint);
  return out.dump();
}

}  // namespace filiform
