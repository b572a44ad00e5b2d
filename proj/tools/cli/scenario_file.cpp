#include "cli/scenario_file.hpp"

#include <fstream>

#include "cli/matrix_file.hpp"
#include "schurbound/error.hpp"

namespace schurbound::cli {

using nlohmann::json;

namespace {

[[noreturn]] void fail(const std::string& source, const std::string& what) {
  throw ParseError(source, 0, 0, what);
}

const json& field(const json& doc, const char* key, const std::string& source) {
  if (!doc.is_object()) fail(source, "scenario must be a JSON object");
  auto it = doc.find(key);
  if (it == doc.end()) fail(source, std::string("missing field '") + key + "'");
  return *it;
}

int integer_field(const json& doc, const char* key, const std::string& source) {
  const json& v = field(doc, key, source);
  if (!v.is_number_integer()) fail(source, std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

double real_value(const json& v, const std::string& source, const std::string& where) {
  if (!v.is_number()) fail(source, where + " must be a number");
  return v.get<double>();
}

Complex complex_value(const json& v, const std::string& source, const std::string& where) {
  if (v.is_number()) return v.get<double>();
  if (v.is_array() && v.size() == 2 && v[0].is_number() && v[1].is_number())
    return {v[0].get<double>(), v[1].get<double>()};
  fail(source, where + " must be a number or a [re, im] pair");
}

std::vector<double> real_vector(const json& v, const std::string& source, const std::string& name) {
  if (!v.is_array()) fail(source, "field '" + name + "' must be an array");
  std::vector<double> out;
  for (std::size_t i = 0; i < v.size(); ++i)
    out.push_back(real_value(v[i], source, name + "[" + std::to_string(i) + "]"));
  return out;
}

json complex_to_json(Complex c) {
  if (c.imag() == 0.0) return c.real();
  return json::array({c.real(), c.imag()});
}

}  // namespace

Matrix matrix_from_json(const json& rows, const std::string& source, const std::string& name) {
  if (!rows.is_array() || rows.empty()) fail(source, "field '" + name + "' must be a non-empty array of rows");
  const std::size_t ncols = rows[0].is_array() ? rows[0].size() : 0;
  Matrix m(rows.size(), ncols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (!rows[i].is_array() || rows[i].size() != ncols)
      fail(source, "field '" + name + "': row " + std::to_string(i) + " must have " +
                       std::to_string(ncols) + " entries");
    for (std::size_t j = 0; j < ncols; ++j)
      m(i, j) = complex_value(rows[i][j], source,
                              name + "[" + std::to_string(i) + "][" + std::to_string(j) + "]");
  }
  return m;
}

json matrix_to_json(const Matrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) row.push_back(complex_to_json(m(i, j)));
    rows.push_back(std::move(row));
  }
  return rows;
}

ScenarioKind scenario_kind(const json& doc, const std::string& source) {
  if (!doc.is_object()) fail(source, "scenario must be a JSON object");
  if (auto it = doc.find("type"); it != doc.end()) {
    if (*it == "doa") return ScenarioKind::Doa;
    if (*it == "cp") return ScenarioKind::Cp;
    fail(source, "field 'type' must be \"doa\" or \"cp\"");
  }
  if (doc.contains("sigma_s")) return ScenarioKind::Doa;
  if (doc.contains("g")) return ScenarioKind::Cp;
  fail(source, "cannot tell the scenario kind; add \"type\": \"doa\" or \"cp\"");
}

DoaScenario doa_scenario_from_json(const json& doc, const std::string& source) {
  DoaScenario s;
  s.sensors = integer_field(doc, "N", source);
  s.sources = integer_field(doc, "K", source);
  s.subarrays = integer_field(doc, "P", source);
  s.omega = real_vector(field(doc, "omega", source), source, "omega");
  try {
    s.sigma_s = HermitianMatrix(matrix_from_json(field(doc, "sigma_s", source), source, "sigma_s"));
  } catch (const Error& e) {
    fail(source, std::string("sigma_s: ") + e.what());
  }
  return s;
}

CpScenario cp_scenario_from_json(const json& doc, const std::string& source) {
  CpScenario s;
  s.latent_dim = integer_field(doc, "d", source);
  s.a_load = matrix_from_json(field(doc, "A", source), source, "A");
  s.b_load = matrix_from_json(field(doc, "B", source), source, "B");
  const json& g = field(doc, "g", source);
  if (!g.is_array()) fail(source, "field 'g' must be an array of vectors");
  for (std::size_t k = 0; k < g.size(); ++k)
    s.g.push_back(real_vector(g[k], source, "g[" + std::to_string(k) + "]"));
  return s;
}

json to_json(const DoaScenario& s) {
  json doc = json::object();
  doc["type"] = "doa";
  doc["N"] = s.sensors;
  doc["K"] = s.sources;
  doc["P"] = s.subarrays;
  doc["omega"] = s.omega;
  doc["sigma_s"] = matrix_to_json(s.sigma_s.matrix());
  return doc;
}

json to_json(const CpScenario& s) {
  json doc = json::object();
  doc["type"] = "cp";
  doc["d"] = s.latent_dim;
  doc["A"] = matrix_to_json(s.a_load);
  doc["B"] = matrix_to_json(s.b_load);
  doc["g"] = s.g;
  return doc;
}

json load_json(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path.string(), 0, 0, "cannot open file");
  try {
    return json::parse(in);
  } catch (const json::parse_error& e) {
    throw ParseError(path.string(), 0, 0, e.what());
  }
}

}  // namespace schurbound::cli
