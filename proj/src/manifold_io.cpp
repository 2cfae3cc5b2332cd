#include "norden/manifold_io.hpp"

#include "norden/parser.hpp"

#include "json.hpp"

#include <fstream>
#include <set>
#include <sstream>

namespace norden {

namespace {

using Json = nlohmann::ordered_json;

[[noreturn]] void bad_document(const std::string& message) {
  throw std::runtime_error("manifold document: " + message);
}

Polynomial parse_entry(const std::string& text, const std::string& where) {
  try {
    return parse_scalar(text);
  } catch (const ParseError& e) {
    bad_document(where + ": " + e.what());
  }
}

std::vector<std::vector<std::string>> read_matrix(const Json& j, const std::string& key, int dim) {
  if (!j.contains(key) || !j[key].is_array()) bad_document("missing matrix field '" + key + "'");
  const auto& rows = j[key];
  if (static_cast<int>(rows.size()) != dim)
    bad_document("matrix '" + key + "' must have " + std::to_string(dim) + " rows");
  std::vector<std::vector<std::string>> out;
  for (int r = 0; r < dim; ++r) {
    if (!rows[r].is_array() || static_cast<int>(rows[r].size()) != dim)
      bad_document("matrix '" + key + "' row " + std::to_string(r + 1) + " must have " +
                   std::to_string(dim) + " entries");
    std::vector<std::string> row;
    for (int c = 0; c < dim; ++c) {
      if (!rows[r][c].is_string())
        bad_document("matrix '" + key + "' entry (" + std::to_string(r + 1) + "," +
                     std::to_string(c + 1) + ") must be scalar text");
      row.push_back(rows[r][c].get<std::string>());
    }
    out.push_back(std::move(row));
  }
  return out;
}

Tensor matrix_to_tensor(const std::vector<std::vector<std::string>>& rows,
                        const std::string& key) {
  const int dim = static_cast<int>(rows.size());
  Tensor t(2, dim);
  for (int r = 1; r <= dim; ++r)
    for (int c = 1; c <= dim; ++c)
      t(r, c) = parse_entry(rows[r - 1][c - 1], "matrix '" + key + "' entry (" +
                                                    std::to_string(r) + "," + std::to_string(c) +
                                                    ")");
  return t;
}

}  // namespace

ManifoldDocument parse_manifold_document(const std::string& json_text) {
  Json j;
  try {
    j = Json::parse(json_text);
  } catch (const Json::parse_error& e) {
    bad_document(std::string("not valid JSON: ") + e.what());
  }
  if (!j.is_object()) bad_document("top level must be an object");

  ManifoldDocument doc;
  if (!j.contains("schema") || !j["schema"].is_number_integer())
    bad_document("missing integer field 'schema'");
  doc.schema = j["schema"].get<int>();
  if (doc.schema != 1) bad_document("unsupported schema version " + std::to_string(doc.schema));

  if (!j.contains("dim") || !j["dim"].is_number_integer())
    bad_document("missing integer field 'dim'");
  doc.dim = j["dim"].get<int>();
  if (doc.dim < 1 || doc.dim > 8) bad_document("dim must be between 1 and 8");

  if (!j.contains("basis") || !j["basis"].is_array())
    bad_document("missing array field 'basis'");
  for (const auto& name : j["basis"]) {
    if (!name.is_string()) bad_document("basis names must be strings");
    doc.basis.push_back(name.get<std::string>());
  }
  if (static_cast<int>(doc.basis.size()) != doc.dim)
    bad_document("basis must list exactly dim names");

  if (!j.contains("structure_constants") || !j["structure_constants"].is_array())
    bad_document("missing array field 'structure_constants'");
  std::set<std::tuple<int, int, int>> seen;
  for (const auto& entry : j["structure_constants"]) {
    if (!entry.is_object() || !entry.contains("i") || !entry.contains("j") ||
        !entry.contains("k") || !entry.contains("value"))
      bad_document("each structure constant needs fields i, j, k, value");
    ManifoldDocument::BracketEntry e;
    e.i = entry["i"].get<int>();
    e.j = entry["j"].get<int>();
    e.k = entry["k"].get<int>();
    if (!entry["value"].is_string()) bad_document("structure constant values must be scalar text");
    e.value = entry["value"].get<std::string>();
    const std::string where = "structure constant (" + std::to_string(e.i) + "," +
                              std::to_string(e.j) + "," + std::to_string(e.k) + ")";
    if (e.i < 1 || e.i > doc.dim || e.j < 1 || e.j > doc.dim || e.k < 1 || e.k > doc.dim)
      bad_document(where + ": index out of range");
    if (e.i >= e.j) bad_document(where + ": entries need i < j");
    if (!seen.insert({e.i, e.j, e.k}).second) bad_document(where + ": duplicate entry");
    doc.structure_constants.push_back(std::move(e));
  }

  doc.metric = read_matrix(j, "metric", doc.dim);
  doc.J = read_matrix(j, "J", doc.dim);
  return doc;
}

std::string render_manifold_document(const ManifoldDocument& doc) {
  Json j;
  j["schema"] = doc.schema;
  j["dim"] = doc.dim;
  j["basis"] = doc.basis;
  Json entries = Json::array();
  for (const auto& e : doc.structure_constants) {
    const std::string where = "structure constant (" + std::to_string(e.i) + "," +
                              std::to_string(e.j) + "," + std::to_string(e.k) + ")";
    Json one;
    one["i"] = e.i;
    one["j"] = e.j;
    one["k"] = e.k;
    one["value"] = parse_entry(e.value, where).str();
    entries.push_back(std::move(one));
  }
  j["structure_constants"] = std::move(entries);
  auto canonical_matrix = [&](const std::vector<std::vector<std::string>>& rows,
                              const std::string& key) {
    Json out = Json::array();
    for (std::size_t r = 0; r < rows.size(); ++r) {
      Json row = Json::array();
      for (std::size_t c = 0; c < rows[r].size(); ++c)
        row.push_back(parse_entry(rows[r][c], "matrix '" + key + "' entry (" +
                                                  std::to_string(r + 1) + "," +
                                                  std::to_string(c + 1) + ")")
                          .str());
      out.push_back(std::move(row));
    }
    return out;
  };
  j["metric"] = canonical_matrix(doc.metric, "metric");
  j["J"] = canonical_matrix(doc.J, "J");
  return j.dump(2) + "\n";
}

LoadedManifold manifold_from_document(const ManifoldDocument& doc) {
  Tensor constants(3, doc.dim);
  for (const auto& e : doc.structure_constants) {
    const std::string where = "structure constant (" + std::to_string(e.i) + "," +
                              std::to_string(e.j) + "," + std::to_string(e.k) + ")";
    const Polynomial value = parse_entry(e.value, where);
    constants(e.i, e.j, e.k) = value;
    constants(e.j, e.i, e.k) = -value;
  }
  LieStructure algebra(doc.dim, std::move(constants));

  Metric metric{matrix_to_tensor(doc.metric, "metric")};
  Tensor j = matrix_to_tensor(doc.J, "J");

  NordenManifold manifold(std::move(algebra), std::move(metric), std::move(j));
  NordenCheckReport check = check_norden(manifold);
  return LoadedManifold{std::move(manifold), doc.basis, std::move(check)};
}

LoadedManifold load_manifold(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open '" + path.string() + "'");
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return manifold_from_document(parse_manifold_document(buffer.str()));
}

ManifoldDocument document_from_manifold(const NordenManifold& m,
                                        std::vector<std::string> basis) {
  ManifoldDocument doc;
  doc.dim = m.dim();
  if (basis.empty())
    for (int i = 1; i <= m.dim(); ++i) basis.push_back("X" + std::to_string(i));
  if (static_cast<int>(basis.size()) != m.dim())
    throw std::invalid_argument("basis name count mismatch");
  doc.basis = std::move(basis);

  for (int i = 1; i <= m.dim(); ++i)
    for (int j = i + 1; j <= m.dim(); ++j)
      for (int k = 1; k <= m.dim(); ++k) {
        const Polynomial& c = m.algebra().C(i, j, k);
        if (!c.is_zero()) doc.structure_constants.push_back({i, j, k, c.str()});
      }

  for (int r = 1; r <= m.dim(); ++r) {
    std::vector<std::string> g_row, j_row;
    for (int c = 1; c <= m.dim(); ++c) {
      g_row.push_back(m.metric().g(r, c).str());
      j_row.push_back(m.J()(r, c).str());
    }
    doc.metric.push_back(std::move(g_row));
    doc.J.push_back(std::move(j_row));
  }
  return doc;
}

}  // namespace norden
