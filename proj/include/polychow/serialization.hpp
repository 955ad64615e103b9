#ifndef POLYCHOW_SERIALIZATION_HPP
#define POLYCHOW_SERIALIZATION_HPP

// JSON forms of the library types. Rationals travel as strings "p" or "p/q".

#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "polychow/grassmann.hpp"
#include "polychow/polymatroid.hpp"
#include "polychow/polytope.hpp"
#include "polychow/relations.hpp"
#include "polychow/secondary.hpp"

namespace polychow {

using json = nlohmann::json;

inline json to_json(const Rat& r) { return to_string(r); }

inline Rat rat_from_json(const json& j) {
  if (j.is_string()) return parse_rat(j.get<std::string>());
  if (j.is_number_integer()) return Rat(std::to_string(j.get<long long>()));
  throw std::invalid_argument("expected a rational as string or integer, got " + j.dump());
}

inline json to_json(const Vec& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(to_string(x));
  return a;
}

inline Vec vec_from_json(const json& j) {
  if (!j.is_array()) throw std::invalid_argument("expected an array of rationals");
  Vec v;
  for (const auto& x : j) v.push_back(rat_from_json(x));
  return v;
}

// ---- matrices ------------------------------------------------------------

inline json to_json(const Matrix& M) {
  json rows = json::array();
  for (size_t i = 0; i < M.rows(); ++i) rows.push_back(to_json(M.row(i)));
  return rows;
}

inline Matrix matrix_from_json(const json& j) {
  if (!j.is_array() || j.empty()) throw std::invalid_argument("matrix: expected a nonempty array of rows");
  std::vector<Vec> rows;
  for (const auto& r : j) rows.push_back(vec_from_json(r));
  for (const auto& r : rows)
    if (r.size() != rows[0].size()) throw std::invalid_argument("matrix: ragged rows");
  return Matrix::from_rows(rows);
}

/// Whitespace grid, one row per line; blank lines and '#' comments skipped.
inline Matrix matrix_from_grid(const std::string& text) {
  std::istringstream in(text);
  std::vector<Vec> rows;
  std::string line;
  while (std::getline(in, line)) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    std::istringstream ls(line);
    Vec row;
    std::string tok;
    while (ls >> tok) row.push_back(parse_rat(tok));
    if (row.empty()) continue;
    if (!rows.empty() && row.size() != rows[0].size())
      throw std::invalid_argument("matrix: ragged rows");
    rows.push_back(std::move(row));
  }
  if (rows.empty()) throw std::invalid_argument("matrix: no rows");
  return Matrix::from_rows(rows);
}

/// JSON if the text starts with '[' or '{' ({"rows": ...} accepted), grid otherwise.
inline Matrix parse_matrix(const std::string& text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && (text[first] == '[' || text[first] == '{')) {
    json j = json::parse(text);
    if (j.is_object()) j = j.at("rows");
    return matrix_from_json(j);
  }
  return matrix_from_grid(text);
}

// ---- polytopes -----------------------------------------------------------

inline json to_json(const Polytope& P) {
  json j;
  j["ambient_dim"] = P.ambient_dim();
  j["affine_dim"] = P.affine_dim();
  json verts = json::array();
  for (const auto& v : P.vertices()) verts.push_back(to_json(v));
  j["vertices"] = verts;
  json facets = json::array();
  for (const auto& f : P.facets()) facets.push_back({{"normal", to_json(f.normal)}, {"offset", to_json(f.offset)}});
  j["facets"] = facets;
  json eqs = json::array();
  for (const auto& e : P.equations()) eqs.push_back({{"normal", to_json(e.normal)}, {"offset", to_json(e.offset)}});
  j["equations"] = eqs;
  json es = json::array();
  if (!P.is_empty())
    for (const auto& e : edges(P)) es.push_back({e.a, e.b});
  j["edges"] = es;
  json pts = json::array();
  for (const auto& p : P.points()) pts.push_back(to_json(p));
  j["points"] = pts;
  return j;
}

/// Rebuilds from "points" (falling back to "vertices"); derived fields are recomputed.
inline Polytope polytope_from_json(const json& j) {
  const json& src = j.contains("points") && !j.at("points").empty() ? j.at("points") : j.at("vertices");
  std::vector<Vec> pts;
  for (const auto& p : src) pts.push_back(vec_from_json(p));
  if (pts.empty()) return Polytope::empty(j.at("ambient_dim").get<size_t>());
  return hull(std::move(pts));
}

// ---- matroids and polymatroids (0-based indices) -------------------------

inline json to_json(const Matroid& M) {
  json bases = json::array();
  for (const auto& B : M.bases()) bases.push_back(B.indices());
  return {{"n", M.n()}, {"d", M.rank()}, {"bases", bases}};
}

inline Matroid matroid_from_json(const json& j) {
  std::set<IndexSubset> bases;
  for (const auto& b : j.at("bases")) bases.insert(IndexSubset::from_unsorted(b.get<std::vector<size_t>>()));
  const size_t n = j.at("n").get<size_t>();
  const size_t d = j.contains("d") ? j.at("d").get<size_t>() : (bases.empty() ? 0 : bases.begin()->size());
  return Matroid(n, d, std::move(bases));
}

inline json to_json(const Polymatroid& B) {
  json bases = json::array();
  for (const auto& v : B.bases()) bases.push_back(v);
  return {{"m", B.m()}, {"d", B.rank()}, {"caps", B.caps()}, {"bases", bases}};
}

/// Accepts a full polymatroid object, or a bare list of basis vectors (caps derived).
inline std::set<CountVector> bases_from_json(const json& j) {
  const json& arr = j.is_object() ? j.at("bases") : j;
  std::set<CountVector> out;
  for (const auto& v : arr) out.insert(v.get<CountVector>());
  return out;
}

inline Polymatroid polymatroid_from_json(const json& j) {
  auto bases = bases_from_json(j);
  if (j.is_object() && j.contains("caps")) {
    Polymatroid B(j.at("caps").get<CountVector>(), std::move(bases));
    if (j.contains("d") && j.at("d").get<int>() != B.rank())
      throw std::invalid_argument("polymatroid: d does not match the basis moduli");
    return B;
  }
  return Polymatroid::with_derived_caps(bases);
}

// ---- Plücker vectors -----------------------------------------------------

inline json to_json(const PluckerVector& p) {
  json coords = json::array();
  const auto subs = p.subsets();
  for (size_t k = 0; k < subs.size(); ++k)
    coords.push_back({{"subset", subs[k].indices()}, {"value", to_json(p.coords()[k])}});
  return {{"d", p.d()}, {"n", p.n()}, {"coords", coords}};
}

inline PluckerVector plucker_from_json(const json& j) {
  const size_t d = j.at("d").get<size_t>(), n = j.at("n").get<size_t>();
  const auto subs = k_subsets(n, d);
  std::vector<Rat> coords(subs.size());
  for (const auto& c : j.at("coords")) {
    const auto I = IndexSubset::from_unsorted(c.at("subset").get<std::vector<size_t>>());
    auto it = std::lower_bound(subs.begin(), subs.end(), I);
    if (it == subs.end() || *it != I) throw std::invalid_argument("plucker: subset is not a d-subset of [n]");
    coords[static_cast<size_t>(it - subs.begin())] = rat_from_json(c.at("value"));
  }
  return PluckerVector(d, n, std::move(coords));
}

// ---- polynomials ---------------------------------------------------------

inline json to_json(const MultiPoly& p) {
  json terms = json::array();
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it)
    terms.push_back({{"exps", it->first}, {"coeff", to_json(it->second)}});
  return {{"vars", p.vars()}, {"terms", terms}};
}

inline MultiPoly poly_from_json(const json& j) {
  MultiPoly p(j.at("vars").get<std::vector<std::string>>());
  for (const auto& t : j.at("terms")) p.add_term(t.at("exps").get<Exponents>(), rat_from_json(t.at("coeff")));
  return p;
}

// ---- triangulations ------------------------------------------------------

inline json to_json(const Triangulation& T) {
  json cells = json::array();
  for (const auto& c : T.cells) cells.push_back(c.labels);
  return cells;
}

inline Triangulation triangulation_from_json(const json& j) {
  Triangulation T;
  for (const auto& c : j) {
    auto labels = c.get<std::vector<size_t>>();
    std::sort(labels.begin(), labels.end());
    T.cells.push_back(LabeledSimplex{labels});
  }
  std::sort(T.cells.begin(), T.cells.end());
  return T;
}

/// [{label, name, value}] in the order given (lexicographic labels by default).
inline json char_vector_to_json(const CharVector& phi, const LabeledConfig& A,
                                const std::vector<size_t>& order = {}) {
  std::vector<size_t> ord = order;
  if (ord.empty())
    for (size_t i = 0; i < phi.size(); ++i) ord.push_back(i);
  json out = json::array();
  for (size_t l : ord) out.push_back({{"label", l}, {"name", A[l].name}, {"value", phi.at(l).get_str()}});
  return out;
}

}  // namespace polychow

#endif  // POLYCHOW_SERIALIZATION_HPP
