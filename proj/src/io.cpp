#include "bialg/io.hpp"

#include <fstream>

namespace bialg::io {

namespace {

Rational rat_field(const json& j, const char* what) {
  if (j.is_number_integer()) return Rational((long)j.get<long long>());
  if (!j.is_string()) throw ParseError(std::string(what) + ": expected rational string");
  return Rational::parse(j.get<std::string>());
}

int int_field(const json& j, const char* key) {
  if (!j.contains(key) || !j[key].is_number_integer())
    throw ParseError(std::string("missing or non-integer field '") + key + "'");
  return j[key].get<int>();
}

}  // namespace

Coalgebra coalgebra_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("coalgebra: expected an object");
  Coalgebra c;
  c.dim = int_field(j, "dim");
  if (c.dim < 1) throw ParseError("coalgebra: dim must be >= 1");
  if (!j.contains("coproduct") || !j["coproduct"].is_array())
    throw ParseError("coalgebra: missing 'coproduct' array");
  if (!j.contains("counit") || !j["counit"].is_array() ||
      (int)j["counit"].size() != c.dim)
    throw ParseError("coalgebra: 'counit' must be an array of dim rationals");
  c.delta.resize(c.dim);
  c.counit.resize(c.dim);
  for (const auto& row : j["coproduct"]) {
    int on = int_field(row, "on");
    if (on < 0 || on >= c.dim) throw ParseError("coalgebra: 'on' index out of range");
    if (!row.contains("terms") || !row["terms"].is_array())
      throw ParseError("coalgebra: coproduct row without 'terms'");
    for (const auto& t : row["terms"]) {
      int a = int_field(t, "j");
      int b = int_field(t, "k");
      if (a < 0 || a >= c.dim || b < 0 || b >= c.dim)
        throw ParseError("coalgebra: coproduct term index out of range");
      if (!t.contains("c")) throw ParseError("coalgebra: coproduct term without 'c'");
      c.delta[on].push_back({a, b, rat_field(t["c"], "coproduct coefficient")});
    }
  }
  for (int i = 0; i < c.dim; ++i)
    c.counit[i] = rat_field(j["counit"][i], "counit entry");
  c.normalize();
  return c;
}

json coalgebra_to_json(const Coalgebra& c) {
  json j;
  j["dim"] = c.dim;
  j["coproduct"] = json::array();
  for (int i = 0; i < c.dim; ++i) {
    json row;
    row["on"] = i;
    row["terms"] = json::array();
    for (const auto& t : c.delta[i])
      row["terms"].push_back({{"j", t.left}, {"k", t.right}, {"c", t.coeff.str()}});
    j["coproduct"].push_back(std::move(row));
  }
  j["counit"] = json::array();
  for (const auto& e : c.counit) j["counit"].push_back(e.str());
  return j;
}

InstanceData instance_from_json(const json& j) {
  if (!j.is_object()) throw ParseError("instance: expected an object");
  if (!j.contains("L") || !j.contains("F") || !j.contains("x_t"))
    throw ParseError("instance: needs 'L', 'F' and 'x_t'");
  InstanceData d;
  d.l = coalgebra_from_json(j["L"]);
  d.f = coalgebra_from_json(j["F"]);
  const json& x = j["x_t"];
  int rows = int_field(x, "rows");
  int cols = int_field(x, "cols");
  if (rows < 0 || cols < 0) throw ParseError("x_t shape: negative dimension");
  if (!x.contains("entries") || !x["entries"].is_array() || (int)x["entries"].size() != rows)
    throw ParseError("x_t shape: 'entries' must hold 'rows' rows");
  d.xt = Matrix(rows, cols);
  for (int i = 0; i < rows; ++i) {
    if (!x["entries"][i].is_array() || (int)x["entries"][i].size() != cols)
      throw ParseError("x_t shape: row " + std::to_string(i) + " does not hold 'cols' entries");
    for (int jj = 0; jj < cols; ++jj)
      d.xt.at(i, jj) = rat_field(x["entries"][i][jj], "x_t entry");
  }
  return d;
}

json instance_to_json(const RealizationMap& r) {
  json j;
  j["L"] = coalgebra_to_json(r.L);
  j["F"] = coalgebra_to_json(r.F);
  json x;
  x["rows"] = (int)r.xt.rows();
  x["cols"] = (int)r.xt.cols();
  x["entries"] = json::array();
  for (std::size_t i = 0; i < r.xt.rows(); ++i) {
    json row = json::array();
    for (std::size_t jj = 0; jj < r.xt.cols(); ++jj) row.push_back(r.xt.at(i, jj).str());
    x["entries"].push_back(std::move(row));
  }
  j["x_t"] = std::move(x);
  return j;
}

ElementDoc element_from_json(const json& j, int dim, int max_degree) {
  if (!j.is_object()) throw ParseError("element: expected an object");
  if (!j.contains("space") || !j["space"].is_string())
    throw ParseError("element: missing 'space' tag");
  if (!j.contains("terms") || !j["terms"].is_array())
    throw ParseError("element: missing 'terms' array");
  ElementDoc d;
  d.space = j["space"].get<std::string>();
  if (d.space != "T(L)" && d.space != "T(F)" && d.space != "T(K)" && d.space != "T(E)")
    throw ParseError("element: unknown space '" + d.space + "'");
  int top = 0;
  std::vector<std::pair<Word, Rational>> parsed;
  for (const auto& t : j["terms"]) {
    if (!t.contains("word") || !t["word"].is_array())
      throw ParseError("element: term without 'word'");
    Word w;
    for (const auto& letter : t["word"]) {
      if (!letter.is_number_integer()) throw ParseError("element: non-integer letter");
      int li = letter.get<int>();
      if (li < 0 || li >= dim) throw ParseError("element: letter out of range for space");
      w.push_back(li);
    }
    top = std::max(top, (int)w.size());
    if (!t.contains("c")) throw ParseError("element: term without 'c'");
    parsed.emplace_back(std::move(w), rat_field(t["c"], "element coefficient"));
  }
  int cap = max_degree >= 0 ? max_degree : top;
  if (top > cap) throw ParseError("element: word exceeds the degree cap");
  d.elem = TensorElement(dim, cap);
  for (const auto& [w, c] : parsed) d.elem.add_term(w, c);
  return d;
}

json element_to_json(const TensorElement& e, const std::string& space) {
  json j;
  j["space"] = space;
  j["terms"] = json::array();
  for (const auto& [w, c] : e.terms()) {
    json t;
    t["word"] = w;
    t["c"] = c.str();
    j["terms"].push_back(std::move(t));
  }
  return j;
}

json subspace_to_json(const TensorShape& shape, const Subspace& s, const std::string& space) {
  json j = json::array();
  for (const auto& row : s.basis) j.push_back(element_to_json(from_coords(shape, row), space));
  return j;
}

json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open file: " + path);
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in " + path + ": " + e.what());
  }
  return j;
}

InstanceData load_instance(const std::string& path) {
  return instance_from_json(load_json_file(path));
}

}  // namespace bialg::io
