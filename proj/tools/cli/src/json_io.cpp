#include "qlc/cli/json_io.hpp"

#include <fstream>
#include <sstream>

#include "qlc/error.hpp"

namespace qlc::cli {

json to_json(const Scalar& s) { return s.str(); }

Scalar scalar_from_json(const json& j, const std::string& where) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(j.get<long>());
  throw_invalid("json.scalar", where + ": scalars are strings such as \"1/2+3*i\" or integers");
}

json to_json(const ScalarMatrix& m) {
  json rows = json::array();
  for (std::size_t i = 0; i < m.rows(); ++i) {
    json r = json::array();
    for (std::size_t j = 0; j < m.cols(); ++j) r.push_back(to_json(m(i, j)));
    rows.push_back(std::move(r));
  }
  return rows;
}

ScalarMatrix matrix_from_json(const json& j, const std::string& where) {
  if (!j.is_array() || j.empty()) throw_invalid("json.matrix", where + ": expected a nonempty array of rows");
  std::vector<std::vector<Scalar>> rows;
  for (std::size_t i = 0; i < j.size(); ++i) {
    if (!j[i].is_array()) throw_invalid("json.matrix", where + ": row " + std::to_string(i) + " is not an array");
    std::vector<Scalar> r;
    for (std::size_t k = 0; k < j[i].size(); ++k)
      r.push_back(scalar_from_json(j[i][k], where + "[" + std::to_string(i) + "][" + std::to_string(k) + "]"));
    rows.push_back(std::move(r));
  }
  return ScalarMatrix::from_rows(rows);
}

json to_json(const Pencil& p) { return {{"F", to_json(p.F())}, {"G", to_json(p.G())}}; }

Pencil pencil_from_json(const json& j) {
  if (!j.is_object() || !j.contains("F") || !j.contains("G")) {
    throw_invalid("json.pencil", "pencil: expected an object with keys \"F\" and \"G\"");
  }
  return Pencil(matrix_from_json(j["F"], "F"), matrix_from_json(j["G"], "G"));
}

json to_json(const MPoly& p) {
  json terms = json::array();
  for (const auto& t : p.terms()) terms.push_back(json::array({t.mono.exps(p.nvars()), t.coeff.str()}));
  return terms;
}

MPoly mpoly_from_json(const json& j, std::size_t nvars, const std::string& where) {
  if (!j.is_array()) throw_invalid("json.mpoly", where + ": expected a list of [exponents, coefficient] pairs");
  std::vector<MPoly::Term> terms;
  for (std::size_t k = 0; k < j.size(); ++k) {
    const json& t = j[k];
    const std::string at = where + "[" + std::to_string(k) + "]";
    if (!t.is_array() || t.size() != 2 || !t[0].is_array()) throw_invalid("json.mpoly", at + ": expected [exponents, coefficient]");
    std::vector<int> e;
    for (const auto& x : t[0]) {
      if (!x.is_number_integer()) throw_invalid("json.mpoly", at + ": exponents must be integers");
      e.push_back(x.get<int>());
    }
    if (e.size() != nvars) throw_invalid("json.mpoly", at + ": expected " + std::to_string(nvars) + " exponents");
    terms.push_back({Monomial(e), scalar_from_json(t[1], at)});
  }
  return MPoly::from_terms(nvars, std::move(terms));
}

json to_json(const SegreSymbol& s) {
  json br = json::array();
  for (const auto& b : s.brackets()) br.push_back(b);
  return {{"symbol", s.str()}, {"brackets", br}};
}

json read_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw_invalid("io.open", "cannot open " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return json::parse(ss.str());
  } catch (const json::parse_error& e) {
    throw_invalid("json.parse", path + ": parse error at byte " + std::to_string(e.byte) + ": " + e.what());
  }
}

}  // namespace qlc::cli
