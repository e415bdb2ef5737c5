#pragma once

#include <string>

#include "json.hpp"

#include "qlc/matrix.hpp"
#include "qlc/mpoly.hpp"
#include "qlc/pencil.hpp"

namespace qlc::cli {

using json = nlohmann::json;

json to_json(const Scalar& s);
Scalar scalar_from_json(const json& j, const std::string& where);

json to_json(const ScalarMatrix& m);
ScalarMatrix matrix_from_json(const json& j, const std::string& where);

/// {"F": [[...]], "G": [[...]]}
json to_json(const Pencil& p);
Pencil pencil_from_json(const json& j);

/// Sorted list of [exponent-vector, scalar-string] pairs in term order.
json to_json(const MPoly& p);
MPoly mpoly_from_json(const json& j, std::size_t nvars, const std::string& where);

/// {"symbol": "[(21)(11)1]", "brackets": [[2,1],[1,1],[1]]}
json to_json(const SegreSymbol& s);

/// Reads and parses a JSON file; malformed input is reported with the path
/// and byte position.
json read_json_file(const std::string& path);

}  // namespace qlc::cli
