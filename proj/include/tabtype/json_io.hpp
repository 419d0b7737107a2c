#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "tabtype/diagram.hpp"
#include "tabtype/partition.hpp"
#include "tabtype/permutation.hpp"
#include "tabtype/schur.hpp"
#include "tabtype/tableau.hpp"
#include "tabtype/type_filling.hpp"

namespace tabtype {

using Json = nlohmann::ordered_json;

// Wire formats (all row-major):
//   Diagram      {"boxes": [[row,col], ...]}
//   TypeFilling  {"boxes": [[row,col,theta], ...]}
//   Tableau      {"boxes": [[row,col,entry], ...]}
//   Partition    [p1, p2, ...]
//   Permutation  [s(1), ..., s(n)]
//   Polynomial   {"m": m, "terms": [{"exps": [...], "coef": c}, ...]} lex by exps
Json to_json(const Diagram& d);
Json to_json(const TypeFilling& t);
Json to_json(const Tableau& t);
Json to_json(const Partition& p);
Json to_json(const Permutation& p);
Json to_json(const Polynomial& p);

// Readers are tolerant: a wrapped object ({"shape": ...}, {"type": ...},
// {"s_lambda": ...}, {"boxes": ...}) is unwrapped as needed.  All failures
// throw "malformed-input".
Diagram diagram_from_json(const Json& j);
TypeFilling type_filling_from_json(const Json& j);
Tableau tableau_from_json(const Json& j);
Partition partition_from_json(const Json& j);
Permutation permutation_from_json(const Json& j);

// ASCII grids, one cell per box, '.' for absent positions.
std::string render_diagram(const Diagram& d);
std::string render_type(const TypeFilling& t);
std::string render_tableau(const Tableau& t);

}  // namespace tabtype
