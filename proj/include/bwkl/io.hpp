#pragma once

// JSON and CSV forms of the library's values. Positions are doubled integers.

#include "bwkl/arcdiagrams.hpp"
#include "bwkl/blockmatrix.hpp"
#include "bwkl/klpoly.hpp"
#include "bwkl/qpoly.hpp"
#include "bwkl/weights.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace bwkl {

using Json = nlohmann::json;

/// {"terms": {"<exponent>": coeff, ...}, "text": "..."}
Json to_json(const QPoly &p);
QPoly qpoly_from_json(const Json &j);

/// Shape name of a weight, or its label string if it is not a shape weight.
std::string weight_name(const WeightDiagram &w);

Json to_json(const WeightDiagram &w);
Json to_json(const ArcDiagram &c);
Json to_json(const LProfile &l);
Json to_json(const ChamberTree &t);
Json to_json(const std::vector<ValuedAssignment> &as);
Json to_json(const PolyMatrix &m);

/// RFC-4180 field: quoted when it holds a comma, quote, CR or LF.
std::string csv_field(const std::string &s);
/// Header row of column weights, then one row per weight.
std::string to_csv(const PolyMatrix &m);

} // namespace bwkl
