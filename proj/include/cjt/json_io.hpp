#pragma once

#include <json.hpp>

#include "cjt/carlson.hpp"
#include "cjt/constant.hpp"
#include "cjt/jordan.hpp"
#include "cjt/module.hpp"
#include "cjt/pipoint.hpp"
#include "cjt/polymat.hpp"
#include "cjt/syzygy.hpp"

namespace cjt {

using Json = nlohmann::json;

// Modules larger than this are refused by from_json unless `allow_large`.
constexpr std::size_t kModuleDimSoftCap = 4000;

Json element_to_json(const Field& f, Elem a);
// Prime-field entries may be any integer (reduced mod p); extension-field entries are
// coefficient arrays, low degree first.
Elem element_from_json(const Field& f, const Json& j);

Json to_json(const Matrix& m);  // {"rows","cols","entries":[row-major]}
Matrix matrix_from_json(const FieldPtr& f, const Json& j);

Json to_json(const ModuleRep& m);
// Validates; throws std::invalid_argument with a readable message on bad input.
ModuleRep module_from_json(const Json& j, bool allow_large = false);

Json to_json(const JordanType& t);  // {"p","counts","pretty"}
JordanType jordan_from_json(const Json& j);

Json to_json(const HomPoly& h);  // [{"exps":[..],"coef":c}, ...]
Json to_json(const PolyMatrix& m);
// Accepts "entries" as a grid of rows or as a flat row-major list.
PolyMatrix polymatrix_from_json(const Json& j);

Json to_json(const PiPoint& q);
Json to_json(const CjtReport& r);
Json to_json(const GammaLocus& g);
Json to_json(const CocycleClass& c);
Json to_json(const HypothesisReport& h);
Json to_json(const EndotrivialReport& e);

}  // namespace cjt
