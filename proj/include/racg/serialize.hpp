#pragma once

#include <string>

#include <json.hpp>

#include "racg/compare.hpp"
#include "racg/invariant.hpp"
#include "racg/jsj.hpp"
#include "racg/tangling.hpp"
#include "racg/validate.hpp"

namespace racg {

using Json = nlohmann::ordered_json;

Json to_json(const AssumptionReport& r);
Json to_json(const GraphOfCylinders& goc);
Json to_json(const StructureInvariant& inv);
Json to_json(const Verdict& v);
Json to_json(const CommensurabilityFinding& f);
Json to_json(const SlideTrace& t);
Json to_json(const Multiplicity& m);  // number or "inf"

// Accepts the to_json layout. For hand-built input, "generators", node "id",
// edge "gens" and edge "kind" are optional; a rigid node without "label" gets
// one unique to that node. PARSE_ERROR on malformed input.
GraphOfCylinders goc_from_json(const Json& j);
GraphOfCylinders parse_goc(std::string_view text);

// level,vertices,min_load,max_load,passed_on,kept_furthest
std::string level_histogram_csv(const SlideTrace& t);

}  // namespace racg
