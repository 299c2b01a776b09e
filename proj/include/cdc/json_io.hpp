#pragma once

#include <json.hpp>

#include "cdc/decomposer.hpp"
#include "cdc/verify.hpp"

namespace cdc {

using Json = nlohmann::json;

Json cycle_to_json(const Cycle& c);
Json cover_to_json(const Graph& g, const CycleDoubleCover& cover);
// Accepts {"cycles": [[...], ...]} or a bare array of cycles. Throws ParseError.
CycleDoubleCover cover_from_json(const Json& j);

Json to_json(const GoodnessReport& r);
Json to_json(const CdcVerdict& v);
Json to_json(const DecompositionVerdict& v);
Json to_json(const CaseFailure& f);
Json to_json(const DecompositionTrace& t);

}  // namespace cdc
