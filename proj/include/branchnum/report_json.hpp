#pragma once

// JSON encoding of reports. Counts that may exceed 2^53 are written as
// decimal strings.

#include <json.hpp>

#include "branchnum/branch.hpp"
#include "branchnum/cost_model.hpp"

namespace branchnum {

using Json = nlohmann::ordered_json;

Json to_json(const BranchReport& report);
/// Inverse of to_json for the report fields. Throws Error{Parse}.
BranchReport report_from_json(const Json& j);

Json to_json(const CostEstimate& estimate);

}  // namespace branchnum
