#pragma once

#include <json.hpp>

#include "mzvreg/lincomb.hpp"
#include "mzvreg/real.hpp"
#include "mzvreg/regularize.hpp"
#include "mzvreg/set_partition.hpp"
#include "mzvreg/tpoly.hpp"

namespace mzvreg::jsonio {

using nlohmann::json;

/// [[1,3],[2]].
json to_json(const SetPartition& pi);
SetPartition partition_from_json(const json& j);

/// [{"term": "1,2", "coefficient": "1/2"}, ...].
json to_json(const IndexCombination& c);
json to_json(const WordCombination& c);

/// {"value": "...", "bound": "..."}.
json to_json(const Approx& a);

/// List of coefficient strings indexed by T-power.
json to_json(const MzvSymbolPoly& p);
/// List of {"value", "bound"} indexed by T-power.
json to_json(const TPoly<Approx>& p);

}  // namespace mzvreg::jsonio
