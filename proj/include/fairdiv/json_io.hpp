#pragma once

#include <json.hpp>

#include "fairdiv/core.hpp"
#include "fairdiv/ece.hpp"
#include "fairdiv/framework.hpp"
#include "fairdiv/tiers.hpp"
#include "fairdiv/verify.hpp"

namespace fairdiv {

using Json = nlohmann::ordered_json;

/// Values are written as "p/q" strings; integers, "p/q" strings and decimal
/// strings are accepted on input.
Json value_to_json(const Value& v);
Value value_from_json(const Json& j);

/// {"n", "m", "valuations": [{"kind", "values"}], "hints"?}. Table values
/// list v(S) for every bitmask S of the items, item 0 in the lowest bit.
Json instance_to_json(const Instance& inst);
Instance instance_from_json(const Json& j);

/// [[items of agent 1], [items of agent 2], ...]; items left out stay in the
/// pool. Input may also be wrapped as {"allocation": [[...]]}.
Json allocation_to_json(const Allocation& alloc);
Allocation allocation_from_json(const Json& j, const Instance& inst);

/// Agent ids in witnesses are 1-based, items 0-based; the item is null for
/// plain envy.
Json report_to_json(const FairnessReport& report);
Json certificate_to_json(const PartialCertificate& cert);

Json ece_round_to_json(const EceRound& round);
Json tier_step_to_json(const TierStep& step);

/// Parses JSON text, mapping syntax errors to ParseError.
Json parse_json(std::string_view text);

}  // namespace fairdiv
