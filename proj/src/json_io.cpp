#include "fairdiv/json_io.hpp"

#include "fairdiv/error.hpp"
#include "fairdiv/gen.hpp"

namespace fairdiv {
namespace {

[[noreturn]] void bad(const std::string& what) { fail(ErrorCode::ParseError, what); }

const Json& field(const Json& j, const char* key) {
  if (!j.is_object() || !j.contains(key)) bad(std::string("missing field '") + key + "'");
  return j.at(key);
}

int int_field(const Json& j, const char* key) {
  const Json& v = field(j, key);
  if (!v.is_number_integer()) bad(std::string("field '") + key + "' must be an integer");
  return v.get<int>();
}

ItemSet items_from_json(const Json& j, int m, const char* what) {
  if (!j.is_array()) bad(std::string(what) + " must be an array of item indices");
  ItemSet out;
  for (const Json& g : j) {
    if (!g.is_number_integer()) bad(std::string(what) + " must hold integer item indices");
    const long long idx = g.get<long long>();
    if (idx < 0 || idx >= m) fail(ErrorCode::InvalidItem, "item " + std::to_string(idx) + " is out of range");
    if (out.contains(static_cast<int>(idx)))
      fail(ErrorCode::InvalidAllocation, "item " + std::to_string(idx) + " is listed twice");
    out.insert(static_cast<int>(idx));
  }
  return out;
}

Json items_to_json(ItemSet s) {
  Json out = Json::array();
  for (int g : s) out.push_back(g);
  return out;
}

}  // namespace

Json value_to_json(const Value& v) { return format_value(v); }

Value value_from_json(const Json& j) {
  if (j.is_string()) return parse_value(j.get<std::string>());
  if (j.is_number_unsigned()) return Value(mpz_class(std::to_string(j.get<unsigned long long>())));
  if (j.is_number_integer()) {
    if (j.get<long long>() < 0) bad("values must be nonnegative");
    return Value(mpz_class(std::to_string(j.get<long long>())));
  }
  bad("values must be integers or rational strings, got " + j.dump());
}

Json instance_to_json(const Instance& inst) {
  Json out;
  out["n"] = inst.agents();
  out["m"] = inst.items();
  Json vals = Json::array();
  for (const ValuationFunction& v : inst.valuations()) {
    Json entry;
    entry["kind"] = std::string(to_string(v.kind()));
    Json values = Json::array();
    for (const Value& x : v.parameters()) values.push_back(value_to_json(x));
    entry["values"] = std::move(values);
    vals.push_back(std::move(entry));
  }
  out["valuations"] = std::move(vals);
  const InstanceHints& hints = inst.hints();
  if (hints.top_set || hints.tiers) {
    Json h = Json::object();
    if (hints.top_set) h["top_set"] = items_to_json(*hints.top_set);
    if (hints.tiers) {
      Json tiers = Json::array();
      for (ItemSet t : *hints.tiers) tiers.push_back(items_to_json(t));
      h["tiers"] = std::move(tiers);
    }
    out["hints"] = std::move(h);
  }
  return out;
}

Instance instance_from_json(const Json& j) {
  if (!j.is_object()) bad("an instance must be a JSON object");
  const int n = int_field(j, "n");
  const int m = int_field(j, "m");
  if (n < 1 || n > kMaxAgents) fail(ErrorCode::InvalidInstance, "n must lie in [1, " + std::to_string(kMaxAgents) + "]");
  if (m < 1 || m > kMaxItems) fail(ErrorCode::InvalidInstance, "m must lie in [1, " + std::to_string(kMaxItems) + "]");
  const Json& vals = field(j, "valuations");
  if (!vals.is_array() || static_cast<int>(vals.size()) != n)
    fail(ErrorCode::InvalidInstance, "expected " + std::to_string(n) + " valuations");

  std::vector<ValuationFunction> valuations;
  for (const Json& entry : vals) {
    const Json& kind_json = field(entry, "kind");
    if (!kind_json.is_string()) bad("valuation kind must be a string");
    ValuationKind kind;
    try {
      kind = parse_valuation_kind(kind_json.get<std::string>());
    } catch (const Error&) {
      fail(ErrorCode::InvalidInstance, "unknown valuation kind '" + kind_json.get<std::string>() + "'");
    }
    const Json& values_json = field(entry, "values");
    if (!values_json.is_array()) bad("valuation values must be an array");
    std::vector<Value> values;
    for (const Json& x : values_json) values.push_back(value_from_json(x));
    const std::size_t expect = kind == ValuationKind::Table ? (m <= kMaxTableItems ? std::size_t{1} << m : 0) : static_cast<std::size_t>(m);
    if (kind == ValuationKind::Table && m > kMaxTableItems)
      fail(ErrorCode::InvalidInstance, "table valuations support at most " + std::to_string(kMaxTableItems) + " items");
    if (values.size() != expect)
      fail(ErrorCode::InvalidInstance, "valuation " + std::to_string(valuations.size() + 1) + " has " +
                                           std::to_string(values.size()) + " values, expected " + std::to_string(expect));
    switch (kind) {
      case ValuationKind::Additive: valuations.push_back(ValuationFunction::additive(std::move(values))); break;
      case ValuationKind::Multiplicative: valuations.push_back(ValuationFunction::multiplicative(std::move(values))); break;
      case ValuationKind::UnitDemand: valuations.push_back(ValuationFunction::unit_demand(std::move(values))); break;
      case ValuationKind::Table: valuations.push_back(ValuationFunction::table(m, std::move(values))); break;
    }
  }

  InstanceHints hints;
  if (j.contains("hints") && !j.at("hints").is_null()) {
    const Json& h = j.at("hints");
    if (!h.is_object()) bad("hints must be an object");
    if (h.contains("top_set")) hints.top_set = items_from_json(h.at("top_set"), m, "top_set");
    if (h.contains("tiers")) {
      const Json& t = h.at("tiers");
      if (!t.is_array()) bad("tiers must be an array of item arrays");
      std::vector<ItemSet> tiers;
      for (const Json& tier : t) tiers.push_back(items_from_json(tier, m, "a tier"));
      hints.tiers = std::move(tiers);
    }
  }
  return Instance(std::move(valuations), std::move(hints));
}

Json allocation_to_json(const Allocation& alloc) {
  Json out = Json::array();
  for (ItemSet b : alloc.bundles()) out.push_back(items_to_json(b));
  return out;
}

Allocation allocation_from_json(const Json& j, const Instance& inst) {
  const Json& bundles = j.is_object() ? field(j, "allocation") : j;
  if (!bundles.is_array()) bad("an allocation must be an array of bundles");
  if (static_cast<int>(bundles.size()) != inst.agents())
    fail(ErrorCode::InvalidAllocation, "allocation has " + std::to_string(bundles.size()) + " bundles for " +
                                           std::to_string(inst.agents()) + " agents");
  std::vector<ItemSet> sets;
  for (const Json& b : bundles) sets.push_back(items_from_json(b, inst.items(), "a bundle"));
  Allocation alloc = Allocation::from_bundles(std::move(sets), inst.items());
  validate_allocation(inst, alloc);
  return alloc;
}

Json report_to_json(const FairnessReport& report) {
  Json out;
  out["verdict"] = report.verdict;
  out["alpha"] = value_to_json(report.certified_alpha);
  Json w = Json::array();
  for (const Witness& x : report.witnesses) {
    Json row = Json::array({x.envier + 1, x.envied + 1});
    if (x.item) row.push_back(*x.item);
    else row.push_back(nullptr);
    w.push_back(std::move(row));
  }
  out["witnesses"] = std::move(w);
  return out;
}

Json certificate_to_json(const PartialCertificate& cert) {
  Json out;
  out["alpha"] = value_to_json(cert.alpha);
  out["beta"] = cert.beta ? value_to_json(*cert.beta) : Json("inf");
  out["gamma"] = value_to_json(cert.gamma);
  out["certified_factor"] = value_to_json(cert.certified_factor);
  return out;
}

Json ece_round_to_json(const EceRound& r) {
  Json out;
  out["round"] = r.round;
  out["source"] = r.source + 1;
  out["item"] = r.item;
  out["cycles_rotated"] = r.cycles_rotated;
  return out;
}

Json tier_step_to_json(const TierStep& s) {
  Json out;
  out["tier"] = s.tier;
  out["case"] = std::string(to_string(s.kase));
  out["rotations"] = s.rotations;
  return out;
}

Json parse_json(std::string_view text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    bad(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace fairdiv
