#include "fairdiv/solve.hpp"

#include "fairdiv/error.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/verify.hpp"

namespace fairdiv {
namespace {

/// Builder spec behind each framework-based algorithm name, or empty.
std::string framework_spec(std::string_view algorithm) {
  if (algorithm == "ece") return "empty";
  if (algorithm == "pick-ece") return "pick-rounds";
  if (algorithm.starts_with("framework:")) return std::string(algorithm.substr(10));
  if (algorithm == "top-n" || algorithm == "distinct-favorites" || algorithm.starts_with("relaxed-top:") ||
      algorithm.starts_with("bounded-interval:"))
    return std::string(algorithm);
  return {};
}

SolveOutcome from_framework(const Instance& inst, const std::string& spec, bool trace) {
  FrameworkResult r = run_framework(inst, spec);
  SolveOutcome out;
  out.allocation = std::move(r.allocation);
  out.certificate = std::move(r.certificate);
  if (trace)
    for (const EceRound& round : r.trace.rounds) out.trace.push_back(ece_round_to_json(round));
  return out;
}

SolveOutcome exact(const Instance& inst, Allocation alloc) {
  SolveOutcome out;
  out.certificate = measure_partial(inst, alloc);
  out.allocation = std::move(alloc);
  return out;
}

}  // namespace

SolveOutcome solve(const Instance& inst, std::string_view algorithm, const SolveOptions& options) {
  SolveOutcome out;
  bool needs_ef1 = false;
  if (const std::string spec = framework_spec(algorithm); !spec.empty()) {
    out = from_framework(inst, spec, options.trace);
    needs_ef1 = sgn(out.certificate.gamma - 1) >= 0;
  } else if (algorithm == "tiered") {
    TieredOptions topts;
    topts.on_fallback = options.on_fallback;
    TieredResult r = solve_tiered(inst, topts);
    out = exact(inst, std::move(r.allocation));
    out.fallback_activations = r.fallback_activations;
    if (options.trace)
      for (const TierStep& s : r.steps) out.trace.push_back(tier_step_to_json(s));
  } else if (algorithm == "distinct-top-tiers") {
    out = exact(inst, solve_distinct_top_tiers(inst));
  } else if (algorithm == "oracle-exact") {
    out = exact(inst, best_alpha_efx(inst).allocation);
  } else {
    fail(ErrorCode::InvalidArgument, "unknown algorithm '" + std::string(algorithm) + "'");
  }

  // Independent re-verification of what is about to be reported.
  validate_allocation(inst, out.allocation);
  if (!out.allocation.complete()) fail(ErrorCode::InternalInvariant, "solver left items unallocated");
  out.efx_alpha = max_alpha_efx(inst, out.allocation);
  out.ef1 = satisfies(inst, out.allocation, FairnessProperty::ef1());
  if (!satisfies(inst, out.allocation, FairnessProperty::alpha_efx(out.certificate.certified_factor)))
    fail(ErrorCode::InternalInvariant, "final allocation is not " + format_value(out.certificate.certified_factor) +
                                           "-EFX as certified (measured " + format_value(out.efx_alpha) + ")");
  if (needs_ef1 && !out.ef1) fail(ErrorCode::InternalInvariant, "EF1 partial was completed into a non-EF1 allocation");
  return out;
}

Json outcome_to_json(const SolveOutcome& o) {
  Json out;
  out["allocation"] = allocation_to_json(o.allocation);
  out["certificate"] = certificate_to_json(o.certificate);
  out["verified"] = {{"efx_alpha", value_to_json(o.efx_alpha)}, {"ef1", o.ef1}};
  out["stats"] = {{"fallback_activations", o.fallback_activations}};
  return out;
}

std::vector<std::string> algorithm_names() {
  return {"ece",   "pick-ece",           "framework:<builder>", "top-n",       "relaxed-top:<l>", "bounded-interval:<l>",
          "distinct-favorites", "tiered", "distinct-top-tiers",  "oracle-exact"};
}

}  // namespace fairdiv
