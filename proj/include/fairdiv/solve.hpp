#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "fairdiv/framework.hpp"
#include "fairdiv/json_io.hpp"
#include "fairdiv/tiers.hpp"

namespace fairdiv {

/// Everything a solver run reports. `certificate` describes the partial
/// allocation the run started its completion from; for exact solvers it is
/// the final allocation itself (empty pool).
struct SolveOutcome {
  Allocation allocation;
  PartialCertificate certificate;
  Value efx_alpha;  // measured on the final allocation
  bool ef1 = false;
  int fallback_activations = 0;
  std::vector<Json> trace;
};

struct SolveOptions {
  bool trace = false;
  FallbackHook on_fallback;
};

/// Runs one of: ece, pick-ece, framework:<builder>, top-n, relaxed-top:<l>,
/// bounded-interval:<l>, distinct-favorites, tiered, distinct-top-tiers,
/// oracle-exact. The result is re-verified before it is returned; a
/// certificate the verifier rejects throws InternalInvariant.
SolveOutcome solve(const Instance& inst, std::string_view algorithm, const SolveOptions& options = {});

/// Solver output document: {"allocation", "certificate", "verified", "stats"}.
Json outcome_to_json(const SolveOutcome& outcome);

/// Names accepted by solve, parameterized ones shown with a placeholder.
std::vector<std::string> algorithm_names();

}  // namespace fairdiv
