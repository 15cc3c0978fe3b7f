#pragma once

#include <functional>
#include <optional>
#include <string>
#include <string_view>

#include "fairdiv/core.hpp"
#include "fairdiv/ece.hpp"

namespace fairdiv {

/// Measured quality of a partial allocation S with pool P.
///
///   alpha = max_alpha_efx(S)
///   beta  = min_i v_i(S_i) / max_{h in P} v_i(h)   (nullopt means infinite)
///   gamma = max_alpha_ef1(S)
///   certified_factor = min(alpha, beta / (beta + 1))
///
/// Agents whose best pool item is worth 0 impose no bound on beta. An agent
/// holding nothing of value while the pool holds something she values drives
/// beta to 0.
struct PartialCertificate {
  Value alpha = 1;
  std::optional<Value> beta;
  Value gamma = 1;
  Value certified_factor = 1;
};

PartialCertificate measure_partial(const Instance& inst, const Allocation& partial);

/// Produces a partial allocation from an instance.
using PartialBuilder = std::function<Allocation(const Instance&)>;

struct FrameworkResult {
  Allocation partial;
  Allocation allocation;
  PartialCertificate certificate;
  EceTrace trace;
};

/// Builds the partial allocation, measures it, and completes it with plain
/// envy cycle elimination.
FrameworkResult run_framework(const Instance& inst, const PartialBuilder& builder);

/// Same, resolving the builder by name through the builder registry
/// (see builders.hpp), e.g. "pick-rounds" or "relaxed-top:4".
FrameworkResult run_framework(const Instance& inst, std::string_view builder_name);

}  // namespace fairdiv
