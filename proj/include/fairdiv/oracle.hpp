#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "fairdiv/core.hpp"

namespace fairdiv {

/// Largest number of assignments the exhaustive search will visit.
inline constexpr std::uint64_t kOracleLimit = 100'000'000;

/// n^m, or (n+1)^m with the pool as an extra destination. Throws TooLarge
/// past kOracleLimit.
std::uint64_t allocation_count(int n, int m, bool include_partial);

/// Visits every assignment of the m items to n bundles (plus the pool when
/// `include_partial`) in lexicographic order, item 0 most significant and
/// the pool last. Stops early when the visitor returns false.
void enumerate_allocations(int n, int m, bool include_partial,
                           const std::function<bool(const Allocation&)>& visit);

struct BestAlpha {
  Value alpha;
  Allocation allocation;
};

/// Complete allocation with the largest alpha-EFX factor; the first one in
/// enumeration order wins ties.
BestAlpha best_alpha_efx(const Instance& inst);

/// First complete EFX allocation in enumeration order.
std::optional<Allocation> exists_efx(const Instance& inst);

}  // namespace fairdiv
