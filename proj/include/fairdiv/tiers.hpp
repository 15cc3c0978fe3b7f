#pragma once

#include <functional>
#include <string_view>
#include <vector>

#include "fairdiv/core.hpp"

namespace fairdiv {

/// Ordered partition M_1, ..., M_s of the items such that every agent values
/// each item of an earlier tier at least as much as each item of a later one.
struct TierPartition {
  std::vector<ItemSet> tiers;
  /// Largest tier cardinality.
  int size() const;
};

/// The finest common tier partition. Items are sorted by their singleton
/// values, agent 1 first and later agents breaking ties, and a cut is placed
/// after every prefix whose minimum value is at least the maximum of the
/// suffix for every agent.
TierPartition detect_tiers(const Instance& inst);

enum class TierCase { One, TwoA, TwoB, ThreeA, ThreeB, ThreeC, Fallback };
std::string_view to_string(TierCase c);

struct TierStep {
  int tier = 0;  // 1-based
  TierCase kase = TierCase::One;
  int rotations = 0;
};

struct TieredResult {
  Allocation allocation;
  std::vector<TierStep> steps;
  int fallback_activations = 0;
};

/// Invoked when a tier had to be completed by the fallback search. Receives
/// the 1-based tier index and the allocation the tier started from.
using FallbackHook = std::function<void(int tier, const Allocation& start, ItemSet tier_items)>;

struct TieredOptions {
  FallbackHook on_fallback;
  /// When false a failed case dispatch throws TierExtensionNotFound right
  /// away instead of searching.
  bool allow_fallback = true;
  /// When false every tier goes straight to the fallback search.
  bool dispatch = true;
};

/// Exact EFX allocation for n >= 3 agents with cancelable valuations and a
/// common tiered ranking of size at most 3, built tier by tier. After each
/// tier the allocation is EFX and its envy graph is acyclic; both are
/// asserted.
///
/// Throws HypothesisViolated when a precondition fails and
/// TierExtensionNotFound when neither the case dispatch nor the fallback
/// search can extend a tier.
TieredResult solve_tiered(const Instance& inst, const TieredOptions& options = {});

/// The unique best k-subset of every agent (k = floor(m/n)), or nullopt if
/// some agent's best k-subset is not unique.
std::optional<std::vector<ItemSet>> top_tiers(const Instance& inst);

/// Gives every agent her best floor(m/n) items and the m mod n leftovers one
/// each to the first agents. Throws NotDistinctTiers when the top tiers are
/// not unique or overlap.
Allocation solve_distinct_top_tiers(const Instance& inst);

}  // namespace fairdiv
