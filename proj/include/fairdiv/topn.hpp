#pragma once

#include <optional>
#include <vector>

#include "fairdiv/core.hpp"
#include "fairdiv/framework.hpp"

namespace fairdiv {

/// A size-`count` set that is a valid top set for every agent, or nullopt.
/// Ties at an agent's threshold are resolved permissively; among several
/// valid sets the lowest-index free items are preferred.
/// Throws UnsupportedValuation for non-additive instances.
std::optional<ItemSet> common_top_set(const Instance& inst, int count);

/// Per-agent quantities of the common top-n split, as seen by that agent
/// when her turn came.
struct AgentSplit {
  int best_top = -1;     // h_i: favorite remaining top item
  int worst_top = -1;    // g1_i: least valued remaining top item
  int best_bottom = -1;  // g2_i: favorite remaining bottom item, -1 if none remain
  bool content = false;
};

struct TopSplit {
  ItemSet top;
  ItemSet bottom;
  std::vector<AgentSplit> agents;
};

/// Which sets the content test reads. Sequential uses the sets as mutated by
/// the agents processed earlier; InitialSets evaluates h, g1, g2 on the
/// untouched split (the item taken still comes from what remains).
enum class ContentTest { Sequential, InitialSets };

struct TopNPartial {
  Allocation partial;
  TopSplit split;
};

/// Two-thirds construction for a common top-n set: a content agent keeps her
/// favorite top item, a non-content agent takes her favorite bottom item and
/// later one leftover top item. Agents go in index order; leftover top items
/// are dealt in increasing (agent, item) order. An agent that finds the
/// bottom set exhausted is treated as content.
/// Requires additive valuations, m > n and a common top-n set.
TopNPartial build_top_n_partial(const Instance& inst, ContentTest test = ContentTest::Sequential);

/// build_top_n_partial followed by envy cycle elimination.
FrameworkResult solve_top_n(const Instance& inst);

/// An order of a common top-`ell` set along which every agent's values are
/// non-increasing, or nullopt.
std::optional<std::vector<int>> common_top_order(const Instance& inst, int ell);

/// EFX partial allocation of the common top-`ell` items: envy cycle
/// elimination fed in the shared order. Throws NotCommonOrder.
Allocation build_relaxed_top_partial(const Instance& inst, int ell);
FrameworkResult solve_relaxed_top_ranking(const Instance& inst, int ell);

/// True iff every agent values her own top `ell` items within a factor of
/// two of each other (and the smallest of them is positive).
bool has_bounded_interval(const Instance& inst, int ell);

/// floor(ell / n) rounds of round robin in index order, each agent taking
/// her favorite remaining item. The result is checked for EFX before it is
/// returned; a failure throws BuilderPostconditionFailed.
/// Throws NotBoundedInterval when the hypothesis does not hold.
Allocation build_bounded_interval_partial(const Instance& inst, int ell);
FrameworkResult solve_bounded_interval(const Instance& inst, int ell);

/// Each agent's strict favorite item, or nullopt if some agent's favorite is
/// tied or two agents share one.
std::optional<std::vector<int>> distinct_favorites(const Instance& inst);

/// Every agent gets her favorite, then n pick-favorite elimination rounds.
/// Requires additive valuations and m >= 2n.
Allocation build_distinct_favorites_partial(const Instance& inst);
FrameworkResult solve_distinct_favorites(const Instance& inst);

/// n rounds of pick-favorite envy cycle elimination from the empty
/// allocation (the partial stage of the 1/2-EFX variant).
Allocation build_pick_rounds_partial(const Instance& inst);

}  // namespace fairdiv
