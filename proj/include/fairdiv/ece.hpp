#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "fairdiv/core.hpp"

namespace fairdiv {

/// How run_ece feeds the pool.
///
/// The first `pick_rounds` rounds let the chosen source take her favorite
/// remaining item (highest singleton value, lowest index on ties), each round
/// serving an agent not served before. The remaining items go out in
/// `fixed_sequence` order, or in increasing index order when none is given.
/// With a `round_limit` the run stops early and leaves the rest in the pool.
struct EcePolicy {
  std::optional<std::vector<int>> fixed_sequence;
  int pick_rounds = 0;
  std::optional<int> round_limit;

  static EcePolicy plain() { return {}; }
  static EcePolicy fixed(std::vector<int> order) { return {std::move(order), 0, std::nullopt}; }
  static EcePolicy pick_favorite(int rounds) { return {std::nullopt, rounds, std::nullopt}; }
};

struct EceRound {
  int round = 0;  // 1-based
  int source = 0;
  int item = 0;
  int cycles_rotated = 0;
};

struct EceTrace {
  /// Rotations needed to make the starting allocation acyclic.
  int initial_rotations = 0;
  std::vector<EceRound> rounds;
};

/// Called after every round (item handed out and graph decycled).
using EceObserver = std::function<void(const EceRound&, const Allocation&)>;

/// Rotates bundles backwards along envy cycles until the envy graph is a
/// DAG. Cycles are taken shortest-first through the lowest-index agent that
/// lies on one.
Allocation decycle(const Instance& inst, Allocation alloc, int* rotations = nullptr);

/// Envy cycle elimination from `start` until the pool is empty (or the
/// policy's round limit is reached). Sources are
/// chosen lowest index first and the graph is fully decycled after every
/// round, so it is a DAG at every round boundary.
Allocation run_ece(const Instance& inst, const Allocation& start, const EcePolicy& policy = EcePolicy::plain(),
                   EceTrace* trace = nullptr, const EceObserver& observer = {});

/// Favorite pool item of an agent by singleton value, lowest index on ties.
int favorite_item(const Instance& inst, int agent, ItemSet pool);

}  // namespace fairdiv
