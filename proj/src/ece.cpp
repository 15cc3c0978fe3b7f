#include "fairdiv/ece.hpp"

#include <algorithm>

#include "fairdiv/envy_state.hpp"
#include "fairdiv/error.hpp"

namespace fairdiv {

Allocation decycle(const Instance& inst, Allocation alloc, int* rotations) {
  EnvyState state(inst, std::move(alloc));
  const int done = state.decycle();
  if (rotations) *rotations = done;
  return state.allocation();
}

int favorite_item(const Instance& inst, int agent, ItemSet pool) {
  int best = -1;
  for (int g : pool)
    if (best < 0 || inst.item_value(agent, g) > inst.item_value(agent, best)) best = g;
  return best;
}

Allocation run_ece(const Instance& inst, const Allocation& start, const EcePolicy& policy, EceTrace* trace,
                   const EceObserver& observer) {
  validate_allocation(inst, start);
  const int n = inst.agents();

  std::vector<int> sequence;
  if (policy.fixed_sequence) {
    sequence = *policy.fixed_sequence;
    std::vector<int> sorted = sequence;
    std::sort(sorted.begin(), sorted.end());
    if (sorted != start.pool().to_vector())
      fail(ErrorCode::InvalidArgument, "fixed item sequence must be a permutation of the pool");
  } else {
    sequence = start.pool().to_vector();
  }
  if (policy.pick_rounds < 0) fail(ErrorCode::InvalidArgument, "pick_rounds must be nonnegative");

  EnvyState state(inst, start);
  const int initial = state.decycle();
  if (trace) {
    trace->initial_rotations = initial;
    trace->rounds.clear();
  }

  std::vector<bool> served(static_cast<std::size_t>(n), false);
  std::size_t cursor = 0;
  int round = 0;
  while (!state.allocation().pool().empty() && (!policy.round_limit || round < *policy.round_limit)) {
    ++round;
    const auto sources = state.sources();
    if (sources.empty())
      fail(ErrorCode::NoSourceAfterDecycle, "no source agent after decycling in round " + std::to_string(round));

    int source = sources.front();
    int item = -1;
    if (round <= policy.pick_rounds) {
      // Prefer a source that has not picked yet. From an empty start every
      // unserved agent is empty-handed and therefore unenvied.
      for (int s : sources)
        if (!served[static_cast<std::size_t>(s)]) {
          source = s;
          break;
        }
      served[static_cast<std::size_t>(source)] = true;
      item = favorite_item(inst, source, state.allocation().pool());
    } else {
      while (!state.allocation().pool().contains(sequence[cursor])) ++cursor;
      item = sequence[cursor];
    }

    state.give(source, item);
    const int rotated = state.decycle();
    const EceRound info{round, source, item, rotated};
    if (trace) trace->rounds.push_back(info);
    if (observer) observer(info, state.allocation());
  }
  return state.allocation();
}

}  // namespace fairdiv
