#include "fairdiv/envy_state.hpp"

#include <utility>

#include "fairdiv/error.hpp"

namespace fairdiv {

EnvyState::EnvyState(const Instance& inst, Allocation alloc)
    : inst_(&inst), alloc_(std::move(alloc)), cols_(static_cast<std::size_t>(inst.agents())) {
  validate_allocation(inst, alloc_);
  for (int j = 0; j < agents(); ++j) refresh(j);
}

void EnvyState::refresh(int owner) {
  auto& col = cols_[static_cast<std::size_t>(owner)];
  col.resize(static_cast<std::size_t>(agents()));
  const ItemSet bundle = alloc_.bundle(owner);
  for (int i = 0; i < agents(); ++i) col[static_cast<std::size_t>(i)] = inst_->value(i, bundle);
}

EnvyGraph EnvyState::graph() const {
  EnvyGraph g(agents());
  for (int i = 0; i < agents(); ++i)
    for (int j = 0; j < agents(); ++j)
      if (envies(i, j)) g.add_edge(i, j);
  return g;
}

bool EnvyState::is_source(int agent) const {
  for (int i = 0; i < agents(); ++i)
    if (envies(i, agent)) return false;
  return true;
}

std::vector<int> EnvyState::sources() const {
  std::vector<int> out;
  for (int j = 0; j < agents(); ++j)
    if (is_source(j)) out.push_back(j);
  return out;
}

void EnvyState::give(int agent, int item) {
  alloc_.give(agent, item);
  refresh(agent);
}

void EnvyState::rotate(const EnvyCycle& cycle) {
  const auto& c = cycle.agents;
  if (c.size() < 2) return;
  alloc_.rotate(c);
  // Column c[k] now describes the bundle that used to sit at c[k+1].
  for (std::size_t k = 0; k + 1 < c.size(); ++k)
    std::swap(cols_[static_cast<std::size_t>(c[k])], cols_[static_cast<std::size_t>(c[k + 1])]);
}

int EnvyState::decycle() {
  int rotations = 0;
  while (auto cycle = find_envy_cycle(graph())) {
    rotate(*cycle);
    ++rotations;
    // Each rotation strictly raises the sum of own values over a finite
    // state space; a runaway loop means the cache is out of sync.
    if (rotations > 1'000'000) fail(ErrorCode::InternalInvariant, "decycling did not terminate");
  }
  return rotations;
}

}  // namespace fairdiv
