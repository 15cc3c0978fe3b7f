#pragma once

#include <vector>

#include "fairdiv/core.hpp"

namespace fairdiv {

/// An allocation together with the cached matrix v_i(A_j), kept in sync as
/// items are handed out and bundles rotate. The envy graph is derived from
/// the cache, so only the touched bundle is ever re-evaluated.
class EnvyState {
public:
  EnvyState(const Instance& inst, Allocation alloc);

  const Instance& instance() const { return *inst_; }
  const Allocation& allocation() const { return alloc_; }
  int agents() const { return alloc_.agents(); }

  /// v_agent(A_owner)
  const Value& value(int agent, int owner) const {
    return cols_[static_cast<std::size_t>(owner)][static_cast<std::size_t>(agent)];
  }
  const Value& own_value(int agent) const { return value(agent, agent); }
  bool envies(int i, int j) const { return i != j && own_value(i) < value(i, j); }

  EnvyGraph graph() const;
  bool is_source(int agent) const;
  std::vector<int> sources() const;

  void give(int agent, int item);
  void rotate(const EnvyCycle& cycle);
  /// Rotates envy cycles until the graph is acyclic; returns the number of
  /// rotations.
  int decycle();

private:
  void refresh(int owner);

  const Instance* inst_;
  Allocation alloc_;
  // cols_[owner][agent] = v_agent(A_owner)
  std::vector<std::vector<Value>> cols_;
};

}  // namespace fairdiv
