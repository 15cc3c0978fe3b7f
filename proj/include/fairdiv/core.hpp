#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <variant>
#include <vector>

#include "fairdiv/item_set.hpp"
#include "fairdiv/value.hpp"

namespace fairdiv {

/// Largest item count for which table valuations and exhaustive
/// cancelability checks are accepted.
inline constexpr int kMaxTableItems = 12;
/// Agents are tracked in 64-bit masks by the envy graph.
inline constexpr int kMaxAgents = 64;

enum class ValuationKind { Additive, Multiplicative, UnitDemand, Table };

/// A monotone, nonnegative set function over m items.
///
/// Additive sums item values, Multiplicative multiplies factors (each >= 1,
/// empty set is 1), UnitDemand takes the maximum (empty set is 0) and Table
/// stores one value per subset, indexed by the subset's bit mask.
class ValuationFunction {
public:
  static ValuationFunction additive(std::vector<Value> values);
  static ValuationFunction multiplicative(std::vector<Value> factors);
  static ValuationFunction unit_demand(std::vector<Value> values);
  /// `by_mask[S.bits()]` is v(S); must have 2^m entries, v(empty) >= 0 and
  /// be monotone. Throws InvalidInstance otherwise.
  static ValuationFunction table(int m, std::vector<Value> by_mask);

  ValuationKind kind() const { return kind_; }
  int items() const { return m_; }

  /// v(S). Throws InvalidItem when S reaches beyond the item universe.
  Value operator()(ItemSet s) const;
  /// v({g}).
  const Value& item_value(int g) const { return singles_[static_cast<std::size_t>(g)]; }
  const std::vector<Value>& item_values() const { return singles_; }
  /// Per-item parameters for Additive/Multiplicative/UnitDemand, the full
  /// subset table for Table.
  const std::vector<Value>& parameters() const { return params_; }

  /// Additive, multiplicative and unit-demand functions are cancelable by
  /// construction; tables must be checked.
  bool cancelable_by_kind() const { return kind_ != ValuationKind::Table; }

  friend bool operator==(const ValuationFunction&, const ValuationFunction&) = default;

private:
  ValuationFunction(ValuationKind kind, int m, std::vector<Value> params);

  ValuationKind kind_ = ValuationKind::Additive;
  int m_ = 0;
  std::vector<Value> params_;
  std::vector<Value> singles_;
};

/// bundle_value(v, S) == v(S).
Value bundle_value(const ValuationFunction& v, ItemSet s);

struct InstanceHints {
  std::optional<ItemSet> top_set;
  std::optional<std::vector<ItemSet>> tiers;
};

class Instance {
public:
  /// Throws InvalidInstance unless n >= 1, 1 <= m <= 64 and every valuation
  /// covers exactly m items.
  explicit Instance(std::vector<ValuationFunction> valuations, InstanceHints hints = {});

  int agents() const { return static_cast<int>(valuations_.size()); }
  int items() const { return m_; }
  ItemSet all_items() const { return ItemSet::universe(m_); }

  const ValuationFunction& valuation(int agent) const {
    return valuations_[static_cast<std::size_t>(agent)];
  }
  const std::vector<ValuationFunction>& valuations() const { return valuations_; }
  Value value(int agent, ItemSet s) const { return valuation(agent)(s); }
  const Value& item_value(int agent, int g) const { return valuation(agent).item_value(g); }

  bool all_of_kind(ValuationKind kind) const;
  bool all_additive() const { return all_of_kind(ValuationKind::Additive); }

  const InstanceHints& hints() const { return hints_; }

  friend bool operator==(const Instance& a, const Instance& b) {
    return a.m_ == b.m_ && a.valuations_ == b.valuations_;
  }

private:
  int m_ = 0;
  std::vector<ValuationFunction> valuations_;
  InstanceHints hints_;
};

/// An ordered, possibly partial, partition of the items into n bundles plus
/// an unallocated pool.
class Allocation {
public:
  Allocation() = default;
  /// Empty bundles, every item in the pool.
  Allocation(int n, int m);
  /// Throws InvalidAllocation if bundles overlap or reach beyond m items.
  static Allocation from_bundles(std::vector<ItemSet> bundles, int m);

  int agents() const { return static_cast<int>(bundles_.size()); }
  int items() const { return m_; }
  ItemSet bundle(int agent) const { return bundles_[static_cast<std::size_t>(agent)]; }
  const std::vector<ItemSet>& bundles() const { return bundles_; }
  ItemSet pool() const { return pool_; }
  bool complete() const { return pool_.empty(); }
  /// Agent holding item g, or -1 if g is in the pool.
  int owner(int g) const;

  /// Moves g from the pool into the agent's bundle.
  void give(int agent, int g);
  /// Agent cycle[k] receives the bundle of cycle[k+1] (cyclically).
  void rotate(std::span<const int> cycle);
  void set_bundle(int agent, ItemSet items);

  friend bool operator==(const Allocation&, const Allocation&) = default;

private:
  int m_ = 0;
  std::vector<ItemSet> bundles_;
  ItemSet pool_;
};

/// Throws InvalidAllocation unless the shapes of alloc and inst agree.
void validate_allocation(const Instance& inst, const Allocation& alloc);

/// Directed graph over agents; edge (i, j) iff agent i strictly prefers
/// j's bundle to her own.
class EnvyGraph {
public:
  explicit EnvyGraph(int n = 0);

  int agents() const { return n_; }
  bool has_edge(int i, int j) const { return (out_[static_cast<std::size_t>(i)] >> j) & 1U; }
  void add_edge(int i, int j);
  std::uint64_t out_mask(int i) const { return out_[static_cast<std::size_t>(i)]; }
  std::uint64_t in_mask(int j) const { return in_[static_cast<std::size_t>(j)]; }
  bool is_source(int i) const { return in_[static_cast<std::size_t>(i)] == 0; }
  std::vector<int> sources() const;
  /// Edges in (i, j) lexicographic order.
  std::vector<std::pair<int, int>> edges() const;
  /// Agents reachable from `from` along envy edges (excluding `from` unless
  /// it lies on a cycle).
  std::uint64_t reachable_from(int from) const;

  friend bool operator==(const EnvyGraph&, const EnvyGraph&) = default;

private:
  int n_ = 0;
  std::vector<std::uint64_t> out_;
  std::vector<std::uint64_t> in_;
};

EnvyGraph build_envy_graph(const Instance& inst, const Allocation& alloc);

struct EnvyCycle {
  /// agents[k] envies agents[k+1], and the last envies the first.
  std::vector<int> agents;
  friend bool operator==(const EnvyCycle&, const EnvyCycle&) = default;
};

/// Topological levels (sources are level 0, every edge goes strictly up a
/// level) or a cycle witnessing that none exist.
using LevelsOrCycle = std::variant<std::vector<int>, EnvyCycle>;
LevelsOrCycle envy_levels(const EnvyGraph& g);

/// Shortest cycle through the lowest-index agent that lies on any cycle.
/// Deterministic; nullopt iff the graph is acyclic.
std::optional<EnvyCycle> find_envy_cycle(const EnvyGraph& g);

/// Every simple cycle, each listed once starting at its lowest agent, in
/// lexicographic order.
std::vector<EnvyCycle> simple_cycles(const EnvyGraph& g);

struct CancelWitness {
  ItemSet s;
  ItemSet t;
  int g = -1;
};

struct CancelabilityResult {
  bool cancelable = true;
  std::optional<CancelWitness> witness;
};

/// Exhaustive check of v(S+g) > v(T+g) => v(S) > v(T) over all S, T and
/// g outside both. Items g are scanned from the highest index down.
/// Throws TooLargeForExhaustiveCheck when m > 12.
CancelabilityResult check_cancelable(const ValuationFunction& v, int m);

/// True iff the triple violates the cancelability implication.
bool is_cancel_witness(const ValuationFunction& v, const CancelWitness& w);

/// True iff `set` is a valid top-|set| set for every agent (the minimum
/// singleton value inside is at least the maximum outside).
bool is_common_top_set(const Instance& inst, ItemSet set);

/// True iff `tiers` partitions the items and every agent weakly prefers
/// every item of an earlier tier to every item of a later one.
bool is_tier_partition(const Instance& inst, const std::vector<ItemSet>& tiers);

}  // namespace fairdiv
