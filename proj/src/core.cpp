#include "fairdiv/core.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <string>

#include "fairdiv/error.hpp"

namespace fairdiv {

std::string ItemSet::to_string() const {
  std::string out = "{";
  bool first_item = true;
  for (int g : *this) {
    if (!first_item) out += ",";
    out += std::to_string(g);
    first_item = false;
  }
  return out + "}";
}

// ---------------------------------------------------------------------------
// ValuationFunction

ValuationFunction::ValuationFunction(ValuationKind kind, int m, std::vector<Value> params)
    : kind_(kind), m_(m), params_(std::move(params)) {
  if (kind_ == ValuationKind::Table) {
    singles_.reserve(static_cast<std::size_t>(m_));
    for (int g = 0; g < m_; ++g) singles_.push_back(params_[std::size_t{1} << g]);
  } else {
    singles_ = params_;
  }
}

namespace {

void check_item_count(std::size_t m) {
  if (m == 0 || m > static_cast<std::size_t>(kMaxItems))
    fail(ErrorCode::InvalidInstance,
         "a valuation must cover between 1 and " + std::to_string(kMaxItems) + " items");
}

void check_nonnegative(const std::vector<Value>& values, const char* what) {
  for (const auto& v : values)
    if (sgn(v) < 0) fail(ErrorCode::InvalidInstance, std::string(what) + " values must be nonnegative");
}

}  // namespace

ValuationFunction ValuationFunction::additive(std::vector<Value> values) {
  check_item_count(values.size());
  check_nonnegative(values, "additive");
  const int m = static_cast<int>(values.size());
  return ValuationFunction(ValuationKind::Additive, m, std::move(values));
}

ValuationFunction ValuationFunction::multiplicative(std::vector<Value> factors) {
  check_item_count(factors.size());
  for (const auto& f : factors)
    if (f < 1) fail(ErrorCode::InvalidInstance, "multiplicative factors must be >= 1");
  const int m = static_cast<int>(factors.size());
  return ValuationFunction(ValuationKind::Multiplicative, m, std::move(factors));
}

ValuationFunction ValuationFunction::unit_demand(std::vector<Value> values) {
  check_item_count(values.size());
  check_nonnegative(values, "unit-demand");
  const int m = static_cast<int>(values.size());
  return ValuationFunction(ValuationKind::UnitDemand, m, std::move(values));
}

ValuationFunction ValuationFunction::table(int m, std::vector<Value> by_mask) {
  if (m < 1 || m > kMaxTableItems)
    fail(ErrorCode::InvalidInstance,
         "table valuations support 1.." + std::to_string(kMaxTableItems) + " items");
  if (by_mask.size() != (std::size_t{1} << m))
    fail(ErrorCode::InvalidInstance, "table valuation needs exactly 2^m entries");
  check_nonnegative(by_mask, "table");
  for (std::size_t s = 0; s < by_mask.size(); ++s)
    for (int g = 0; g < m; ++g)
      if (!((s >> g) & 1U) && by_mask[s] > by_mask[s | (std::size_t{1} << g)])
        fail(ErrorCode::InvalidInstance, "table valuation is not monotone at " +
                                             ItemSet(s).to_string() + " + " + std::to_string(g));
  return ValuationFunction(ValuationKind::Table, m, std::move(by_mask));
}

Value ValuationFunction::operator()(ItemSet s) const {
  if (!s.subset_of(ItemSet::universe(m_)))
    fail(ErrorCode::InvalidItem, "item set " + s.to_string() + " exceeds " + std::to_string(m_) + " items");
  switch (kind_) {
    case ValuationKind::Additive: {
      Value total = 0;
      for (int g : s) total += params_[static_cast<std::size_t>(g)];
      return total;
    }
    case ValuationKind::Multiplicative: {
      Value total = 1;
      for (int g : s) total *= params_[static_cast<std::size_t>(g)];
      return total;
    }
    case ValuationKind::UnitDemand: {
      Value best = 0;
      for (int g : s)
        if (params_[static_cast<std::size_t>(g)] > best) best = params_[static_cast<std::size_t>(g)];
      return best;
    }
    case ValuationKind::Table:
      return params_[s.bits()];
  }
  return 0;
}

Value bundle_value(const ValuationFunction& v, ItemSet s) { return v(s); }

// ---------------------------------------------------------------------------
// Instance

Instance::Instance(std::vector<ValuationFunction> valuations, InstanceHints hints)
    : valuations_(std::move(valuations)), hints_(std::move(hints)) {
  if (valuations_.empty()) fail(ErrorCode::InvalidInstance, "an instance needs at least one agent");
  if (valuations_.size() > static_cast<std::size_t>(kMaxAgents))
    fail(ErrorCode::InvalidInstance, "at most " + std::to_string(kMaxAgents) + " agents are supported");
  m_ = valuations_.front().items();
  for (const auto& v : valuations_)
    if (v.items() != m_) fail(ErrorCode::InvalidInstance, "every valuation must cover the same m items");

  if (hints_.top_set) {
    if (!hints_.top_set->subset_of(all_items()))
      fail(ErrorCode::InvalidInstance, "top-set hint names unknown items");
    if (!is_common_top_set(*this, *hints_.top_set))
      fail(ErrorCode::InvalidInstance, "top-set hint is not a common top set");
  }
  if (hints_.tiers && !is_tier_partition(*this, *hints_.tiers))
    fail(ErrorCode::InvalidInstance, "tier hint is not a common tiered ranking");
}

bool Instance::all_of_kind(ValuationKind kind) const {
  return std::all_of(valuations_.begin(), valuations_.end(),
                     [kind](const ValuationFunction& v) { return v.kind() == kind; });
}

// ---------------------------------------------------------------------------
// Allocation

Allocation::Allocation(int n, int m)
    : m_(m), bundles_(static_cast<std::size_t>(n)), pool_(ItemSet::universe(m)) {}

Allocation Allocation::from_bundles(std::vector<ItemSet> bundles, int m) {
  Allocation a(static_cast<int>(bundles.size()), m);
  ItemSet seen;
  for (std::size_t i = 0; i < bundles.size(); ++i) {
    if (!bundles[i].subset_of(ItemSet::universe(m)))
      fail(ErrorCode::InvalidAllocation, "bundle " + std::to_string(i) + " names an unknown item");
    if (seen.intersects(bundles[i]))
      fail(ErrorCode::InvalidAllocation, "bundles overlap at " + (seen & bundles[i]).to_string());
    seen |= bundles[i];
  }
  a.bundles_ = std::move(bundles);
  a.pool_ = ItemSet::universe(m) - seen;
  return a;
}

int Allocation::owner(int g) const {
  for (std::size_t i = 0; i < bundles_.size(); ++i)
    if (bundles_[i].contains(g)) return static_cast<int>(i);
  return -1;
}

void Allocation::give(int agent, int g) {
  if (!pool_.contains(g))
    fail(ErrorCode::InvalidItem, "item " + std::to_string(g) + " is not in the pool");
  pool_.erase(g);
  bundles_[static_cast<std::size_t>(agent)].insert(g);
}

void Allocation::rotate(std::span<const int> cycle) {
  if (cycle.size() < 2) return;
  const ItemSet head = bundles_[static_cast<std::size_t>(cycle[0])];
  for (std::size_t k = 0; k + 1 < cycle.size(); ++k)
    bundles_[static_cast<std::size_t>(cycle[k])] = bundles_[static_cast<std::size_t>(cycle[k + 1])];
  bundles_[static_cast<std::size_t>(cycle.back())] = head;
}

void Allocation::set_bundle(int agent, ItemSet items) {
  ItemSet others;
  for (std::size_t i = 0; i < bundles_.size(); ++i)
    if (static_cast<int>(i) != agent) others |= bundles_[i];
  if (others.intersects(items) || !items.subset_of(ItemSet::universe(m_)))
    fail(ErrorCode::InvalidAllocation, "set_bundle would break the partition");
  bundles_[static_cast<std::size_t>(agent)] = items;
  pool_ = ItemSet::universe(m_) - others - items;
}

void validate_allocation(const Instance& inst, const Allocation& alloc) {
  if (alloc.agents() != inst.agents())
    fail(ErrorCode::InvalidAllocation, "allocation has " + std::to_string(alloc.agents()) +
                                           " bundles, instance has " + std::to_string(inst.agents()) + " agents");
  if (alloc.items() != inst.items())
    fail(ErrorCode::InvalidAllocation, "allocation covers " + std::to_string(alloc.items()) +
                                           " items, instance has " + std::to_string(inst.items()));
}

// ---------------------------------------------------------------------------
// EnvyGraph

EnvyGraph::EnvyGraph(int n)
    : n_(n), out_(static_cast<std::size_t>(n), 0), in_(static_cast<std::size_t>(n), 0) {}

void EnvyGraph::add_edge(int i, int j) {
  if (i == j) fail(ErrorCode::InternalInvariant, "envy graphs have no self-loops");
  out_[static_cast<std::size_t>(i)] |= std::uint64_t{1} << j;
  in_[static_cast<std::size_t>(j)] |= std::uint64_t{1} << i;
}

std::vector<int> EnvyGraph::sources() const {
  std::vector<int> out;
  for (int i = 0; i < n_; ++i)
    if (is_source(i)) out.push_back(i);
  return out;
}

std::vector<std::pair<int, int>> EnvyGraph::edges() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n_; ++i)
    for (int j : ItemSet(out_mask(i))) out.emplace_back(i, j);
  return out;
}

std::uint64_t EnvyGraph::reachable_from(int from) const {
  std::uint64_t seen = 0;
  std::uint64_t frontier = out_mask(from);
  while (frontier != 0) {
    seen |= frontier;
    std::uint64_t next = 0;
    for (int v : ItemSet(frontier)) next |= out_mask(v);
    frontier = next & ~seen;
  }
  return seen;
}

EnvyGraph build_envy_graph(const Instance& inst, const Allocation& alloc) {
  validate_allocation(inst, alloc);
  const int n = inst.agents();
  EnvyGraph g(n);
  for (int i = 0; i < n; ++i) {
    const Value own = inst.value(i, alloc.bundle(i));
    for (int j = 0; j < n; ++j)
      if (j != i && own < inst.value(i, alloc.bundle(j))) g.add_edge(i, j);
  }
  return g;
}

LevelsOrCycle envy_levels(const EnvyGraph& g) {
  const int n = g.agents();
  std::vector<int> level(static_cast<std::size_t>(n), 0);
  std::vector<int> indegree(static_cast<std::size_t>(n));
  std::deque<int> ready;
  for (int i = 0; i < n; ++i) {
    indegree[static_cast<std::size_t>(i)] = ItemSet(g.in_mask(i)).size();
    if (indegree[static_cast<std::size_t>(i)] == 0) ready.push_back(i);
  }
  int processed = 0;
  while (!ready.empty()) {
    const int v = ready.front();
    ready.pop_front();
    ++processed;
    for (int w : ItemSet(g.out_mask(v))) {
      level[static_cast<std::size_t>(w)] =
          std::max(level[static_cast<std::size_t>(w)], level[static_cast<std::size_t>(v)] + 1);
      if (--indegree[static_cast<std::size_t>(w)] == 0) ready.push_back(w);
    }
  }
  if (processed == n) return level;
  return *find_envy_cycle(g);
}

std::optional<EnvyCycle> find_envy_cycle(const EnvyGraph& g) {
  const int n = g.agents();
  std::vector<int> parent(static_cast<std::size_t>(n));
  for (int start = 0; start < n; ++start) {
    // BFS for the shortest path start -> ... -> start.
    std::fill(parent.begin(), parent.end(), -1);
    std::deque<int> queue{start};
    std::uint64_t seen = std::uint64_t{1} << start;
    int closing = -1;
    while (!queue.empty() && closing < 0) {
      const int v = queue.front();
      queue.pop_front();
      for (int w : ItemSet(g.out_mask(v))) {
        if (w == start) {
          closing = v;
          break;
        }
        if ((seen >> w) & 1U) continue;
        seen |= std::uint64_t{1} << w;
        parent[static_cast<std::size_t>(w)] = v;
        queue.push_back(w);
      }
    }
    if (closing < 0) continue;
    std::vector<int> path;
    for (int v = closing; v != start; v = parent[static_cast<std::size_t>(v)]) path.push_back(v);
    path.push_back(start);
    std::reverse(path.begin(), path.end());
    return EnvyCycle{std::move(path)};
  }
  return std::nullopt;
}

namespace {

void collect_cycles(const EnvyGraph& g, int start, std::vector<int>& path, std::uint64_t on_path,
                    std::vector<EnvyCycle>& out) {
  const int v = path.back();
  for (int w : ItemSet(g.out_mask(v))) {
    if (w == start) {
      out.push_back(EnvyCycle{path});
    } else if (w > start && !((on_path >> w) & 1U)) {
      path.push_back(w);
      collect_cycles(g, start, path, on_path | (std::uint64_t{1} << w), out);
      path.pop_back();
    }
  }
}

}  // namespace

std::vector<EnvyCycle> simple_cycles(const EnvyGraph& g) {
  std::vector<EnvyCycle> out;
  std::vector<int> path;
  for (int s = 0; s < g.agents(); ++s) {
    path.assign(1, s);
    collect_cycles(g, s, path, std::uint64_t{1} << s, out);
  }
  return out;
}

// ---------------------------------------------------------------------------
// Cancelability

CancelabilityResult check_cancelable(const ValuationFunction& v, int m) {
  if (m > kMaxTableItems)
    fail(ErrorCode::TooLargeForExhaustiveCheck,
         "exhaustive cancelability check supports m <= " + std::to_string(kMaxTableItems));
  if (v.items() != m) fail(ErrorCode::InvalidArgument, "valuation does not cover m items");

  // For a fixed g, a violation is a pair with v(S) <= v(T) and
  // v(S+g) > v(T+g). Sorting the subsets by v(S) and keeping the running
  // maximum of v(S+g) over everything at or below the current level finds one
  // in O(K log K).
  const std::uint64_t full = ItemSet::universe(m).bits();
  for (int g = m - 1; g >= 0; --g) {
    const std::uint64_t rest = full & ~(std::uint64_t{1} << g);
    std::vector<std::uint64_t> subsets;
    for (std::uint64_t s = rest;; s = (s - 1) & rest) {
      subsets.push_back(s);
      if (s == 0) break;
    }
    std::reverse(subsets.begin(), subsets.end());
    std::vector<Value> base(subsets.size()), plus(subsets.size());
    for (std::size_t k = 0; k < subsets.size(); ++k) {
      base[k] = v(ItemSet(subsets[k]));
      plus[k] = v(ItemSet(subsets[k]).with(g));
    }
    std::vector<std::size_t> order(subsets.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](std::size_t a, std::size_t b) { return base[a] < base[b]; });

    std::size_t best = order.front();
    std::size_t lo = 0;
    while (lo < order.size()) {
      std::size_t hi = lo;
      while (hi < order.size() && base[order[hi]] == base[order[lo]]) {
        if (plus[order[hi]] > plus[best]) best = order[hi];
        ++hi;
      }
      for (std::size_t k = lo; k < hi; ++k) {
        const std::size_t t = order[k];
        if (plus[best] > plus[t])
          return {false, CancelWitness{ItemSet(subsets[best]), ItemSet(subsets[t]), g}};
      }
      lo = hi;
    }
  }
  return {true, std::nullopt};
}

bool is_cancel_witness(const ValuationFunction& v, const CancelWitness& w) {
  if (w.g < 0 || w.s.contains(w.g) || w.t.contains(w.g)) return false;
  return v(w.s.with(w.g)) > v(w.t.with(w.g)) && !(v(w.s) > v(w.t));
}

// ---------------------------------------------------------------------------
// Structural predicates

bool is_common_top_set(const Instance& inst, ItemSet set) {
  const ItemSet rest = inst.all_items() - set;
  if (set.empty() || rest.empty()) return true;
  for (int i = 0; i < inst.agents(); ++i) {
    const auto& vals = inst.valuation(i).item_values();
    Value lo = vals[static_cast<std::size_t>(set.first())];
    for (int g : set) lo = std::min(lo, vals[static_cast<std::size_t>(g)]);
    for (int h : rest)
      if (vals[static_cast<std::size_t>(h)] > lo) return false;
  }
  return true;
}

bool is_tier_partition(const Instance& inst, const std::vector<ItemSet>& tiers) {
  ItemSet seen;
  for (ItemSet t : tiers) {
    if (t.empty() || t.intersects(seen) || !t.subset_of(inst.all_items())) return false;
    seen |= t;
  }
  if (seen != inst.all_items()) return false;
  ItemSet later = seen;
  for (ItemSet t : tiers) {
    later -= t;
    if (later.empty()) break;
    for (int i = 0; i < inst.agents(); ++i) {
      const auto& vals = inst.valuation(i).item_values();
      Value lo = vals[static_cast<std::size_t>(t.first())];
      for (int g : t) lo = std::min(lo, vals[static_cast<std::size_t>(g)]);
      for (int h : later)
        if (vals[static_cast<std::size_t>(h)] > lo) return false;
    }
  }
  return true;
}

}  // namespace fairdiv
