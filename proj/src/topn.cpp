#include "fairdiv/topn.hpp"

#include <algorithm>
#include <numeric>

#include "fairdiv/error.hpp"
#include "fairdiv/verify.hpp"

namespace fairdiv {
namespace {

void require_additive(const Instance& inst, const char* what) {
  if (!inst.all_additive())
    fail(ErrorCode::UnsupportedValuation, std::string(what) + " requires additive valuations");
}

void require_count(const Instance& inst, int count) {
  if (count < 1 || count > inst.items())
    fail(ErrorCode::InvalidArgument, "count must lie in [1, m], got " + std::to_string(count));
}

int argmax(const Instance& inst, int agent, ItemSet items) {
  int best = -1;
  for (int g : items)
    if (best < 0 || inst.item_value(agent, g) > inst.item_value(agent, best)) best = g;
  return best;
}

int argmin(const Instance& inst, int agent, ItemSet items) {
  int best = -1;
  for (int g : items)
    if (best < 0 || inst.item_value(agent, g) < inst.item_value(agent, best)) best = g;
  return best;
}

/// Item values of one agent sorted in non-increasing order.
std::vector<Value> sorted_desc(const Instance& inst, int agent) {
  std::vector<Value> vals = inst.valuation(agent).item_values();
  std::sort(vals.begin(), vals.end(), [](const Value& a, const Value& b) { return a > b; });
  return vals;
}

Allocation checked_efx(const Instance& inst, Allocation partial, const char* builder) {
  if (!is_efx(inst, partial))
    fail(ErrorCode::BuilderPostconditionFailed,
         std::string(builder) + " produced a partial allocation that is not EFX");
  return partial;
}

FrameworkResult finish(const Instance& inst, Allocation partial) {
  return run_framework(inst, [p = std::move(partial)](const Instance&) { return p; });
}

}  // namespace

// ---------------------------------------------------------------------------
// Common top set

std::optional<ItemSet> common_top_set(const Instance& inst, int count) {
  require_additive(inst, "common_top_set");
  require_count(inst, count);
  ItemSet must_in, must_out;
  for (int i = 0; i < inst.agents(); ++i) {
    const Value threshold = sorted_desc(inst, i)[static_cast<std::size_t>(count - 1)];
    for (int g = 0; g < inst.items(); ++g) {
      const Value& v = inst.item_value(i, g);
      if (v > threshold) must_in.insert(g);
      if (v < threshold) must_out.insert(g);
    }
  }
  if (must_in.intersects(must_out)) return std::nullopt;
  const ItemSet free = inst.all_items() - must_in - must_out;
  const int need = count - must_in.size();
  if (need < 0 || need > free.size()) return std::nullopt;
  ItemSet top = must_in;
  int taken = 0;
  for (int g : free) {
    if (taken == need) break;
    top.insert(g);
    ++taken;
  }
  return top;
}

// ---------------------------------------------------------------------------
// Two-thirds construction

TopNPartial build_top_n_partial(const Instance& inst, ContentTest test) {
  require_additive(inst, "the common top-n algorithm");
  const int n = inst.agents();
  const int m = inst.items();
  if (m <= n)
    fail(ErrorCode::HypothesisViolated, "the common top-n algorithm assumes m > n (m=" + std::to_string(m) +
                                            ", n=" + std::to_string(n) + ")");
  const auto top = common_top_set(inst, n);
  if (!top) fail(ErrorCode::NotCommon, "agents do not share a common top-" + std::to_string(n) + " set");

  TopNPartial out{Allocation(n, m), TopSplit{*top, inst.all_items() - *top, {}}};
  ItemSet remaining_top = out.split.top;
  ItemSet remaining_bottom = out.split.bottom;
  const Value two_thirds = ratio(2, 3);

  for (int i = 0; i < n; ++i) {
    const ItemSet test_top = test == ContentTest::Sequential ? remaining_top : out.split.top;
    const ItemSet test_bottom = test == ContentTest::Sequential ? remaining_bottom : out.split.bottom;
    const int h = argmax(inst, i, test_top);
    const int g1 = argmin(inst, i, test_top);
    const int g2 = argmax(inst, i, test_bottom);

    AgentSplit info;
    info.best_top = argmax(inst, i, remaining_top);
    info.worst_top = argmin(inst, i, remaining_top);
    info.best_bottom = argmax(inst, i, remaining_bottom);
    info.content = g2 < 0 || remaining_bottom.empty() ||
                   inst.item_value(i, g1) + inst.item_value(i, g2) < two_thirds * inst.item_value(i, h);

    if (info.content) {
      out.partial.give(i, info.best_top);
      remaining_top.erase(info.best_top);
    } else {
      out.partial.give(i, info.best_bottom);
      remaining_bottom.erase(info.best_bottom);
    }
    out.split.agents.push_back(info);
  }

  for (int i = 0; i < n; ++i) {
    if (out.split.agents[static_cast<std::size_t>(i)].content) continue;
    const int g = remaining_top.first();
    if (g < 0) fail(ErrorCode::InternalInvariant, "ran out of top items for non-content agents");
    out.partial.give(i, g);
    remaining_top.erase(g);
  }
  if (!remaining_top.empty()) fail(ErrorCode::InternalInvariant, "top items left after the split");
  return out;
}

FrameworkResult solve_top_n(const Instance& inst) { return finish(inst, build_top_n_partial(inst).partial); }

// ---------------------------------------------------------------------------
// Relaxed top ranking

std::optional<std::vector<int>> common_top_order(const Instance& inst, int ell) {
  const auto top = common_top_set(inst, ell);
  if (!top) return std::nullopt;
  std::vector<int> order = top->to_vector();
  // Lexicographic on (v_1, ..., v_n) descending: this is a valid shared
  // order whenever one exists.
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    for (int i = 0; i < inst.agents(); ++i) {
      const int c = cmp(inst.item_value(i, a), inst.item_value(i, b));
      if (c != 0) return c > 0;
    }
    return false;
  });
  for (int i = 0; i < inst.agents(); ++i)
    for (std::size_t k = 0; k + 1 < order.size(); ++k)
      if (inst.item_value(i, order[k]) < inst.item_value(i, order[k + 1])) return std::nullopt;
  return order;
}

Allocation build_relaxed_top_partial(const Instance& inst, int ell) {
  require_additive(inst, "the relaxed top ranking solver");
  require_count(inst, ell);
  auto order = common_top_order(inst, ell);
  if (!order)
    fail(ErrorCode::NotCommonOrder, "agents do not agree on the set and order of the top " + std::to_string(ell) +
                                        " items");
  const ItemSet top = ItemSet::from_vector(*order);
  for (int g : inst.all_items() - top) order->push_back(g);
  EcePolicy policy = EcePolicy::fixed(std::move(*order));
  policy.round_limit = ell;
  return checked_efx(inst, run_ece(inst, Allocation(inst.agents(), inst.items()), policy), "relaxed-top");
}

FrameworkResult solve_relaxed_top_ranking(const Instance& inst, int ell) {
  return finish(inst, build_relaxed_top_partial(inst, ell));
}

// ---------------------------------------------------------------------------
// Bounded interval

bool has_bounded_interval(const Instance& inst, int ell) {
  require_additive(inst, "the bounded interval check");
  require_count(inst, ell);
  for (int i = 0; i < inst.agents(); ++i) {
    const auto vals = sorted_desc(inst, i);
    const Value& lo = vals[static_cast<std::size_t>(ell - 1)];
    if (sgn(lo) <= 0 || vals.front() > 2 * lo) return false;
  }
  return true;
}

Allocation build_bounded_interval_partial(const Instance& inst, int ell) {
  if (!has_bounded_interval(inst, ell))
    fail(ErrorCode::NotBoundedInterval,
         "some agent's top " + std::to_string(ell) + " items are not within a factor of two");
  const int n = inst.agents();
  const int rounds = ell / n;
  Allocation partial(n, inst.items());
  for (int r = 0; r < rounds; ++r)
    for (int i = 0; i < n; ++i) partial.give(i, argmax(inst, i, partial.pool()));
  return checked_efx(inst, std::move(partial), "bounded-interval round robin");
}

FrameworkResult solve_bounded_interval(const Instance& inst, int ell) {
  return finish(inst, build_bounded_interval_partial(inst, ell));
}

// ---------------------------------------------------------------------------
// Distinct favorites

std::optional<std::vector<int>> distinct_favorites(const Instance& inst) {
  std::vector<int> fav;
  ItemSet taken;
  for (int i = 0; i < inst.agents(); ++i) {
    const int f = argmax(inst, i, inst.all_items());
    for (int g = 0; g < inst.items(); ++g)
      if (g != f && inst.item_value(i, g) == inst.item_value(i, f)) return std::nullopt;
    if (taken.contains(f)) return std::nullopt;
    taken.insert(f);
    fav.push_back(f);
  }
  return fav;
}

Allocation build_distinct_favorites_partial(const Instance& inst) {
  require_additive(inst, "the distinct favorites solver");
  const int n = inst.agents();
  if (inst.items() < 2 * n)
    fail(ErrorCode::HypothesisViolated, "the distinct favorites solver needs m >= 2n");
  const auto fav = distinct_favorites(inst);
  if (!fav) fail(ErrorCode::NotDistinctFavorites, "agents do not have distinct strict favorite items");
  Allocation start(n, inst.items());
  for (int i = 0; i < n; ++i) start.give(i, (*fav)[static_cast<std::size_t>(i)]);
  EcePolicy policy = EcePolicy::pick_favorite(n);
  policy.round_limit = n;
  return checked_efx(inst, run_ece(inst, start, policy), "distinct-favorites");
}

FrameworkResult solve_distinct_favorites(const Instance& inst) {
  return finish(inst, build_distinct_favorites_partial(inst));
}

Allocation build_pick_rounds_partial(const Instance& inst) {
  EcePolicy policy = EcePolicy::pick_favorite(inst.agents());
  policy.round_limit = inst.agents();
  return run_ece(inst, Allocation(inst.agents(), inst.items()), policy);
}

}  // namespace fairdiv
