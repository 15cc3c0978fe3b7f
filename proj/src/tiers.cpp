#include "fairdiv/tiers.hpp"

#include <algorithm>
#include <bit>
#include <deque>
#include <functional>
#include <optional>
#include <set>
#include <variant>

#include "fairdiv/ece.hpp"
#include "fairdiv/envy_state.hpp"
#include "fairdiv/error.hpp"
#include "fairdiv/verify.hpp"

namespace fairdiv {

int TierPartition::size() const {
  int out = 0;
  for (ItemSet t : tiers) out = std::max(out, t.size());
  return out;
}

TierPartition detect_tiers(const Instance& inst) {
  const int n = inst.agents();
  const int m = inst.items();
  std::vector<int> order(static_cast<std::size_t>(m));
  for (int g = 0; g < m; ++g) order[static_cast<std::size_t>(g)] = g;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    for (int i = 0; i < n; ++i) {
      const int c = cmp(inst.item_value(i, a), inst.item_value(i, b));
      if (c != 0) return c > 0;
    }
    return false;
  });

  // prefix_min[i][p]: min over order[0..p], suffix_max[i][p]: max over order[p..]
  std::vector<bool> cut(static_cast<std::size_t>(m), true);
  for (int i = 0; i < n; ++i) {
    std::vector<Value> suffix_max(static_cast<std::size_t>(m));
    for (int p = m - 1; p >= 0; --p) {
      const Value& v = inst.item_value(i, order[static_cast<std::size_t>(p)]);
      suffix_max[static_cast<std::size_t>(p)] =
          p == m - 1 || v > suffix_max[static_cast<std::size_t>(p + 1)] ? v : suffix_max[static_cast<std::size_t>(p + 1)];
    }
    Value prefix_min = inst.item_value(i, order[0]);
    for (int p = 0; p + 1 < m; ++p) {
      const Value& v = inst.item_value(i, order[static_cast<std::size_t>(p)]);
      if (v < prefix_min) prefix_min = v;
      if (prefix_min < suffix_max[static_cast<std::size_t>(p + 1)]) cut[static_cast<std::size_t>(p)] = false;
    }
  }

  TierPartition out;
  ItemSet current;
  for (int p = 0; p < m; ++p) {
    current.insert(order[static_cast<std::size_t>(p)]);
    if (p == m - 1 || cut[static_cast<std::size_t>(p)]) {
      out.tiers.push_back(current);
      current = ItemSet{};
    }
  }
  return out;
}

std::string_view to_string(TierCase c) {
  switch (c) {
    case TierCase::One: return "1";
    case TierCase::TwoA: return "2a";
    case TierCase::TwoB: return "2b";
    case TierCase::ThreeA: return "3a";
    case TierCase::ThreeB: return "3b";
    case TierCase::ThreeC: return "3c";
    case TierCase::Fallback: return "fallback";
  }
  return "?";
}

namespace {

/// EFX on the cached state. Only envied bundles can hide strong envy.
bool efx_ok(const EnvyState& st) {
  const Instance& inst = st.instance();
  for (int i = 0; i < st.agents(); ++i)
    for (int j = 0; j < st.agents(); ++j) {
      if (!st.envies(i, j)) continue;
      const ItemSet b = st.allocation().bundle(j);
      for (int g : b)
        if (inst.value(i, b.without(g)) > st.own_value(i)) return false;
    }
  return true;
}

bool acyclic(const EnvyState& st) { return !find_envy_cycle(st.graph()); }

std::vector<int> levels_of(const EnvyState& st) {
  auto lv = envy_levels(st.graph());
  if (auto* v = std::get_if<std::vector<int>>(&lv)) return *v;
  fail(ErrorCode::InternalInvariant, "envy graph has a cycle after decycling");
}

/// Items of `items` in the agent's order of preference, lowest index on ties.
std::vector<int> preference(const Instance& inst, int agent, ItemSet items) {
  std::vector<int> out = items.to_vector();
  std::stable_sort(out.begin(), out.end(),
                   [&](int a, int b) { return inst.item_value(agent, a) > inst.item_value(agent, b); });
  return out;
}

struct Work {
  EnvyState st;
  int rotations = 0;

  void decycle() { rotations += st.decycle(); }
  ItemSet rest(ItemSet tier) const { return st.allocation().pool() & tier; }
  bool fresh(int agent, ItemSet tier) const { return !st.allocation().bundle(agent).intersects(tier); }
};

class TierEngine {
public:
  TierEngine(const Instance& inst, ItemSet tier) : inst_(inst), tier_(tier) {}

  /// Case dispatch on a decycled start. Returns the finished state and the
  /// case that produced it.
  std::optional<std::pair<Work, TierCase>> dispatch(Work w) const {
    w.decycle();
    const std::vector<int> src = w.st.sources();
    const int t = tier_.size();
    if (static_cast<int>(src.size()) >= t) {
      if (auto r = case_one(w, src)) return std::pair{*r, TierCase::One};
      return std::nullopt;
    }
    if (src.size() == 1) return case_two(w, src[0]);
    return case_three(w, src[0], src[1]);
  }

private:
  /// Every source in index order takes her favorite remaining tier item.
  std::optional<Work> case_one(Work w, const std::vector<int>& src) const {
    for (int s : src) {
      const ItemSet rest = w.rest(tier_);
      if (rest.empty()) break;
      w.st.give(s, favorite_item(inst_, s, rest));
    }
    if (!efx_ok(w.st)) return std::nullopt;
    return w;
  }

  /// Level-1 agents ordered by how little the source values their bundles.
  std::vector<int> level_one(const Work& w, int s) const {
    const auto lv = levels_of(w.st);
    std::vector<int> out;
    for (int a = 0; a < w.st.agents(); ++a)
      if (lv[static_cast<std::size_t>(a)] == 1) out.push_back(a);
    std::stable_sort(out.begin(), out.end(), [&](int a, int b) { return w.st.value(s, a) < w.st.value(s, b); });
    return out;
  }

  std::optional<std::pair<Work, TierCase>> case_two(const Work& w, int s) const {
    const auto level1 = level_one(w, s);

    // 2a: the source absorbs several tier items at once.
    std::vector<ItemSet> bundles;
    if (tier_.size() == 3) bundles.push_back(tier_);
    for (int a : tier_)
      for (int b : tier_)
        if (a < b) bundles.push_back(ItemSet{a, b});
    if (tier_.size() == 3)
      std::stable_sort(bundles.begin(), bundles.end(), [](ItemSet x, ItemSet y) { return x.size() > y.size(); });
    for (ItemSet p : bundles) {
      Work trial = w;
      for (int g : p) trial.st.give(s, g);
      if (!efx_ok(trial.st)) continue;
      const ItemSet rest = trial.rest(tier_);
      if (rest.empty()) return std::pair{trial, TierCase::TwoA};
      const int c = rest.first();
      for (int o : level1) {
        if (trial.st.envies(s, o)) continue;
        Work next = trial;
        next.st.give(o, c);
        if (efx_ok(next.st)) return std::pair{next, TierCase::TwoA};
        break;
      }
      if (auto done = complete(trial)) return std::pair{*done, TierCase::TwoA};
    }

    // 2b: the source takes one item; the rest go down to level 1 or through
    // a reallocation along a path.
    for (int a : preference(inst_, s, tier_)) {
      Work trial = w;
      trial.st.give(s, a);
      if (!efx_ok(trial.st)) continue;
      const ItemSet rest = trial.rest(tier_);
      std::vector<int> freed;
      for (int o : level1)
        if (!trial.st.envies(s, o)) freed.push_back(o);
      if (!freed.empty()) {
        const std::vector<int> items = rest.to_vector();
        if (static_cast<int>(freed.size()) >= static_cast<int>(items.size())) {
          std::vector<int> perm = items;
          do {
            Work next = trial;
            for (std::size_t k = 0; k < perm.size(); ++k) next.st.give(freed[k], perm[k]);
            if (efx_ok(next.st)) return std::pair{next, TierCase::TwoB};
          } while (std::next_permutation(perm.begin(), perm.end()));
        }
        for (int g : items) {
          Work next = trial;
          next.st.give(freed[0], g);
          if (!efx_ok(next.st)) continue;
          if (auto done = complete(next)) return std::pair{*done, TierCase::TwoB};
        }
      }
      if (auto done = complete(trial)) return std::pair{*done, TierCase::TwoB};
    }
    return std::nullopt;
  }

  std::optional<std::pair<Work, TierCase>> case_three(const Work& w, int s1, int s2) const {
    const EnvyGraph g = w.st.graph();
    const std::uint64_t r1 = g.reachable_from(s1);
    const std::uint64_t r2 = g.reachable_from(s2);
    const std::uint64_t only1 = r1 & ~r2;
    const std::uint64_t only2 = r2 & ~r1;
    const std::uint64_t bit1 = std::uint64_t{1} << s1;
    const std::uint64_t bit2 = std::uint64_t{1} << s2;

    const int a1 = favorite_item(inst_, s1, tier_);
    const int a2 = favorite_item(inst_, s2, tier_.without(a1));
    const std::uint64_t t1 = enviers_after(w, s1, a1);
    const std::uint64_t t2 = enviers_after(w, s2, a2);

    TierCase kase = TierCase::ThreeC;
    if ((t1 & only1) || (t2 & only2))
      kase = TierCase::ThreeA;
    else if ((t1 & (bit2 | only2)) || (t2 & (bit1 | only1)))
      kase = TierCase::ThreeB;

    // Either source can take two items, or one item and keep her source
    // status: the remaining items go to sources directly.
    for (int s : {s1, s2})
      for (int a : preference(inst_, s, tier_)) {
        Work trial = w;
        trial.st.give(s, a);
        if (!efx_ok(trial.st)) continue;
        if (auto done = complete(trial, /*forced=*/false)) return std::pair{*done, kase};
      }

    if (kase == TierCase::ThreeA) {
      // The envier lies below the source: one item, decycle, continue.
      const bool first = (t1 & only1) != 0;
      Work trial = w;
      trial.st.give(first ? s1 : s2, first ? a1 : a2);
      trial.decycle();
      if (efx_ok(trial.st))
        if (auto done = complete(trial)) return std::pair{*done, kase};
    } else if (kase == TierCase::ThreeB) {
      // Both sources take one item, closing a cycle through each other.
      Work trial = w;
      trial.st.give(s1, a1);
      trial.st.give(s2, a2);
      trial.decycle();
      if (efx_ok(trial.st))
        if (auto done = complete(trial)) return std::pair{*done, kase};
    } else {
      // Shared descendants: pick the source and item whose envier sits
      // deepest, restarting with the next choice if the tier gets stuck.
      const auto lv = levels_of(w.st);
      struct Choice {
        int depth, source, item;
      };
      std::vector<Choice> choices;
      for (int s : {s1, s2})
        for (int a : tier_) {
          const std::uint64_t t = enviers_after(w, s, a);
          int depth = -1;
          for (int x = 0; x < w.st.agents(); ++x)
            if ((t >> x) & 1U) depth = std::max(depth, lv[static_cast<std::size_t>(x)]);
          choices.push_back({depth, s, a});
        }
      std::stable_sort(choices.begin(), choices.end(), [](const Choice& x, const Choice& y) {
        if (x.depth != y.depth) return x.depth > y.depth;
        if (x.source != y.source) return x.source < y.source;
        return x.item < y.item;
      });
      const int restarts = std::min<int>(static_cast<int>(choices.size()), w.st.agents());
      for (int k = 0; k < restarts; ++k) {
        Work trial = w;
        trial.st.give(choices[static_cast<std::size_t>(k)].source, choices[static_cast<std::size_t>(k)].item);
        trial.decycle();
        if (!efx_ok(trial.st)) continue;
        if (auto done = complete(trial)) return std::pair{*done, kase};
      }
    }
    if (auto done = complete(w)) return std::pair{*done, kase};
    return std::nullopt;
  }

  /// Agents that envy `s` once she receives `item`.
  std::uint64_t enviers_after(const Work& w, int s, int item) const {
    Work trial = w;
    trial.st.give(s, item);
    std::uint64_t out = 0;
    for (int x = 0; x < trial.st.agents(); ++x)
      if (trial.st.envies(x, s)) out |= std::uint64_t{1} << x;
    return out;
  }

  /// Hands out the remaining tier items one at a time, every move guarded by
  /// EFX: fresh sources first, then any source, then a give followed by
  /// decycling, then a give followed by a rotation along an envy path that
  /// ends at the strong envier. With `forced` false only the first two moves
  /// are allowed.
  std::optional<Work> complete(Work w, bool forced = true) const {
    for (int step = 0; step <= tier_.size(); ++step) {
      const ItemSet rest = w.rest(tier_);
      if (rest.empty()) return efx_ok(w.st) ? std::optional<Work>(w) : std::nullopt;
      w.decycle();
      const std::vector<int> src = w.st.sources();

      bool moved = false;
      for (int s : src)
        if (w.fresh(s, tier_)) {
          w.st.give(s, favorite_item(inst_, s, rest));
          moved = true;
          break;
        }
      if (moved) continue;

      for (int s : src) {
        for (int a : preference(inst_, s, rest)) {
          Work trial = w;
          trial.st.give(s, a);
          if (efx_ok(trial.st)) {
            w = std::move(trial);
            moved = true;
            break;
          }
        }
        if (moved) break;
      }
      if (moved) continue;
      if (!forced) return std::nullopt;

      for (int s : src) {
        for (int a : preference(inst_, s, rest)) {
          Work trial = w;
          trial.st.give(s, a);
          trial.decycle();
          if (efx_ok(trial.st)) {
            w = std::move(trial);
            moved = true;
            break;
          }
        }
        if (moved) break;
      }
      if (moved) continue;

      if (auto next = path_move(w, src, rest)) {
        w = std::move(*next);
        continue;
      }
      return std::nullopt;
    }
    return std::nullopt;
  }

  /// Gives an item to a source, then moves her bundle to a strong envier x
  /// while shifting bundles along an envy path s -> p1 -> ... -> pk, with pk
  /// taking x's old bundle.
  std::optional<Work> path_move(const Work& w, const std::vector<int>& src, ItemSet rest) const {
    const EnvyGraph g = w.st.graph();
    const auto lv = levels_of(w.st);
    const int n = w.st.agents();
    for (int s : src)
      for (int a : preference(inst_, s, rest)) {
        Work given = w;
        given.st.give(s, a);
        std::vector<int> strong;
        const ItemSet b = given.st.allocation().bundle(s);
        for (int x = 0; x < n; ++x) {
          if (!given.st.envies(x, s)) continue;
          for (int h : b)
            if (inst_.value(x, b.without(h)) > given.st.own_value(x)) {
              strong.push_back(x);
              break;
            }
        }
        std::stable_sort(strong.begin(), strong.end(), [&](int x, int y) {
          return lv[static_cast<std::size_t>(x)] > lv[static_cast<std::size_t>(y)];
        });
        for (int x : strong) {
          std::optional<Work> found;
          std::vector<int> path{s};
          std::function<void()> extend = [&] {
            if (found) return;
            std::vector<int> cycle = path;
            cycle.push_back(x);
            Work trial = given;
            trial.st.rotate(EnvyCycle{cycle});
            trial.decycle();
            if (efx_ok(trial.st)) {
              found = std::move(trial);
              return;
            }
            const int last = path.back();
            for (int p = 0; p < n && !found; ++p) {
              if (p == x || !g.has_edge(last, p) || std::find(path.begin(), path.end(), p) != path.end()) continue;
              path.push_back(p);
              extend();
              path.pop_back();
            }
          };
          extend();
          if (found) return found;
        }
      }
    return std::nullopt;
  }

  const Instance& inst_;
  ItemSet tier_;
};

using Fingerprint = std::vector<std::uint64_t>;

Fingerprint fingerprint(const Allocation& a) {
  Fingerprint f;
  f.reserve(a.bundles().size());
  for (ItemSet b : a.bundles()) f.push_back(b.bits());
  return f;
}

/// Breadth-first search over single-item assignments and envy-cycle
/// rotations, first acceptance in a fixed move order.
std::optional<Work> fallback_search(const Instance& inst, const Work& start, ItemSet tier) {
  struct Node {
    Allocation alloc;
    int rotations;
  };
  const int max_rotations = 2 * tier.size() + inst.agents();
  constexpr std::size_t kMaxStates = 200000;
  std::set<Fingerprint> seen{fingerprint(start.st.allocation())};
  std::deque<Node> queue{{start.st.allocation(), 0}};
  while (!queue.empty()) {
    Node node = std::move(queue.front());
    queue.pop_front();
    std::vector<Node> next;
    for (int g : node.alloc.pool() & tier)
      for (int i = 0; i < inst.agents(); ++i) {
        Allocation a = node.alloc;
        a.give(i, g);
        next.push_back({std::move(a), node.rotations});
      }
    if (node.rotations < max_rotations)
      for (const EnvyCycle& c : simple_cycles(build_envy_graph(inst, node.alloc))) {
        Allocation a = node.alloc;
        a.rotate(c.agents);
        next.push_back({std::move(a), node.rotations + 1});
      }
    for (Node& child : next) {
      if (!seen.insert(fingerprint(child.alloc)).second) continue;
      if ((child.alloc.pool() & tier).empty() && is_efx(inst, child.alloc))
        return Work{EnvyState(inst, child.alloc), start.rotations + child.rotations};
      if (seen.size() >= kMaxStates) return std::nullopt;
      queue.push_back(std::move(child));
    }
  }
  return std::nullopt;
}

/// Exhaustive last resort: every way of adding the tier items to the
/// existing bundles, then a perfect matching of agents to bundles in which
/// nobody strongly envies another bundle.
std::optional<Work> matching_sweep(const Instance& inst, const Work& start, ItemSet tier) {
  const int n = inst.agents();
  const std::vector<int> items = tier.to_vector();
  const auto& base = start.st.allocation().bundles();
  std::vector<int> target(items.size(), 0);
  while (true) {
    std::vector<ItemSet> bundles = base;
    for (std::size_t k = 0; k < items.size(); ++k) bundles[static_cast<std::size_t>(target[k])].insert(items[k]);

    // ok[i][b]: agent i holding bundle b strongly envies no other bundle.
    std::vector<std::uint64_t> ok(static_cast<std::size_t>(n), 0);
    for (int i = 0; i < n; ++i) {
      std::vector<Value> worth(static_cast<std::size_t>(n)), strong(static_cast<std::size_t>(n));
      for (int b = 0; b < n; ++b) {
        const ItemSet set = bundles[static_cast<std::size_t>(b)];
        worth[static_cast<std::size_t>(b)] = inst.value(i, set);
        for (int h : set) {
          Value v = inst.value(i, set.without(h));
          if (v > strong[static_cast<std::size_t>(b)]) strong[static_cast<std::size_t>(b)] = std::move(v);
        }
      }
      for (int b = 0; b < n; ++b) {
        bool good = true;
        for (int o = 0; o < n && good; ++o)
          if (o != b && strong[static_cast<std::size_t>(o)] > worth[static_cast<std::size_t>(b)]) good = false;
        if (good) ok[static_cast<std::size_t>(i)] |= std::uint64_t{1} << b;
      }
    }

    std::vector<int> match(static_cast<std::size_t>(n), -1);
    std::function<bool(int, std::uint64_t)> assign = [&](int i, std::uint64_t used) {
      if (i == n) return true;
      for (int b = 0; b < n; ++b) {
        if (!((ok[static_cast<std::size_t>(i)] >> b) & 1U) || ((used >> b) & 1U)) continue;
        match[static_cast<std::size_t>(i)] = b;
        if (assign(i + 1, used | (std::uint64_t{1} << b))) return true;
      }
      return false;
    };
    if (assign(0, 0)) {
      Allocation a = start.st.allocation();
      for (int i = 0; i < n; ++i) a.set_bundle(i, bundles[static_cast<std::size_t>(match[static_cast<std::size_t>(i)])]);
      return Work{EnvyState(inst, a), start.rotations};
    }

    std::size_t k = items.size();
    while (k > 0) {
      --k;
      if (++target[k] < n) break;
      target[k] = 0;
      if (k == 0) return std::nullopt;
    }
    if (items.empty()) return std::nullopt;
  }
}

void require_cancelable(const Instance& inst) {
  for (int i = 0; i < inst.agents(); ++i) {
    const ValuationFunction& v = inst.valuation(i);
    if (v.cancelable_by_kind()) continue;
    const auto res = check_cancelable(v, inst.items());
    if (!res.cancelable)
      fail(ErrorCode::HypothesisViolated,
           "the tiered solver needs cancelable valuations; agent " + std::to_string(i + 1) + " is not");
  }
}

}  // namespace

TieredResult solve_tiered(const Instance& inst, const TieredOptions& options) {
  const int n = inst.agents();
  if (n < 3)
    fail(ErrorCode::HypothesisViolated,
         "the tiered solver assumes n >= 3 agents (got n=" + std::to_string(n) + ")");
  const TierPartition tiers = detect_tiers(inst);
  if (tiers.size() > 3)
    fail(ErrorCode::HypothesisViolated,
         "the tiered solver needs a common tiered ranking of size at most 3 (finest has size " +
             std::to_string(tiers.size()) + ")");
  require_cancelable(inst);

  TieredResult result{Allocation(n, inst.items()), {}, 0};
  Work state{EnvyState(inst, result.allocation), 0};
  for (std::size_t k = 0; k < tiers.tiers.size(); ++k) {
    const ItemSet tier = tiers.tiers[k];
    const int tier_no = static_cast<int>(k) + 1;
    state.rotations = 0;
    state.decycle();

    TierEngine engine(inst, tier);
    std::optional<std::pair<Work, TierCase>> done;
    if (options.dispatch) done = engine.dispatch(state);
    if (!done) {
      if (!options.allow_fallback)
        fail(ErrorCode::TierExtensionNotFound, "case dispatch failed on tier " + std::to_string(tier_no));
      ++result.fallback_activations;
      if (options.on_fallback) options.on_fallback(tier_no, state.st.allocation(), tier);
      std::optional<Work> found = fallback_search(inst, state, tier);
      if (!found) found = matching_sweep(inst, state, tier);
      if (!found)
        fail(ErrorCode::TierExtensionNotFound,
             "no EFX extension found for tier " + std::to_string(tier_no) + " from " +
                 std::to_string(n) + " bundles");
      done = std::pair{std::move(*found), TierCase::Fallback};
    }

    state = std::move(done->first);
    state.decycle();
    if (!state.rest(tier).empty())
      fail(ErrorCode::InternalInvariant, "tier " + std::to_string(tier_no) + " left items unallocated");
    if (!efx_ok(state.st) || !acyclic(state.st))
      fail(ErrorCode::InternalInvariant, "EFX or acyclicity lost after tier " + std::to_string(tier_no));
    result.steps.push_back({tier_no, done->second, state.rotations});
  }
  result.allocation = state.st.allocation();
  return result;
}

// ---------------------------------------------------------------------------
// Distinct top tiers

namespace {

/// Unique best k-subset of one agent, or nullopt on ties.
std::optional<ItemSet> best_k_set(const ValuationFunction& v, int m, int k) {
  if (k == 0) return ItemSet{};
  if (k == m) return ItemSet::universe(m);
  switch (v.kind()) {
    case ValuationKind::Additive:
    case ValuationKind::Multiplicative: {
      std::vector<int> order(static_cast<std::size_t>(m));
      for (int g = 0; g < m; ++g) order[static_cast<std::size_t>(g)] = g;
      std::stable_sort(order.begin(), order.end(), [&](int a, int b) { return v.item_value(a) > v.item_value(b); });
      if (!(v.item_value(order[static_cast<std::size_t>(k - 1)]) > v.item_value(order[static_cast<std::size_t>(k)])))
        return std::nullopt;
      ItemSet out;
      for (int j = 0; j < k; ++j) out.insert(order[static_cast<std::size_t>(j)]);
      return out;
    }
    case ValuationKind::UnitDemand: {
      // Any k-set holding the top item is optimal, so only k = 1 can be unique.
      if (k != 1) return std::nullopt;
      int best = 0;
      for (int g = 1; g < m; ++g)
        if (v.item_value(g) > v.item_value(best)) best = g;
      for (int g = 0; g < m; ++g)
        if (g != best && v.item_value(g) == v.item_value(best)) return std::nullopt;
      return ItemSet{best};
    }
    case ValuationKind::Table: {
      std::optional<ItemSet> best;
      Value best_value;
      bool tied = false;
      for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
        if (std::popcount(mask) != k) continue;
        ItemSet s(mask);
        Value val = v(s);
        if (!best || val > best_value) {
          best = s;
          best_value = std::move(val);
          tied = false;
        } else if (val == best_value) {
          tied = true;
        }
      }
      if (tied) return std::nullopt;
      return best;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<std::vector<ItemSet>> top_tiers(const Instance& inst) {
  const int k = inst.items() / inst.agents();
  std::vector<ItemSet> out;
  for (int i = 0; i < inst.agents(); ++i) {
    auto t = best_k_set(inst.valuation(i), inst.items(), k);
    if (!t) return std::nullopt;
    out.push_back(*t);
  }
  return out;
}

Allocation solve_distinct_top_tiers(const Instance& inst) {
  const auto tops = top_tiers(inst);
  if (!tops) fail(ErrorCode::NotDistinctTiers, "some agent's top tier is not strict");
  ItemSet used;
  for (ItemSet t : *tops) {
    if (t.intersects(used)) fail(ErrorCode::NotDistinctTiers, "agents' top tiers overlap");
    used |= t;
  }
  Allocation alloc = Allocation::from_bundles(*tops, inst.items());
  int agent = 0;
  for (int g : alloc.pool()) alloc.give(agent++, g);
  if (!is_efx(inst, alloc))
    fail(ErrorCode::InternalInvariant, "distinct top tiers produced an allocation that is not EFX");
  return alloc;
}

}  // namespace fairdiv
