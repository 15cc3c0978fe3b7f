#include "fairdiv/oracle.hpp"

#include "fairdiv/error.hpp"
#include "fairdiv/verify.hpp"

namespace fairdiv {

std::uint64_t allocation_count(int n, int m, bool include_partial) {
  if (n < 1 || m < 0) fail(ErrorCode::InvalidArgument, "allocation_count needs n >= 1 and m >= 0");
  const std::uint64_t base = static_cast<std::uint64_t>(n) + (include_partial ? 1 : 0);
  std::uint64_t total = 1;
  for (int k = 0; k < m; ++k) {
    if (total > kOracleLimit / base)
      fail(ErrorCode::TooLarge, std::to_string(base) + "^" + std::to_string(m) +
                                    " assignments exceed the exhaustive search limit of 10^8");
    total *= base;
  }
  return total;
}

namespace {

/// Odometer over item destinations; destination n means the pool.
template <typename Visit>
void odometer(int n, int m, bool include_partial, Visit&& visit) {
  allocation_count(n, m, include_partial);
  const int base = n + (include_partial ? 1 : 0);
  std::vector<int> dest(static_cast<std::size_t>(m), 0);
  std::vector<std::uint64_t> masks(static_cast<std::size_t>(base), 0);
  masks[0] = ItemSet::universe(m).bits();
  while (true) {
    if (!visit(masks)) return;
    int k = m - 1;
    for (; k >= 0; --k) {
      const auto g = static_cast<std::size_t>(k);
      masks[static_cast<std::size_t>(dest[g])] &= ~(std::uint64_t{1} << k);
      if (++dest[g] < base) {
        masks[static_cast<std::size_t>(dest[g])] |= std::uint64_t{1} << k;
        break;
      }
      dest[g] = 0;
      masks[0] |= std::uint64_t{1} << k;
    }
    if (k < 0) return;
  }
}

Allocation to_allocation(const std::vector<std::uint64_t>& masks, int n, int m) {
  std::vector<ItemSet> bundles;
  for (int i = 0; i < n; ++i) bundles.emplace_back(masks[static_cast<std::size_t>(i)]);
  return Allocation::from_bundles(std::move(bundles), m);
}

/// v_i(S) for every agent, tabulated over all subsets when m is small.
class ValueCache {
public:
  explicit ValueCache(const Instance& inst) : inst_(inst) {
    if (inst.items() > 16) return;
    const std::uint64_t subsets = std::uint64_t{1} << inst.items();
    table_.resize(static_cast<std::size_t>(inst.agents()));
    for (int i = 0; i < inst.agents(); ++i) {
      auto& row = table_[static_cast<std::size_t>(i)];
      row.reserve(subsets);
      for (std::uint64_t s = 0; s < subsets; ++s) row.push_back(inst.value(i, ItemSet(s)));
    }
  }

  Value operator()(int agent, std::uint64_t set) const {
    if (table_.empty()) return inst_.value(agent, ItemSet(set));
    return table_[static_cast<std::size_t>(agent)][set];
  }

private:
  const Instance& inst_;
  std::vector<std::vector<Value>> table_;
};

}  // namespace

void enumerate_allocations(int n, int m, bool include_partial,
                           const std::function<bool(const Allocation&)>& visit) {
  odometer(n, m, include_partial, [&](const std::vector<std::uint64_t>& masks) {
    return visit(to_allocation(masks, n, m));
  });
}

BestAlpha best_alpha_efx(const Instance& inst) {
  const int n = inst.agents();
  const int m = inst.items();
  const ValueCache value(inst);
  std::optional<BestAlpha> best;
  odometer(n, m, false, [&](const std::vector<std::uint64_t>& masks) {
    Value alpha = 1;
    for (int i = 0; i < n; ++i) {
      const Value own = value(i, masks[static_cast<std::size_t>(i)]);
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const std::uint64_t b = masks[static_cast<std::size_t>(j)];
        for (int g : ItemSet(b)) {
          const Value rest = value(i, b & ~(std::uint64_t{1} << g));
          if (sgn(rest) == 0 || own >= alpha * rest) continue;
          alpha = own / rest;
          // Cannot beat the incumbent any more.
          if (best && alpha <= best->alpha) return true;
        }
      }
    }
    if (!best || alpha > best->alpha) best = BestAlpha{alpha, to_allocation(masks, n, m)};
    return best->alpha < 1;
  });
  return std::move(*best);
}

std::optional<Allocation> exists_efx(const Instance& inst) {
  const int n = inst.agents();
  const int m = inst.items();
  const ValueCache value(inst);
  std::optional<Allocation> found;
  odometer(n, m, false, [&](const std::vector<std::uint64_t>& masks) {
    for (int i = 0; i < n; ++i) {
      const Value own = value(i, masks[static_cast<std::size_t>(i)]);
      for (int j = 0; j < n; ++j) {
        if (i == j) continue;
        const std::uint64_t b = masks[static_cast<std::size_t>(j)];
        for (int g : ItemSet(b))
          if (value(i, b & ~(std::uint64_t{1} << g)) > own) return true;
      }
    }
    found = to_allocation(masks, n, m);
    return false;
  });
  return found;
}

}  // namespace fairdiv
