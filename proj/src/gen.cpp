#include "fairdiv/gen.hpp"

#include <algorithm>
#include <bit>
#include <charconv>
#include <numeric>
#include <random>
#include <vector>

#include "fairdiv/error.hpp"
#include "fairdiv/tiers.hpp"
#include "fairdiv/topn.hpp"

namespace fairdiv {

ValuationKind parse_valuation_kind(std::string_view text) {
  if (text == "additive") return ValuationKind::Additive;
  if (text == "multiplicative") return ValuationKind::Multiplicative;
  if (text == "unit_demand") return ValuationKind::UnitDemand;
  if (text == "table") return ValuationKind::Table;
  fail(ErrorCode::InvalidArgument, "unknown valuation kind '" + std::string(text) + "'");
}

std::string_view to_string(ValuationKind kind) {
  switch (kind) {
    case ValuationKind::Additive: return "additive";
    case ValuationKind::Multiplicative: return "multiplicative";
    case ValuationKind::UnitDemand: return "unit_demand";
    case ValuationKind::Table: return "table";
  }
  return "?";
}

namespace {

std::string trim(std::string_view s) {
  while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
  while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
  return std::string(s);
}

int parse_int(std::string_view s, std::string_view family) {
  const std::string t = trim(s);
  int out = 0;
  const auto [ptr, ec] = std::from_chars(t.data(), t.data() + t.size(), out);
  if (ec != std::errc{} || ptr != t.data() + t.size())
    fail(ErrorCode::InvalidArgument, "bad integer '" + t + "' in family '" + std::string(family) + "'");
  return out;
}

}  // namespace

Family parse_family(std::string_view text) {
  std::string_view name = text;
  std::vector<std::string> args;
  if (const auto open = text.find('('); open != std::string_view::npos) {
    if (text.back() != ')') fail(ErrorCode::InvalidArgument, "unbalanced parentheses in family '" + std::string(text) + "'");
    name = text.substr(0, open);
    std::string_view inner = text.substr(open + 1, text.size() - open - 2);
    while (true) {
      const auto comma = inner.find(',');
      args.push_back(trim(inner.substr(0, comma)));
      if (comma == std::string_view::npos) break;
      inner.remove_prefix(comma + 1);
    }
  }
  auto want = [&](std::size_t lo, std::size_t hi) {
    if (args.size() < lo || args.size() > hi)
      fail(ErrorCode::InvalidArgument, "wrong number of arguments for family '" + std::string(name) + "'");
  };

  Family f;
  if (name == "random_additive") {
    want(0, 0);
    f.kind = FamilyKind::RandomAdditive;
  } else if (name == "random") {
    want(1, 1);
    f.kind = FamilyKind::Random;
    f.valuation = parse_valuation_kind(args[0]);
  } else if (name == "common_top_n") {
    want(0, 0);
    f.kind = FamilyKind::CommonTopN;
  } else if (name == "identical_top_ranking" || name == "bounded_interval") {
    want(1, 1);
    f.kind = name == "bounded_interval" ? FamilyKind::BoundedInterval : FamilyKind::IdenticalTopRanking;
    f.ell = parse_int(args[0], text);
    if (f.ell < 1) fail(ErrorCode::InvalidArgument, "the family parameter must be positive");
  } else if (name == "distinct_favorites") {
    want(0, 0);
    f.kind = FamilyKind::DistinctFavorites;
  } else if (name == "tiered") {
    want(0, 2);
    f.kind = FamilyKind::Tiered;
    if (!args.empty()) f.max_tier_size = parse_int(args[0], text);
    if (args.size() > 1) f.valuation = parse_valuation_kind(args[1]);
    if (f.max_tier_size < 1 || f.max_tier_size > 3)
      fail(ErrorCode::InvalidArgument, "tiered families support tier sizes 1 to 3");
    if (f.valuation == ValuationKind::Table)
      fail(ErrorCode::InvalidArgument, "tiered families use additive, multiplicative or unit_demand values");
  } else if (name == "distinct_top_tiers") {
    want(0, 0);
    f.kind = FamilyKind::DistinctTopTiers;
  } else {
    fail(ErrorCode::InvalidArgument, "unknown family '" + std::string(text) + "'");
  }
  return f;
}

std::string to_string(const Family& f) {
  switch (f.kind) {
    case FamilyKind::RandomAdditive: return "random_additive";
    case FamilyKind::Random: return "random(" + std::string(to_string(f.valuation)) + ")";
    case FamilyKind::CommonTopN: return "common_top_n";
    case FamilyKind::IdenticalTopRanking: return "identical_top_ranking(" + std::to_string(f.ell) + ")";
    case FamilyKind::BoundedInterval: return "bounded_interval(" + std::to_string(f.ell) + ")";
    case FamilyKind::DistinctFavorites: return "distinct_favorites";
    case FamilyKind::Tiered:
      return "tiered(" + std::to_string(f.max_tier_size) + "," + std::string(to_string(f.valuation)) + ")";
    case FamilyKind::DistinctTopTiers: return "distinct_top_tiers";
  }
  return "?";
}

namespace {

class Sampler {
public:
  explicit Sampler(std::uint64_t seed) : rng_(seed) {}

  int uniform(int lo, int hi) { return std::uniform_int_distribution<int>(lo, hi)(rng_); }

  std::vector<int> permutation(int m) {
    std::vector<int> p(static_cast<std::size_t>(m));
    std::iota(p.begin(), p.end(), 0);
    // Fisher-Yates with our own draws keeps the output independent of the
    // standard library's shuffle.
    for (int k = m - 1; k > 0; --k) std::swap(p[static_cast<std::size_t>(k)], p[static_cast<std::size_t>(uniform(0, k))]);
    return p;
  }

private:
  std::mt19937_64 rng_;
};

ValuationFunction make(ValuationKind kind, std::vector<Value> values) {
  switch (kind) {
    case ValuationKind::Additive: return ValuationFunction::additive(std::move(values));
    case ValuationKind::Multiplicative: return ValuationFunction::multiplicative(std::move(values));
    case ValuationKind::UnitDemand: return ValuationFunction::unit_demand(std::move(values));
    case ValuationKind::Table: break;
  }
  fail(ErrorCode::InvalidArgument, "tables are not built from item values");
}

/// Monotone closure of random subset scores: v(S) = max over T in S of r(T).
ValuationFunction random_table(Sampler& rng, int m, int lo, int hi) {
  if (m > kMaxTableItems)
    fail(ErrorCode::InfeasibleParams, "table valuations support at most " + std::to_string(kMaxTableItems) + " items");
  const std::size_t subsets = std::size_t{1} << m;
  std::vector<long> best(subsets, 0);
  for (std::size_t s = 1; s < subsets; ++s) {
    // Scores grow with size so that larger bundles are usually worth more.
    long v = static_cast<long>(rng.uniform(lo, hi)) * std::popcount(s);
    for (int g = 0; g < m; ++g)
      if ((s >> g) & 1U) v = std::max(v, best[s & ~(std::size_t{1} << g)]);
    best[s] = v;
  }
  std::vector<Value> by_mask;
  by_mask.reserve(subsets);
  for (long v : best) by_mask.emplace_back(v);
  return ValuationFunction::table(m, std::move(by_mask));
}

void check_params(const GenParams& p) {
  if (p.n < 1 || p.m < 1) fail(ErrorCode::InfeasibleParams, "need n >= 1 and m >= 1");
  if (p.n > kMaxAgents || p.m > kMaxItems)
    fail(ErrorCode::InfeasibleParams, "at most " + std::to_string(kMaxAgents) + " agents and " +
                                          std::to_string(kMaxItems) + " items are supported");
  if (p.lo < 0 || p.hi < p.lo || p.hi < 1) fail(ErrorCode::InfeasibleParams, "need 0 <= lo <= hi and hi >= 1");
}

std::vector<ValuationFunction> random_kind(Sampler& rng, const GenParams& p, ValuationKind kind) {
  std::vector<ValuationFunction> out;
  for (int i = 0; i < p.n; ++i) {
    if (kind == ValuationKind::Table) {
      out.push_back(random_table(rng, p.m, p.lo, p.hi));
      continue;
    }
    const int lo = kind == ValuationKind::Multiplicative ? std::max(p.lo, 1) : p.lo;
    std::vector<Value> v;
    for (int g = 0; g < p.m; ++g) v.emplace_back(rng.uniform(lo, p.hi));
    out.push_back(make(kind, std::move(v)));
  }
  return out;
}

std::vector<ValuationFunction> common_top(Sampler& rng, const GenParams& p) {
  if (p.m < p.n) fail(ErrorCode::InfeasibleParams, "common_top_n needs m >= n");
  const std::vector<int> perm = rng.permutation(p.m);
  std::vector<ValuationFunction> out;
  for (int i = 0; i < p.n; ++i) {
    // Each agent draws her own threshold: top items above, the rest below.
    const int cut = rng.uniform(p.lo, p.hi);
    std::vector<Value> v(static_cast<std::size_t>(p.m));
    for (int k = 0; k < p.m; ++k) {
      const int g = perm[static_cast<std::size_t>(k)];
      v[static_cast<std::size_t>(g)] = k < p.n ? rng.uniform(cut, p.hi) : rng.uniform(p.lo, cut);
    }
    out.push_back(ValuationFunction::additive(std::move(v)));
  }
  return out;
}

std::vector<ValuationFunction> shared_order(Sampler& rng, const GenParams& p, int ell) {
  if (ell > p.m) fail(ErrorCode::InfeasibleParams, "identical_top_ranking needs l <= m");
  const std::vector<int> perm = rng.permutation(p.m);
  std::vector<ValuationFunction> out;
  for (int i = 0; i < p.n; ++i) {
    std::vector<int> top;
    for (int k = 0; k < ell; ++k) top.push_back(rng.uniform(p.lo, p.hi));
    std::sort(top.begin(), top.end(), std::greater<>());
    std::vector<Value> v(static_cast<std::size_t>(p.m));
    for (int k = 0; k < p.m; ++k) {
      const int g = perm[static_cast<std::size_t>(k)];
      v[static_cast<std::size_t>(g)] = k < ell ? top[static_cast<std::size_t>(k)] : rng.uniform(p.lo, top.back());
    }
    out.push_back(ValuationFunction::additive(std::move(v)));
  }
  return out;
}

std::vector<ValuationFunction> interval(Sampler& rng, const GenParams& p, int ell) {
  if (ell > p.m) fail(ErrorCode::InfeasibleParams, "bounded_interval needs l <= m");
  std::vector<ValuationFunction> out;
  for (int i = 0; i < p.n; ++i) {
    // Top items in [x, 2x], everything else at most x.
    const int x = rng.uniform(std::max(p.lo, 1), p.hi);
    const std::vector<int> perm = rng.permutation(p.m);
    std::vector<Value> v(static_cast<std::size_t>(p.m));
    for (int k = 0; k < p.m; ++k) {
      const int g = perm[static_cast<std::size_t>(k)];
      v[static_cast<std::size_t>(g)] = k < ell ? rng.uniform(x, 2 * x) : rng.uniform(std::min(p.lo, x), x);
    }
    out.push_back(ValuationFunction::additive(std::move(v)));
  }
  return out;
}

std::vector<ValuationFunction> favorites(Sampler& rng, const GenParams& p) {
  if (p.m < 2 * p.n) fail(ErrorCode::InfeasibleParams, "distinct_favorites needs m >= 2n");
  const std::vector<int> perm = rng.permutation(p.m);
  std::vector<ValuationFunction> out;
  for (int i = 0; i < p.n; ++i) {
    std::vector<Value> v(static_cast<std::size_t>(p.m));
    for (int g = 0; g < p.m; ++g) v[static_cast<std::size_t>(g)] = rng.uniform(p.lo, p.hi);
    v[static_cast<std::size_t>(perm[static_cast<std::size_t>(i)])] = rng.uniform(p.hi + 1, 2 * p.hi + 1);
    out.push_back(ValuationFunction::additive(std::move(v)));
  }
  return out;
}

std::vector<ValuationFunction> tiered(Sampler& rng, const GenParams& p, int max_size, ValuationKind kind) {
  // Tiers are runs of a random item order with sizes in [1, max_size]. Each
  // tier gets its own narrow value band, bands strictly descending, so ties
  // only happen inside a tier.
  const std::vector<int> perm = rng.permutation(p.m);
  std::vector<int> tier_of(static_cast<std::size_t>(p.m));
  int tiers = 0;
  for (int k = 0; k < p.m; ++tiers) {
    const int size = std::min(rng.uniform(1, max_size), p.m - k);
    for (int j = 0; j < size; ++j) tier_of[static_cast<std::size_t>(perm[static_cast<std::size_t>(k + j)])] = tiers;
    k += size;
  }
  constexpr int kWidth = 4;
  const int base = std::max(p.lo, 1);
  std::vector<ValuationFunction> out;
  for (int i = 0; i < p.n; ++i) {
    std::vector<Value> v(static_cast<std::size_t>(p.m));
    for (int g = 0; g < p.m; ++g) {
      const int band = tiers - 1 - tier_of[static_cast<std::size_t>(g)];
      const int lo = base + band * (kWidth + 1);
      v[static_cast<std::size_t>(g)] = rng.uniform(lo, lo + kWidth);
    }
    out.push_back(make(kind, std::move(v)));
  }
  return out;
}

std::vector<ValuationFunction> disjoint_tops(Sampler& rng, const GenParams& p) {
  if (p.m < p.n) fail(ErrorCode::InfeasibleParams, "distinct_top_tiers needs m >= n");
  const int k = p.m / p.n;
  const std::vector<int> perm = rng.permutation(p.m);
  std::vector<ValuationFunction> out;
  for (int i = 0; i < p.n; ++i) {
    std::vector<Value> v(static_cast<std::size_t>(p.m));
    for (int g = 0; g < p.m; ++g) v[static_cast<std::size_t>(g)] = rng.uniform(p.lo, p.hi);
    for (int j = 0; j < k; ++j)
      v[static_cast<std::size_t>(perm[static_cast<std::size_t>(i * k + j)])] = rng.uniform(p.hi + 1, 2 * p.hi + 1);
    out.push_back(ValuationFunction::additive(std::move(v)));
  }
  return out;
}

}  // namespace

Instance generate(const Family& family, const GenParams& params, std::uint64_t seed) {
  check_params(params);
  Sampler rng(seed);
  switch (family.kind) {
    case FamilyKind::RandomAdditive: return Instance(random_kind(rng, params, ValuationKind::Additive));
    case FamilyKind::Random: return Instance(random_kind(rng, params, family.valuation));
    case FamilyKind::CommonTopN: return Instance(common_top(rng, params));
    case FamilyKind::IdenticalTopRanking: return Instance(shared_order(rng, params, family.ell));
    case FamilyKind::BoundedInterval: return Instance(interval(rng, params, family.ell));
    case FamilyKind::DistinctFavorites: return Instance(favorites(rng, params));
    case FamilyKind::Tiered: return Instance(tiered(rng, params, family.max_tier_size, family.valuation));
    case FamilyKind::DistinctTopTiers: return Instance(disjoint_tops(rng, params));
  }
  fail(ErrorCode::InternalInvariant, "unhandled family");
}

bool matches_family(const Family& family, const Instance& inst) {
  switch (family.kind) {
    case FamilyKind::RandomAdditive: return inst.all_additive();
    case FamilyKind::Random: return inst.all_of_kind(family.valuation);
    case FamilyKind::CommonTopN: return inst.all_additive() && common_top_set(inst, inst.agents()).has_value();
    case FamilyKind::IdenticalTopRanking:
      return inst.all_additive() && common_top_order(inst, family.ell).has_value();
    case FamilyKind::BoundedInterval: return inst.all_additive() && has_bounded_interval(inst, family.ell);
    case FamilyKind::DistinctFavorites:
      return inst.all_additive() && inst.items() >= 2 * inst.agents() && distinct_favorites(inst).has_value();
    case FamilyKind::Tiered:
      return inst.all_of_kind(family.valuation) && detect_tiers(inst).size() <= family.max_tier_size;
    case FamilyKind::DistinctTopTiers: {
      const auto tops = top_tiers(inst);
      if (!tops) return false;
      ItemSet used;
      for (ItemSet t : *tops) {
        if (t.intersects(used)) return false;
        used |= t;
      }
      return true;
    }
  }
  return false;
}

}  // namespace fairdiv
