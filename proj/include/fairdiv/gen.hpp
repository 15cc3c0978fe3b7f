#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include "fairdiv/core.hpp"

namespace fairdiv {

enum class FamilyKind {
  RandomAdditive,
  Random,  // any valuation kind, no structure
  CommonTopN,
  IdenticalTopRanking,
  BoundedInterval,
  DistinctFavorites,
  Tiered,
  DistinctTopTiers,
};

struct Family {
  FamilyKind kind = FamilyKind::RandomAdditive;
  int ell = 0;             // identical_top_ranking(l), bounded_interval(l)
  int max_tier_size = 3;   // tiered(size, kind)
  ValuationKind valuation = ValuationKind::Additive;  // tiered, random
};

/// Parses "random_additive", "random(table)", "common_top_n",
/// "identical_top_ranking(4)", "bounded_interval(6)", "distinct_favorites",
/// "tiered(3,multiplicative)", "distinct_top_tiers". Throws InvalidArgument.
Family parse_family(std::string_view text);
std::string to_string(const Family& family);

ValuationKind parse_valuation_kind(std::string_view text);
std::string_view to_string(ValuationKind kind);

struct GenParams {
  int n = 3;
  int m = 6;
  int lo = 1;
  int hi = 100;
};

/// Deterministic instance of the family for (params, seed). Structure is
/// drawn first and values are then sampled to fit it, so the result always
/// passes matches_family. Throws InfeasibleParams.
Instance generate(const Family& family, const GenParams& params, std::uint64_t seed);

/// The structural validator of the family (common top set, shared order,
/// bounded interval, distinct favorites, tier size, distinct top tiers).
bool matches_family(const Family& family, const Instance& inst);

}  // namespace fairdiv
