#include "support.hpp"

#include <algorithm>
#include <set>

#include "fairdiv/envy_state.hpp"
#include "fairdiv/gen.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/tiers.hpp"
#include "fairdiv/verify.hpp"

using namespace fairdiv;
using namespace fdtest;

namespace {

/// Atoms of the family of all valid cut sets, found by brute force: two
/// items share an atom iff no valid cut separates them.
std::set<ItemSet> finest_by_brute_force(const Instance& inst) {
  const int m = inst.items();
  std::vector<ItemSet> cuts;
  for (std::uint64_t bits = 0; bits < (std::uint64_t{1} << m); ++bits)
    if (is_tier_partition(inst, {ItemSet(bits), inst.all_items() - ItemSet(bits)}) || bits == 0)
      cuts.push_back(ItemSet(bits));
  std::set<ItemSet> atoms;
  ItemSet left = inst.all_items();
  while (!left.empty()) {
    const int g = left.first();
    ItemSet atom;
    for (int h : left) {
      bool together = true;
      for (ItemSet c : cuts)
        if (c.contains(g) != c.contains(h)) together = false;
      if (together) atom.insert(h);
    }
    atoms.insert(atom);
    left -= atom;
  }
  return atoms;
}

Instance tiered_instance(const char* family, int n, int m, std::uint64_t seed) {
  GenParams p;
  p.n = n;
  p.m = m;
  return generate(parse_family(family), p, seed);
}

}  // namespace

TEST_CASE("strict identical ranking gives singleton tiers") {
  const auto t = detect_tiers(identical(2, {4, 3, 2, 1}));
  CHECK(t.tiers == std::vector<ItemSet>{ItemSet{0}, ItemSet{1}, ItemSet{2}, ItemSet{3}});
  CHECK(t.size() == 1);
}

TEST_CASE("tiers cut at every common boundary") {
  const auto inst = additive_int({{9, 8, 7, 2, 1, 1}, {7, 9, 8, 1, 2, 1}});
  const auto t = detect_tiers(inst);
  CHECK(t.tiers == std::vector<ItemSet>{ItemSet{0, 1, 2}, ItemSet{3, 4}, ItemSet{5}});
  CHECK(t.size() == 3);
}

TEST_CASE("crossed preferences give one tier") {
  const auto t = detect_tiers(additive_int({{2, 1}, {1, 2}}));
  CHECK(t.tiers == std::vector<ItemSet>{ItemSet{0, 1}});
  CHECK(t.size() == 2);
}

TEST_CASE("detected tiers are valid and finest") {
  std::mt19937_64 rng(31);
  for (int trial = 0; trial < 1500; ++trial) {
    const int n = 1 + trial % 4;
    const int m = 1 + trial % 9;
    const auto inst = trial % 2 == 0 ? random_additive(rng, n, m, 0, 3)
                                     : tiered_instance("tiered(3,additive)", n, m, static_cast<std::uint64_t>(trial));
    const auto t = detect_tiers(inst);
    REQUIRE(is_tier_partition(inst, t.tiers));
    const std::set<ItemSet> got(t.tiers.begin(), t.tiers.end());
    REQUIRE(got == finest_by_brute_force(inst));
  }
}

TEST_CASE("one tier of three goes one item each") {
  const auto inst = additive_int({{1, 2, 3}, {3, 1, 2}, {2, 3, 1}});
  const auto r = solve_tiered(inst);
  for (int i = 0; i < 3; ++i) CHECK(r.allocation.bundle(i).size() == 1);
  REQUIRE(r.steps.size() == 1);
  CHECK(r.steps[0].kase == TierCase::One);
  CHECK(is_efx(inst, r.allocation));
}

TEST_CASE("two tiers of three") {
  const auto inst = additive_int({{9, 8, 7, 3, 2, 1}, {7, 9, 8, 1, 3, 2}, {8, 7, 9, 2, 1, 3}});
  CHECK(detect_tiers(inst).tiers == std::vector<ItemSet>{ItemSet{0, 1, 2}, ItemSet{3, 4, 5}});
  const auto r = solve_tiered(inst);
  CHECK(r.allocation.complete());
  CHECK(is_efx(inst, r.allocation));
  CHECK(exists_efx(inst));
  CHECK(r.fallback_activations == 0);
}

TEST_CASE("tiered solver preconditions") {
  check_error([] { solve_tiered(identical(2, {3, 2, 1})); }, ErrorCode::HypothesisViolated);
  check_error([] { solve_tiered(additive_int({{1, 2, 3, 4}, {2, 1, 4, 3}, {4, 3, 2, 1}})); },
              ErrorCode::HypothesisViolated);
  const auto bad = ValuationFunction::table(3, vals({0, 1, 1, 2, 0, 3, 1, 3}));
  check_error([&] { solve_tiered(Instance({bad, bad, bad})); }, ErrorCode::HypothesisViolated);
}

TEST_CASE("case labels") {
  CHECK(to_string(TierCase::One) == "1");
  CHECK(to_string(TierCase::TwoA) == "2a");
  CHECK(to_string(TierCase::ThreeC) == "3c");
  CHECK(to_string(TierCase::Fallback) == "fallback");
}

TEST_CASE("multiplicative tiers of size three") {
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    const auto inst = tiered_instance("tiered(3,multiplicative)", 3, 3 + static_cast<int>(seed % 10), seed);
    const auto r = solve_tiered(inst);
    INFO("seed " << seed);
    REQUIRE(r.allocation.complete());
    REQUIRE(naive_alpha_efx(inst, r.allocation, 1));
  }
}

TEST_CASE("mixed kinds and agent counts") {
  const char* families[] = {"tiered(3,additive)", "tiered(3,multiplicative)", "tiered(3,unit_demand)",
                            "tiered(2,additive)", "tiered(1,additive)"};
  for (std::uint64_t seed = 0; seed < 1500; ++seed) {
    const auto inst = tiered_instance(families[seed % 5], 3 + static_cast<int>(seed % 4),
                                      4 + static_cast<int>(seed % 12), seed);
    const auto r = solve_tiered(inst);
    INFO("seed " << seed);
    REQUIRE(naive_alpha_efx(inst, r.allocation, 1));
    REQUIRE(r.steps.size() == detect_tiers(inst).tiers.size());
    for (std::size_t k = 0; k < r.steps.size(); ++k) REQUIRE(r.steps[k].tier == static_cast<int>(k) + 1);
  }
}

TEST_CASE("small tiered instances agree with the oracle") {
  for (std::uint64_t seed = 0; seed < 600; ++seed) {
    const auto inst = tiered_instance(seed % 2 ? "tiered(3,additive)" : "tiered(3,multiplicative)", 3,
                                      3 + static_cast<int>(seed % 4), seed);
    REQUIRE(exists_efx(inst));
    const auto r = solve_tiered(inst);
    REQUIRE(r.allocation.complete());
    REQUIRE(is_efx(inst, r.allocation));
    REQUIRE(best_alpha_efx(inst).alpha == 1);
  }
}

TEST_CASE("the fallback search alone completes every tier") {
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto inst = tiered_instance("tiered(3,additive)", 3 + static_cast<int>(seed % 2),
                                      3 + static_cast<int>(seed % 7), seed);
    int hooked = 0;
    TieredOptions options;
    options.dispatch = false;
    options.on_fallback = [&](int, const Allocation&, ItemSet) { ++hooked; };
    const auto r = solve_tiered(inst, options);
    const int tiers = static_cast<int>(detect_tiers(inst).tiers.size());
    REQUIRE(is_efx(inst, r.allocation));
    REQUIRE(r.fallback_activations == tiers);
    REQUIRE(hooked == tiers);
    for (const auto& step : r.steps) REQUIRE(step.kase == TierCase::Fallback);
  }
}

TEST_CASE("rotations in the envy state never lower a value") {
  std::mt19937_64 rng(77);
  for (int trial = 0; trial < 1000; ++trial) {
    const auto inst = random_instance(rng, 4, 6, static_cast<ValuationKind>(trial % 3));
    const auto start = random_allocation(rng, 4, 6, true);
    EnvyState st(inst, start);
    std::vector<Value> before;
    for (int i = 0; i < 4; ++i) before.push_back(st.own_value(i));
    st.decycle();
    REQUIRE_FALSE(find_envy_cycle(st.graph()));
    REQUIRE(st.graph() == build_envy_graph(inst, st.allocation()));
    for (int i = 0; i < 4; ++i) {
      REQUIRE(st.own_value(i) >= before[static_cast<std::size_t>(i)]);
      for (int j = 0; j < 4; ++j) REQUIRE(st.value(i, j) == inst.value(i, st.allocation().bundle(j)));
    }
  }
}

TEST_CASE("distinct top tiers") {
  const auto inst = additive_int({{4, 3, 1, 1}, {1, 1, 4, 3}});
  const auto a = solve_distinct_top_tiers(inst);
  CHECK(a == bundles({ItemSet{0, 1}, ItemSet{2, 3}}, 4));
  CHECK(is_efx(inst, a));

  const auto five = additive_int({{4, 3, 1, 1, 1}, {1, 1, 4, 3, 1}});
  const auto b = solve_distinct_top_tiers(five);
  CHECK(b == bundles({ItemSet{0, 1, 4}, ItemSet{2, 3}}, 5));
  CHECK(is_efx(five, b));

  check_error([] { solve_distinct_top_tiers(identical(2, {4, 3, 1, 1})); }, ErrorCode::NotDistinctTiers);
  check_error([] { solve_distinct_top_tiers(additive_int({{4, 3, 3, 1}, {1, 1, 4, 3}})); },
              ErrorCode::NotDistinctTiers);
}

TEST_CASE("distinct top tiers on generated instances") {
  const auto family = parse_family("distinct_top_tiers");
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    GenParams p;
    p.n = 2 + static_cast<int>(seed % 4);
    p.m = p.n + static_cast<int>(seed % 13);
    const auto inst = generate(family, p, seed);
    REQUIRE(naive_alpha_efx(inst, solve_distinct_top_tiers(inst), 1));
  }
}
