#include "support.hpp"

#include "fairdiv/core.hpp"

using namespace fairdiv;
using namespace fdtest;

TEST_CASE("values parse and print as exact rationals") {
  CHECK(parse_value("3/6") == ratio(1, 2));
  CHECK(parse_value("2") == 2);
  CHECK(parse_value("1.25") == ratio(5, 4));
  CHECK(format_value(ratio(4, 5)) == "4/5");
  CHECK(format_value(value_of(1)) == "1/1");
  for (const char* bad : {"", "-1", "1/0", "abc", "1/", "/2", "1.2.3"})
    check_error([&] { parse_value(bad); }, ErrorCode::ParseError);
}

TEST_CASE("item sets") {
  ItemSet s{0, 2, 5};
  CHECK(s.size() == 3);
  CHECK(s.contains(2));
  CHECK_FALSE(s.contains(1));
  CHECK(s.first() == 0);
  CHECK(s.last() == 5);
  CHECK(s.to_vector() == std::vector<int>{0, 2, 5});
  CHECK((s - ItemSet{2}) == ItemSet{0, 5});
  CHECK(ItemSet::universe(3) == ItemSet{0, 1, 2});
  CHECK(ItemSet::universe(64).size() == 64);
  CHECK(ItemSet{}.first() == -1);
}

TEST_CASE("bundle values by kind") {
  const auto add = ValuationFunction::additive(vals({3, 2, 1}));
  CHECK(bundle_value(add, ItemSet{0, 2}) == 4);
  CHECK(bundle_value(add, ItemSet{}) == 0);
  const auto mul = ValuationFunction::multiplicative(vals({2, 3, 1}));
  CHECK(bundle_value(mul, ItemSet{0, 1}) == 6);
  CHECK(bundle_value(mul, ItemSet{}) == 1);
  const auto ud = ValuationFunction::unit_demand(vals({5, 1, 7}));
  CHECK(bundle_value(ud, ItemSet{0, 1}) == 5);
  CHECK(bundle_value(ud, ItemSet{}) == 0);
  const auto tab = ValuationFunction::table(2, vals({0, 1, 2, 2}));
  CHECK(bundle_value(tab, ItemSet{0, 1}) == 2);
  CHECK(tab.item_value(1) == 2);
  check_error([&] { bundle_value(add, ItemSet{3}); }, ErrorCode::InvalidItem);
}

TEST_CASE("valuation constructors reject bad input") {
  check_error([] { ValuationFunction::multiplicative({ratio(1, 2)}); }, ErrorCode::InvalidInstance);
  check_error([] { ValuationFunction::additive({value_of(-1)}); }, ErrorCode::InvalidInstance);
  check_error([] { ValuationFunction::table(2, vals({0, 2, 1, 1})); }, ErrorCode::InvalidInstance);
  check_error([] { ValuationFunction::table(2, vals({0, 1, 1})); }, ErrorCode::InvalidInstance);
  check_error([] { Instance({}); }, ErrorCode::InvalidInstance);
  check_error(
      [] {
        Instance({ValuationFunction::additive(vals({1, 2})), ValuationFunction::additive(vals({1}))});
      },
      ErrorCode::InvalidInstance);
}

TEST_CASE("allocations keep bundles and pool a partition") {
  check_error([] { bundles({ItemSet{0, 1}, ItemSet{1}}, 3); }, ErrorCode::InvalidAllocation);
  check_error([] { bundles({ItemSet{3}}, 3); }, ErrorCode::InvalidAllocation);
  Allocation a(2, 3);
  CHECK(a.pool() == ItemSet{0, 1, 2});
  a.give(0, 1);
  CHECK(a.owner(1) == 0);
  CHECK(a.owner(0) == -1);
  check_error([&] { a.give(1, 1); }, ErrorCode::InvalidItem);
  a.give(1, 0);
  const int cycle[] = {0, 1};
  a.rotate(cycle);
  CHECK(a.bundle(0) == ItemSet{0});
  CHECK(a.bundle(1) == ItemSet{1});
  CHECK_FALSE(a.complete());
}

TEST_CASE("monotone on every subset chain") {
  std::mt19937_64 rng(11);
  for (auto kind : {ValuationKind::Additive, ValuationKind::Multiplicative, ValuationKind::UnitDemand,
                    ValuationKind::Table}) {
    for (int trial = 0; trial < 4; ++trial) {
      const int m = kind == ValuationKind::Table ? 8 : 10;
      const auto v = random_valuation(rng, kind, m);
      for (std::uint64_t t = 0; t < (std::uint64_t{1} << m); ++t)
        for (int g : ItemSet(t)) REQUIRE(v(ItemSet(t).without(g)) <= v(ItemSet(t)));
    }
  }
}

TEST_CASE("envy graph examples") {
  auto g = build_envy_graph(identical(2, {1, 1}), bundles({ItemSet{0}, ItemSet{1}}, 2));
  CHECK(g.edges().empty());

  g = build_envy_graph(additive_int({{1, 2}, {2, 1}}), bundles({ItemSet{0}, ItemSet{1}}, 2));
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{0, 1}, {1, 0}});

  g = build_envy_graph(identical(3, {3, 2, 1}), bundles({ItemSet{0}, ItemSet{1}, ItemSet{2}}, 3));
  CHECK(g.edges() == std::vector<std::pair<int, int>>{{1, 0}, {2, 0}, {2, 1}});
  CHECK(g.sources() == std::vector<int>{2});
}

TEST_CASE("envy graph has no self loops and is deterministic") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 500; ++trial) {
    const auto inst = random_additive(rng, 4, 6);
    const auto a = random_allocation(rng, 4, 6, true);
    const auto g = build_envy_graph(inst, a);
    for (int i = 0; i < 4; ++i) CHECK_FALSE(g.has_edge(i, i));
    CHECK(g == build_envy_graph(inst, a));
    for (int i = 0; i < 4; ++i)
      for (int j = 0; j < 4; ++j)
        if (i != j) CHECK(g.has_edge(i, j) == (inst.value(i, a.bundle(i)) < inst.value(i, a.bundle(j))));
  }
}

TEST_CASE("envy levels") {
  EnvyGraph empty(3);
  auto r = envy_levels(empty);
  REQUIRE(std::holds_alternative<std::vector<int>>(r));
  CHECK(std::get<std::vector<int>>(r) == std::vector<int>{0, 0, 0});

  EnvyGraph path(3);
  path.add_edge(0, 1);
  path.add_edge(1, 2);
  r = envy_levels(path);
  REQUIRE(std::holds_alternative<std::vector<int>>(r));
  CHECK(std::get<std::vector<int>>(r) == std::vector<int>{0, 1, 2});

  EnvyGraph two(2);
  two.add_edge(0, 1);
  two.add_edge(1, 0);
  r = envy_levels(two);
  REQUIRE(std::holds_alternative<EnvyCycle>(r));
  CHECK(std::get<EnvyCycle>(r).agents == std::vector<int>{0, 1});
}

TEST_CASE("shortest cycle through the lowest agent on a cycle") {
  EnvyGraph g(4);
  g.add_edge(1, 2);
  g.add_edge(2, 3);
  g.add_edge(3, 1);
  g.add_edge(1, 3);
  g.add_edge(0, 1);
  const auto c = find_envy_cycle(g);
  REQUIRE(c);
  CHECK(c->agents == std::vector<int>{1, 3});
  CHECK(simple_cycles(g).size() == 2);
  EnvyGraph dag(3);
  dag.add_edge(0, 2);
  CHECK_FALSE(find_envy_cycle(dag));
}

TEST_CASE("cancelability examples") {
  CHECK(check_cancelable(ValuationFunction::additive(vals({1, 2, 3})), 3).cancelable);
  CHECK(check_cancelable(ValuationFunction::unit_demand(vals({5, 1})), 2).cancelable);

  const auto tab = ValuationFunction::table(3, vals({0, 1, 1, 2, 0, 3, 1, 3}));
  const auto r = check_cancelable(tab, 3);
  CHECK_FALSE(r.cancelable);
  REQUIRE(r.witness);
  CHECK(r.witness->s == ItemSet{0});
  CHECK(r.witness->t == ItemSet{1});
  CHECK(r.witness->g == 2);
  CHECK(is_cancel_witness(tab, *r.witness));

  check_error([] { check_cancelable(ValuationFunction::additive(std::vector<Value>(13, 1)), 13); },
              ErrorCode::TooLargeForExhaustiveCheck);
}

TEST_CASE("built-in kinds pass the exhaustive cancelability check") {
  std::mt19937_64 rng(3);
  for (auto kind : {ValuationKind::Additive, ValuationKind::Multiplicative, ValuationKind::UnitDemand})
    for (int trial = 0; trial < 5; ++trial) {
      const auto v = random_valuation(rng, kind, 10);
      CHECK(check_cancelable(v, 10).cancelable);
    }
}

TEST_CASE("union of cancelable comparisons on sampled quadruples") {
  std::mt19937_64 rng(17);
  const int m = 8;
  std::uniform_int_distribution<int> part(0, 2);
  int checked = 0;
  for (auto kind : {ValuationKind::Additive, ValuationKind::Multiplicative, ValuationKind::UnitDemand}) {
    const auto v = random_valuation(rng, kind, m);
    for (int trial = 0; trial < 20000; ++trial) {
      // Each item lands in S, Q or neither, and independently in T, R or neither.
      ItemSet s, q, t, r;
      for (int g = 0; g < m; ++g) {
        const int a = part(rng), b = part(rng);
        if (a == 1) s.insert(g);
        if (a == 2) q.insert(g);
        if (b == 1) t.insert(g);
        if (b == 2) r.insert(g);
      }
      if (v(s) >= v(t) && v(q) >= v(r)) {
        ++checked;
        REQUIRE(v(s | q) >= v(t | r));
      }
    }
  }
  CHECK(checked >= 10000);
}

TEST_CASE("common top sets and tier partitions") {
  const auto inst = additive_int({{10, 9, 5, 1}, {9, 10, 2, 2}});
  CHECK(is_common_top_set(inst, ItemSet{0, 1}));
  CHECK_FALSE(is_common_top_set(inst, ItemSet{0, 2}));
  CHECK(is_tier_partition(inst, {ItemSet{0, 1}, ItemSet{2, 3}}));
  CHECK_FALSE(is_tier_partition(inst, {ItemSet{0}, ItemSet{1, 2, 3}}));
  CHECK_FALSE(is_tier_partition(inst, {ItemSet{0, 1}, ItemSet{2}}));
}
