#include "support.hpp"

#include "fairdiv/gen.hpp"
#include "fairdiv/oracle.hpp"
#include "fairdiv/topn.hpp"
#include "fairdiv/verify.hpp"

using namespace fairdiv;
using namespace fdtest;

TEST_CASE("common top sets") {
  CHECK(common_top_set(identical(2, {5, 4, 3, 2}), 2) == ItemSet{0, 1});
  CHECK(common_top_set(additive_int({{10, 9, 5, 1}, {9, 10, 2, 2}}), 2) == ItemSet{0, 1});
  CHECK_FALSE(common_top_set(additive_int({{10, 9, 5, 1}, {9, 2, 10, 2}}), 2));
  CHECK(common_top_set(identical(2, {3, 1, 1, 1}), 2) == ItemSet{0, 1});
  const Instance ud({ValuationFunction::unit_demand(vals({1, 2}))});
  check_error([&] { common_top_set(ud, 1); }, ErrorCode::UnsupportedValuation);
  check_error([] { common_top_set(identical(1, {1, 2}), 3); }, ErrorCode::InvalidArgument);
}

TEST_CASE("two non-content agents") {
  const auto inst = additive_int({{10, 9, 5, 1}, {9, 10, 2, 2}});
  const auto p = build_top_n_partial(inst);
  CHECK_FALSE(p.split.agents[0].content);
  CHECK_FALSE(p.split.agents[1].content);
  CHECK(p.partial == bundles({ItemSet{0, 2}, ItemSet{1, 3}}, 4));
  const auto r = solve_top_n(inst);
  CHECK(is_efx(inst, r.allocation));
}

TEST_CASE("one content agent") {
  const auto inst = additive({{10, 2, 1, ratio(1, 2)}, {2, 10, 1, ratio(1, 2)}});
  const auto p = build_top_n_partial(inst);
  CHECK(p.split.agents[0].content);
  CHECK_FALSE(p.split.agents[1].content);
  CHECK(p.partial == bundles({ItemSet{0}, ItemSet{1, 2}}, 4));
  const auto r = solve_top_n(inst);
  CHECK(r.allocation == bundles({ItemSet{0, 3}, ItemSet{1, 2}}, 4));
  CHECK(is_efx(inst, r.allocation));
}

TEST_CASE("top-n preconditions") {
  check_error([] { solve_top_n(identical(2, {2, 1})); }, ErrorCode::HypothesisViolated);
  check_error([] { solve_top_n(additive_int({{10, 9, 5, 1}, {9, 2, 10, 2}})); }, ErrorCode::NotCommon);
  const Instance mul({ValuationFunction::multiplicative(vals({2, 3, 1})),
                      ValuationFunction::multiplicative(vals({2, 3, 1}))});
  check_error([&] { solve_top_n(mul); }, ErrorCode::UnsupportedValuation);
}

TEST_CASE("top-n partial structure and guarantees") {
  const auto family = parse_family("common_top_n");
  for (std::uint64_t seed = 0; seed < 3000; ++seed) {
    GenParams p;
    p.n = 2 + static_cast<int>(seed % 4);
    p.m = p.n + 1 + static_cast<int>(seed % 11);
    const auto inst = generate(family, p, seed);
    const auto part = build_top_n_partial(inst);
    INFO("seed " << seed);
    REQUIRE(part.split.top.size() == p.n);
    REQUIRE((part.split.top | part.split.bottom) == inst.all_items());
    REQUIRE_FALSE(part.partial.pool().intersects(part.split.top));
    for (int i = 0; i < p.n; ++i) {
      const auto& info = part.split.agents[static_cast<std::size_t>(i)];
      const ItemSet b = part.partial.bundle(i);
      if (info.content) {
        REQUIRE(b == ItemSet{info.best_top});
      } else {
        REQUIRE(b.size() == 2);
        REQUIRE((b & part.split.top).size() == 1);
        REQUIRE((b & part.split.bottom).size() == 1);
      }
    }
    const auto cert = measure_partial(inst, part.partial);
    REQUIRE(cert.alpha >= ratio(2, 3));
    if (cert.beta) REQUIRE(*cert.beta >= 2);
    const auto r = solve_top_n(inst);
    REQUIRE(r.certificate.certified_factor >= ratio(2, 3));
    REQUIRE(naive_alpha_efx(inst, r.allocation, ratio(2, 3)));
    REQUIRE(naive_ef1(inst, r.allocation));
  }
}

TEST_CASE("both content-test readings stay under the oracle") {
  const auto family = parse_family("common_top_n");
  int sequential_below = 0, initial_below = 0, differ = 0;
  for (std::uint64_t seed = 0; seed < 400; ++seed) {
    GenParams p;
    p.n = 2 + static_cast<int>(seed % 2);
    p.m = p.n + 1 + static_cast<int>(seed % (7 - p.n));
    p.hi = 12;
    const auto inst = generate(family, p, seed);
    const Value best = best_alpha_efx(inst).alpha;
    const auto seq = solve_top_n(inst);
    const auto init = run_framework(
        inst, [](const Instance& x) { return build_top_n_partial(x, ContentTest::InitialSets).partial; });
    const Value a_seq = max_alpha_efx(inst, seq.allocation);
    const Value a_init = max_alpha_efx(inst, init.allocation);
    REQUIRE(a_seq <= best);
    REQUIRE(a_init <= best);
    REQUIRE(naive_alpha_efx(inst, init.allocation, init.certificate.certified_factor));
    sequential_below += a_seq < ratio(2, 3);
    initial_below += a_init < ratio(2, 3);
    differ += !(seq.allocation == init.allocation);
  }
  CHECK(sequential_below == 0);
  CHECK(initial_below == 0);
  MESSAGE("allocations differing between readings: " << differ);
}

TEST_CASE("relaxed top ranking") {
  const auto family = parse_family("identical_top_ranking(2)");
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    GenParams p;
    p.n = 2;
    p.m = 5;
    const auto inst = generate(family, p, seed);
    REQUIRE(solve_relaxed_top_ranking(inst, 2).certificate.certified_factor >= ratio(1, 2));
  }
  const auto six = identical(2, {9, 7, 7, 4, 2, 1});
  const auto r = solve_relaxed_top_ranking(six, 4);
  CHECK(is_efx(six, r.partial));
  CHECK(r.certificate.certified_factor >= ratio(2, 3));

  const auto eight = identical(2, {8, 7, 6, 5, 4, 3, 2, 1});
  CHECK(max_alpha_efx(eight, solve_relaxed_top_ranking(eight, 8).allocation) >= ratio(4, 5));

  check_error([] { solve_relaxed_top_ranking(additive_int({{3, 2, 1}, {2, 3, 1}}), 2); },
              ErrorCode::NotCommonOrder);
}

TEST_CASE("bounded interval") {
  const auto flat = identical(2, {5, 5, 5, 5, 1});
  CHECK(solve_bounded_interval(flat, 4).certificate.certified_factor >= ratio(2, 3));
  const auto close = additive({{2, 2, ratio(19, 10), 1, ratio(1, 2)}, {2, 2, ratio(19, 10), 1, ratio(1, 2)}});
  const auto r = solve_bounded_interval(close, 4);
  CHECK(is_efx(close, r.partial));
  CHECK(r.certificate.certified_factor >= ratio(2, 3));
  check_error([] { solve_bounded_interval(identical(2, {3, 1, 1, 1}), 4); }, ErrorCode::NotBoundedInterval);
}

TEST_CASE("distinct favorites") {
  const auto inst = additive_int({{10, 1, 4, 4}, {1, 10, 4, 4}});
  const auto r = solve_distinct_favorites(inst);
  CHECK(r.partial == bundles({ItemSet{0, 2}, ItemSet{1, 3}}, 4));
  CHECK(is_efx(inst, r.allocation));
  check_error([] { solve_distinct_favorites(identical(2, {10, 1, 2, 3})); }, ErrorCode::NotDistinctFavorites);
  check_error([] { solve_distinct_favorites(additive_int({{5, 5, 1, 1}, {1, 5, 1, 1}})); },
              ErrorCode::NotDistinctFavorites);

  const auto family = parse_family("distinct_favorites");
  for (std::uint64_t seed = 0; seed < 1000; ++seed) {
    GenParams p;
    p.n = 3;
    p.m = 6;
    const auto x = generate(family, p, seed);
    REQUIRE(naive_alpha_efx(x, solve_distinct_favorites(x).allocation, ratio(2, 3)));
  }
}

TEST_CASE("relaxed solver factors on generated instances") {
  for (std::uint64_t seed = 0; seed < 500; ++seed) {
    GenParams p;
    p.n = 2 + static_cast<int>(seed % 2);
    p.m = 9;
    const int ell = 6;
    const int k = ell / p.n;
    const Value bound = ratio(k, k + 1);
    const auto a = generate(parse_family("identical_top_ranking(6)"), p, seed);
    REQUIRE(max_alpha_efx(a, solve_relaxed_top_ranking(a, ell).allocation) >= bound);
    const auto b = generate(parse_family("bounded_interval(6)"), p, seed);
    REQUIRE(max_alpha_efx(b, solve_bounded_interval(b, ell).allocation) >= bound);
  }
}
