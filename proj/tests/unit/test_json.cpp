#include "support.hpp"

#include "fairdiv/json_io.hpp"
#include "fairdiv/solve.hpp"
#include "fairdiv/verify.hpp"

using namespace fairdiv;
using namespace fdtest;

TEST_CASE("instance round trip") {
  const Instance inst({ValuationFunction::additive({ratio(1, 2), value_of(3)}),
                       ValuationFunction::multiplicative(vals({2, 1})),
                       ValuationFunction::unit_demand(vals({0, 4})),
                       ValuationFunction::table(2, vals({0, 1, 2, 2}))});
  const Json j = instance_to_json(inst);
  CHECK(j["n"] == 4);
  CHECK(j["m"] == 2);
  CHECK(j["valuations"][0]["kind"] == "additive");
  CHECK(j["valuations"][0]["values"][0] == "1/2");
  CHECK(j["valuations"][3]["kind"] == "table");
  CHECK(instance_from_json(j) == inst);
  CHECK(instance_from_json(parse_json(j.dump())) == inst);
}

TEST_CASE("values accept integers, fractions and decimals") {
  const auto inst = instance_from_json(
      parse_json(R"({"n":1,"m":3,"valuations":[{"kind":"additive","values":[2,"3/4","0.5"]}]})"));
  CHECK(inst.item_value(0, 0) == 2);
  CHECK(inst.item_value(0, 1) == ratio(3, 4));
  CHECK(inst.item_value(0, 2) == ratio(1, 2));
}

TEST_CASE("malformed instances") {
  check_error([] { parse_json("{"); }, ErrorCode::ParseError);
  check_error([] { instance_from_json(parse_json(R"({"n":2,"m":1,"valuations":[{"kind":"additive","values":[1]}]})")); },
              ErrorCode::InvalidInstance);
  check_error([] { instance_from_json(parse_json(R"({"n":1,"m":2,"valuations":[{"kind":"additive","values":[1]}]})")); },
              ErrorCode::InvalidInstance);
  check_error([] { instance_from_json(parse_json(R"({"n":1,"m":1,"valuations":[{"kind":"cubic","values":[1]}]})")); },
              ErrorCode::InvalidInstance);
  check_error([] { instance_from_json(parse_json(R"({"n":1,"m":1,"valuations":[{"kind":"additive","values":["-1"]}]})")); },
              ErrorCode::ParseError);
}

TEST_CASE("hints are validated") {
  const char* good =
      R"({"n":2,"m":3,"valuations":[{"kind":"additive","values":[3,2,1]},{"kind":"additive","values":[3,2,1]}],)"
      R"("hints":{"top_set":[0,1],"tiers":[[0],[1],[2]]}})";
  const auto inst = instance_from_json(parse_json(good));
  CHECK(inst.hints().top_set == ItemSet{0, 1});
  const char* bad =
      R"({"n":2,"m":3,"valuations":[{"kind":"additive","values":[3,2,1]},{"kind":"additive","values":[3,2,1]}],)"
      R"("hints":{"top_set":[1,2]}})";
  check_error([&] { instance_from_json(parse_json(bad)); }, ErrorCode::InvalidInstance);
}

TEST_CASE("allocations round trip, bare or wrapped") {
  const auto inst = identical(2, {2, 1, 1});
  const auto a = bundles({ItemSet{1}, ItemSet{0, 2}}, 3);
  CHECK(allocation_to_json(a).dump() == "[[1],[0,2]]");
  CHECK(allocation_from_json(parse_json("[[1],[0,2]]"), inst) == a);
  CHECK(allocation_from_json(parse_json(R"({"allocation":[[1],[0,2]]})"), inst) == a);
  CHECK(allocation_from_json(parse_json("[[1],[]]"), inst).pool() == ItemSet{0, 2});
  check_error([&] { allocation_from_json(parse_json("[[1],[1]]"), inst); }, ErrorCode::InvalidAllocation);
  check_error([&] { allocation_from_json(parse_json("[[1]]"), inst); }, ErrorCode::InvalidAllocation);
  check_error([&] { allocation_from_json(parse_json("[[7],[]]"), inst); }, ErrorCode::InvalidItem);
}

TEST_CASE("reports number agents from one") {
  const auto inst = identical(2, {2, 1, 1});
  const auto a = bundles({ItemSet{1}, ItemSet{0, 2}}, 3);
  const Json j = report_to_json(check_fairness(inst, a, FairnessProperty::efx()));
  CHECK(j.dump() == R"({"verdict":false,"alpha":"1/2","witnesses":[[1,2,2]]})");
  const Json ef = report_to_json(check_fairness(inst, a, FairnessProperty::ef()));
  CHECK(ef["witnesses"][0].dump() == "[1,2,null]");
}

TEST_CASE("certificates write an infinite beta as inf") {
  PartialCertificate c;
  CHECK(certificate_to_json(c).dump() ==
        R"({"alpha":"1/1","beta":"inf","gamma":"1/1","certified_factor":"1/1"})");
  c.beta = 4;
  CHECK(certificate_to_json(c)["beta"] == "4/1");
}

TEST_CASE("solver output document") {
  const auto inst = identical(2, {3, 2, 1});
  const auto out = solve(inst, "ece", {true, {}});
  const Json j = outcome_to_json(out);
  CHECK(j.contains("allocation"));
  CHECK(j["certificate"].contains("certified_factor"));
  CHECK(j["verified"]["ef1"] == true);
  CHECK(j["verified"]["efx_alpha"].is_string());
  CHECK(j["stats"]["fallback_activations"] == 0);
  REQUIRE(out.trace.size() == 3);
  CHECK(out.trace[0]["round"] == 1);
  CHECK(out.trace[0].contains("cycles_rotated"));
}

TEST_CASE("tiered traces list one step per tier") {
  const auto inst = additive_int({{9, 8, 7, 3, 2, 1}, {7, 9, 8, 1, 3, 2}, {8, 7, 9, 2, 1, 3}});
  const auto out = solve(inst, "tiered", {true, {}});
  REQUIRE(out.trace.size() == 2);
  CHECK(out.trace[0]["tier"] == 1);
  CHECK(out.trace[0]["case"].is_string());
  CHECK(out.trace[0]["rotations"].is_number_integer());
}

TEST_CASE("algorithm dispatch") {
  const auto inst = additive_int({{10, 9, 5, 1, 1, 1}, {10, 9, 2, 2, 1, 1}});
  for (const char* algo : {"ece", "pick-ece", "framework:pick-rounds", "framework:empty", "top-n", "relaxed-top:2",
                           "oracle-exact"}) {
    const auto out = solve(inst, algo);
    CHECK_MESSAGE(out.allocation.complete(), algo);
    CHECK(naive_alpha_efx(inst, out.allocation, out.certificate.certified_factor));
  }
  check_error([&] { solve(inst, "quantum"); }, ErrorCode::InvalidArgument);
  check_error([&] { solve(inst, "tiered"); }, ErrorCode::HypothesisViolated);
  CHECK(algorithm_names().size() >= 10);
}
