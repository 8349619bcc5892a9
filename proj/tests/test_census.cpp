#include <doctest.h>
#include <json.hpp>

#include "trilink/census.hpp"
#include "trilink/errors.hpp"
#include "trilink/symmetry.hpp"

using namespace trilink;

TEST_SUITE_BEGIN("census");

TEST_CASE("census contents") {
  const Census c = run_census();
  REQUIRE(c.records.size() == 64);
  CHECK(c.summary.total_depictions == 64);
  CHECK(c.summary.orbit_count == 10);
  CHECK(c.summary.orbits.size() == 10);

  const std::map<EmbeddingType, std::pair<int, int>> expected{
      {EmbeddingType::TorusLink33, {2, 8}},
      {EmbeddingType::Chain3, {3, 24}},
      {EmbeddingType::HopfWithSplit, {3, 24}},
      {EmbeddingType::Trivial3, {1, 6}},
      {EmbeddingType::Borromean, {1, 2}}};
  for (const auto& [type, counts] : expected) {
    CAPTURE(to_string(type));
    CHECK(c.summary.per_type_orbit_counts.at(type) == counts.first);
    CHECK(c.summary.per_type_depiction_counts.at(type) == counts.second);
  }

  // Record fields recomputed independently of the census pipeline.
  for (std::size_t k = 0; k < 64; ++k) {
    const auto& r = c.records[k];
    CHECK(r.assignment.word() == k);
    const auto d = to_diagram(r.assignment);
    CHECK(r.embedding_type == classify(d));
    CHECK(r.linking == pairwise_linking(d).triangle());
    CHECK(r.bracket == kauffman_bracket(d));
    const auto& o = c.summary.orbits.at(r.orbit_id);
    CHECK(o.size == r.orbit_size);
    CHECK(o.embedding_type == r.embedding_type);
    const auto members = orbit_of(r.assignment, group_elements());
    CHECK(static_cast<int>(members.size()) == r.orbit_size);
    CHECK(members.front() == o.representative);
  }

  const auto elems = group_elements();
  const std::vector<SymmetryElement> motions(elems.begin(), elems.begin() + 6);
  for (const auto& o : c.summary.orbits) {
    const auto planar = orbit_of(o.representative, motions);
    CHECK(o.mirror_in_planar_orbit ==
          std::ranges::binary_search(planar, o.representative.flipped()));
  }
}

TEST_CASE("serialization round trips") {
  const Census c = run_census();
  SUBCASE("json") {
    const std::string text = census_to_json(c);
    const auto doc = nlohmann::json::parse(text);
    CHECK(doc.at("schema_version") == 1);
    CHECK(census_from_json(text) == c);
    CHECK_THROWS_AS(census_from_json("{\"schema_version\": 99}"), InputError);
    CHECK_THROWS_AS(census_from_json("[1,2"), InputError);
  }
  SUBCASE("csv") {
    const std::string text = census_to_csv(c);
    CHECK(text.starts_with("bitword,orbit_id,orbit_size,type,lk_ab,lk_bc,lk_ca,bracket\n"));
    CHECK(census_records_from_csv(text) == c.records);
    CHECK_THROWS_AS(census_records_from_csv("wrong,header\n"), InputError);
  }
  SUBCASE("table") {
    const std::string text = census_to_table(c);
    CHECK(text.ends_with("10 patterns in 5 embedding types; 64 depictions\n"));
  }
}

TEST_CASE("determinism") {
  CHECK(census_to_json(run_census()) == census_to_json(run_census()));
  CHECK(census_to_csv(run_census()) == census_to_csv(run_census()));
}

TEST_CASE("claim verification") {
  const ClaimReport rep = verify_claims();
  CHECK(rep.checks.size() == 13);
  for (const auto& chk : rep.checks) {
    CAPTURE(chk.id);
    CAPTURE(chk.detail);
    CHECK(chk.passed);
  }
  CHECK(rep.all_passed());
  CHECK(report_to_text(rep).ends_with("13/13 checks passed\n"));
  const auto doc = nlohmann::json::parse(report_to_json(rep));
  CHECK(doc.at("checks").size() == 13);
}

TEST_SUITE_END();
