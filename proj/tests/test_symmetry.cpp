#include <algorithm>
#include <map>
#include <set>

#include <doctest.h>

#include "trilink/diagram.hpp"
#include "trilink/invariants.hpp"
#include "trilink/symmetry.hpp"

using namespace trilink;

namespace {

// Site permutation found by moving site coordinates and matching them.
std::array<int, 6> coordinate_site_perm(PlanarMotion m) {
  const auto& proj = canonical_projection();
  std::array<int, 6> perm{};
  for (int i = 0; i < 6; ++i) {
    const Point2 q = apply_motion(m, proj.sites[i].position);
    int hits = 0;
    for (int j = 0; j < 6; ++j)
      if (norm(proj.sites[j].position - q) < 1e-9) perm[i] = j, ++hits;
    REQUIRE(hits == 1);
  }
  return perm;
}

std::array<int, 3> coordinate_circle_perm(PlanarMotion m) {
  const auto& proj = canonical_projection();
  std::array<int, 3> perm{};
  for (int i = 0; i < 3; ++i) {
    const Point2 q = apply_motion(m, proj.circles[i].center);
    for (int j = 0; j < 3; ++j)
      if (norm(proj.circles[j].center - q) < 1e-9) perm[i] = j;
  }
  return perm;
}

std::string over_label(const LinkDiagram& d, int site) {
  return d.components()[d.crossings()[site].over_component].label;
}

}  // namespace

TEST_SUITE_BEGIN("symmetry");

TEST_CASE("group structure") {
  const auto elems = group_elements();
  REQUIRE(elems.size() == 12);
  CHECK(elems.front() == SymmetryElement{});
  std::set<std::string> names;
  for (auto g : elems) names.insert(to_string(g));
  CHECK(names.size() == 12);

  auto index = [&](SymmetryElement g) {
    for (std::size_t k = 0; k < elems.size(); ++k)
      if (elems[k] == g) return static_cast<int>(k);
    return -1;
  };
  for (auto g : elems) {
    CHECK(compose(g, inverse(g)) == SymmetryElement{});
    CHECK(compose(inverse(g), g) == SymmetryElement{});
    for (auto h : elems) {
      CHECK(index(compose(g, h)) >= 0);
      for (auto k : elems) CHECK(compose(compose(g, h), k) == compose(g, compose(h, k)));
    }
  }
  const SymmetryElement r{PlanarMotion::rot120, false};
  CHECK(compose(r, compose(r, r)) == SymmetryElement{});
  const SymmetryElement mir{PlanarMotion::identity, true};
  CHECK(compose(mir, mir) == SymmetryElement{});
}

TEST_CASE("site permutations match coordinates") {
  for (auto g : group_elements()) {
    CAPTURE(to_string(g));
    CHECK(site_action(g).site_perm == coordinate_site_perm(g.motion));
    const auto cp = circle_permutation(g.motion);
    const auto oracle = coordinate_circle_perm(g.motion);
    for (int i = 0; i < 3; ++i) CHECK(static_cast<int>(cp[i]) == oracle[i]);
  }
  const auto rot = site_action({PlanarMotion::rot120, false});
  CHECK(rot.site_perm == std::array{2, 3, 4, 5, 0, 1});
  CHECK(rot.flip_mask == std::array<bool, 6>{});
  const auto refl = site_action({PlanarMotion::refl_A, false});
  CHECK(refl.site_perm == std::array{4, 5, 2, 3, 0, 1});
  for (bool f : refl.flip_mask) CHECK(f);
  const auto mir = site_action({PlanarMotion::identity, true});
  CHECK(mir.site_perm == std::array{0, 1, 2, 3, 4, 5});
  for (bool f : mir.flip_mask) CHECK(f);
}

TEST_CASE("flips agree with the drawn over-strands") {
  // Moving the picture carries the over-strand at site i to site perm[i] and
  // relabels its circle; crossing interchange then swaps it for the other.
  for (auto g : group_elements()) {
    const auto sperm = coordinate_site_perm(g.motion);
    const auto cperm = coordinate_circle_perm(g.motion);
    const SiteAction act = site_action(g);
    for (auto asg : all_assignments()) {
      const auto d = to_diagram(asg);
      const auto gd = to_diagram(apply_action(act, asg));
      for (int i = 0; i < 6; ++i) {
        const auto& site = canonical_projection().sites[i];
        const std::string over = over_label(d, i);
        const std::string under =
            to_string(over == to_string(site.pair[0]) ? site.pair[1] : site.pair[0]);
        const auto moved = [&](const std::string& lbl) {
          const int from = static_cast<int>(*circle_from_char(lbl[0]));
          return to_string(static_cast<CircleId>(cperm[from]));
        };
        CHECK(over_label(gd, sperm[i]) == moved(g.mirror ? under : over));
      }
    }
  }
}

TEST_CASE("action is a homomorphism") {
  const auto elems = group_elements();
  for (auto g : elems)
    for (auto h : elems) {
      const SiteAction gh = site_action(compose(g, h));
      CHECK(gh == compose(site_action(g), site_action(h)));
      for (auto asg : all_assignments())
        CHECK(apply_action(gh, asg) ==
              apply_action(site_action(g), apply_action(site_action(h), asg)));
    }
  for (auto g : elems)
    for (auto asg : all_assignments())
      CHECK(apply_action(site_action(inverse(g)), apply_action(site_action(g), asg)) == asg);
}

TEST_CASE("orbit partition") {
  const auto orbits = orbit_partition();
  REQUIRE(orbits.size() == 10);
  std::set<unsigned> covered;
  std::size_t total = 0;
  for (const auto& o : orbits) {
    total += o.members.size();
    CHECK(std::ranges::is_sorted(o.members));
    for (auto m : o.members) covered.insert(m.word());
    for (auto g : group_elements())
      for (auto m : o.members)
        CHECK(std::ranges::binary_search(o.members, apply_action(site_action(g), m)));
    CHECK(orbit_of(o.representative(), group_elements()) == o.members);
  }
  CHECK(total == 64);
  CHECK(covered.size() == 64);
  for (std::size_t k = 1; k < orbits.size(); ++k)
    CHECK(orbits[k - 1].representative() < orbits[k].representative());

  // Frozen table from an independent brute-force enumeration.
  const std::vector<std::tuple<std::string, std::size_t, EmbeddingType>> expected{
      {"000000", 2, EmbeddingType::Borromean},
      {"000001", 6, EmbeddingType::HopfWithSplit},
      {"000010", 6, EmbeddingType::HopfWithSplit},
      {"000011", 6, EmbeddingType::Trivial3},
      {"000101", 6, EmbeddingType::Chain3},
      {"000110", 12, EmbeddingType::Chain3},
      {"000111", 12, EmbeddingType::HopfWithSplit},
      {"001010", 6, EmbeddingType::Chain3},
      {"010101", 2, EmbeddingType::TorusLink33},
      {"010110", 6, EmbeddingType::TorusLink33}};
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    const auto& [rep, size, type] = expected[k];
    CHECK(orbits[k].representative().text() == rep);
    CHECK(orbits[k].members.size() == size);
    CHECK(classify(to_diagram(orbits[k].representative())) == type);
  }
  const auto& trivial = orbits[3].members;
  CHECK(std::ranges::binary_search(trivial, assignment_from_text("111100")));
  CHECK(orbits[0].members ==
        std::vector{assignment_from_text("000000"), assignment_from_text("111111")});
}

TEST_CASE("burnside count") {
  const auto b = burnside_count();
  REQUIRE(b.fixed_points.size() == 12);
  CHECK(b.fixed_points[0] == 64);
  const auto elems = group_elements();
  int sum = 0;
  for (std::size_t k = 0; k < elems.size(); ++k) {
    int fixed = 0;
    for (auto asg : all_assignments())
      fixed += apply_action(site_action(elems[k]), asg) == asg;
    CHECK(b.fixed_points[k] == fixed);
    if (elems[k] == SymmetryElement{PlanarMotion::identity, true})
      CHECK(fixed == 0);
    sum += fixed;
  }
  CHECK(sum % 12 == 0);
  CHECK(b.orbit_count == sum / 12);
  CHECK(b.orbit_count == static_cast<int>(orbit_partition().size()));
}

TEST_SUITE_END();
