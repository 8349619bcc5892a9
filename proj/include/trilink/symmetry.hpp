#pragma once

#include <array>
#include <cstdint>
#include <string>
#include <vector>

#include "trilink/diagram.hpp"

namespace trilink {

/// Planar rigid motions of the canonical projection (the dihedral group of
/// order 6). refl_X reflects about the axis through circle X's centre.
enum class PlanarMotion : std::uint8_t {
  identity,
  rot120,
  rot240,
  refl_A,
  refl_B,
  refl_C
};

/// A planar motion optionally combined with the global crossing interchange.
struct SymmetryElement {
  PlanarMotion motion = PlanarMotion::identity;
  bool mirror = false;

  friend bool operator==(SymmetryElement, SymmetryElement) = default;
};

std::string to_string(SymmetryElement g);

/// Image of each circle under the motion, indexed by CircleId.
std::array<CircleId, 3> circle_permutation(PlanarMotion m);

/// The planar motion as a linear map about the origin, applied to a point.
Point2 apply_motion(PlanarMotion m, Point2 p);

/// g after h.
SymmetryElement compose(SymmetryElement g, SymmetryElement h);
SymmetryElement inverse(SymmetryElement g);

/// All 12 elements, identity first.
std::vector<SymmetryElement> group_elements();

/// Effect on assignments: the bit at site i moves to site_perm[i] and is
/// negated when flip_mask[site_perm[i]] is set.
struct SiteAction {
  std::array<int, 6> site_perm{};
  std::array<bool, 6> flip_mask{};

  friend bool operator==(const SiteAction&, const SiteAction&) = default;
};

SiteAction site_action(SymmetryElement g);
CrossingAssignment apply_action(const SiteAction& a, CrossingAssignment asg);
/// a after b.
SiteAction compose(const SiteAction& a, const SiteAction& b);

struct Orbit {
  std::vector<CrossingAssignment> members;  // sorted ascending
  CrossingAssignment representative() const { return members.front(); }
};

/// Orbits of the 64 assignments, sorted by representative.
std::vector<Orbit> orbit_partition();

/// Orbit containing asg under the given elements.
std::vector<CrossingAssignment> orbit_of(
    CrossingAssignment asg, const std::vector<SymmetryElement>& elements);

struct BurnsideResult {
  int orbit_count = 0;
  std::vector<int> fixed_points;  // parallel to group_elements()
};

BurnsideResult burnside_count();

}  // namespace trilink
