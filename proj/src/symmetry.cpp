#include "trilink/symmetry.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

namespace trilink {

namespace {

constexpr std::array<PlanarMotion, 6> kMotions{
    PlanarMotion::identity, PlanarMotion::rot120, PlanarMotion::rot240,
    PlanarMotion::refl_A,   PlanarMotion::refl_B, PlanarMotion::refl_C};

using Perm3 = std::array<CircleId, 3>;

CircleId at(const Perm3& p, CircleId c) { return p[static_cast<int>(c)]; }

PlanarMotion motion_of(const Perm3& p) {
  for (auto m : kMotions)
    if (circle_permutation(m) == p) return m;
  throw std::logic_error("circle permutation outside the dihedral group");
}

// Axis angle of each circle's centre.
double axis_angle(CircleId c) {
  return std::numbers::pi / 2.0 + 2.0 * std::numbers::pi / 3.0 * static_cast<int>(c);
}

// Site of the pair {x, y} with the given depth.
int site_for(CircleId x, CircleId y, Depth depth) {
  for (const auto& s : canonical_projection().sites)
    if (s.depth == depth &&
        ((s.pair[0] == x && s.pair[1] == y) || (s.pair[0] == y && s.pair[1] == x)))
      return s.index;
  throw std::logic_error("no site for circle pair");
}

}  // namespace

std::string to_string(SymmetryElement g) {
  static constexpr std::array<const char*, 6> names{
      "identity", "rot120", "rot240", "refl_A", "refl_B", "refl_C"};
  std::string s = names[static_cast<int>(g.motion)];
  if (g.mirror) s += "+mirror";
  return s;
}

Perm3 circle_permutation(PlanarMotion m) {
  using enum CircleId;
  switch (m) {
    case PlanarMotion::identity: return {A, B, C};
    case PlanarMotion::rot120: return {B, C, A};
    case PlanarMotion::rot240: return {C, A, B};
    case PlanarMotion::refl_A: return {A, C, B};
    case PlanarMotion::refl_B: return {C, B, A};
    case PlanarMotion::refl_C: return {B, A, C};
  }
  throw std::logic_error("bad planar motion");
}

Point2 apply_motion(PlanarMotion m, Point2 p) {
  const double third = 2.0 * std::numbers::pi / 3.0;
  switch (m) {
    case PlanarMotion::identity: return p;
    case PlanarMotion::rot120: return rotate(p, third);
    case PlanarMotion::rot240: return rotate(p, 2.0 * third);
    case PlanarMotion::refl_A:
    case PlanarMotion::refl_B:
    case PlanarMotion::refl_C: {
      const double t = 2.0 * axis_angle(static_cast<CircleId>(
                                 static_cast<int>(m) - static_cast<int>(PlanarMotion::refl_A)));
      const double c = std::cos(t), s = std::sin(t);
      return {c * p.x + s * p.y, s * p.x - c * p.y};
    }
  }
  throw std::logic_error("bad planar motion");
}

SymmetryElement compose(SymmetryElement g, SymmetryElement h) {
  const Perm3 pg = circle_permutation(g.motion);
  const Perm3 ph = circle_permutation(h.motion);
  Perm3 gh{};
  for (CircleId c : kCircles) gh[static_cast<int>(c)] = at(pg, at(ph, c));
  return {motion_of(gh), g.mirror != h.mirror};
}

SymmetryElement inverse(SymmetryElement g) {
  for (auto m : kMotions) {
    const SymmetryElement cand{m, g.mirror};
    if (compose(cand, g) == SymmetryElement{}) return cand;
  }
  throw std::logic_error("element without inverse");
}

std::vector<SymmetryElement> group_elements() {
  std::vector<SymmetryElement> out;
  for (bool mirror : {false, true})
    for (auto m : kMotions) out.push_back({m, mirror});
  return out;
}

SiteAction site_action(SymmetryElement g) {
  // A planar motion keeps heights, so the circle on top at a site is still on
  // top at the image site; only the labels are permuted. Distance to the
  // origin is preserved, so inner stays inner.
  const Perm3 p = circle_permutation(g.motion);
  SiteAction act;
  for (const auto& s : canonical_projection().sites) {
    const CircleId x = at(p, s.pair[0]);
    const CircleId y = at(p, s.pair[1]);
    const int target = site_for(x, y, s.depth);
    act.site_perm[s.index] = target;
    // The circle that bit=1 puts on top maps to x; the bit survives only if x
    // is still first in the target's pair.
    const bool relabel_flip = canonical_projection().sites[target].pair[0] != x;
    act.flip_mask[target] = relabel_flip != g.mirror;
  }
  return act;
}

CrossingAssignment apply_action(const SiteAction& a, CrossingAssignment asg) {
  std::array<bool, 6> bits{};
  for (int i = 0; i < 6; ++i) {
    const int j = a.site_perm[i];
    bits[j] = asg.bit(i) != a.flip_mask[j];
  }
  return CrossingAssignment::from_bits(bits);
}

SiteAction compose(const SiteAction& a, const SiteAction& b) {
  SiteAction out;
  for (int i = 0; i < 6; ++i) {
    const int mid = b.site_perm[i];
    const int j = a.site_perm[mid];
    out.site_perm[i] = j;
    out.flip_mask[j] = b.flip_mask[mid] != a.flip_mask[j];
  }
  return out;
}

std::vector<CrossingAssignment> orbit_of(
    CrossingAssignment asg, const std::vector<SymmetryElement>& elements) {
  std::vector<CrossingAssignment> out;
  for (const auto& g : elements) out.push_back(apply_action(site_action(g), asg));
  std::ranges::sort(out);
  const auto [first, last] = std::ranges::unique(out);
  out.erase(first, last);
  return out;
}

std::vector<Orbit> orbit_partition() {
  const auto group = group_elements();
  std::array<bool, CrossingAssignment::kCount> seen{};
  std::vector<Orbit> orbits;
  for (auto asg : all_assignments()) {
    if (seen[asg.word()]) continue;
    Orbit o{orbit_of(asg, group)};
    for (auto m : o.members) seen[m.word()] = true;
    orbits.push_back(std::move(o));
  }
  return orbits;
}

BurnsideResult burnside_count() {
  BurnsideResult r;
  int total = 0;
  for (const auto& g : group_elements()) {
    const SiteAction act = site_action(g);
    int fixed = 0;
    for (auto asg : all_assignments()) fixed += apply_action(act, asg) == asg;
    r.fixed_points.push_back(fixed);
    total += fixed;
  }
  const int order = static_cast<int>(r.fixed_points.size());
  if (total % order != 0)
    throw std::logic_error("fixed-point total not divisible by group order");
  r.orbit_count = total / order;
  return r;
}

}  // namespace trilink
