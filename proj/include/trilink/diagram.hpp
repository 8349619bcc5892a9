#pragma once

// Canonical three-circle projection, crossing assignments, and the planar
// link-diagram model shared by every other module.

#include <array>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "trilink/vec.hpp"

namespace trilink {

enum class CircleId : std::uint8_t { A = 0, B = 1, C = 2 };

inline constexpr std::array<CircleId, 3> kCircles{CircleId::A, CircleId::B,
                                                  CircleId::C};

char to_char(CircleId c);
std::string to_string(CircleId c);
std::optional<CircleId> circle_from_char(char c);

enum class Depth : std::uint8_t { inner, outer };

/// One of the six points where two circles of the canonical projection meet.
///
/// `pair` is cyclically ordered (AB, BC, CA); `pair[0]` is the circle that a
/// set assignment bit puts on top.
struct CrossingSite {
  int index = 0;
  std::array<CircleId, 2> pair{};
  Depth depth = Depth::inner;
  Point2 position;
};

struct Circle2 {
  Point2 center;
  double radius = 0.0;
};

/// The fixed triangular shadow: three circles of radius 1.2 centred at unit
/// distance from the origin (A at 90 deg, B at 210 deg, C at 330 deg).
///
/// Site indices: 0=AB-inner 1=AB-outer 2=BC-inner 3=BC-outer 4=CA-inner
/// 5=CA-outer. `visit_order[c]` lists the four sites circle c meets in
/// counterclockwise order, starting from angle 0 about its centre.
struct CanonicalProjection {
  std::array<Circle2, 3> circles{};
  std::array<CrossingSite, 6> sites{};
  std::array<std::array<int, 4>, 3> visit_order{};

  const Circle2& circle(CircleId c) const {
    return circles[static_cast<int>(c)];
  }
};

inline constexpr double kCanonicalRadius = 1.2;

const CanonicalProjection& canonical_projection();
CanonicalProjection build_canonical_projection();

/// Over/under choice at each of the six sites. Bit i set means the first
/// circle of site i's pair passes over.
class CrossingAssignment {
 public:
  static constexpr int kSites = 6;
  static constexpr int kCount = 1 << kSites;

  CrossingAssignment() = default;

  /// Word value: site 0 is the most significant bit, so numeric order equals
  /// the lexicographic order of the text form.
  static CrossingAssignment from_word(unsigned word);
  static CrossingAssignment from_bits(const std::array<bool, kSites>& bits);

  bool bit(int site) const { return (word_ >> (kSites - 1 - site)) & 1u; }
  unsigned word() const { return word_; }
  std::string text() const;

  CrossingAssignment flipped() const { return from_word(word_ ^ 0x3Fu); }

  friend bool operator==(CrossingAssignment, CrossingAssignment) = default;
  friend auto operator<=>(CrossingAssignment a, CrossingAssignment b) {
    return a.word_ <=> b.word_;
  }

 private:
  explicit CrossingAssignment(unsigned w) : word_(w) {}
  unsigned word_ = 0;
};

/// Parses a six-character 0/1 word; index 0 is the leftmost character.
CrossingAssignment assignment_from_text(std::string_view word);

/// All 64 assignments in increasing word order.
std::vector<CrossingAssignment> all_assignments();

enum class Role : std::uint8_t { over, under };

/// A component passing through a crossing.
struct Visit {
  int crossing = 0;
  Role role = Role::over;
  /// Arc-length position of the crossing along the component's path.
  double path_param = 0.0;
};

struct Component {
  std::string label;
  std::vector<Visit> visits;  // cyclic, in traversal order
  std::vector<Point2> path;   // closed polyline; may be empty
  double path_length = 0.0;
};

/// A 4-valent vertex of the diagram.
///
/// `arcs` is the PD tuple: arc labels of the four incident arc-ends in
/// counterclockwise order, starting with the incoming under-arc. Arc k of
/// component c runs from visit k to visit k+1 and has label
/// `arc_offset(c) + k`.
struct Crossing {
  Point2 position;
  Point2 over_dir;   // over-strand travel direction
  Point2 under_dir;  // under-strand travel direction
  int over_component = 0;
  int under_component = 0;
  std::array<int, 4> arcs{};
  int sign = 0;  // +1 iff (over_dir x under_dir) > 0
};

/// Geometric input for one crossing when assembling a diagram.
struct CrossingGeometry {
  Point2 position;
  Point2 over_dir;
  Point2 under_dir;
};

class LinkDiagram {
 public:
  /// Builds the planar incidence data. Every crossing must be visited exactly
  /// once as over and once as under; throws InputError otherwise.
  static LinkDiagram assemble(std::vector<Component> components,
                              std::vector<CrossingGeometry> crossings);

  const std::vector<Component>& components() const { return components_; }
  const std::vector<Crossing>& crossings() const { return crossings_; }
  std::size_t component_count() const { return components_.size(); }
  std::size_t crossing_count() const { return crossings_.size(); }
  int arc_count() const { return arc_count_; }
  int arc_offset(std::size_t component) const { return arc_offsets_[component]; }

  /// Components without crossings; each is a free loop after any smoothing.
  int free_loop_count() const;

  std::optional<std::size_t> find_component(std::string_view label) const;

  /// True when every component carries a path to draw.
  bool has_positions() const;

 private:
  std::vector<Component> components_;
  std::vector<Crossing> crossings_;
  std::vector<int> arc_offsets_;
  int arc_count_ = 0;
};

LinkDiagram to_diagram(const CanonicalProjection& proj,
                       CrossingAssignment asg);
LinkDiagram to_diagram(CrossingAssignment asg);

/// Every crossing flipped.
LinkDiagram mirror(const LinkDiagram& d);

LinkDiagram remove_component(const LinkDiagram& d, std::string_view label);
LinkDiagram remove_component(const LinkDiagram& d, CircleId c);

/// Closed curve given by planar samples and a height per sample; the larger
/// height is on top at a crossing.
struct HeightCurve {
  std::string label;
  std::vector<Point2> points;
  std::vector<double> heights;
};

/// Diagram of the curves' vertical projection. Throws DegeneracyError when
/// the projection is not generic within `tolerance`.
LinkDiagram diagram_from_height_curves(const std::vector<HeightCurve>& curves,
                                       double tolerance = 1e-9);

inline constexpr std::array<std::string_view, 6> kBuiltinNames{
    "unknot", "twist-unknot", "trefoil", "hopf", "unlink2", "unlink3"};

/// Fixture diagrams:
///   unknot        one round circle, no crossings
///   twist-unknot  figure-eight curve with one positive crossing (writhe +1)
///   trefoil       alternating 3-crossing projection of (sin t + 2 sin 2t,
///                 cos t - 2 cos 2t, -sin 3t), writhe -3
///   hopf          two overlapping circles, A over at the upper crossing
///   unlink2/3     separated circles, no crossings
LinkDiagram builtin_diagram(std::string_view name);

/// Versioned JSON record (see docs/formats.md).
std::string export_diagram(const LinkDiagram& d);

}  // namespace trilink
