#pragma once

// 3D realizations, analytic scenes, and linking numbers of space curves.

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "trilink/diagram.hpp"
#include "trilink/vec.hpp"

namespace trilink {

/// Closed polygon in 3-space; the last point connects back to the first.
class PolyCurve3 {
 public:
  /// Throws InputError for fewer than 8 points or a zero-length segment.
  PolyCurve3(std::string label, std::vector<Point3> points);

  const std::string& label() const { return label_; }
  const std::vector<Point3>& points() const { return points_; }
  std::size_t size() const { return points_.size(); }
  Point3 operator[](std::size_t i) const { return points_[i]; }
  Point3 next(std::size_t i) const { return points_[(i + 1) % points_.size()]; }

 private:
  std::string label_;
  std::vector<Point3> points_;
};

struct Realization3D {
  std::vector<PolyCurve3> curves;
  std::string kind;
  std::map<std::string, double> params;
};

inline constexpr int kDefaultSegments = 256;
inline constexpr int kMinSegments = 64;
inline constexpr double kDisjointTolerance = 1e-6;
inline constexpr double kGenericTolerance = 1e-9;

/// Kinds: "torus-villarceau" (params R > r > 0, defaults 2 and 1) and
/// "borromean-ellipses" (params a > b > 0, defaults 1.5 and 0.8). Missing
/// params take their defaults; unknown names are rejected.
Realization3D realize(std::string_view kind,
                      const std::map<std::string, double>& params = {},
                      int segments = kDefaultSegments);

/// Sub-realization keeping only the named curves, in the given order.
Realization3D select_curves(const Realization3D& r,
                            const std::vector<std::string>& labels);

struct Circle3 {
  Point3 center;
  Point3 normal;  // unit
  double radius = 0.0;
};

struct Arc3 {
  Point3 center;
  Point3 normal;  // unit
  Point3 start;   // unit vector from center to the first point
  double radius = 0.0;
  double sweep = 0.0;  // radians, counterclockwise about normal
};

struct Sphere3 {
  Point3 center;
  double radius = 0.0;
};

/// Surface swept by a circle of radius `tube` whose centre travels a circle
/// of radius `major` about `axis` through `center`.
struct TorusPatch {
  Point3 center;
  Point3 axis;  // unit
  double major = 0.0;
  double tube = 0.0;
};

struct Marker3 {
  Point3 position;
  std::string note;
};

using Primitive = std::variant<Circle3, Arc3, Sphere3, TorusPatch, Marker3>;

struct Scene3D {
  std::string kind;
  std::vector<Primitive> primitives;
};

inline constexpr std::array<std::string_view, 4> kSceneKinds{
    "tangent-circles", "great-circles", "horn-torus", "tangent-spheres"};

/// tangent-circles: three unit circles in z=0 with centres 2 apart, the
///   three tangency markers, and the three arcs bounding the central
///   three-cusped region.
/// great-circles: a unit sphere with three great circles in the coordinate
///   planes.
/// horn-torus: a torus patch with major radius equal to tube radius about the
///   z axis, three generating circles at 0/120/240 deg, and a marker at the
///   common point.
/// tangent-spheres: three unit spheres centred 2 apart, plus tangency markers.
Scene3D scene(std::string_view kind);

/// Polygonal approximation of a circle primitive.
PolyCurve3 circle_curve(const Circle3& c, std::string label, int segments);

/// A generic viewing direction and the seed it came from.
struct ProjectionChoice {
  Point3 direction;
  int attempts = 0;
};

/// Options for projection-based computations. With `direction` unset the
/// computation draws directions from std::mt19937_64(seed), uniform on the
/// sphere, up to `max_attempts` times until the projection is generic.
struct ProjectionOptions {
  std::optional<Point3> direction;
  std::uint64_t seed = 20130131;
  int max_attempts = 100;
};

/// Signed linking number from crossings of a generic projection (right-hand
/// rule). Throws InputError when the curves come closer than 1e-6 and
/// DegeneracyError when no generic direction is found.
int linking_number_3d(const PolyCurve3& a, const PolyCurve3& b,
                      const ProjectionOptions& opts = {});

/// Gauss double integral over segment pairs, evaluated with the exact
/// solid angle each segment pair subtends. Throws InputError when the
/// curves come closer than 1e-6.
double gauss_linking_integral(const PolyCurve3& a, const PolyCurve3& b);

/// Planar diagram of the projection along the direction, viewer at +dir.
LinkDiagram diagram_from_curves(const Realization3D& r,
                                const ProjectionOptions& opts = {});

/// Minimum distance between segments of distinct curves.
double validate_disjoint(const Realization3D& r);

/// Exact distance between two 3D segments.
double segment_distance(Point3 p0, Point3 p1, Point3 q0, Point3 q1);

/// Curves sampled from a scene's circles, arcs and generating circles.
Realization3D scene_curves(const Scene3D& s, int segments = kDefaultSegments);

/// Text table of labelled points (docs/formats.md).
std::string curves_to_table(const Realization3D& r);
Realization3D curves_from_table(std::string_view text);
/// Wavefront OBJ with one `l` polyline per curve.
std::string curves_to_obj(const Realization3D& r);

}  // namespace trilink
