#include "trilink/geometry.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <random>
#include <sstream>

#include <fmt/format.h>

#include "trilink/errors.hpp"
#include "trilink/invariants.hpp"

namespace trilink {

namespace {

constexpr double kPi = std::numbers::pi;

Point3 rotate_z(Point3 p, double angle) {
  const double c = std::cos(angle), s = std::sin(angle);
  return {c * p.x - s * p.y, s * p.x + c * p.y, p.z};
}

// Orthonormal (u, v) with u x v = n.
std::pair<Point3, Point3> plane_basis(Point3 n) {
  const Point3 helper = std::abs(n.x) < 0.9 ? Point3{1, 0, 0} : Point3{0, 1, 0};
  const Point3 u = normalized(cross(helper, n));
  return {u, cross(n, u)};
}

double param_or(const std::map<std::string, double>& params,
                const std::string& name, double fallback) {
  const auto it = params.find(name);
  return it == params.end() ? fallback : it->second;
}

void reject_unknown(const std::map<std::string, double>& params,
                    std::string_view kind,
                    std::initializer_list<std::string_view> allowed) {
  for (const auto& [name, value] : params)
    if (std::ranges::find(allowed, name) == allowed.end())
      throw InputError(
          fmt::format("{} does not take parameter '{}'", kind, name));
}

}  // namespace

PolyCurve3::PolyCurve3(std::string label, std::vector<Point3> points)
    : label_(std::move(label)), points_(std::move(points)) {
  if (points_.size() < 8)
    throw InputError(fmt::format("curve '{}' needs at least 8 points, got {}",
                                 label_, points_.size()));
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (norm(next(i) - points_[i]) == 0.0)
      throw InputError(
          fmt::format("curve '{}' has a zero-length segment at {}", label_, i));
}

Realization3D realize(std::string_view kind,
                      const std::map<std::string, double>& params,
                      int segments) {
  if (segments < kMinSegments)
    throw InputError(fmt::format("segments must be >= {}, got {}",
                                 kMinSegments, segments));
  Realization3D out;
  out.kind = std::string(kind);
  const std::array<std::string, 3> labels{"A", "B", "C"};

  if (kind == "torus-villarceau") {
    reject_unknown(params, kind, {"R", "r"});
    const double big = param_or(params, "R", 2.0);
    const double small = param_or(params, "r", 1.0);
    if (!(small > 0.0 && big > small))
      throw InputError(
          fmt::format("torus-villarceau needs R > r > 0, got R={} r={}", big, small));
    out.params = {{"R", big}, {"r", small}};
    // Bitangent plane through the y axis, tilted by asin(r/R); the slice is a
    // circle of radius R centred at (0, r, 0).
    const double tilt = std::asin(small / big);
    const Point3 e1{std::cos(tilt), 0.0, std::sin(tilt)};
    const Point3 e2{0.0, 1.0, 0.0};
    const Point3 center{0.0, small, 0.0};
    for (int k = 0; k < 3; ++k) {
      const double turn = 2.0 * kPi * k / 3.0;
      std::vector<Point3> pts;
      pts.reserve(segments);
      for (int i = 0; i < segments; ++i) {
        const double t = 2.0 * kPi * i / segments;
        pts.push_back(rotate_z(
            center + big * std::cos(t) * e1 + big * std::sin(t) * e2, turn));
      }
      out.curves.emplace_back(labels[k], std::move(pts));
    }
    return out;
  }

  if (kind == "borromean-ellipses") {
    reject_unknown(params, kind, {"a", "b"});
    const double a = param_or(params, "a", 1.5);
    const double b = param_or(params, "b", 0.8);
    if (!(b > 0.0 && a > b))
      throw InputError(
          fmt::format("borromean-ellipses needs a > b > 0, got a={} b={}", a, b));
    out.params = {{"a", a}, {"b", b}};
    for (int k = 0; k < 3; ++k) {
      std::vector<Point3> pts;
      pts.reserve(segments);
      for (int i = 0; i < segments; ++i) {
        const double t = 2.0 * kPi * i / segments;
        const double u = a * std::cos(t), v = b * std::sin(t);
        // Long axis cycles x -> y -> z, short axis y -> z -> x.
        std::array<double, 3> xyz{};
        xyz[k] = u;
        xyz[(k + 1) % 3] = v;
        pts.push_back({xyz[0], xyz[1], xyz[2]});
      }
      out.curves.emplace_back(labels[k], std::move(pts));
    }
    return out;
  }

  throw InputError(fmt::format(
      "unknown realization '{}' (valid: torus-villarceau, borromean-ellipses)",
      kind));
}

Realization3D select_curves(const Realization3D& r,
                            const std::vector<std::string>& labels) {
  Realization3D out;
  out.kind = r.kind;
  out.params = r.params;
  for (const auto& l : labels) {
    const auto it = std::ranges::find(r.curves, l, &PolyCurve3::label);
    if (it == r.curves.end())
      throw InputError(fmt::format("realization has no curve '{}'", l));
    out.curves.push_back(*it);
  }
  return out;
}

Scene3D scene(std::string_view kind) {
  Scene3D s;
  s.kind = std::string(kind);
  const Point3 up{0, 0, 1};

  auto triangle_centers = [] {
    std::array<Point3, 3> c{};
    const double circumradius = 2.0 / std::sqrt(3.0);
    for (int k = 0; k < 3; ++k) {
      const double t = kPi / 2.0 + 2.0 * kPi * k / 3.0;
      c[k] = {circumradius * std::cos(t), circumradius * std::sin(t), 0.0};
    }
    return c;
  };

  if (kind == "tangent-circles") {
    const auto c = triangle_centers();
    for (const auto& p : c) s.primitives.emplace_back(Circle3{p, up, 1.0});
    for (int k = 0; k < 3; ++k)
      s.primitives.emplace_back(
          Marker3{0.5 * (c[k] + c[(k + 1) % 3]), "tangency"});
    for (int k = 0; k < 3; ++k) {
      // The arc of circle k facing the centroid spans 60 degrees between its
      // two tangency points.
      const Point3 t1 = 0.5 * (c[k] + c[(k + 1) % 3]);
      const Point3 t2 = 0.5 * (c[k] + c[(k + 2) % 3]);
      Point3 from = t1 - c[k], to = t2 - c[k];
      if (dot(cross(from, to), up) < 0.0) std::swap(from, to);
      s.primitives.emplace_back(Arc3{c[k], up, normalized(from), 1.0, kPi / 3.0});
    }
    return s;
  }
  if (kind == "great-circles") {
    s.primitives.emplace_back(Sphere3{{0, 0, 0}, 1.0});
    for (Point3 n : {Point3{1, 0, 0}, Point3{0, 1, 0}, Point3{0, 0, 1}})
      s.primitives.emplace_back(Circle3{{0, 0, 0}, n, 1.0});
    return s;
  }
  if (kind == "horn-torus") {
    s.primitives.emplace_back(TorusPatch{{0, 0, 0}, up, 1.0, 1.0});
    for (int k = 0; k < 3; ++k) {
      const double t = 2.0 * kPi * k / 3.0;
      s.primitives.emplace_back(Circle3{{std::cos(t), std::sin(t), 0.0},
                                        {-std::sin(t), std::cos(t), 0.0}, 1.0});
    }
    s.primitives.emplace_back(Marker3{{0, 0, 0}, "cusp"});
    return s;
  }
  if (kind == "tangent-spheres") {
    const auto c = triangle_centers();
    for (const auto& p : c) s.primitives.emplace_back(Sphere3{p, 1.0});
    for (int k = 0; k < 3; ++k)
      s.primitives.emplace_back(
          Marker3{0.5 * (c[k] + c[(k + 1) % 3]), "tangency"});
    return s;
  }

  std::string valid;
  for (auto k : kSceneKinds) valid += (valid.empty() ? "" : ", ") + std::string(k);
  throw InputError(fmt::format("unknown scene '{}' (valid: {})", kind, valid));
}

PolyCurve3 circle_curve(const Circle3& c, std::string label, int segments) {
  const auto [u, v] = plane_basis(c.normal);
  std::vector<Point3> pts;
  pts.reserve(segments);
  for (int i = 0; i < segments; ++i) {
    const double t = 2.0 * kPi * i / segments;
    pts.push_back(c.center + c.radius * std::cos(t) * u +
                  c.radius * std::sin(t) * v);
  }
  return PolyCurve3(std::move(label), std::move(pts));
}

Realization3D scene_curves(const Scene3D& s, int segments) {
  Realization3D r;
  r.kind = s.kind;
  int n = 0;
  for (const auto& p : s.primitives)
    if (const auto* c = std::get_if<Circle3>(&p)) {
      const std::string label =
          n < 3 ? std::string(1, static_cast<char>('A' + n)) : fmt::format("c{}", n);
      r.curves.push_back(circle_curve(*c, label, segments));
      ++n;
    }
  return r;
}

double segment_distance(Point3 p0, Point3 p1, Point3 q0, Point3 q1) {
  const Point3 d1 = p1 - p0, d2 = q1 - q0, r = p0 - q0;
  const double a = dot(d1, d1), e = dot(d2, d2), f = dot(d2, r);
  double s = 0.0, t = 0.0;
  const double c = dot(d1, r);
  const double b = dot(d1, d2);
  const double denom = a * e - b * b;
  if (denom > 1e-300)
    s = std::clamp((b * f - c * e) / denom, 0.0, 1.0);
  t = (b * s + f) / e;
  if (t < 0.0) {
    t = 0.0;
    s = std::clamp(-c / a, 0.0, 1.0);
  } else if (t > 1.0) {
    t = 1.0;
    s = std::clamp((b - c) / a, 0.0, 1.0);
  }
  return norm((p0 + s * d1) - (q0 + t * d2));
}

namespace {

double curve_distance(const PolyCurve3& a, const PolyCurve3& b) {
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      best = std::min(best, segment_distance(a[i], a.next(i), b[j], b.next(j)));
  return best;
}

void require_disjoint(const PolyCurve3& a, const PolyCurve3& b) {
  const double d = curve_distance(a, b);
  if (!(d > kDisjointTolerance))
    throw InputError(fmt::format(
        "curves '{}' and '{}' are {:.3g} apart; need > {:g}", a.label(),
        b.label(), d, kDisjointTolerance));
}

// Uniform direction on the sphere from raw generator output, so the sequence
// does not depend on the standard library's distributions.
Point3 random_direction(std::mt19937_64& gen) {
  auto unit = [&] { return static_cast<double>(gen() >> 11) * 0x1.0p-53; };
  const double z = 2.0 * unit() - 1.0;
  const double phi = 2.0 * kPi * unit();
  const double rho = std::sqrt(std::max(0.0, 1.0 - z * z));
  return {rho * std::cos(phi), rho * std::sin(phi), z};
}

LinkDiagram project(const std::vector<const PolyCurve3*>& curves, Point3 dir) {
  const auto [e1, e2] = plane_basis(dir);
  std::vector<HeightCurve> hc;
  for (const PolyCurve3* c : curves) {
    HeightCurve h;
    h.label = c->label();
    for (const Point3& p : c->points()) {
      h.points.push_back({dot(p, e1), dot(p, e2)});
      h.heights.push_back(dot(p, dir));
    }
    hc.push_back(std::move(h));
  }
  return diagram_from_height_curves(hc, kGenericTolerance);
}

LinkDiagram project_generic(const std::vector<const PolyCurve3*>& curves,
                            const ProjectionOptions& opts) {
  if (opts.direction) {
    const double n = norm(*opts.direction);
    if (!(n > 0.0)) throw InputError("projection direction must be nonzero");
    return project(curves, (1.0 / n) * *opts.direction);
  }
  std::mt19937_64 gen(opts.seed);
  for (int attempt = 0; attempt < opts.max_attempts; ++attempt) {
    try {
      return project(curves, random_direction(gen));
    } catch (const DegeneracyError&) {
    }
  }
  throw DegeneracyError(fmt::format(
      "no generic projection direction in {} attempts", opts.max_attempts));
}

}  // namespace

int linking_number_3d(const PolyCurve3& a, const PolyCurve3& b,
                      const ProjectionOptions& opts) {
  require_disjoint(a, b);
  const LinkDiagram d = project_generic({&a, &b}, opts);
  return signed_linking(d, 0, 1);
}

double gauss_linking_integral(const PolyCurve3& a, const PolyCurve3& b) {
  require_disjoint(a, b);
  auto unit_or_zero = [](Point3 v) {
    const double n = norm(v);
    return n > 0.0 ? (1.0 / n) * v : Point3{};
  };
  auto safe_asin = [](double x) { return std::asin(std::clamp(x, -1.0, 1.0)); };
  double total = 0.0;
  for (std::size_t i = 0; i < a.size(); ++i) {
    const Point3 p1 = a[i], p2 = a.next(i);
    for (std::size_t j = 0; j < b.size(); ++j) {
      const Point3 p3 = b[j], p4 = b.next(j);
      const Point3 r13 = p3 - p1, r14 = p4 - p1, r23 = p3 - p2, r24 = p4 - p2;
      const Point3 n1 = unit_or_zero(cross(r13, r14));
      const Point3 n2 = unit_or_zero(cross(r14, r24));
      const Point3 n3 = unit_or_zero(cross(r24, r23));
      const Point3 n4 = unit_or_zero(cross(r23, r13));
      const double omega = safe_asin(dot(n1, n2)) + safe_asin(dot(n2, n3)) +
                           safe_asin(dot(n3, n4)) + safe_asin(dot(n4, n1));
      const double orient = dot(cross(p4 - p3, p2 - p1), r13);
      if (orient > 0.0)
        total += omega;
      else if (orient < 0.0)
        total -= omega;
    }
  }
  return total / (4.0 * kPi);
}

LinkDiagram diagram_from_curves(const Realization3D& r,
                                const ProjectionOptions& opts) {
  for (std::size_t i = 0; i < r.curves.size(); ++i)
    for (std::size_t j = i + 1; j < r.curves.size(); ++j)
      require_disjoint(r.curves[i], r.curves[j]);
  std::vector<const PolyCurve3*> ptrs;
  for (const auto& c : r.curves) ptrs.push_back(&c);
  return project_generic(ptrs, opts);
}

double validate_disjoint(const Realization3D& r) {
  if (r.curves.size() < 2)
    throw InputError("disjointness needs at least two curves");
  double best = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < r.curves.size(); ++i)
    for (std::size_t j = i + 1; j < r.curves.size(); ++j)
      best = std::min(best, curve_distance(r.curves[i], r.curves[j]));
  return best;
}

std::string curves_to_table(const Realization3D& r) {
  std::string out = "# trilink-curves v1\n";
  out += fmt::format("kind {}\n", r.kind);
  for (const auto& [name, value] : r.params)
    out += fmt::format("param {} {:.17g}\n", name, value);
  for (const auto& c : r.curves) {
    out += fmt::format("curve {} {}\n", c.label(), c.size());
    for (const Point3& p : c.points())
      out += fmt::format("{:.17g} {:.17g} {:.17g}\n", p.x, p.y, p.z);
    out += "end\n";
  }
  return out;
}

Realization3D curves_from_table(std::string_view text) {
  std::istringstream in{std::string(text)};
  std::string line;
  Realization3D r;
  int line_no = 0;
  auto fail = [&](std::string_view why) {
    throw InputError(fmt::format("curve table line {}: {}", line_no, why));
  };
  if (!std::getline(in, line) || line != "# trilink-curves v1")
    throw InputError("curve table lacks the '# trilink-curves v1' header");
  ++line_no;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty() || line[0] == '#') continue;
    std::istringstream ls(line);
    std::string tag;
    ls >> tag;
    if (tag == "kind") {
      ls >> r.kind;
    } else if (tag == "param") {
      std::string name;
      double v = 0.0;
      if (!(ls >> name >> v)) fail("malformed param record");
      r.params[name] = v;
    } else if (tag == "curve") {
      std::string label;
      std::size_t n = 0;
      if (!(ls >> label >> n)) fail("malformed curve record");
      std::vector<Point3> pts;
      pts.reserve(n);
      for (std::size_t k = 0; k < n; ++k) {
        if (!std::getline(in, line)) fail("truncated curve");
        ++line_no;
        std::istringstream ps(line);
        Point3 p;
        if (!(ps >> p.x >> p.y >> p.z)) fail("malformed point");
        pts.push_back(p);
      }
      if (!std::getline(in, line) || line != "end") fail("expected 'end'");
      ++line_no;
      r.curves.emplace_back(label, std::move(pts));
    } else {
      fail(fmt::format("unknown record '{}'", tag));
    }
  }
  return r;
}

std::string curves_to_obj(const Realization3D& r) {
  std::string out = fmt::format("# trilink {}\n", r.kind);
  for (const auto& [name, value] : r.params)
    out += fmt::format("# param {} {:.17g}\n", name, value);
  std::size_t base = 1;
  for (const auto& c : r.curves) {
    out += fmt::format("o {}\n", c.label());
    for (const Point3& p : c.points())
      out += fmt::format("v {:.17g} {:.17g} {:.17g}\n", p.x, p.y, p.z);
    out += "l";
    for (std::size_t k = 0; k < c.size(); ++k) out += fmt::format(" {}", base + k);
    out += fmt::format(" {}\n", base);
    base += c.size();
  }
  return out;
}

}  // namespace trilink
