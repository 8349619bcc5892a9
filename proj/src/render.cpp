#include "trilink/render.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <variant>

#include <fmt/format.h>

#include "trilink/errors.hpp"

namespace trilink {

void RenderStyle::validate() const {
  if (!(stroke_width > 0.0))
    throw InputError("stroke width must be positive");
  if (!(gap_width > stroke_width))
    throw InputError(fmt::format("gap width {} must exceed stroke width {}",
                                 gap_width, stroke_width));
  if (width <= 0 || height <= 0) throw InputError("canvas must be non-empty");
}

std::string RenderStyle::color_for(const std::string& label) const {
  const auto it = colors.find(label);
  return it == colors.end() ? "black" : it->second;
}

RenderStyle with_colors(RenderStyle base, std::string_view overrides) {
  std::size_t pos = 0;
  while (pos <= overrides.size() && !overrides.empty()) {
    const std::size_t end = std::min(overrides.find(',', pos), overrides.size());
    const std::string_view item = overrides.substr(pos, end - pos);
    const std::size_t eq = item.find('=');
    if (eq == std::string_view::npos || eq == 0 || eq + 1 == item.size())
      throw InputError(fmt::format("bad color item '{}' (want LABEL=COLOR)", item));
    const std::string_view color = item.substr(eq + 1);
    if (color.find_first_of("\"<>&'") != std::string_view::npos)
      throw InputError(fmt::format("bad color value '{}'", color));
    base.colors[std::string(item.substr(0, eq))] = std::string(color);
    pos = end + 1;
    if (end == overrides.size()) break;
  }
  return base;
}

namespace {

std::string svg_header(int width, int height) {
  return fmt::format(
      "<?xml version=\"1.0\" encoding=\"UTF-8\" standalone=\"no\"?>\n"
      "<svg xmlns=\"http://www.w3.org/2000/svg\" version=\"1.1\" "
      "width=\"{0}\" height=\"{1}\" viewBox=\"0 0 {0} {1}\">\n"
      "<rect width=\"{0}\" height=\"{1}\" fill=\"white\"/>\n",
      width, height);
}

std::string xml_escape(std::string_view s) {
  std::string out;
  for (char c : s) {
    switch (c) {
      case '&': out += "&amp;"; break;
      case '<': out += "&lt;"; break;
      case '>': out += "&gt;"; break;
      case '"': out += "&quot;"; break;
      default: out += c;
    }
  }
  return out;
}

// Maps diagram coordinates onto the canvas with the y axis pointing up.
struct Viewport {
  double scale = 1.0;
  double cx = 0.0, cy = 0.0;
  double half_w = 0.0, half_h = 0.0;

  Point2 map(Point2 p) const {
    return {half_w + scale * (p.x - cx), half_h - scale * (p.y - cy)};
  }
};

// Arc-length addressing along a closed polyline.
class ClosedPath {
 public:
  explicit ClosedPath(const std::vector<Point2>& pts) : pts_(pts) {
    cum_.push_back(0.0);
    for (std::size_t i = 0; i < pts_.size(); ++i)
      cum_.push_back(cum_.back() + norm(pts_[(i + 1) % pts_.size()] - pts_[i]));
  }

  double length() const { return cum_.back(); }

  // Points from s0 to s1 (s1 > s0, both may exceed the length).
  std::vector<Point2> piece(double s0, double s1) const {
    std::vector<Point2> out{at(s0)};
    const double len = length();
    const double base = std::floor(s0 / len) * len;
    // Every vertex strictly inside (s0, s1).
    for (double lap = base; lap < s1; lap += len)
      for (std::size_t i = 0; i < pts_.size(); ++i) {
        const double s = lap + cum_[i];
        if (s > s0 && s < s1) out.push_back(pts_[i]);
      }
    out.push_back(at(s1));
    return out;
  }

 private:
  Point2 at(double s) const {
    const double len = length();
    s = std::fmod(s, len);
    if (s < 0.0) s += len;
    const auto it = std::upper_bound(cum_.begin(), cum_.end(), s);
    const std::size_t i = std::min<std::size_t>(
        static_cast<std::size_t>(it - cum_.begin()) - 1, pts_.size() - 1);
    const double seg = cum_[i + 1] - cum_[i];
    const double t = seg > 0.0 ? (s - cum_[i]) / seg : 0.0;
    const Point2 a = pts_[i], b = pts_[(i + 1) % pts_.size()];
    return a + t * (b - a);
  }

  std::vector<Point2> pts_;
  std::vector<double> cum_;
};

std::string path_data(const std::vector<Point2>& pts, const Viewport& vp,
                      bool closed) {
  std::string d;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    const Point2 q = vp.map(pts[i]);
    d += fmt::format("{}{:.3f} {:.3f}", i == 0 ? "M" : " L", q.x, q.y);
  }
  if (closed) d += " Z";
  return d;
}

}  // namespace

std::string svg_diagram(const LinkDiagram& d, const RenderStyle& style) {
  style.validate();
  if (!d.has_positions())
    throw InputError("diagram has no planar positions to draw");

  double minx = std::numeric_limits<double>::infinity(), maxx = -minx;
  double miny = minx, maxy = -minx;
  for (const auto& c : d.components())
    for (const Point2& p : c.path) {
      minx = std::min(minx, p.x);
      maxx = std::max(maxx, p.x);
      miny = std::min(miny, p.y);
      maxy = std::max(maxy, p.y);
    }
  const double margin = 2.0 * style.gap_width;
  Viewport vp;
  vp.half_w = style.width / 2.0;
  vp.half_h = style.height / 2.0;
  vp.cx = 0.5 * (minx + maxx);
  vp.cy = 0.5 * (miny + maxy);
  vp.scale = std::min(style.width / (maxx - minx + 2 * margin),
                      style.height / (maxy - miny + 2 * margin));

  std::string out = svg_header(style.width, style.height);
  for (const auto& comp : d.components()) {
    const ClosedPath path(comp.path);
    const double scale_param = path.length() / comp.path_length;
    std::vector<double> gaps;
    for (const auto& v : comp.visits)
      if (v.role == Role::under) gaps.push_back(v.path_param * scale_param);
    std::ranges::sort(gaps);

    out += fmt::format(
        "<g id=\"component-{}\" class=\"component\" fill=\"none\" stroke=\"{}\" "
        "stroke-width=\"{:.3f}\" stroke-linecap=\"butt\" data-gaps=\"{}\">\n",
        xml_escape(comp.label), xml_escape(style.color_for(comp.label)),
        style.stroke_width * vp.scale, gaps.size());
    if (gaps.empty()) {
      out += fmt::format("<path class=\"strand\" d=\"{}\"/>\n",
                         path_data(comp.path, vp, true));
    } else {
      const double half = 0.5 * style.gap_width;
      for (std::size_t i = 0; i < gaps.size(); ++i) {
        const double from = gaps[i] + half;
        const double to = (i + 1 < gaps.size() ? gaps[i + 1] : gaps[0] + path.length()) - half;
        if (to <= from) continue;
        out += fmt::format("<path class=\"strand\" d=\"{}\"/>\n",
                           path_data(path.piece(from, to), vp, false));
      }
    }
    out += "</g>\n";
  }
  out += "</svg>\n";
  return out;
}

namespace {

struct Drawable {
  double depth = 0.0;
  std::string element;
};

class SceneWriter {
 public:
  SceneWriter(const Camera& cam, const RenderStyle& style) : style_(style) {
    style.validate();
    const double n = norm(cam.direction);
    if (!(n > 0.0)) throw InputError("camera direction must be nonzero");
    if (!(cam.scale > 0.0)) throw InputError("camera scale must be positive");
    dir_ = (1.0 / n) * cam.direction;
    const Point3 helper = std::abs(dir_.x) < 0.9 ? Point3{1, 0, 0} : Point3{0, 1, 0};
    e1_ = normalized(cross(helper, dir_));
    e2_ = cross(dir_, e1_);
    scale_ = cam.scale;
  }

  void polyline(const std::vector<Point3>& pts, bool closed, int prim,
                const std::string& cls, const std::string& color) {
    const std::size_t n = closed ? pts.size() : pts.size() - 1;
    for (std::size_t i = 0; i < n; ++i) {
      const Point3 a = pts[i], b = pts[(i + 1) % pts.size()];
      track(a);
      track(b);
      pending_.push_back({0.5 * (dot(a, dir_) + dot(b, dir_)), prim, cls, color,
                          Kind::segment, a, b, 0.0});
    }
  }

  void disk(Point3 center, double radius, int prim, const std::string& cls,
            const std::string& color) {
    track(center + radius * e1_);
    track(center - radius * e1_);
    track(center + radius * e2_);
    track(center - radius * e2_);
    pending_.push_back(
        {dot(center, dir_), prim, cls, color, Kind::disk, center, center, radius});
  }

  void marker(Point3 p, int prim, const std::string& note) {
    track(p);
    // Markers sit on top of everything.
    pending_.push_back({std::numeric_limits<double>::infinity(), prim, note,
                        "black", Kind::marker, p, p, 0.0});
  }

  std::string finish() {
    const double cx = 0.5 * (minx_ + maxx_), cy = 0.5 * (miny_ + maxy_);
    auto map = [&](Point3 p) {
      return Point2{style_.width / 2.0 + scale_ * (dot(p, e1_) - cx),
                    style_.height / 2.0 - scale_ * (dot(p, e2_) - cy)};
    };
    std::ranges::stable_sort(pending_, {}, &Item::depth);
    std::string out = svg_header(style_.width, style_.height);
    const double sw = style_.stroke_width * scale_;
    for (const auto& it : pending_) {
      switch (it.kind) {
        case Kind::segment: {
          const Point2 a = map(it.a), b = map(it.b);
          out += fmt::format(
              "<line class=\"{}\" data-prim=\"{}\" x1=\"{:.3f}\" y1=\"{:.3f}\" "
              "x2=\"{:.3f}\" y2=\"{:.3f}\" stroke=\"{}\" stroke-width=\"{:.3f}\" "
              "stroke-linecap=\"round\"/>\n",
              it.cls, it.prim, a.x, a.y, b.x, b.y, xml_escape(it.color), sw);
          break;
        }
        case Kind::disk: {
          const Point2 c = map(it.a);
          out += fmt::format(
              "<circle class=\"{}\" data-prim=\"{}\" cx=\"{:.3f}\" cy=\"{:.3f}\" "
              "r=\"{:.3f}\" fill=\"{}\" fill-opacity=\"0.25\" stroke=\"{}\" "
              "stroke-width=\"{:.3f}\"/>\n",
              it.cls, it.prim, c.x, c.y, it.radius * scale_, xml_escape(it.color),
              xml_escape(it.color), sw);
          break;
        }
        case Kind::marker: {
          const Point2 c = map(it.a);
          out += fmt::format(
              "<circle class=\"marker\" data-prim=\"{}\" data-note=\"{}\" "
              "cx=\"{:.3f}\" cy=\"{:.3f}\" r=\"{:.3f}\" fill=\"black\"/>\n",
              it.prim, xml_escape(it.cls), c.x, c.y, 2.0 * sw);
          break;
        }
      }
    }
    out += "</svg>\n";
    return out;
  }

 private:
  enum class Kind { segment, disk, marker };
  struct Item {
    double depth;
    int prim;
    std::string cls;
    std::string color;
    Kind kind;
    Point3 a, b;
    double radius;
  };

  void track(Point3 p) {
    const double x = dot(p, e1_), y = dot(p, e2_);
    minx_ = std::min(minx_, x);
    maxx_ = std::max(maxx_, x);
    miny_ = std::min(miny_, y);
    maxy_ = std::max(maxy_, y);
  }

  const RenderStyle& style_;
  Point3 dir_, e1_, e2_;
  double scale_ = 1.0;
  double minx_ = std::numeric_limits<double>::infinity(), maxx_ = -minx_;
  double miny_ = minx_, maxy_ = -minx_;
  std::vector<Item> pending_;
};

std::vector<Point3> circle_points(Point3 center, Point3 u, Point3 v, double radius,
                                  double start, double sweep, int n, bool closed) {
  std::vector<Point3> pts;
  const int count = closed ? n : n + 1;
  for (int i = 0; i < count; ++i) {
    const double t = start + sweep * i / n;
    pts.push_back(center + radius * std::cos(t) * u + radius * std::sin(t) * v);
  }
  return pts;
}

std::string label_for(int index) {
  return index < 3 ? std::string(1, static_cast<char>('A' + index)) : "";
}

}  // namespace

std::string svg_scene(const Scene3D& s, const Camera& camera,
                      const RenderStyle& style) {
  constexpr double kTwoPi = 2.0 * std::numbers::pi;
  SceneWriter w(camera, style);
  int circles = 0, spheres = 0;
  for (std::size_t k = 0; k < s.primitives.size(); ++k) {
    const int prim = static_cast<int>(k);
    const auto& p = s.primitives[k];
    if (const auto* c = std::get_if<Circle3>(&p)) {
      const PolyCurve3 curve = circle_curve(*c, "circle", 128);
      w.polyline(curve.points(), true, prim, "circle",
                 style.color_for(label_for(circles++)));
    } else if (const auto* a = std::get_if<Arc3>(&p)) {
      const Point3 u = a->start, v = cross(a->normal, a->start);
      w.polyline(circle_points(a->center, u, v, a->radius, 0.0, a->sweep, 32, false),
                 false, prim, "arc", "black");
    } else if (const auto* sp = std::get_if<Sphere3>(&p)) {
      w.disk(sp->center, sp->radius, prim, "sphere",
             style.color_for(label_for(spheres++)));
    } else if (const auto* t = std::get_if<TorusPatch>(&p)) {
      const Point3 ax = t->axis;
      const Point3 helper = std::abs(ax.x) < 0.9 ? Point3{1, 0, 0} : Point3{0, 1, 0};
      const Point3 u = normalized(cross(helper, ax)), v = cross(ax, u);
      for (int m = 0; m < 12; ++m) {
        const double phi = kTwoPi * m / 12;
        const Point3 radial = std::cos(phi) * u + std::sin(phi) * v;
        w.polyline(circle_points(t->center + t->major * radial, radial, ax, t->tube,
                                 0.0, kTwoPi, 48, true),
                   true, prim, "torus", "gray");
      }
      for (int m = 0; m < 6; ++m) {
        const double theta = kTwoPi * m / 6;
        const double rho = t->major + t->tube * std::cos(theta);
        if (rho < 1e-12) continue;
        w.polyline(circle_points(t->center + t->tube * std::sin(theta) * ax, u, v,
                                 rho, 0.0, kTwoPi, 64, true),
                   true, prim, "torus", "gray");
      }
    } else if (const auto* mk = std::get_if<Marker3>(&p)) {
      w.marker(mk->position, prim, mk->note);
    }
  }
  return w.finish();
}

std::string svg_scene(const Realization3D& r, const Camera& camera,
                      const RenderStyle& style) {
  SceneWriter w(camera, style);
  for (std::size_t k = 0; k < r.curves.size(); ++k)
    w.polyline(r.curves[k].points(), true, static_cast<int>(k), "curve",
               style.color_for(r.curves[k].label()));
  return w.finish();
}

std::string gallery_file_name(int orbit_id, CrossingAssignment representative) {
  return fmt::format("{:02d}-{}.svg", orbit_id, representative.text());
}

}  // namespace trilink
