#include "trilink/diagram.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numbers>

#include <fmt/format.h>
#include <json.hpp>

#include "trilink/errors.hpp"

namespace trilink {

char to_char(CircleId c) { return static_cast<char>('A' + static_cast<int>(c)); }

std::string to_string(CircleId c) { return std::string(1, to_char(c)); }

std::optional<CircleId> circle_from_char(char c) {
  if (c >= 'A' && c <= 'C') return static_cast<CircleId>(c - 'A');
  return std::nullopt;
}

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Pairs in site order: AB, BC, CA.
constexpr std::array<std::array<CircleId, 2>, 3> kPairs{{
    {CircleId::A, CircleId::B},
    {CircleId::B, CircleId::C},
    {CircleId::C, CircleId::A},
}};

double angle_about(Point2 center, Point2 p) {
  double a = std::atan2(p.y - center.y, p.x - center.x);
  if (a < 0.0) a += kTwoPi;
  return a;
}

Point2 ccw_tangent(const Circle2& c, Point2 p) {
  const Point2 r = p - c.center;
  const double n = norm(r);
  return {-r.y / n, r.x / n};
}

std::vector<Point2> circle_polyline(const Circle2& c, int samples) {
  std::vector<Point2> pts;
  pts.reserve(samples);
  for (int k = 0; k < samples; ++k) {
    const double t = kTwoPi * k / samples;
    pts.push_back({c.center.x + c.radius * std::cos(t),
                   c.center.y + c.radius * std::sin(t)});
  }
  return pts;
}

double closed_length(const std::vector<Point2>& pts) {
  double len = 0.0;
  for (std::size_t i = 0; i < pts.size(); ++i)
    len += norm(pts[(i + 1) % pts.size()] - pts[i]);
  return len;
}

}  // namespace

CanonicalProjection build_canonical_projection() {
  CanonicalProjection proj;
  const double h = std::sqrt(3.0) / 2.0;
  proj.circles[0] = {{0.0, 1.0}, kCanonicalRadius};
  proj.circles[1] = {{-h, -0.5}, kCanonicalRadius};
  proj.circles[2] = {{h, -0.5}, kCanonicalRadius};

  for (int p = 0; p < 3; ++p) {
    const Circle2& c1 = proj.circle(kPairs[p][0]);
    const Circle2& c2 = proj.circle(kPairs[p][1]);
    const Point2 mid = 0.5 * (c1.center + c2.center);
    const Point2 axis = c2.center - c1.center;
    const double d = norm(axis);
    const double half_chord = std::sqrt(kCanonicalRadius * kCanonicalRadius -
                                        0.25 * d * d);
    const Point2 perp{-axis.y / d, axis.x / d};
    Point2 p1 = mid + half_chord * perp;
    Point2 p2 = mid - half_chord * perp;
    if (norm(p1) > norm(p2)) std::swap(p1, p2);
    proj.sites[2 * p] = {2 * p, kPairs[p], Depth::inner, p1};
    proj.sites[2 * p + 1] = {2 * p + 1, kPairs[p], Depth::outer, p2};
  }

  for (CircleId c : kCircles) {
    const Circle2& circle = proj.circle(c);
    std::vector<int> ids;
    for (const auto& s : proj.sites)
      if (s.pair[0] == c || s.pair[1] == c) ids.push_back(s.index);
    std::ranges::sort(ids, {}, [&](int i) {
      return angle_about(circle.center, proj.sites[i].position);
    });
    std::ranges::copy(ids, proj.visit_order[static_cast<int>(c)].begin());
  }
  return proj;
}

const CanonicalProjection& canonical_projection() {
  static const CanonicalProjection proj = build_canonical_projection();
  return proj;
}

CrossingAssignment CrossingAssignment::from_word(unsigned word) {
  if (word >= static_cast<unsigned>(kCount))
    throw InputError(fmt::format("assignment word {} out of range", word));
  return CrossingAssignment(word);
}

CrossingAssignment CrossingAssignment::from_bits(
    const std::array<bool, kSites>& bits) {
  unsigned w = 0;
  for (int i = 0; i < kSites; ++i)
    if (bits[i]) w |= 1u << (kSites - 1 - i);
  return CrossingAssignment(w);
}

std::string CrossingAssignment::text() const {
  std::string s(kSites, '0');
  for (int i = 0; i < kSites; ++i)
    if (bit(i)) s[i] = '1';
  return s;
}

CrossingAssignment assignment_from_text(std::string_view word) {
  if (word.size() != CrossingAssignment::kSites)
    throw InputError(fmt::format(
        "assignment must have 6 characters, got length {}", word.size()));
  std::array<bool, CrossingAssignment::kSites> bits{};
  for (std::size_t i = 0; i < word.size(); ++i) {
    if (word[i] != '0' && word[i] != '1')
      throw InputError(fmt::format(
          "assignment character at position {} must be 0 or 1, got '{}'", i,
          word[i]));
    bits[i] = word[i] == '1';
  }
  return CrossingAssignment::from_bits(bits);
}

std::vector<CrossingAssignment> all_assignments() {
  std::vector<CrossingAssignment> out;
  out.reserve(CrossingAssignment::kCount);
  for (unsigned w = 0; w < CrossingAssignment::kCount; ++w)
    out.push_back(CrossingAssignment::from_word(w));
  return out;
}

LinkDiagram LinkDiagram::assemble(std::vector<Component> components,
                                  std::vector<CrossingGeometry> crossings) {
  LinkDiagram d;
  d.arc_offsets_.reserve(components.size());
  int offset = 0;
  for (const auto& c : components) {
    d.arc_offsets_.push_back(offset);
    offset += static_cast<int>(c.visits.size());
  }
  d.arc_count_ = offset;

  struct Slot {
    int component = -1;
    int visit = -1;
  };
  std::vector<Slot> over(crossings.size()), under(crossings.size());
  for (std::size_t ci = 0; ci < components.size(); ++ci) {
    const auto& visits = components[ci].visits;
    for (std::size_t k = 0; k < visits.size(); ++k) {
      const int x = visits[k].crossing;
      if (x < 0 || x >= static_cast<int>(crossings.size()))
        throw InputError(fmt::format("visit references unknown crossing {}", x));
      Slot& slot = visits[k].role == Role::over ? over[x] : under[x];
      if (slot.component >= 0)
        throw InputError(
            fmt::format("crossing {} has two strands with the same role", x));
      slot = {static_cast<int>(ci), static_cast<int>(k)};
    }
  }

  auto arc_in = [&](Slot s) {
    const int n = static_cast<int>(components[s.component].visits.size());
    return d.arc_offsets_[s.component] + (s.visit + n - 1) % n;
  };
  auto arc_out = [&](Slot s) { return d.arc_offsets_[s.component] + s.visit; };

  d.crossings_.reserve(crossings.size());
  for (std::size_t x = 0; x < crossings.size(); ++x) {
    if (over[x].component < 0 || under[x].component < 0)
      throw InputError(
          fmt::format("crossing {} lacks an over or an under strand", x));
    const auto& g = crossings[x];
    const double turn = cross(g.over_dir, g.under_dir);
    if (turn == 0.0)
      throw InputError(fmt::format("crossing {} has parallel strands", x));
    Crossing c;
    c.position = g.position;
    c.over_dir = g.over_dir;
    c.under_dir = g.under_dir;
    c.over_component = over[x].component;
    c.under_component = under[x].component;
    // Going counterclockwise from the incoming under-end, the outgoing
    // over-end comes first exactly when the crossing is positive.
    c.sign = turn > 0.0 ? 1 : -1;
    const int b = c.sign > 0 ? arc_out(over[x]) : arc_in(over[x]);
    const int dd = c.sign > 0 ? arc_in(over[x]) : arc_out(over[x]);
    c.arcs = {arc_in(under[x]), b, arc_out(under[x]), dd};
    d.crossings_.push_back(c);
  }
  d.components_ = std::move(components);
  return d;
}

int LinkDiagram::free_loop_count() const {
  return static_cast<int>(std::ranges::count_if(
      components_, [](const Component& c) { return c.visits.empty(); }));
}

std::optional<std::size_t> LinkDiagram::find_component(
    std::string_view label) const {
  for (std::size_t i = 0; i < components_.size(); ++i)
    if (components_[i].label == label) return i;
  return std::nullopt;
}

bool LinkDiagram::has_positions() const {
  return !components_.empty() &&
         std::ranges::all_of(components_, [](const Component& c) {
           return c.path.size() >= 3;
         });
}

LinkDiagram to_diagram(const CanonicalProjection& proj,
                       CrossingAssignment asg) {
  constexpr int kPathSamples = 240;
  std::vector<Component> components;
  for (CircleId id : kCircles) {
    const Circle2& circle = proj.circle(id);
    Component comp;
    comp.label = to_string(id);
    comp.path = circle_polyline(circle, kPathSamples);
    comp.path_length = closed_length(comp.path);
    for (int site : proj.visit_order[static_cast<int>(id)]) {
      const CrossingSite& s = proj.sites[site];
      const CircleId top = asg.bit(site) ? s.pair[0] : s.pair[1];
      const double frac = angle_about(circle.center, s.position) / kTwoPi;
      comp.visits.push_back({site, top == id ? Role::over : Role::under,
                             frac * comp.path_length});
    }
    components.push_back(std::move(comp));
  }

  std::vector<CrossingGeometry> geom;
  for (const auto& s : proj.sites) {
    const CircleId top = asg.bit(s.index) ? s.pair[0] : s.pair[1];
    const CircleId bottom = top == s.pair[0] ? s.pair[1] : s.pair[0];
    geom.push_back({s.position, ccw_tangent(proj.circle(top), s.position),
                    ccw_tangent(proj.circle(bottom), s.position)});
  }
  return LinkDiagram::assemble(std::move(components), std::move(geom));
}

LinkDiagram to_diagram(CrossingAssignment asg) {
  return to_diagram(canonical_projection(), asg);
}

namespace {

std::vector<CrossingGeometry> geometry_of(const LinkDiagram& d) {
  std::vector<CrossingGeometry> g;
  g.reserve(d.crossing_count());
  for (const auto& c : d.crossings())
    g.push_back({c.position, c.over_dir, c.under_dir});
  return g;
}

}  // namespace

LinkDiagram mirror(const LinkDiagram& d) {
  std::vector<Component> comps = d.components();
  for (auto& c : comps)
    for (auto& v : c.visits)
      v.role = v.role == Role::over ? Role::under : Role::over;
  auto geom = geometry_of(d);
  for (auto& g : geom) std::swap(g.over_dir, g.under_dir);
  return LinkDiagram::assemble(std::move(comps), std::move(geom));
}

LinkDiagram remove_component(const LinkDiagram& d, std::string_view label) {
  const auto idx = d.find_component(label);
  if (!idx)
    throw InputError(fmt::format("diagram has no component '{}'", label));
  const int removed = static_cast<int>(*idx);

  std::vector<int> remap(d.crossing_count(), -1);
  std::vector<CrossingGeometry> geom;
  const auto all = geometry_of(d);
  for (std::size_t x = 0; x < d.crossing_count(); ++x) {
    const auto& c = d.crossings()[x];
    if (c.over_component == removed || c.under_component == removed) continue;
    remap[x] = static_cast<int>(geom.size());
    geom.push_back(all[x]);
  }

  std::vector<Component> comps;
  for (std::size_t i = 0; i < d.component_count(); ++i) {
    if (static_cast<int>(i) == removed) continue;
    Component c = d.components()[i];
    std::erase_if(c.visits, [&](const Visit& v) { return remap[v.crossing] < 0; });
    for (auto& v : c.visits) v.crossing = remap[v.crossing];
    comps.push_back(std::move(c));
  }
  return LinkDiagram::assemble(std::move(comps), std::move(geom));
}

LinkDiagram remove_component(const LinkDiagram& d, CircleId c) {
  return remove_component(d, to_string(c));
}

LinkDiagram diagram_from_height_curves(const std::vector<HeightCurve>& curves,
                                       double tolerance) {
  struct Hit {
    int curve;
    int segment;
    double t;
    int crossing;
    Role role;
    Point2 dir;
  };
  std::vector<Hit> hits;
  std::vector<Point2> positions;

  struct Segment {
    Point2 p0, p1;
    double h0, h1;
    double minx, maxx, miny, maxy;
  };
  std::vector<std::vector<Segment>> segs(curves.size());
  for (std::size_t c = 0; c < curves.size(); ++c) {
    const auto& pts = curves[c].points;
    if (pts.size() < 3 || curves[c].heights.size() != pts.size())
      throw InputError(
          fmt::format("curve '{}' needs >= 3 points with heights",
                      curves[c].label));
    for (std::size_t i = 0; i < pts.size(); ++i) {
      const std::size_t j = (i + 1) % pts.size();
      const Point2 a = pts[i], b = pts[j];
      segs[c].push_back({a, b, curves[c].heights[i], curves[c].heights[j],
                         std::min(a.x, b.x), std::max(a.x, b.x),
                         std::min(a.y, b.y), std::max(a.y, b.y)});
    }
  }

  for (std::size_t ca = 0; ca < curves.size(); ++ca) {
    for (std::size_t cb = ca; cb < curves.size(); ++cb) {
      const int na = static_cast<int>(segs[ca].size());
      const int nb = static_cast<int>(segs[cb].size());
      for (int i = 0; i < na; ++i) {
        const Segment& s = segs[ca][i];
        for (int j = (ca == cb ? i + 1 : 0); j < nb; ++j) {
          if (ca == cb && (j == i + 1 || (i == 0 && j == na - 1))) continue;
          const Segment& q = segs[cb][j];
          if (s.maxx < q.minx - tolerance || q.maxx < s.minx - tolerance ||
              s.maxy < q.miny - tolerance || q.maxy < s.miny - tolerance)
            continue;
          const Point2 dp = s.p1 - s.p0, dq = q.p1 - q.p0, w = q.p0 - s.p0;
          const double den = cross(dp, dq);
          if (std::abs(den) <= tolerance * norm(dp) * norm(dq)) {
            if (std::abs(cross(w, dp)) <= tolerance * norm(dp))
              throw DegeneracyError("collinear overlapping segments in projection");
            continue;
          }
          const double a = cross(w, dq) / den;
          const double b = cross(w, dp) / den;
          if (a < -tolerance || a > 1.0 + tolerance || b < -tolerance ||
              b > 1.0 + tolerance)
            continue;
          if (a < tolerance || a > 1.0 - tolerance || b < tolerance ||
              b > 1.0 - tolerance)
            throw DegeneracyError("projected crossing lies on a sample vertex");
          const double ha = s.h0 + a * (s.h1 - s.h0);
          const double hb = q.h0 + b * (q.h1 - q.h0);
          if (std::abs(ha - hb) < tolerance)
            throw DegeneracyError("curves meet: crossing has no height gap");
          const int x = static_cast<int>(positions.size());
          positions.push_back(s.p0 + a * dp);
          const bool a_over = ha > hb;
          hits.push_back({static_cast<int>(ca), i, a, x,
                          a_over ? Role::over : Role::under,
                          (1.0 / norm(dp)) * dp});
          hits.push_back({static_cast<int>(cb), j, b, x,
                          a_over ? Role::under : Role::over,
                          (1.0 / norm(dq)) * dq});
        }
      }
    }
  }

  for (std::size_t i = 0; i < positions.size(); ++i)
    for (std::size_t j = i + 1; j < positions.size(); ++j)
      if (norm(positions[i] - positions[j]) < tolerance)
        throw DegeneracyError("projection has a multiple point");

  std::vector<CrossingGeometry> geom(positions.size());
  for (const auto& h : hits) {
    geom[h.crossing].position = positions[h.crossing];
    if (h.role == Role::over)
      geom[h.crossing].over_dir = h.dir;
    else
      geom[h.crossing].under_dir = h.dir;
  }

  std::vector<Component> comps;
  for (std::size_t c = 0; c < curves.size(); ++c) {
    Component comp;
    comp.label = curves[c].label;
    comp.path = curves[c].points;
    std::vector<double> seg_start(segs[c].size() + 1, 0.0);
    for (std::size_t i = 0; i < segs[c].size(); ++i)
      seg_start[i + 1] = seg_start[i] + norm(segs[c][i].p1 - segs[c][i].p0);
    comp.path_length = seg_start.back();
    std::vector<const Hit*> mine;
    for (const auto& h : hits)
      if (h.curve == static_cast<int>(c)) mine.push_back(&h);
    std::ranges::sort(mine, [](const Hit* l, const Hit* r) {
      return std::tie(l->segment, l->t) < std::tie(r->segment, r->t);
    });
    for (const Hit* h : mine) {
      const double len = seg_start[h->segment + 1] - seg_start[h->segment];
      comp.visits.push_back(
          {h->crossing, h->role, seg_start[h->segment] + h->t * len});
    }
    comps.push_back(std::move(comp));
  }
  return LinkDiagram::assemble(std::move(comps), std::move(geom));
}

namespace {

HeightCurve sampled_curve(std::string label, int samples,
                          const std::function<Point2(double)>& at,
                          const std::function<double(double)>& height) {
  HeightCurve hc;
  hc.label = std::move(label);
  for (int k = 0; k < samples; ++k) {
    // Half-step phase keeps the fixtures' crossings off sample vertices.
    const double t = kTwoPi * (k + 0.5) / samples;
    hc.points.push_back(at(t));
    hc.heights.push_back(height(t));
  }
  return hc;
}

HeightCurve flat_circle(std::string label, Point2 center, double radius,
                        const std::function<double(Point2)>& height) {
  return sampled_curve(
      std::move(label), 360,
      [=](double t) {
        return Point2{center.x + radius * std::cos(t),
                      center.y + radius * std::sin(t)};
      },
      [=](double t) {
        return height({center.x + radius * std::cos(t),
                       center.y + radius * std::sin(t)});
      });
}

double zero_height(Point2) { return 0.0; }

}  // namespace

LinkDiagram builtin_diagram(std::string_view name) {
  if (name == "unknot")
    return diagram_from_height_curves({flat_circle("A", {0, 0}, 1.0, zero_height)});
  if (name == "twist-unknot")
    return diagram_from_height_curves({sampled_curve(
        "A", 400,
        [](double t) { return Point2{std::cos(t), 0.5 * std::sin(2 * t)}; },
        [](double t) { return std::sin(t); })});
  if (name == "trefoil")
    return diagram_from_height_curves({sampled_curve(
        "K", 600,
        [](double t) {
          return Point2{std::sin(t) + 2 * std::sin(2 * t),
                        std::cos(t) - 2 * std::cos(2 * t)};
        },
        [](double t) { return -std::sin(3 * t); })});
  if (name == "hopf")
    return diagram_from_height_curves(
        {flat_circle("A", {-0.5, 0}, 1.0, [](Point2 p) { return 0.5 * p.y; }),
         flat_circle("B", {0.5, 0}, 1.0, zero_height)});
  if (name == "unlink2")
    return diagram_from_height_curves(
        {flat_circle("A", {-1.5, 0}, 1.0, zero_height),
         flat_circle("B", {1.5, 0}, 1.0, zero_height)});
  if (name == "unlink3")
    return diagram_from_height_curves(
        {flat_circle("A", {-1.5, 0}, 1.0, zero_height),
         flat_circle("B", {1.5, 0}, 1.0, zero_height),
         flat_circle("C", {0, 2.6}, 1.0, zero_height)});

  std::string valid;
  for (auto n : kBuiltinNames) valid += (valid.empty() ? "" : ", ") + std::string(n);
  throw InputError(
      fmt::format("unknown builtin '{}' (valid: {})", name, valid));
}

std::string export_diagram(const LinkDiagram& d) {
  using nlohmann::ordered_json;
  ordered_json doc;
  doc["format"] = "trilink-diagram";
  doc["version"] = 1;
  ordered_json comps = ordered_json::array();
  for (const auto& c : d.components()) {
    ordered_json visits = ordered_json::array();
    for (const auto& v : c.visits)
      visits.push_back({v.crossing, v.role == Role::over ? "over" : "under"});
    comps.push_back({{"label", c.label}, {"visits", visits}});
  }
  doc["components"] = comps;
  ordered_json xs = ordered_json::array();
  for (std::size_t i = 0; i < d.crossing_count(); ++i) {
    const auto& c = d.crossings()[i];
    xs.push_back({{"index", i},
                  {"over", d.components()[c.over_component].label},
                  {"under", d.components()[c.under_component].label},
                  {"pd", c.arcs},
                  {"sign", c.sign},
                  {"position", {c.position.x, c.position.y}}});
  }
  doc["crossings"] = xs;
  return doc.dump(2) + "\n";
}

}  // namespace trilink
