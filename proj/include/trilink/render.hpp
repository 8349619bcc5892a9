#pragma once

#include <map>
#include <string>

#include "trilink/diagram.hpp"
#include "trilink/geometry.hpp"

namespace trilink {

/// Drawing options. Lengths are in diagram units except the canvas size.
/// The default palette is green, blue, red for A, B, C.
struct RenderStyle {
  std::map<std::string, std::string> colors{
      {"A", "green"}, {"B", "blue"}, {"C", "red"}};
  double gap_width = 0.2;
  double stroke_width = 0.06;
  int width = 480;
  int height = 480;

  /// Throws InputError unless gap_width > stroke_width > 0 and the canvas is
  /// non-empty.
  void validate() const;
  std::string color_for(const std::string& label) const;
};

/// Parses "A=red,B=#00f" into overrides on top of `base`.
RenderStyle with_colors(RenderStyle base, std::string_view overrides);

/// SVG 1.1 drawing of a planar diagram. Each component is one <g> whose
/// <path class="strand"> pieces are separated by one gap per under-crossing.
std::string svg_diagram(const LinkDiagram& d, const RenderStyle& style = {});

struct Camera {
  Point3 direction{0.0, 0.0, 1.0};  // towards the viewer
  double scale = 100.0;             // pixels per unit
};

/// Orthographic SVG 1.1 projection, painter-sorted per segment.
std::string svg_scene(const Scene3D& s, const Camera& camera = {},
                      const RenderStyle& style = {});
std::string svg_scene(const Realization3D& r, const Camera& camera = {},
                      const RenderStyle& style = {});

/// "<orbit id>-<bitword>.svg", orbit id zero-padded to two digits.
std::string gallery_file_name(int orbit_id, CrossingAssignment representative);

}  // namespace trilink
