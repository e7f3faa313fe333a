#pragma once

#include <optional>
#include <string>

#include "asymlat/analyzer.hpp"

namespace asymlat {

// Axis-aligned drawing window in set coordinates.
struct Viewport {
  Rational xmin, ymin, xmax, ymax;
};

// Bounding box of the vertices (rays extended by a fixed length), expanded
// by 25 percent per side; degenerate extents are padded to unit size.
Viewport default_viewport(const FlaggedBody2& k);

// Deterministic SVG 1.1 document: region fill for the set, included faces
// solid, excluded faces dashed, vertices as filled/hollow circles, rays
// clipped to the viewport with arrowheads. With landmarks, overlays the
// corner triangle, the center R, the arc F, the chord line, and the corner
// cones. Equal inputs produce byte-identical documents.
std::string render_svg(const FlaggedBody2& k,
                       const std::optional<Landmarks>& lm = std::nullopt,
                       const std::optional<Viewport>& vp = std::nullopt);

}  // namespace asymlat
