#pragma once

#include <string>

#include "cfcolor/geometry.hpp"
#include "cfcolor/planar.hpp"

namespace cfcolor {

// Deterministic SVG 1.1 renderings. A fixed 12-entry palette cycles with the
// integer color; a legend maps swatches back to color values. Pass nullptr
// to draw uncolored instances.
std::string svg_points(const PointSet& p, const Coloring* coloring);
std::string svg_discs(const DiscFamily& d, const Coloring* coloring);
std::string svg_graph(const PlanarGraph& g, const Coloring* coloring);

// Vertices of the interval hypergraph H_n as labeled points on a line.
std::string svg_line(int n, const Coloring* coloring);

}  // namespace cfcolor
