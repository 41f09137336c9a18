#pragma once

#include "cfcolor/hypergraph.hpp"

namespace cfcolor {

// Unique-maximum coloring from lists of size at least min(deg(v)+1, s(H)).
// Top color first: among its holders the maximum-degree vertex takes it, the
// hyperedges through that vertex disappear, and the color is struck from
// their remaining members.
Coloring um_color_few_edges(const Hypergraph& h, const ColorListFamily& lists);

}  // namespace cfcolor
