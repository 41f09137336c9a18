#pragma once

#include <optional>
#include <span>

#include "cfcolor/geometry.hpp"
#include "cfcolor/potential.hpp"

namespace cfcolor {

// Alternating 1,2,1,2,... over the vertices in ascending position order.
// The result is aligned with the input span.
ProperColoringCertificate interval_two_color(std::span<const int> positions);

// Hereditary 2-colorer for discrete interval hypergraphs. Vertex ids double
// as line positions, so any subset is again an interval hypergraph in
// sorted order and alternation stays proper.
HereditaryColorer make_interval_colorer();

struct ExactColorOptions {
    int max_vertices = 24;
};

// exact_k_color found no proper coloring with at most k classes.
struct ExactColorInfeasible : InfeasibleError {
    using InfeasibleError::InfeasibleError;
};

// Backtracking search for a proper coloring with at most k classes, vertices
// in decreasing-degree order, lowest feasible color first. Returns nullopt
// when no such coloring exists.
std::optional<ProperColoringCertificate> exact_k_color(
    const Hypergraph& h, int k, const ExactColorOptions& options = {});

int degeneracy(const DelaunayGraph& g);

// Minimum-degree elimination order, colored greedily in reverse; uses at
// most degeneracy+1 classes.
ProperColoringCertificate degeneracy_greedy_color(const DelaunayGraph& g);

struct DelaunayColorerOptions {
    int exact_guard = 24;
};

// Hereditary colorer for hypergraphs in which every hyperedge of size >= 2
// contains a cardinality-2 hyperedge (points with respect to discs, disc
// families with respect to coverage). Colors the Delaunay graph of the
// induced sub-hypergraph and checks the containment property per call,
// falling back to exact coloring of the whole sub-hypergraph when it fails.
HereditaryColorer make_delaunay_hereditary_colorer(
    int k = 4, const DelaunayColorerOptions& options = {});

// Hereditary colorer for point sets with respect to halfplanes: k = 3 for
// points in convex position, k = 4 otherwise (some four points with only
// three on their hull force a complete graph on the two-element cuts).
HereditaryColorer make_halfplane_colorer(const PointSet& p,
                                         const ExactColorOptions& options = {});

// Plain exact backtracking per subset; throws ExactColorInfeasible when an
// induced sub-hypergraph is not k-colorable.
HereditaryColorer make_exact_colorer(int k,
                                     const ExactColorOptions& options = {});

}  // namespace cfcolor
