#pragma once

#include <span>
#include <string>
#include <vector>

#include "cfcolor/errors.hpp"

namespace cfcolor {

// Total assignment vertex id -> positive color.
using Coloring = std::vector<int>;

enum class ColoringMode { proper, cf, um };

std::string to_string(ColoringMode mode);

// Finite vertex set {0..n-1} plus a family of hyperedges. Each edge is kept
// sorted ascending; the family is deduplicated by first occurrence, so edge
// order is reproducible from construction order.
class Hypergraph {
public:
    Hypergraph() = default;
    Hypergraph(int n_vertices, std::vector<std::vector<int>> edges);

    int vertex_count() const { return n_; }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    const std::vector<std::vector<int>>& edges() const { return edges_; }
    const std::vector<int>& edge(int i) const { return edges_[i]; }

private:
    int n_ = 0;
    std::vector<std::vector<int>> edges_;
};

// Per-vertex sets of admissible positive colors, one list per vertex.
class ColorListFamily {
public:
    ColorListFamily() = default;
    explicit ColorListFamily(std::vector<std::vector<int>> lists);

    int size() const { return static_cast<int>(lists_.size()); }
    const std::vector<int>& list(int v) const { return lists_[v]; }
    const std::vector<std::vector<int>>& lists() const { return lists_; }

    // n copies of {first_color, ..., first_color + list_size - 1}.
    static ColorListFamily uniform(int n, int list_size, int first_color = 1);

private:
    std::vector<std::vector<int>> lists_;
};

// Graph of the cardinality-2 hyperedges.
struct DelaunayGraph {
    int n_vertices = 0;
    std::vector<std::pair<int, int>> edges;  // first < second

    std::vector<std::vector<int>> adjacency() const;
};

// Sub-hypergraph re-indexed to 0..|V'|-1 together with the id translation.
struct InducedHypergraph {
    Hypergraph hypergraph;
    std::vector<int> to_parent;    // new id -> parent id, ascending
    std::vector<int> from_parent;  // parent id -> new id, -1 where absent
};

InducedHypergraph induce(const Hypergraph& h, std::span<const int> vertices);

DelaunayGraph delaunay_graph(const Hypergraph& h);

// Number of hyperedges containing v.
int degree(const Hypergraph& h, int v);

// Minimal s >= 1 with |E| <= s(s-1)/2.
int s_of(const Hypergraph& h);

struct Verdict {
    bool ok = false;
    std::vector<int> witness;  // first violating hyperedge in family order

    explicit operator bool() const { return ok; }
};

// Every hyperedge with >= 2 vertices has two distinct colors.
Verdict verify_proper(const Hypergraph& h, const Coloring& c);

// Every hyperedge has some color of multiplicity exactly one in it.
Verdict verify_cf(const Hypergraph& h, const Coloring& c);

// In every hyperedge the maximum color occurs exactly once.
Verdict verify_um(const Hypergraph& h, const Coloring& c);

Verdict verify(ColoringMode mode, const Hypergraph& h, const Coloring& c);

// Every assigned color belongs to the vertex's list.
bool verify_from_lists(const Coloring& c, const ColorListFamily& lists);

}  // namespace cfcolor
