#pragma once

#include <utility>
#include <vector>

#include "cfcolor/hypergraph.hpp"

namespace cfcolor {

bool is_planar(int n, const std::vector<std::pair<int, int>>& edges);

// Simple undirected planar graph; planarity is verified at construction and
// non-planar input is rejected.
class PlanarGraph {
public:
    PlanarGraph(int n, const std::vector<std::pair<int, int>>& edges);
    static PlanarGraph from_adjacency(const std::vector<std::vector<int>>& adj);

    int vertex_count() const { return static_cast<int>(adj_.size()); }
    const std::vector<std::vector<int>>& adjacency() const { return adj_; }
    const std::vector<int>& neighbors(int v) const { return adj_[v]; }
    std::vector<std::pair<int, int>> edge_list() const;

private:
    explicit PlanarGraph(std::vector<std::vector<int>> adj)
        : adj_(std::move(adj)) {}
    std::vector<std::vector<int>> adj_;
};

PlanarGraph make_grid_graph(int rows, int cols);

// K_{1,n-1}; vertex 0 is the center.
PlanarGraph make_star_graph(int n);

// Vertex sets of all simple paths on >= 1 vertex, deduplicated as sets.
Hypergraph paths_hypergraph(const PlanarGraph& g, int guard = 14);

// V = separator + part_a + part_b, no edge between the parts,
// max(|part_a|, |part_b|) <= 2n/3, |separator| <= sqrt(8 n).
struct SeparatorDecomposition {
    std::vector<int> separator;
    std::vector<int> part_a;
    std::vector<int> part_b;
};

// sqrt(8): the separator size constant this module guarantees.
inline constexpr double kSeparatorConstant = 2.8284271247461903;

// Throws InvariantBreach when the decomposition violates any invariant.
void validate_separator(const PlanarGraph& g, const SeparatorDecomposition& s);

// Exhaustive optimum for n <= 16, breadth-first levels plus a fundamental
// cycle above that.
SeparatorDecomposition find_separator(const PlanarGraph& g);

// ceil(c * sqrt(n)) with c = kSeparatorConstant / (1 - sqrt(2/3)): list size
// under which the separator recursion is guaranteed to finish.
int cf_paths_required_list_size(int n);

struct ListTooSmall : InputError {
    using InputError::InputError;
};

// Separator recursion: the separator gets distinct colors from its lists,
// those colors are struck from both parts, and the parts are colored
// recursively. Runs optimistically on lists below the guaranteed size and
// throws ListTooSmall only if it actually gets stuck.
Coloring cf_color_paths_from_lists(const PlanarGraph& g,
                                   const ColorListFamily& lists);

// Center draws from {1..s}, every leaf from {s+1..2s}; aligned with
// make_star_graph(n).
ColorListFamily star_lower_bound_lists(int n, int s);

}  // namespace cfcolor
