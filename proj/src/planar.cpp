#include "cfcolor/planar.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>

namespace cfcolor {

bool is_planar(int n, const std::vector<std::pair<int, int>>& edges) {
    using BoostGraph =
        boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS>;
    BoostGraph g(n);
    for (auto [a, b] : edges) boost::add_edge(a, b, g);
    return boost::boyer_myrvold_planarity_test(g);
}

PlanarGraph::PlanarGraph(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw InputError("negative vertex count");
    adj_.resize(n);
    std::set<std::pair<int, int>> seen;
    for (auto [a, b] : edges) {
        if (a < 0 || b < 0 || a >= n || b >= n)
            throw InputError("edge endpoint out of range");
        if (a == b) throw InputError("self loop");
        auto key = std::minmax(a, b);
        if (!seen.insert({key.first, key.second}).second) continue;
        adj_[a].push_back(b);
        adj_[b].push_back(a);
    }
    for (auto& nb : adj_) std::sort(nb.begin(), nb.end());
    if (!is_planar(n, edge_list())) throw InputError("graph is not planar");
}

PlanarGraph PlanarGraph::from_adjacency(
    const std::vector<std::vector<int>>& adj) {
    std::vector<std::pair<int, int>> edges;
    const int n = static_cast<int>(adj.size());
    for (int v = 0; v < n; ++v)
        for (int w : adj[v])
            if (v < w) edges.emplace_back(v, w);
    // Symmetry check.
    for (int v = 0; v < n; ++v)
        for (int w : adj[v]) {
            if (w < 0 || w >= n) throw InputError("neighbor id out of range");
            const auto& back = adj[w];
            if (std::find(back.begin(), back.end(), v) == back.end())
                throw InputError("adjacency is not symmetric");
        }
    return PlanarGraph(n, edges);
}

std::vector<std::pair<int, int>> PlanarGraph::edge_list() const {
    std::vector<std::pair<int, int>> edges;
    for (int v = 0; v < vertex_count(); ++v)
        for (int w : adj_[v])
            if (v < w) edges.emplace_back(v, w);
    return edges;
}

PlanarGraph make_grid_graph(int rows, int cols) {
    if (rows < 1 || cols < 1) throw InputError("grid needs positive dimensions");
    std::vector<std::pair<int, int>> edges;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.emplace_back(id(r, c), id(r, c + 1));
            if (r + 1 < rows) edges.emplace_back(id(r, c), id(r + 1, c));
        }
    return PlanarGraph(rows * cols, edges);
}

PlanarGraph make_star_graph(int n) {
    if (n < 1) throw InputError("star needs n >= 1");
    std::vector<std::pair<int, int>> edges;
    for (int leaf = 1; leaf < n; ++leaf) edges.emplace_back(0, leaf);
    return PlanarGraph(n, edges);
}

Hypergraph paths_hypergraph(const PlanarGraph& g, int guard) {
    const int n = g.vertex_count();
    if (n > guard)
        throw GuardError("paths_hypergraph: " + std::to_string(n) +
                         " vertices exceed the guard of " + std::to_string(guard));
    if (n > 25) throw GuardError("paths_hypergraph supports at most 25 vertices");

    // endpoint[mask] has bit v set when some simple path covers exactly the
    // vertices of mask and ends at v.
    std::vector<std::uint32_t> endpoint(std::size_t(1) << n, 0);
    for (int v = 0; v < n; ++v) endpoint[std::uint32_t(1) << v] = std::uint32_t(1) << v;
    std::vector<std::uint32_t> adj_mask(n, 0);
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v)) adj_mask[v] |= std::uint32_t(1) << w;

    const std::uint32_t full = (std::uint32_t(1) << n) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        std::uint32_t ends = endpoint[mask];
        while (ends) {
            const int v = std::countr_zero(ends);
            ends &= ends - 1;
            std::uint32_t ext = adj_mask[v] & ~mask;
            while (ext) {
                const int w = std::countr_zero(ext);
                ext &= ext - 1;
                endpoint[mask | (std::uint32_t(1) << w)] |= std::uint32_t(1) << w;
            }
        }
    }

    std::vector<std::vector<int>> edges;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
        if (!endpoint[mask]) continue;
        std::vector<int> e;
        for (int v = 0; v < n; ++v)
            if (mask & (std::uint32_t(1) << v)) e.push_back(v);
        edges.push_back(std::move(e));
    }
    return Hypergraph(n, std::move(edges));
}

int cf_paths_required_list_size(int n) {
    if (n < 1) throw InputError("n >= 1 required");
    const double c = kSeparatorConstant / (1.0 - std::sqrt(2.0 / 3.0));
    return static_cast<int>(std::ceil(c * std::sqrt(static_cast<double>(n))));
}

ColorListFamily star_lower_bound_lists(int n, int s) {
    if (n < 3) throw InputError("star lists need n >= 3");
    if (s < 1) throw InputError("star lists need s >= 1");
    std::vector<int> center(s), leaf(s);
    for (int i = 0; i < s; ++i) {
        center[i] = 1 + i;
        leaf[i] = s + 1 + i;
    }
    std::vector<std::vector<int>> lists(n, leaf);
    lists[0] = center;
    return ColorListFamily(std::move(lists));
}

namespace {

struct PathsColorState {
    const PlanarGraph& g;
    std::vector<std::vector<int>> lists;  // remaining colors, sorted
    Coloring coloring;
    bool threshold_met;
};

void color_recursive(PathsColorState& s, const std::vector<int>& vertices) {
    if (vertices.empty()) return;

    // Induced subgraph on `vertices` (ascending global ids).
    std::vector<int> local(s.g.vertex_count(), -1);
    for (std::size_t i = 0; i < vertices.size(); ++i) local[vertices[i]] = int(i);
    std::vector<std::pair<int, int>> edges;
    for (int v : vertices)
        for (int w : s.g.neighbors(v))
            if (v < w && local[w] >= 0) edges.emplace_back(local[v], local[w]);
    PlanarGraph sub(static_cast<int>(vertices.size()), edges);

    SeparatorDecomposition sep = find_separator(sub);
    validate_separator(sub, sep);

    std::vector<int> sep_global;
    sep_global.reserve(sep.separator.size());
    for (int v : sep.separator) sep_global.push_back(vertices[v]);
    std::sort(sep_global.begin(), sep_global.end());

    std::set<int> used_here;
    for (int v : sep_global) {
        int picked = 0;
        for (int c : s.lists[v])
            if (!used_here.count(c)) {
                picked = c;
                break;
            }
        if (picked == 0) {
            if (s.threshold_met)
                throw InvariantBreach("separator greedy stuck despite the list-size bound");
            throw ListTooSmall("separator greedy ran out of admissible colors");
        }
        s.coloring[v] = picked;
        used_here.insert(picked);
    }

    auto strike_and_recurse = [&](const std::vector<int>& part) {
        std::vector<int> part_global;
        part_global.reserve(part.size());
        for (int v : part) part_global.push_back(vertices[v]);
        std::sort(part_global.begin(), part_global.end());
        for (int v : part_global) {
            auto& l = s.lists[v];
            std::vector<int> kept;
            kept.reserve(l.size());
            for (int c : l)
                if (!used_here.count(c)) kept.push_back(c);
            l = std::move(kept);
        }
        color_recursive(s, part_global);
    };
    strike_and_recurse(sep.part_a);
    strike_and_recurse(sep.part_b);
}

}  // namespace

Coloring cf_color_paths_from_lists(const PlanarGraph& g,
                                   const ColorListFamily& lists) {
    const int n = g.vertex_count();
    if (lists.size() != n) throw InputError("list family size mismatch");
    const int needed = cf_paths_required_list_size(n);
    bool met = true;
    for (const auto& l : lists.lists())
        if (static_cast<int>(l.size()) < needed) met = false;

    PathsColorState s{g, lists.lists(), Coloring(n, 0), met};
    std::vector<int> all(n);
    for (int i = 0; i < n; ++i) all[i] = i;
    color_recursive(s, all);
    return s.coloring;
}

}  // namespace cfcolor
