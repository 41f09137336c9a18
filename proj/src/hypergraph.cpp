#include "cfcolor/hypergraph.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace cfcolor {

std::string to_string(ColoringMode mode) {
    switch (mode) {
        case ColoringMode::proper: return "proper";
        case ColoringMode::cf: return "cf";
        case ColoringMode::um: return "um";
    }
    return "?";
}

Hypergraph::Hypergraph(int n_vertices, std::vector<std::vector<int>> edges)
    : n_(n_vertices) {
    if (n_vertices < 0) throw InputError("negative vertex count");
    std::set<std::vector<int>> seen;
    edges_.reserve(edges.size());
    for (auto& e : edges) {
        if (e.empty()) throw InputError("empty hyperedge");
        std::sort(e.begin(), e.end());
        e.erase(std::unique(e.begin(), e.end()), e.end());
        if (e.front() < 0 || e.back() >= n_vertices)
            throw InputError("hyperedge vertex id out of range");
        if (seen.insert(e).second) edges_.push_back(std::move(e));
    }
}

ColorListFamily::ColorListFamily(std::vector<std::vector<int>> lists)
    : lists_(std::move(lists)) {
    for (auto& l : lists_) {
        std::sort(l.begin(), l.end());
        l.erase(std::unique(l.begin(), l.end()), l.end());
        if (l.empty()) throw InputError("empty color list");
        if (l.front() < 1) throw InputError("colors must be positive");
    }
}

ColorListFamily ColorListFamily::uniform(int n, int list_size, int first_color) {
    if (list_size < 1) throw InputError("list size must be positive");
    std::vector<int> base(list_size);
    for (int i = 0; i < list_size; ++i) base[i] = first_color + i;
    return ColorListFamily(std::vector<std::vector<int>>(n, base));
}

std::vector<std::vector<int>> DelaunayGraph::adjacency() const {
    std::vector<std::vector<int>> adj(n_vertices);
    for (auto [a, b] : edges) {
        adj[a].push_back(b);
        adj[b].push_back(a);
    }
    for (auto& nb : adj) std::sort(nb.begin(), nb.end());
    return adj;
}

InducedHypergraph induce(const Hypergraph& h, std::span<const int> vertices) {
    std::vector<int> keep(vertices.begin(), vertices.end());
    std::sort(keep.begin(), keep.end());
    keep.erase(std::unique(keep.begin(), keep.end()), keep.end());
    if (!keep.empty() && (keep.front() < 0 || keep.back() >= h.vertex_count()))
        throw InputError("induce: vertex id out of range");

    std::vector<int> from_parent(h.vertex_count(), -1);
    for (int i = 0; i < static_cast<int>(keep.size()); ++i) from_parent[keep[i]] = i;

    std::vector<std::vector<int>> edges;
    edges.reserve(h.edge_count());
    for (const auto& e : h.edges()) {
        std::vector<int> cut;
        for (int v : e)
            if (from_parent[v] >= 0) cut.push_back(from_parent[v]);
        if (!cut.empty()) edges.push_back(std::move(cut));
    }
    InducedHypergraph out;
    out.hypergraph = Hypergraph(static_cast<int>(keep.size()), std::move(edges));
    out.to_parent = std::move(keep);
    out.from_parent = std::move(from_parent);
    return out;
}

DelaunayGraph delaunay_graph(const Hypergraph& h) {
    DelaunayGraph g;
    g.n_vertices = h.vertex_count();
    for (const auto& e : h.edges())
        if (e.size() == 2) g.edges.emplace_back(e[0], e[1]);
    return g;
}

int degree(const Hypergraph& h, int v) {
    if (v < 0 || v >= h.vertex_count()) throw InputError("degree: bad vertex id");
    int d = 0;
    for (const auto& e : h.edges())
        if (std::binary_search(e.begin(), e.end(), v)) ++d;
    return d;
}

int s_of(const Hypergraph& h) {
    const long long m = h.edge_count();
    int s = 1;
    while (static_cast<long long>(s) * (s - 1) / 2 < m) ++s;
    return s;
}

namespace {

void require_total(const Hypergraph& h, const Coloring& c) {
    if (static_cast<int>(c.size()) != h.vertex_count())
        throw InputError("coloring is not total on the vertex set");
    for (int x : c)
        if (x < 1) throw InputError("coloring uses a non-positive color");
}

}  // namespace

Verdict verify_proper(const Hypergraph& h, const Coloring& c) {
    require_total(h, c);
    for (const auto& e : h.edges()) {
        if (e.size() < 2) continue;
        bool mono = true;
        for (std::size_t i = 1; i < e.size(); ++i)
            if (c[e[i]] != c[e[0]]) {
                mono = false;
                break;
            }
        if (mono) return {false, e};
    }
    return {true, {}};
}

Verdict verify_cf(const Hypergraph& h, const Coloring& c) {
    require_total(h, c);
    std::map<int, int> mult;
    for (const auto& e : h.edges()) {
        mult.clear();
        for (int v : e) ++mult[c[v]];
        bool unique = false;
        for (auto [color, count] : mult)
            if (count == 1) {
                unique = true;
                break;
            }
        if (!unique) return {false, e};
    }
    return {true, {}};
}

Verdict verify_um(const Hypergraph& h, const Coloring& c) {
    require_total(h, c);
    for (const auto& e : h.edges()) {
        int best = 0, count = 0;
        for (int v : e) {
            if (c[v] > best) {
                best = c[v];
                count = 1;
            } else if (c[v] == best) {
                ++count;
            }
        }
        if (count != 1) return {false, e};
    }
    return {true, {}};
}

Verdict verify(ColoringMode mode, const Hypergraph& h, const Coloring& c) {
    switch (mode) {
        case ColoringMode::proper: return verify_proper(h, c);
        case ColoringMode::cf: return verify_cf(h, c);
        case ColoringMode::um: return verify_um(h, c);
    }
    throw InputError("unknown coloring mode");
}

bool verify_from_lists(const Coloring& c, const ColorListFamily& lists) {
    if (static_cast<int>(c.size()) != lists.size())
        throw InputError("coloring and list family sizes differ");
    for (int v = 0; v < lists.size(); ++v) {
        const auto& l = lists.list(v);
        if (!std::binary_search(l.begin(), l.end(), c[v])) return false;
    }
    return true;
}

}  // namespace cfcolor
