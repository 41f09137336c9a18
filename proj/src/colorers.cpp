#include "cfcolor/colorers.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace cfcolor {

ProperColoringCertificate interval_two_color(std::span<const int> positions) {
    const int m = static_cast<int>(positions.size());
    std::vector<int> order(m);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(),
              [&](int a, int b) { return positions[a] < positions[b]; });
    ProperColoringCertificate cert;
    cert.coloring.assign(m, 0);
    for (int rank = 0; rank < m; ++rank)
        cert.coloring[order[rank]] = 1 + (rank & 1);
    cert.classes_used = std::min(m, 2);
    cert.k_claimed = 2;
    return cert;
}

HereditaryColorer make_interval_colorer() {
    HereditaryColorer handle;
    handle.k = 2;
    handle.color_subset = [](const Hypergraph&, std::span<const int> active) {
        return interval_two_color(active);  // active is ascending
    };
    return handle;
}

namespace {

struct Backtracker {
    const Hypergraph& h;
    int k;
    std::vector<int> order;                  // decreasing degree, ties by id
    std::vector<std::vector<int>> edges_of;  // vertex -> relevant edge ids
    std::vector<const std::vector<int>*> members;
    std::vector<int> esize;
    std::vector<int> count;  // assigned members per edge
    std::vector<int> mono;   // 0 none, -1 mixed, else the shared color
    std::vector<int> color;

    explicit Backtracker(const Hypergraph& hg, int classes) : h(hg), k(classes) {
        const int n = h.vertex_count();
        std::vector<int> deg(n, 0);
        edges_of.resize(n);
        for (int e = 0; e < h.edge_count(); ++e) {
            const auto& edge = h.edge(e);
            if (edge.size() < 2) continue;  // singletons never constrain
            const int id = static_cast<int>(members.size());
            members.push_back(&edge);
            esize.push_back(static_cast<int>(edge.size()));
            for (int v : edge) {
                edges_of[v].push_back(id);
                ++deg[v];
            }
        }
        count.assign(members.size(), 0);
        mono.assign(members.size(), 0);
        color.assign(n, 0);
        order.resize(n);
        std::iota(order.begin(), order.end(), 0);
        std::stable_sort(order.begin(), order.end(),
                         [&](int a, int b) { return deg[a] > deg[b]; });
    }

    bool place(int v, int c, std::vector<std::pair<int, int>>& undo) {
        color[v] = c;
        for (int e : edges_of[v]) {
            undo.emplace_back(e, mono[e]);
            ++count[e];
            if (mono[e] == 0)
                mono[e] = c;
            else if (mono[e] != -1 && mono[e] != c)
                mono[e] = -1;
            if (count[e] == esize[e] && mono[e] != -1) return false;
        }
        return true;
    }

    void unplace(int v, const std::vector<std::pair<int, int>>& undo) {
        color[v] = 0;
        for (auto it = undo.rbegin(); it != undo.rend(); ++it) {
            --count[it->first];
            mono[it->first] = it->second;
        }
    }

    bool solve(std::size_t pos, int used) {
        if (pos == order.size()) return true;
        const int v = order[pos];
        const int limit = std::min(k, used + 1);  // fresh colors are symmetric
        for (int c = 1; c <= limit; ++c) {
            std::vector<std::pair<int, int>> undo;
            if (place(v, c, undo)) {
                if (solve(pos + 1, std::max(used, c))) return true;
            }
            unplace(v, undo);
        }
        return false;
    }
};

}  // namespace

std::optional<ProperColoringCertificate> exact_k_color(
    const Hypergraph& h, int k, const ExactColorOptions& options) {
    if (k < 1) throw InputError("exact_k_color needs k >= 1");
    if (h.vertex_count() > options.max_vertices)
        throw GuardError("exact_k_color: " + std::to_string(h.vertex_count()) +
                         " vertices exceed the guard of " +
                         std::to_string(options.max_vertices));
    Backtracker bt(h, k);
    if (!bt.solve(0, 0)) return std::nullopt;
    ProperColoringCertificate cert;
    cert.coloring = bt.color;
    cert.classes_used =
        bt.color.empty() ? 0 : *std::max_element(bt.color.begin(), bt.color.end());
    cert.k_claimed = k;
    return cert;
}

namespace {

// Minimum-degree elimination order; returns the order and the degeneracy.
std::pair<std::vector<int>, int> elimination_order(const DelaunayGraph& g) {
    const int n = g.n_vertices;
    auto adj = g.adjacency();
    std::vector<int> deg(n);
    for (int v = 0; v < n; ++v) deg[v] = static_cast<int>(adj[v].size());
    std::vector<bool> gone(n, false);
    std::vector<int> order;
    order.reserve(n);
    int degen = 0;
    for (int step = 0; step < n; ++step) {
        int v = -1;
        for (int u = 0; u < n; ++u)
            if (!gone[u] && (v == -1 || deg[u] < deg[v])) v = u;
        degen = std::max(degen, deg[v]);
        gone[v] = true;
        order.push_back(v);
        for (int w : adj[v])
            if (!gone[w]) --deg[w];
    }
    return {order, degen};
}

}  // namespace

int degeneracy(const DelaunayGraph& g) { return elimination_order(g).second; }

ProperColoringCertificate degeneracy_greedy_color(const DelaunayGraph& g) {
    const int n = g.n_vertices;
    auto [order, degen] = elimination_order(g);
    auto adj = g.adjacency();
    ProperColoringCertificate cert;
    cert.coloring.assign(n, 0);
    for (int i = n - 1; i >= 0; --i) {
        const int v = order[i];
        std::set<int> taken;
        for (int w : adj[v])
            if (cert.coloring[w] != 0) taken.insert(cert.coloring[w]);
        int c = 1;
        while (taken.count(c)) ++c;
        cert.coloring[v] = c;
    }
    cert.classes_used =
        n == 0 ? 0
               : *std::max_element(cert.coloring.begin(), cert.coloring.end());
    cert.k_claimed = n == 0 ? 0 : degen + 1;
    return cert;
}

namespace {

Hypergraph graph_as_hypergraph(const DelaunayGraph& g) {
    std::vector<std::vector<int>> edges;
    edges.reserve(g.edges.size());
    for (auto [a, b] : g.edges) edges.push_back({a, b});
    return Hypergraph(g.n_vertices, std::move(edges));
}

// Every hyperedge of size >= 2 contains a cardinality-2 hyperedge.
bool delaunay_pair_containment(const Hypergraph& h, const DelaunayGraph& g) {
    std::set<std::pair<int, int>> pairs(g.edges.begin(), g.edges.end());
    for (const auto& e : h.edges()) {
        if (e.size() < 2) continue;
        bool found = false;
        for (std::size_t i = 0; i < e.size() && !found; ++i)
            for (std::size_t j = i + 1; j < e.size(); ++j)
                if (pairs.count({e[i], e[j]})) {
                    found = true;
                    break;
                }
        if (!found) return false;
    }
    return true;
}

}  // namespace

HereditaryColorer make_delaunay_hereditary_colorer(
    int k, const DelaunayColorerOptions& options) {
    HereditaryColorer handle;
    handle.k = k;
    handle.color_subset = [k, options](const Hypergraph& parent,
                                       std::span<const int> active) {
        InducedHypergraph ind = induce(parent, active);
        const DelaunayGraph g = delaunay_graph(ind.hypergraph);
        ExactColorOptions exact{options.exact_guard};
        if (delaunay_pair_containment(ind.hypergraph, g)) {
            if (ind.hypergraph.vertex_count() <= options.exact_guard) {
                auto cert = exact_k_color(graph_as_hypergraph(g), k, exact);
                if (!cert)
                    throw InvariantBreach(
                        "Delaunay graph not k-colorable; the instance is not of "
                        "the promised kind");
                return std::move(*cert);
            }
            auto cert = degeneracy_greedy_color(g);
            if (cert.classes_used > k)
                throw InvariantBreach(
                    "degeneracy coloring exceeded the declared class count");
            cert.k_claimed = std::max(cert.classes_used, 1);
            return cert;
        }
        auto cert = exact_k_color(ind.hypergraph, k, exact);
        if (!cert)
            throw InvariantBreach(
                "induced sub-hypergraph not k-colorable; hereditary assumption "
                "failed");
        return std::move(*cert);
    };
    return handle;
}

HereditaryColorer make_halfplane_colorer(const PointSet& p,
                                         const ExactColorOptions& options) {
    HereditaryColorer handle;
    handle.k = p.in_convex_position() ? 3 : 4;
    const int k = handle.k;
    handle.color_subset = [k, options](const Hypergraph& parent,
                                       std::span<const int> active) {
        InducedHypergraph ind = induce(parent, active);
        auto cert = exact_k_color(ind.hypergraph, k, options);
        if (!cert)
            throw InvariantBreach(
                "halfplane sub-hypergraph not k-colorable; hereditary "
                "assumption failed");
        return *cert;
    };
    return handle;
}

HereditaryColorer make_exact_colorer(int k, const ExactColorOptions& options) {
    HereditaryColorer handle;
    handle.k = k;
    handle.color_subset = [k, options](const Hypergraph& parent,
                                       std::span<const int> active) {
        InducedHypergraph ind = induce(parent, active);
        auto cert = exact_k_color(ind.hypergraph, k, options);
        if (!cert)
            throw ExactColorInfeasible(
                "no proper coloring with " + std::to_string(k) + " classes");
        return *cert;
    };
    return handle;
}

}  // namespace cfcolor
