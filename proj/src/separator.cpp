#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>

#include <boost/graph/adjacency_list.hpp>
#include <boost/graph/boyer_myrvold_planar_test.hpp>
#include <boost/graph/make_biconnected_planar.hpp>
#include <boost/graph/make_maximal_planar.hpp>

#include "cfcolor/planar.hpp"

// Balanced vertex separators. For n <= 16 the optimum is found by subset
// enumeration. Above that: breadth-first levels pick two small level cuts
// around the median level; when the middle part is still too heavy, the
// levels outside it are contracted to a root and a fundamental cycle of a
// triangulation of the middle graph completes the separator.

namespace cfcolor {

namespace {

constexpr int kExhaustiveLimit = 16;

bool size_bound_ok(std::size_t sep, int n) {
    // |S|^2 <= 8 n
    return sep * sep <= static_cast<std::size_t>(8) * static_cast<std::size_t>(n);
}

// Splits pieces (vertex groups with no edges between groups) into two sides,
// largest first into the lighter side. With every piece at most 2n/3 the
// resulting sides stay at most 2n/3.
void pack_pieces(const std::vector<std::vector<int>>& pieces,
                 std::vector<int>& a, std::vector<int>& b) {
    std::vector<int> order(pieces.size());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(), [&](int x, int y) {
        return pieces[x].size() > pieces[y].size();
    });
    std::size_t wa = 0, wb = 0;
    for (int i : order) {
        if (wa <= wb) {
            a.insert(a.end(), pieces[i].begin(), pieces[i].end());
            wa += pieces[i].size();
        } else {
            b.insert(b.end(), pieces[i].begin(), pieces[i].end());
            wb += pieces[i].size();
        }
    }
    std::sort(a.begin(), a.end());
    std::sort(b.begin(), b.end());
}

// Connected components of g restricted to the vertices not in `banned`.
std::vector<std::vector<int>> components_without(
    const PlanarGraph& g, const std::vector<bool>& banned) {
    const int n = g.vertex_count();
    std::vector<std::vector<int>> comps;
    std::vector<bool> seen(banned);
    std::vector<int> stack;
    for (int s = 0; s < n; ++s) {
        if (seen[s]) continue;
        comps.emplace_back();
        stack.push_back(s);
        seen[s] = true;
        while (!stack.empty()) {
            const int v = stack.back();
            stack.pop_back();
            comps.back().push_back(v);
            for (int w : g.neighbors(v))
                if (!seen[w]) {
                    seen[w] = true;
                    stack.push_back(w);
                }
        }
    }
    return comps;
}

std::optional<SeparatorDecomposition> try_separator(
    const PlanarGraph& g, const std::vector<int>& sep_vertices) {
    const int n = g.vertex_count();
    std::vector<bool> banned(n, false);
    for (int v : sep_vertices) banned[v] = true;
    auto comps = components_without(g, banned);
    for (const auto& c : comps)
        if (3 * c.size() > 2 * static_cast<std::size_t>(n)) return std::nullopt;
    SeparatorDecomposition out;
    out.separator = sep_vertices;
    std::sort(out.separator.begin(), out.separator.end());
    pack_pieces(comps, out.part_a, out.part_b);
    return out;
}

SeparatorDecomposition exhaustive_separator(const PlanarGraph& g) {
    const int n = g.vertex_count();
    for (int size = 0; size <= n; ++size) {
        // Subsets of the given size in ascending mask order.
        for (std::uint32_t mask = 0; mask < (std::uint32_t(1) << n); ++mask) {
            if (std::popcount(mask) != size) continue;
            std::vector<int> sep;
            for (int v = 0; v < n; ++v)
                if (mask & (std::uint32_t(1) << v)) sep.push_back(v);
            if (auto d = try_separator(g, sep)) return *d;
        }
    }
    throw InvariantBreach("no balanced separator found by exhaustive search");
}

struct BfsLevels {
    std::vector<int> level_of;            // -1 for unreached
    std::vector<std::vector<int>> levels;  // levels[t]
};

BfsLevels bfs_levels(const PlanarGraph& g, int root) {
    BfsLevels out;
    out.level_of.assign(g.vertex_count(), -1);
    std::vector<int> queue{root};
    out.level_of[root] = 0;
    out.levels.push_back({root});
    std::size_t head = 0;
    while (head < queue.size()) {
        const int v = queue[head++];
        for (int w : g.neighbors(v)) {
            if (out.level_of[w] != -1) continue;
            out.level_of[w] = out.level_of[v] + 1;
            if (static_cast<int>(out.levels.size()) <= out.level_of[w])
                out.levels.emplace_back();
            out.levels[out.level_of[w]].push_back(w);
            queue.push_back(w);
        }
    }
    return out;
}

using BoostGraph =
    boost::adjacency_list<boost::vecS, boost::vecS, boost::undirectedS,
                          boost::no_property,
                          boost::property<boost::edge_index_t, int>>;

void reindex_edges(BoostGraph& g) {
    auto index = boost::get(boost::edge_index, g);
    int next = 0;
    for (auto [ei, ee] = boost::edges(g); ei != ee; ++ei)
        boost::put(index, *ei, next++);
}

// Edge set of a maximal planar supergraph of the input simple planar graph.
std::vector<std::pair<int, int>> triangulate(
    int n, const std::vector<std::pair<int, int>>& edges) {
    if (n <= 2) return edges;
    BoostGraph g(n);
    for (auto [a, b] : edges) boost::add_edge(a, b, g);
    reindex_edges(g);

    using Edge = boost::graph_traits<BoostGraph>::edge_descriptor;
    std::vector<std::vector<Edge>> embedding(n);

    auto embed = [&]() {
        reindex_edges(g);
        embedding.assign(boost::num_vertices(g), {});
        if (!boost::boyer_myrvold_planarity_test(
                boost::boyer_myrvold_params::graph = g,
                boost::boyer_myrvold_params::embedding = &embedding[0]))
            throw InvariantBreach("middle graph lost planarity");
    };

    embed();
    boost::make_biconnected_planar(g, &embedding[0]);
    embed();
    boost::make_maximal_planar(g, &embedding[0]);

    std::vector<std::pair<int, int>> out;
    for (auto [ei, ee] = boost::edges(g); ei != ee; ++ei) {
        int a = static_cast<int>(boost::source(*ei, g));
        int b = static_cast<int>(boost::target(*ei, g));
        if (a == b) continue;
        if (a > b) std::swap(a, b);
        out.emplace_back(a, b);
    }
    std::sort(out.begin(), out.end());
    out.erase(std::unique(out.begin(), out.end()), out.end());
    return out;
}

// Lipton-Tarjan style separator of one connected component, described by the
// component's vertex list. Returns candidates; the caller keeps the best.
void level_cycle_candidates(const PlanarGraph& g, const std::vector<int>& comp,
                            int root,
                            std::vector<SeparatorDecomposition>& found) {
    const int n = g.vertex_count();
    const int cn = static_cast<int>(comp.size());
    BfsLevels bl = bfs_levels(g, root);
    const int height = static_cast<int>(bl.levels.size());  // levels 0..height-1

    // Whole levels as candidates; cheap and often good on meshes.
    for (int t = 0; t < height; ++t)
        if (auto d = try_separator(g, bl.levels[t]);
            d && size_bound_ok(d->separator.size(), n))
            found.push_back(*d);

    // Median level t1; levels 0..t1 hold k vertices.
    std::vector<int> cum(height);
    for (int t = 0; t < height; ++t)
        cum[t] = (t ? cum[t - 1] : 0) + static_cast<int>(bl.levels[t].size());
    int t1 = 0;
    while (2 * cum[t1] < cn) ++t1;
    const long long k = cum[t1];

    auto level_size = [&](int t) -> long long {
        return (t >= 0 && t < height) ? static_cast<long long>(bl.levels[t].size())
                                      : 0;
    };

    // t0 <= t1 with |L(t0)| + 2(t1-t0) <= 2 sqrt(k); take the cheapest.
    int t0 = -1;
    long long best0 = 0;
    for (int t = t1; t >= 0; --t) {
        const long long cost = level_size(t) + 2LL * (t1 - t);
        if (cost * cost <= 4 * k && (t0 == -1 || cost < best0)) {
            t0 = t;
            best0 = cost;
        }
    }
    // t2 in [t1+1, height] with |L(t2)| + 2(t2-t1-1) <= 2 sqrt(cn-k).
    int t2 = -1;
    long long best2 = 0;
    for (int t = t1 + 1; t <= height; ++t) {
        const long long cost = level_size(t) + 2LL * (t - t1 - 1);
        if (cost * cost <= 4 * (cn - k) && (t2 == -1 || cost < best2)) {
            t2 = t;
            best2 = cost;
        }
    }
    if (t0 == -1 || t2 == -1) return;

    std::vector<int> middle;
    for (int t = t0 + 1; t < t2; ++t)
        middle.insert(middle.end(), bl.levels[t].begin(), bl.levels[t].end());

    std::vector<int> ring;
    ring.insert(ring.end(), bl.levels[t0].begin(), bl.levels[t0].end());
    if (t2 < height)
        ring.insert(ring.end(), bl.levels[t2].begin(), bl.levels[t2].end());

    if (3 * middle.size() <= 2 * static_cast<std::size_t>(cn)) {
        if (auto d = try_separator(g, ring);
            d && size_bound_ok(d->separator.size(), n))
            found.push_back(*d);
        return;
    }

    // Middle graph with everything at or below t0 contracted to a root x.
    const int m = static_cast<int>(middle.size());
    std::vector<int> local(n, -1);
    for (int i = 0; i < m; ++i) local[middle[i]] = i + 1;  // x gets id 0
    std::vector<std::pair<int, int>> medges;
    for (int v : middle) {
        for (int w : g.neighbors(v)) {
            const int lv = local[v];
            if (bl.level_of[w] >= 0 && bl.level_of[w] <= t0) {
                medges.emplace_back(0, lv);
            } else if (local[w] >= 0 && v < w) {
                medges.emplace_back(lv, local[w]);
            }
        }
    }
    std::sort(medges.begin(), medges.end());
    medges.erase(std::unique(medges.begin(), medges.end()), medges.end());

    // Breadth-first tree of the contracted graph from x.
    std::vector<std::vector<int>> madj(m + 1);
    for (auto [a, b] : medges) {
        madj[a].push_back(b);
        madj[b].push_back(a);
    }
    for (auto& nb : madj) std::sort(nb.begin(), nb.end());
    std::vector<int> parent(m + 1, -1), depth(m + 1, -1);
    {
        std::vector<int> queue{0};
        depth[0] = 0;
        std::size_t head = 0;
        while (head < queue.size()) {
            const int v = queue[head++];
            for (int w : madj[v])
                if (depth[w] == -1) {
                    depth[w] = depth[v] + 1;
                    parent[w] = v;
                    queue.push_back(w);
                }
        }
        for (int v = 0; v <= m; ++v)
            if (depth[v] == -1) return;  // contracted graph must be connected
    }

    const auto tri = triangulate(m + 1, medges);
    std::vector<bool> is_tree(tri.size(), false);
    std::vector<std::pair<int, int>> tree_edges;
    for (int v = 1; v <= m; ++v) {
        auto key = std::minmax(parent[v], v);
        tree_edges.emplace_back(key.first, key.second);
    }
    std::sort(tree_edges.begin(), tree_edges.end());

    for (std::size_t e = 0; e < tri.size(); ++e) {
        if (std::binary_search(tree_edges.begin(), tree_edges.end(), tri[e]))
            continue;
        // Fundamental cycle through the tree paths of both endpoints.
        int u = tri[e].first, v = tri[e].second;
        std::vector<int> cyc;
        int a = u, b = v;
        while (a != b) {
            if (depth[a] < depth[b]) std::swap(a, b);
            cyc.push_back(a);
            a = parent[a];
        }
        cyc.push_back(a);  // the meeting vertex

        std::vector<int> sep = ring;
        for (int lv : cyc)
            if (lv != 0) sep.push_back(middle[lv - 1]);
        if (!size_bound_ok(sep.size(), n)) continue;
        if (auto d = try_separator(g, sep)) found.push_back(*d);
    }
}

SeparatorDecomposition level_cycle_separator(const PlanarGraph& g) {
    const int n = g.vertex_count();
    std::vector<bool> nothing(n, false);
    auto comps = components_without(g, nothing);

    // With every component light there is nothing to split.
    bool heavy = false;
    std::size_t heavy_idx = 0;
    for (std::size_t i = 0; i < comps.size(); ++i)
        if (3 * comps[i].size() > 2 * static_cast<std::size_t>(n)) {
            heavy = true;
            heavy_idx = i;
        }
    if (!heavy) {
        SeparatorDecomposition out;
        pack_pieces(comps, out.part_a, out.part_b);
        return out;
    }

    const auto& comp = comps[heavy_idx];
    std::vector<SeparatorDecomposition> found;
    const std::size_t root_cap = 32;
    for (std::size_t i = 0; i < comp.size(); i += std::max<std::size_t>(
             1, comp.size() / root_cap)) {
        level_cycle_candidates(g, comp, comp[i], found);
        if (comp.size() > root_cap && found.size() > 200) break;
    }
    if (found.empty())
        throw InvariantBreach("level/cycle search produced no valid separator");
    std::size_t best = 0;
    for (std::size_t i = 1; i < found.size(); ++i)
        if (found[i].separator.size() < found[best].separator.size()) best = i;
    return found[best];
}

}  // namespace

void validate_separator(const PlanarGraph& g, const SeparatorDecomposition& s) {
    const int n = g.vertex_count();
    std::vector<int> role(n, -1);  // 0 separator, 1 part_a, 2 part_b
    auto mark = [&](const std::vector<int>& vs, int r) {
        for (int v : vs) {
            if (v < 0 || v >= n || role[v] != -1)
                throw InvariantBreach("separator decomposition is not a partition");
            role[v] = r;
        }
    };
    mark(s.separator, 0);
    mark(s.part_a, 1);
    mark(s.part_b, 2);
    for (int v = 0; v < n; ++v)
        if (role[v] == -1)
            throw InvariantBreach("separator decomposition misses a vertex");
    for (int v = 0; v < n; ++v)
        for (int w : g.neighbors(v))
            if ((role[v] == 1 && role[w] == 2) || (role[v] == 2 && role[w] == 1))
                throw InvariantBreach("edge between the separated parts");
    if (3 * std::max(s.part_a.size(), s.part_b.size()) >
        2 * static_cast<std::size_t>(n))
        throw InvariantBreach("separated part exceeds 2n/3");
    if (!size_bound_ok(s.separator.size(), n))
        throw InvariantBreach("separator larger than sqrt(8 n)");
}

SeparatorDecomposition find_separator(const PlanarGraph& g) {
    const int n = g.vertex_count();
    if (n == 0) return {};
    SeparatorDecomposition out = n <= kExhaustiveLimit
                                     ? exhaustive_separator(g)
                                     : level_cycle_separator(g);
    validate_separator(g, out);
    return out;
}

}  // namespace cfcolor
