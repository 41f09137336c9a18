#include "cfcolor/oracle.hpp"

#include <algorithm>

namespace cfcolor {

namespace {

// Verdict of one fully assigned hyperedge.
bool edge_ok(ColoringMode mode, const std::vector<int>& edge,
             const Coloring& color) {
    switch (mode) {
        case ColoringMode::proper: {
            if (edge.size() < 2) return true;
            for (std::size_t i = 1; i < edge.size(); ++i)
                if (color[edge[i]] != color[edge[0]]) return true;
            return false;
        }
        case ColoringMode::cf: {
            for (int v : edge) {
                bool unique = true;
                for (int w : edge)
                    if (w != v && color[w] == color[v]) {
                        unique = false;
                        break;
                    }
                if (unique) return true;
            }
            return false;
        }
        case ColoringMode::um: {
            int best = 0, count = 0;
            for (int v : edge) {
                if (color[v] > best) {
                    best = color[v];
                    count = 1;
                } else if (color[v] == best) {
                    ++count;
                }
            }
            return count == 1;
        }
    }
    return false;
}

// Edges grouped by their largest vertex: an edge is complete exactly when
// that vertex gets assigned (assignment order is 0..n-1).
std::vector<std::vector<int>> edges_by_max(const Hypergraph& h) {
    std::vector<std::vector<int>> by_max(h.vertex_count());
    for (int e = 0; e < h.edge_count(); ++e)
        by_max[h.edge(e).back()].push_back(e);
    return by_max;
}

struct ListSearch {
    const Hypergraph& h;
    const std::vector<std::vector<int>>& lists;
    ColoringMode mode;
    std::vector<std::vector<int>> by_max;
    Coloring color;

    bool run(int v) {
        if (v == h.vertex_count()) return true;
        for (int c : lists[v]) {
            color[v] = c;
            bool ok = true;
            for (int e : by_max[v])
                if (!edge_ok(mode, h.edge(e), color)) {
                    ok = false;
                    break;
                }
            if (ok && run(v + 1)) return true;
        }
        color[v] = 0;
        return false;
    }
};

struct ChromaticSearch {
    const Hypergraph& h;
    ColoringMode mode;
    int k;
    bool canonical;  // restrict vertex i to 1 + max color used before it
    std::vector<std::vector<int>> by_max;
    Coloring color;

    bool run(int v, int used) {
        if (v == h.vertex_count()) return true;
        const int limit = canonical ? std::min(k, used + 1) : k;
        for (int c = 1; c <= limit; ++c) {
            color[v] = c;
            bool ok = true;
            for (int e : by_max[v])
                if (!edge_ok(mode, h.edge(e), color)) {
                    ok = false;
                    break;
                }
            if (ok && run(v + 1, std::max(used, c))) return true;
        }
        color[v] = 0;
        return false;
    }
};

// Minimal k admitting a valid coloring, plus a witness. Color permutations
// preserve proper and cf verdicts, so those searches fix the canonical
// first-occurrence order; um survives only monotone relabelings and is
// searched over all assignments.
std::pair<int, Coloring> minimum_colors(const Hypergraph& h, ColoringMode mode) {
    const int n = h.vertex_count();
    if (n == 0) return {0, {}};
    auto by_max = edges_by_max(h);
    for (int k = 1; k <= n; ++k) {
        ChromaticSearch cs{h, mode, k, mode != ColoringMode::um, by_max,
                           Coloring(n, 0)};
        if (cs.run(0, 0)) return {k, cs.color};
    }
    throw InvariantBreach("no coloring found with n colors");
}

}  // namespace

ExhaustiveReport exhaustive_chromatic(const Hypergraph& h,
                                      const OracleOptions& options) {
    if (h.vertex_count() > options.max_vertices)
        throw GuardError("exhaustive_chromatic: " +
                         std::to_string(h.vertex_count()) +
                         " vertices exceed the guard of " +
                         std::to_string(options.max_vertices));
    ExhaustiveReport r;
    auto [chi, wp] = minimum_colors(h, ColoringMode::proper);
    auto [cf, wc] = minimum_colors(h, ColoringMode::cf);
    auto [um, wu] = minimum_colors(h, ColoringMode::um);
    r.chi = chi;
    r.chi_cf = cf;
    r.chi_um = um;
    r.witness_proper = std::move(wp);
    r.witness_cf = std::move(wc);
    r.witness_um = std::move(wu);
    if (!(r.chi <= r.chi_cf && r.chi_cf <= r.chi_um))
        throw InvariantBreach("chromatic chain chi <= chi_cf <= chi_um failed");
    return r;
}

std::optional<Coloring> find_coloring_from_lists(
    const Hypergraph& h, const std::vector<std::vector<int>>& lists,
    ColoringMode mode, long long product_guard) {
    if (static_cast<int>(lists.size()) != h.vertex_count())
        throw InputError("list count does not match the vertex count");
    long long product = 1;
    for (const auto& l : lists) {
        if (l.empty()) return std::nullopt;
        product *= static_cast<long long>(l.size());
        if (product > product_guard)
            throw GuardError("assignment space exceeds the product guard");
    }
    ListSearch search{h, lists, mode, edges_by_max(h),
                      Coloring(h.vertex_count(), 0)};
    if (search.run(0)) return search.color;
    return std::nullopt;
}

bool exhaustive_choosable(const Hypergraph& h, int list_size, ColoringMode mode,
                          int universe, long long family_guard) {
    const int n = h.vertex_count();
    if (list_size < 1 || universe < list_size)
        throw InputError("need 1 <= list_size <= universe");

    std::vector<std::vector<int>> subsets;
    std::vector<int> current;
    auto gen = [&](auto&& self, int next) -> void {
        if (static_cast<int>(current.size()) == list_size) {
            subsets.push_back(current);
            return;
        }
        for (int c = next; c <= universe; ++c) {
            current.push_back(c);
            self(self, c + 1);
            current.pop_back();
        }
    };
    gen(gen, 1);

    double families = 1;
    for (int v = 0; v < n; ++v) {
        families *= static_cast<double>(subsets.size());
        if (families > static_cast<double>(family_guard))
            throw GuardError("list-family space exceeds the guard");
    }

    std::vector<std::vector<int>> family(n);
    auto walk = [&](auto&& self, int v) -> bool {
        if (v == n) {
            return find_coloring_from_lists(h, family, mode).has_value();
        }
        for (const auto& sub : subsets) {
            family[v] = sub;
            if (!self(self, v + 1)) return false;
        }
        return true;
    };
    return walk(walk, 0);
}

}  // namespace cfcolor
