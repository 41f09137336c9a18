#include "cfcolor/few_edges.hpp"

#include <algorithm>
#include <set>

namespace cfcolor {

namespace {

int s_of_count(std::size_t edge_count) {
    int s = 1;
    while (static_cast<std::size_t>(s) * (s - 1) / 2 < edge_count) ++s;
    return s;
}

}  // namespace

Coloring um_color_few_edges(const Hypergraph& h, const ColorListFamily& lists) {
    const int n = h.vertex_count();
    if (lists.size() != n) throw InputError("list family size mismatch");

    std::vector<std::vector<int>> edges = h.edges();
    std::vector<std::vector<int>> rem = lists.lists();
    std::vector<bool> active(n, true);
    Coloring coloring(n, 0);

    bool first_step = true;
    for (int remaining = n; remaining > 0; --remaining) {
        std::vector<int> deg(n, 0);
        for (const auto& e : edges)
            for (int v : e) ++deg[v];
        const int s_cur = s_of_count(edges.size());

        // Inductive list condition; at entry it is the caller's precondition.
        for (int u = 0; u < n; ++u) {
            if (!active[u]) continue;
            const int need = std::min(deg[u] + 1, s_cur);
            if (static_cast<int>(rem[u].size()) < need) {
                if (first_step)
                    throw InputError(
                        "list of vertex " + std::to_string(u) +
                        " is below min(deg+1, s)");
                throw InvariantBreach("inductive list condition failed mid-run");
            }
        }
        first_step = false;

        int c = 0;
        for (int u = 0; u < n; ++u)
            if (active[u]) c = std::max(c, rem[u].back());

        int v = -1;
        for (int u = 0; u < n; ++u) {
            if (!active[u]) continue;
            if (!std::binary_search(rem[u].begin(), rem[u].end(), c)) continue;
            if (v == -1 || deg[u] > deg[v]) v = u;
        }

        coloring[v] = c;
        active[v] = false;

        std::set<int> touched;
        std::vector<std::vector<int>> kept;
        kept.reserve(edges.size());
        for (auto& e : edges) {
            if (std::binary_search(e.begin(), e.end(), v)) {
                for (int u : e)
                    if (u != v) touched.insert(u);
            } else {
                kept.push_back(std::move(e));
            }
        }
        const std::size_t removed = edges.size() - kept.size();
        const int s_next = s_of_count(kept.size());
        if (s_next == s_cur && s_cur > 1 &&
            !(static_cast<int>(removed) < s_cur - 1))
            throw InvariantBreach("edge-difference bound violated");
        edges = std::move(kept);

        for (int u : touched) {
            if (!active[u]) continue;
            auto& l = rem[u];
            auto it = std::lower_bound(l.begin(), l.end(), c);
            if (it != l.end() && *it == c) l.erase(it);
            if (l.empty())
                throw InvariantBreach("list emptied despite the inductive condition");
        }
    }
    return coloring;
}

}  // namespace cfcolor
