#include "cfcolor/refinement.hpp"

#include <algorithm>
#include <cmath>
#include <map>

#include "cfcolor/rng.hpp"

namespace cfcolor {

bool is_refinement(const Coloring& refined, const Coloring& base) {
    if (refined.size() != base.size())
        throw InputError("colorings live on different vertex sets");
    std::map<int, int> to_base;
    for (std::size_t v = 0; v < refined.size(); ++v) {
        auto [it, inserted] = to_base.emplace(refined[v], base[v]);
        if (!inserted && it->second != base[v]) return false;
    }
    return true;
}

int choice_required_list_size(int n, int k) {
    if (n < 1 || k < 1) throw InputError("n >= 1 and k >= 1 required");
    return static_cast<int>(std::floor(k * std::log(static_cast<double>(n)))) + 1;
}

double partition_failure_bound(int n, int k, int list_size) {
    return n * std::pow(1.0 - 1.0 / k, list_size);
}

ChoiceResult choice_from_chromatic(const Hypergraph& h, const Coloring& base,
                                   const ColorListFamily& lists,
                                   ColoringMode mode, std::uint64_t seed,
                                   const ChoiceOptions& options) {
    const int n = h.vertex_count();
    if (static_cast<int>(base.size()) != n || lists.size() != n)
        throw InputError("base coloring or lists do not match the hypergraph");
    if (mode == ColoringMode::um)
        throw InputError("unique-maximum colorings are not refinement-closed");
    if (!verify(mode, h, base))
        throw InputError("base coloring fails the requested verdict");

    // Class index per base color, ascending color order.
    std::map<int, int> class_index;
    for (int c : base) class_index.emplace(c, 0);
    int k = 0;
    for (auto& [color, idx] : class_index) idx = k++;

    const int required = choice_required_list_size(n, k);
    for (const auto& l : lists.lists())
        if (static_cast<int>(l.size()) < required)
            throw InputError("lists below floor(k ln n) + 1");

    std::vector<int> union_colors;
    for (const auto& l : lists.lists())
        union_colors.insert(union_colors.end(), l.begin(), l.end());
    std::sort(union_colors.begin(), union_colors.end());
    union_colors.erase(std::unique(union_colors.begin(), union_colors.end()),
                       union_colors.end());

    PartitionWitness witness;
    witness.base_coloring = base;
    for (long long attempt = 0; attempt < options.redraw_cap; ++attempt) {
        CounterRng rng(seed, static_cast<std::uint64_t>(attempt));
        std::map<int, int> color_class;
        witness.class_of_color.clear();
        for (int c : union_colors) {
            const int cls = static_cast<int>(rng.next_below(k));
            color_class[c] = cls;
            witness.class_of_color.emplace_back(c, cls);
        }
        witness.pruned_lists.assign(n, {});
        bool all_nonempty = true;
        for (int v = 0; v < n; ++v) {
            const int own = class_index.at(base[v]);
            for (int c : lists.list(v))
                if (color_class.at(c) == own) witness.pruned_lists[v].push_back(c);
            if (witness.pruned_lists[v].empty()) all_nonempty = false;
        }
        if (!all_nonempty) continue;

        ChoiceResult result;
        result.attempts = static_cast<int>(attempt) + 1;
        result.coloring.resize(n);
        for (int v = 0; v < n; ++v)
            result.coloring[v] = witness.pruned_lists[v].front();
        result.witness = witness;
        if (!verify(mode, h, result.coloring))
            throw InvariantBreach("refined coloring lost the base verdict");
        if (!verify_from_lists(result.coloring, lists))
            throw InvariantBreach("refined coloring left the lists");
        return result;
    }
    throw RedrawCapExceeded(std::move(witness));
}

}  // namespace cfcolor
