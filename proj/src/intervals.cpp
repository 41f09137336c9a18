#include "cfcolor/intervals.hpp"

#include <algorithm>

#include "cfcolor/oracle.hpp"
#include "cfcolor/rational.hpp"

namespace cfcolor {

namespace {

int floor_log2(int n) {
    int l = 0;
    while ((1 << (l + 1)) <= n) ++l;
    return l;
}

struct MedianState {
    std::vector<std::vector<int>> rem;
    Coloring coloring;
};

void median_recurse(MedianState& s, int lo, int hi) {
    if (lo > hi) return;
    const int p = lo + (hi - lo) / 2;  // lower median
    if (s.rem[p].empty())
        throw InvariantBreach("median list emptied despite the depth bound");
    const int x = s.rem[p].front();
    s.coloring[p] = x;
    for (int q = lo; q <= hi; ++q) {
        if (q == p) continue;
        auto& l = s.rem[q];
        auto it = std::lower_bound(l.begin(), l.end(), x);
        if (it != l.end() && *it == x) l.erase(it);
    }
    median_recurse(s, lo, p - 1);
    median_recurse(s, p + 1, hi);
}

}  // namespace

Coloring cf_color_intervals_median(int n, const ColorListFamily& lists) {
    if (n < 1) throw InputError("n >= 1 required");
    if (lists.size() != n) throw InputError("list family size mismatch");
    const int needed = floor_log2(n) + 1;
    for (const auto& l : lists.lists())
        if (static_cast<int>(l.size()) < needed)
            throw InputError("median coloring needs lists of size floor(log2 n) + 1");
    MedianState s{lists.lists(), Coloring(n, 0)};
    median_recurse(s, 0, n - 1);
    return s.coloring;
}

TightnessInstance make_tightness_instance(const std::vector<int>& sizes) {
    if (sizes.empty()) throw InputError("empty size vector");
    for (std::size_t i = 0; i < sizes.size(); ++i) {
        if (sizes[i] < 1) throw InputError("sizes must be positive");
        if (i > 0 && sizes[i] > sizes[i - 1])
            throw InputError("sizes must be non-increasing");
    }
    Rational sum = 0;
    for (int x : sizes)
        sum += Rational(1, bigint_pow(BigInt(2), static_cast<unsigned>(x)));
    if (sum < 1)
        throw InputError("sum of 2^(-x_i) must be at least 1");

    const int top = sizes.front();
    std::vector<std::vector<int>> lists;
    lists.reserve(sizes.size());
    for (int x : sizes) {
        std::vector<int> l(x);
        for (int c = 0; c < x; ++c) l[c] = top + 1 - x + c;
        lists.push_back(std::move(l));
    }
    return {sizes, ColorListFamily(std::move(lists))};
}

std::optional<Coloring> brute_force_um_list_colorable(
    const Hypergraph& h, const ColorListFamily& lists,
    long long product_guard) {
    return find_coloring_from_lists(h, lists.lists(), ColoringMode::um,
                                    product_guard);
}

}  // namespace cfcolor
