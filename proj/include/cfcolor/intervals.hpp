#pragma once

#include <optional>
#include <vector>

#include "cfcolor/hypergraph.hpp"

namespace cfcolor {

// Divide and conquer cf coloring of the interval hypergraph H_n: color the
// median, strike its color everywhere, recurse on both halves. Needs lists
// of size at least floor(log2 n) + 1.
Coloring cf_color_intervals_median(int n, const ColorListFamily& lists);

// Non-increasing positive sizes x_1 >= ... >= x_n with sum 2^(-x_i) >= 1;
// vertex i receives the top-aligned range {x_1+1-x_i, ..., x_1}. No
// um-coloring of H_n exists from these lists.
struct TightnessInstance {
    std::vector<int> sizes;
    ColorListFamily lists;
};

TightnessInstance make_tightness_instance(const std::vector<int>& sizes);

// Exhaustive search over the assignment product; first um-coloring in
// vertex-major lexicographic order, or nullopt.
std::optional<Coloring> brute_force_um_list_colorable(
    const Hypergraph& h, const ColorListFamily& lists,
    long long product_guard = 10'000'000);

}  // namespace cfcolor
