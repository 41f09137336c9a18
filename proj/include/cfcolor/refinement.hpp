#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "cfcolor/hypergraph.hpp"

namespace cfcolor {

// True iff base(x) != base(y) implies refined(x) != refined(y); equivalently,
// every class of `refined` sits inside a single class of `base`.
bool is_refinement(const Coloring& refined, const Coloring& base);

struct PartitionWitness {
    Coloring base_coloring;
    std::vector<std::pair<int, int>> class_of_color;  // union color -> class
    std::vector<std::vector<int>> pruned_lists;  // empty entries on failures
};

struct ChoiceResult {
    Coloring coloring;
    PartitionWitness witness;
    int attempts = 0;  // total draws, the successful one included
};

struct RedrawCapExceeded : InfeasibleError {
    PartitionWitness last_attempt;
    explicit RedrawCapExceeded(PartitionWitness w)
        : InfeasibleError("redraw cap exceeded"), last_attempt(std::move(w)) {}
};

struct ChoiceOptions {
    long long redraw_cap = 1'000'000;
};

// floor(k ln n) + 1.
int choice_required_list_size(int n, int k);

// n (1 - 1/k)^list_size: union bound on the per-attempt failure probability.
double partition_failure_bound(int n, int k, int list_size);

// Las Vegas reduction from a k-class base coloring to a coloring from lists:
// every union color is assigned to a class uniformly at random; the draw is
// repeated until each vertex keeps some list color inside its own base
// class, and each vertex then takes the minimum surviving color. Attempt i
// uses the substream (seed, i), so runs replay exactly.
ChoiceResult choice_from_chromatic(const Hypergraph& h, const Coloring& base,
                                   const ColorListFamily& lists,
                                   ColoringMode mode, std::uint64_t seed,
                                   const ChoiceOptions& options = {});

}  // namespace cfcolor
