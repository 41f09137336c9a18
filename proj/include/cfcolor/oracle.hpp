#pragma once

#include <optional>
#include <vector>

#include "cfcolor/hypergraph.hpp"

namespace cfcolor {

struct ExhaustiveReport {
    int chi = 0;
    int chi_cf = 0;
    int chi_um = 0;
    Coloring witness_proper;
    Coloring witness_cf;
    Coloring witness_um;
};

struct OracleOptions {
    int max_vertices = 10;
};

// Minimum proper, conflict-free and unique-maximum color counts by
// increasing-k backtracking with canonical color orders. Strict size guard.
ExhaustiveReport exhaustive_chromatic(const Hypergraph& h,
                                      const OracleOptions& options = {});

// First coloring drawn from the lists that passes the mode's verdict,
// vertex-major lexicographic order, or nullopt when none exists.
std::optional<Coloring> find_coloring_from_lists(
    const Hypergraph& h, const std::vector<std::vector<int>>& lists,
    ColoringMode mode, long long product_guard = 10'000'000);

// True iff every assignment of size-l lists over colors {1..universe} admits
// a valid coloring of the given mode. A bounded universe stands in for
// arbitrary positive integers via monotone relabeling; documented as an
// assumption, not a theorem.
bool exhaustive_choosable(const Hypergraph& h, int list_size, ColoringMode mode,
                          int universe, long long family_guard = 1'000'000);

}  // namespace cfcolor
