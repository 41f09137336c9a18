#pragma once

#include <functional>
#include <span>
#include <utility>
#include <vector>

#include "cfcolor/hypergraph.hpp"
#include "cfcolor/rational.hpp"

namespace cfcolor {

// Proper coloring of a sub-hypergraph, class labels 1..k_claimed.
struct ProperColoringCertificate {
    Coloring coloring;
    int classes_used = 0;
    int k_claimed = 0;
};

// Hereditary proper k-colorer. `color_subset` receives the parent hypergraph
// and an ascending subset of its vertex ids, and must return a proper
// coloring of the induced sub-hypergraph, aligned with `active`, using class
// labels 1..k. The guarantee has to hold for every subset; the engine
// re-checks each certificate before trusting it.
struct HereditaryColorer {
    int k = 0;
    std::function<ProperColoringCertificate(const Hypergraph& parent,
                                            std::span<const int> active)>
        color_subset;
};

struct PotentialIteration {
    int t = 0;  // 1-based
    int color = 0;
    int candidate_count = 0;                 // |V^c|
    std::vector<Rational> class_potentials;  // one entry per class 1..k
    int chosen_class = 0;                    // 1-based, lowest index on ties
    Rational potential_before;               // P_t
    Rational potential_after;                // P_{t+1}
};

struct PotentialTrace {
    std::vector<PotentialIteration> iterations;
};

struct UmListResult {
    Coloring coloring;
    PotentialTrace trace;
    bool verified = false;            // verify_um and verify_from_lists
    bool list_condition_held = false;
    Rational initial_potential;
};

struct UmColorOptions {
    bool verify_auxiliary = true;  // re-check each auxiliary coloring
    bool record_trace = true;
};

// Exact value of sum_v lambda^(-|L_v|) with lambda = k/(k-1), and whether it
// is < 1. Requires k >= 2.
std::pair<bool, Rational> check_list_condition(const ColorListFamily& lists,
                                               int k);

// Smallest uniform list size l with n * lambda^(-l) < 1, lambda = k/(k-1),
// decided by exact integer comparison.
int um_choice_bound(long long n, int k);

// List unique-maximum coloring driven by the potential function. When
// check_list_condition holds and the colorer is sound, the run cannot
// exhaust any list; otherwise ListExhausted may be thrown.
UmListResult um_color_from_lists(const Hypergraph& h,
                                 const ColorListFamily& lists,
                                 const HereditaryColorer& colorer,
                                 const UmColorOptions& options = {});

}  // namespace cfcolor
