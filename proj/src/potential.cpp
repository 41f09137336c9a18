#include "cfcolor/potential.hpp"

#include <algorithm>
#include <limits>

namespace cfcolor {

std::pair<bool, Rational> check_list_condition(const ColorListFamily& lists,
                                               int k) {
    if (k < 2) throw InputError("check_list_condition requires k >= 2");
    const Rational decay(k - 1, k);  // lambda^(-1)
    std::size_t max_len = 0;
    for (const auto& l : lists.lists()) max_len = std::max(max_len, l.size());
    std::vector<Rational> pow(max_len + 1);
    pow[0] = 1;
    for (std::size_t i = 1; i <= max_len; ++i) pow[i] = pow[i - 1] * decay;
    Rational sum = 0;
    for (const auto& l : lists.lists()) sum += pow[l.size()];
    return {sum < 1, sum};
}

int um_choice_bound(long long n, int k) {
    if (n < 1) throw InputError("um_choice_bound requires n >= 1");
    if (k < 2) throw InputError("um_choice_bound requires k >= 2");
    // smallest l with n * (k-1)^l < k^l
    BigInt num = n * (k - 1), den = k;
    int l = 1;
    while (num >= den) {
        num *= (k - 1);
        den *= k;
        ++l;
    }
    return l;
}

namespace {

struct EngineState {
    const Hypergraph& h;
    std::vector<std::vector<int>> rem;  // remaining list per vertex, sorted
    std::vector<bool> colored;
    Coloring coloring;
    std::vector<Rational> pow;  // pow[r] = ((k-1)/k)^r
};

Rational pool_potential(const EngineState& s) {
    Rational p = 0;
    for (int v = 0; v < s.h.vertex_count(); ++v)
        if (!s.colored[v]) p += s.pow[s.rem[v].size()];
    return p;
}

// Properness of the class assignment over the candidate set, checked against
// the parent edge family directly: any parent edge meeting the candidate set
// in >= 2 vertices must meet two distinct classes there.
void check_certificate(const Hypergraph& h, std::span<const int> active,
                       const ProperColoringCertificate& cert, int k,
                       std::vector<int>& scratch) {
    if (cert.coloring.size() != active.size())
        throw ColorerViolation("certificate size mismatch");
    if (cert.k_claimed > k)
        throw ColorerViolation("certificate claims more classes than the handle");
    for (int cls : cert.coloring)
        if (cls < 1 || cls > k)
            throw ColorerViolation("certificate class label out of range");
    scratch.assign(h.vertex_count(), 0);
    for (std::size_t i = 0; i < active.size(); ++i)
        scratch[active[i]] = cert.coloring[i];
    for (const auto& e : h.edges()) {
        int first = 0, members = 0;
        bool mixed = false;
        for (int v : e) {
            const int cls = scratch[v];
            if (cls == 0) continue;
            ++members;
            if (first == 0)
                first = cls;
            else if (cls != first)
                mixed = true;
        }
        if (members >= 2 && !mixed)
            throw ColorerViolation("auxiliary coloring leaves an induced edge monochromatic");
    }
}

}  // namespace

UmListResult um_color_from_lists(const Hypergraph& h,
                                 const ColorListFamily& lists,
                                 const HereditaryColorer& colorer,
                                 const UmColorOptions& options) {
    const int n = h.vertex_count();
    if (lists.size() != n)
        throw InputError("list family does not match the vertex count");
    if (colorer.k < 1 || !colorer.color_subset)
        throw InputError("colorer handle is not usable");

    UmListResult result;
    result.coloring.assign(n, 0);

    if (colorer.k == 1) {
        // A hereditarily 1-colorable hypergraph has no edge of size >= 2, so
        // any choice from the lists is unique-maximum.
        for (const auto& e : h.edges())
            if (e.size() >= 2)
                throw InputError("k=1 colorer on a hypergraph with a non-singleton edge");
        for (int v = 0; v < n; ++v) result.coloring[v] = lists.list(v).front();
        result.list_condition_held = true;
        result.initial_potential = 0;
        result.verified = verify_um(h, result.coloring).ok &&
                          verify_from_lists(result.coloring, lists);
        return result;
    }

    const int k = colorer.k;
    auto [held, sum] = check_list_condition(lists, k);
    result.list_condition_held = held;
    result.initial_potential = sum;

    EngineState s{h, lists.lists(), std::vector<bool>(n, false),
                  result.coloring, {}};
    std::size_t max_len = 0;
    for (const auto& l : s.rem) max_len = std::max(max_len, l.size());
    s.pow.resize(max_len + 1);
    s.pow[0] = 1;
    const Rational decay(k - 1, k);
    for (std::size_t i = 1; i <= max_len; ++i) s.pow[i] = s.pow[i - 1] * decay;

    int uncolored = n;
    Rational potential = pool_potential(s);
    std::vector<int> candidates, scratch;
    int t = 0;

    while (uncolored > 0) {
        ++t;
        // c: minimum color over the union of the remaining lists. Every
        // remaining list is sorted, so c is the smallest front.
        int c = std::numeric_limits<int>::max();
        for (int v = 0; v < n; ++v)
            if (!s.colored[v]) c = std::min(c, s.rem[v].front());

        candidates.clear();
        for (int v = 0; v < n; ++v)
            if (!s.colored[v] && s.rem[v].front() == c) candidates.push_back(v);

        ProperColoringCertificate cert =
            colorer.color_subset(h, std::span<const int>(candidates));
        if (options.verify_auxiliary) {
            check_certificate(h, candidates, cert, k, scratch);
        } else if (cert.coloring.size() != candidates.size()) {
            throw ColorerViolation("certificate size mismatch");
        }

        std::vector<Rational> class_potentials(k, Rational(0));
        for (std::size_t i = 0; i < candidates.size(); ++i)
            class_potentials[cert.coloring[i] - 1] +=
                s.pow[s.rem[candidates[i]].size()];

        int chosen = 0;
        for (int i = 1; i < k; ++i)
            if (class_potentials[i] > class_potentials[chosen]) chosen = i;

        // Pigeonhole: the chosen class carries at least a 1/k share of the
        // candidate potential.
        Rational candidate_total = 0;
        for (const auto& p : class_potentials) candidate_total += p;
        if (class_potentials[chosen] * k < candidate_total)
            throw InvariantBreach("chosen class below the pigeonhole share");

        int colored_now = 0;
        for (std::size_t i = 0; i < candidates.size(); ++i) {
            const int v = candidates[i];
            if (cert.coloring[i] - 1 == chosen) {
                s.coloring[v] = c;
                s.colored[v] = true;
                ++colored_now;
            } else {
                s.rem[v].erase(s.rem[v].begin());  // the front equals c
                if (s.rem[v].empty()) throw ListExhausted(v);
            }
        }
        if (colored_now == 0)
            throw InvariantBreach("iteration colored no vertex");
        uncolored -= colored_now;

        Rational after = pool_potential(s);
        if (after > potential)
            throw InvariantBreach("potential increased across an iteration");

        if (options.record_trace) {
            PotentialIteration it;
            it.t = t;
            it.color = c;
            it.candidate_count = static_cast<int>(candidates.size());
            it.class_potentials = std::move(class_potentials);
            it.chosen_class = chosen + 1;
            it.potential_before = potential;
            it.potential_after = after;
            result.trace.iterations.push_back(std::move(it));
        }
        potential = std::move(after);
    }

    result.coloring = std::move(s.coloring);
    result.verified = verify_um(h, result.coloring).ok &&
                      verify_from_lists(result.coloring, lists);
    return result;
}

}  // namespace cfcolor
