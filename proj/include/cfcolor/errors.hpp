#pragma once

#include <stdexcept>
#include <string>

namespace cfcolor {

// Bad user input: malformed data, violated preconditions, degenerate geometry.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A size guard refused an operation that would be too expensive.
struct GuardError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Correct report that the requested object does not exist for this input.
struct InfeasibleError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// A documented invariant failed at runtime. Indicates a bug or an unsound
// user-supplied component, never a property of valid input.
struct InvariantBreach : std::logic_error {
    using std::logic_error::logic_error;
};

// Some uncolored vertex ran out of admissible colors mid-run.
struct ListExhausted : InfeasibleError {
    int vertex;
    explicit ListExhausted(int v)
        : InfeasibleError("list of vertex " + std::to_string(v) +
                          " ran out of colors"),
          vertex(v) {}
};

// An auxiliary colorer returned a coloring that is not proper or uses more
// classes than it claims.
struct ColorerViolation : InvariantBreach {
    using InvariantBreach::InvariantBreach;
};

}  // namespace cfcolor
