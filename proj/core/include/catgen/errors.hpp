#pragma once

#include <stdexcept>
#include <string>

namespace catgen {

// Numerical failure: non-convergence, residual blow-up, analytic-domain breach.
struct numeric_error : std::runtime_error {
    explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

// Degenerate-state failure: zero-norm vectors, singular pointer bases.
// |C_o> at alpha=0 is the canonical case.
struct degenerate_error : numeric_error {
    explicit degenerate_error(const std::string& what) : numeric_error(what) {}
};

} // namespace catgen
