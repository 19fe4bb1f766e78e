#pragma once

#include <stdexcept>
#include <string>

namespace specht {

// Thrown when an operation would exceed its configured desk-scale bound.
struct ScaleExceeded : std::runtime_error {
    explicit ScaleExceeded(const std::string& what) : std::runtime_error(what) {}
};

// Thrown when a verification case violates the hypotheses of the statement
// it is supposed to exercise (e.g. the r = 0 formula applied to r != 0).
struct HypothesisError : std::invalid_argument {
    explicit HypothesisError(const std::string& what) : std::invalid_argument(what) {}
};

}  // namespace specht
