#pragma once

#include <stdexcept>
#include <string>

namespace mimetic {

// Shape/argument mismatches detected before any numeric work.
struct ShapeError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

// Jacobi SVD failed to reach the off-diagonal tolerance within the sweep cap.
struct NonConvergence : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Checkpoint container errors, one type per failure mode.
struct CorruptHeader : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct OffsetOverlap : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct UnknownDtype : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct TruncatedPayload : std::runtime_error {
    using std::runtime_error::runtime_error;
};
struct MissingTensor : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct MissingConvBias : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct IoError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Training loss became non-finite.
struct DivergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Non-finite value where the gradient checker requires finite arithmetic.
struct NonFinite : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct UsageError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

} // namespace mimetic
