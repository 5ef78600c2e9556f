#pragma once

#include <stdexcept>

namespace wrange {

/// Missing or incompatible matrix dimensions.
struct dimension_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Argument outside its documented domain.
struct parameter_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Matrix expected to be Hermitian deviates too far from H = H*.
struct not_hermitian_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Matrix expected to have positive definite real part does not.
struct not_accretive_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Input on which the requested analysis is ill-posed (e.g. the zero matrix).
struct degenerate_input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Unknown bound identifier.
struct catalog_error : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

/// Malformed matrix file or unwritable output.
struct io_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace wrange
