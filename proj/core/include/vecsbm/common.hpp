#pragma once

#include <stdexcept>
#include <string>

namespace vecsbm {

/// Invalid configuration, malformed input files, inconsistent partitions.
/// CLI maps this to exit code 1.
struct InputError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Numerical failure: eigensolver non-convergence, singular covariance block.
/// CLI maps this to exit code 2.
struct NumericError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

}  // namespace vecsbm
