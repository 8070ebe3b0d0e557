#pragma once

#include <stdexcept>
#include <string>

namespace hyperinv {

/// Input data violates a documented precondition (bad shape, weight, label, ...).
/// CLI maps this to the usage-error exit code.
struct UsageError : std::invalid_argument {
    explicit UsageError(const std::string& what) : std::invalid_argument(what) {}
};

/// Row and column margins of a contingency problem are inconsistent.
struct MarginError : UsageError {
    explicit MarginError(const std::string& what) : UsageError(what) {}
};

/// A computation would exceed a configured resource cap (e.g. matrix columns).
struct ResourceCapError : std::runtime_error {
    explicit ResourceCapError(const std::string& what) : std::runtime_error(what) {}
};

/// Not enough data points to perform the requested interpolation at all.
struct InsufficientDataError : std::runtime_error {
    explicit InsufficientDataError(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace hyperinv
