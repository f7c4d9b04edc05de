#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

namespace lure {

/// User-provided data (specs, partitions, configs) violates a documented invariant.
class ValidationError : public std::runtime_error {
public:
    explicit ValidationError(const std::string& msg) : std::runtime_error(msg) {}
};

/// A numerical routine cannot meet its contract (solver failure, violated precondition,
/// or an internal consistency check that valid inputs should never trip).
class NumericalError : public std::runtime_error {
public:
    explicit NumericalError(const std::string& msg) : std::runtime_error(msg) {}
};

/// Time integration produced a non-finite or unbounded state.
class DivergenceError : public std::runtime_error {
public:
    DivergenceError(const std::string& msg, std::size_t step)
        : std::runtime_error(msg), step_(step) {}

    std::size_t step() const noexcept { return step_; }

private:
    std::size_t step_;
};

}  // namespace lure
