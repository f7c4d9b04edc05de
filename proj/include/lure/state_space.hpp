#pragma once

#include "lure/types.hpp"

namespace lure {

/// Dense LTI system G(s) = C (sI - A)^{-1} B + D.
struct StateSpace {
    Matrix A, B, C, D;

    int order() const { return static_cast<int>(A.rows()); }
    int n_inputs() const { return static_cast<int>(B.cols()); }
    int n_outputs() const { return static_cast<int>(C.rows()); }

    /// Throws ValidationError on inconsistent dimensions.
    void validate_dims() const;

    /// Frequency response at s = i omega.
    ComplexMatrix eval(double omega) const;
};

/// Largest singular value of the response at omega.
double peak_gain_at(const StateSpace& sys, double omega);

}  // namespace lure
