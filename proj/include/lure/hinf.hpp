#pragma once

#include "lure/state_space.hpp"

namespace lure {

struct HinfOptions {
    double rel_tol = 1e-6;
    double abs_floor = 1e-12;  ///< below this the norm is reported as exactly zero
};

struct HinfResult {
    double value = 0.0;
    bool d_dominated = false;  ///< norm within tolerance of sigma_max(D)
    int iterations = 0;        ///< bisection steps taken
    double lower = 0.0;        ///< initial lower bracket (probe peak)
    double upper = 0.0;        ///< final upper bracket
};

/// H-infinity norm by bisection on the bounded-real Hamiltonian test: for
/// gamma > sigma_max(D), gamma < ||G||_inf iff the Hamiltonian built with
/// R = gamma^2 I - D^T D has an eigenvalue on the imaginary axis (detected
/// with |Re| < 1e-8 (1 + ||A||_F)). The bracket starts at the larger of
/// sigma_max(D) and a 33-point probe sweep, with the upper end doubled until
/// the test clears. Requires Hurwitz A; throws NumericalError otherwise.
HinfResult hinf_norm_detailed(const StateSpace& sys, const HinfOptions& opts = {});

double hinf_norm(const StateSpace& sys, double rel_tol = 1e-6);

}  // namespace lure
