#pragma once

#include <cstdint>
#include <vector>

#include "lure/lure_network.hpp"
#include "lure/reduced_model.hpp"
#include "lure/types.hpp"

namespace lure {

struct SinusoidChannel {
    double amplitude = 1.0;
    double omega = 1.0;
};

/// Input signal evaluated analytically at integrator stage times. `samples`
/// inputs are zero-order-hold over a uniform time grid.
struct InputSignal {
    enum class Kind { zero, sinusoid, step, samples };

    Kind kind = Kind::zero;
    std::vector<SinusoidChannel> channels;  // sinusoid
    std::vector<double> levels;             // step
    Matrix sample_values;                   // samples: rows are time points
    double sample_dt = 0.0;

    Vector eval(double t, int p) const;
    void validate(int p) const;
};

struct InitialState {
    enum class Kind { zeros, uniform_random, vector };

    Kind kind = Kind::zeros;
    double lo = -1.0;
    double hi = 1.0;
    std::uint64_t seed = 0;
    Vector value;

    /// Concrete initial state in full-network coordinates.
    Vector realize(int n) const;
};

struct SimConfig {
    double dt = 1e-3;
    double T = 30.0;
    InputSignal input;
    InitialState x0;

    void validate() const;
    int steps() const;
};

struct Trajectory {
    std::vector<double> times;
    Matrix states;  // (steps+1) x dim
    Matrix inputs;  // (steps+1) x p
};

/// Fixed-step RK4 on x' = A_L x + B u - Phi(x). Throws DivergenceError when
/// the state leaves the finite range or exceeds 1e12 in magnitude.
Trajectory integrate_full(const LureNetwork& model, const SimConfig& config);

/// Same integrator on z' = A_hat z + B_hat u - Pi^dagger Phi(Pi z); the
/// initial state is projected, z0 = Pi^dagger x0.
Trajectory integrate_reduced(const ReducedModel& reduced, const SimConfig& config);

/// Lifts a reduced trajectory back to node coordinates, x_hat = Pi z.
Trajectory lift(const ReducedModel& reduced, const Trajectory& traj_z);

/// Energy-ratio estimates over one experiment:
///   error_ratio  = ||x - x_hat||_L2 / ||u||_L2,
///   output_ratio = ||x||_L2 / ||u||_L2.
struct EmpiricalGamma {
    double error_ratio = 0.0;
    double output_ratio = 0.0;
};

EmpiricalGamma empirical_gamma(const Trajectory& traj_x, const Trajectory& traj_x_hat,
                               const Trajectory& traj_u);

}  // namespace lure
