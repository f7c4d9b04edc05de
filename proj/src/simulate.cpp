#include "lure/simulate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <random>

#include "lure/errors.hpp"
#include "lure/random_util.hpp"

namespace lure {

namespace {

Trajectory run_rk4(int dim, const Vector& x0, const SimConfig& config, int p,
                   const std::function<Vector(const Vector&, const Vector&)>& f) {
    const int steps = config.steps();
    const double dt = config.dt;

    Trajectory traj;
    traj.times.resize(steps + 1);
    traj.states.resize(steps + 1, dim);
    traj.inputs.resize(steps + 1, p);

    Vector x = x0;
    traj.times[0] = 0.0;
    traj.states.row(0) = x.transpose();
    traj.inputs.row(0) = config.input.eval(0.0, p).transpose();

    for (int k = 0; k < steps; ++k) {
        const double t = k * dt;
        const Vector u0 = config.input.eval(t, p);
        const Vector uh = config.input.eval(t + 0.5 * dt, p);
        const Vector u1 = config.input.eval(t + dt, p);

        const Vector k1 = f(x, u0);
        const Vector k2 = f(x + 0.5 * dt * k1, uh);
        const Vector k3 = f(x + 0.5 * dt * k2, uh);
        const Vector k4 = f(x + dt * k3, u1);
        x += (dt / 6.0) * (k1 + 2.0 * k2 + 2.0 * k3 + k4);

        if (!x.allFinite() || x.cwiseAbs().maxCoeff() >= 1e12)
            throw DivergenceError("trajectory diverged", static_cast<std::size_t>(k + 1));

        traj.times[k + 1] = (k + 1) * dt;
        traj.states.row(k + 1) = x.transpose();
        traj.inputs.row(k + 1) = u1.transpose();
    }
    return traj;
}

}  // namespace

Vector InputSignal::eval(double t, int p) const {
    Vector u = Vector::Zero(p);
    switch (kind) {
        case Kind::zero:
            break;
        case Kind::sinusoid:
            for (int j = 0; j < p; ++j)
                u(j) = channels[j].amplitude * std::sin(channels[j].omega * t);
            break;
        case Kind::step:
            for (int j = 0; j < p; ++j) u(j) = levels[j];
            break;
        case Kind::samples: {
            const int rows = static_cast<int>(sample_values.rows());
            int idx = static_cast<int>(std::floor(t / sample_dt + 1e-9));
            idx = std::min(std::max(idx, 0), rows - 1);
            u = sample_values.row(idx).transpose();
            break;
        }
    }
    return u;
}

void InputSignal::validate(int p) const {
    switch (kind) {
        case Kind::zero:
            break;
        case Kind::sinusoid:
            if (static_cast<int>(channels.size()) != p)
                throw ValidationError("input signal: sinusoid channel count does not match inputs");
            for (const auto& ch : channels)
                if (!std::isfinite(ch.amplitude) || !std::isfinite(ch.omega))
                    throw ValidationError("input signal: non-finite sinusoid parameters");
            break;
        case Kind::step:
            if (static_cast<int>(levels.size()) != p)
                throw ValidationError("input signal: step level count does not match inputs");
            for (double l : levels)
                if (!std::isfinite(l)) throw ValidationError("input signal: non-finite step level");
            break;
        case Kind::samples:
            if (sample_values.cols() != p)
                throw ValidationError("input signal: sample column count does not match inputs");
            if (sample_values.rows() < 2)
                throw ValidationError("input signal: need at least 2 sample rows");
            if (!(sample_dt > 0.0))
                throw ValidationError("input signal: sample spacing must be positive");
            if (!sample_values.allFinite())
                throw ValidationError("input signal: non-finite samples");
            break;
    }
}

Vector InitialState::realize(int n) const {
    switch (kind) {
        case Kind::zeros:
            return Vector::Zero(n);
        case Kind::uniform_random: {
            if (!(lo < hi)) throw ValidationError("initial state: need lo < hi");
            std::mt19937_64 rng(seed);
            Vector x(n);
            for (int i = 0; i < n; ++i) x(i) = uniform_in(rng, lo, hi);
            return x;
        }
        case Kind::vector:
            if (static_cast<int>(value.size()) != n)
                throw ValidationError("initial state: vector length does not match the network");
            if (!value.allFinite())
                throw ValidationError("initial state: non-finite entries");
            return value;
    }
    return Vector::Zero(n);
}

void SimConfig::validate() const {
    if (!(dt > 0.0)) throw ValidationError("simulation: dt must be positive");
    if (!(T >= dt)) throw ValidationError("simulation: T must be at least dt");
}

int SimConfig::steps() const {
    validate();
    return static_cast<int>(std::llround(T / dt));
}

Trajectory integrate_full(const LureNetwork& model, const SimConfig& config) {
    config.validate();
    config.input.validate(model.p());
    const Vector x0 = config.x0.realize(model.n());
    return run_rk4(model.n(), x0, config, model.p(), [&](const Vector& x, const Vector& u) {
        Vector dx = model.A_L * x - model.eval_phi(x);
        if (model.p() > 0) dx += model.B * u;
        return dx;
    });
}

Trajectory integrate_reduced(const ReducedModel& reduced, const SimConfig& config) {
    config.validate();
    config.input.validate(reduced.full.p());
    const Vector x0 = config.x0.realize(reduced.n());
    const Vector z0 = reduced.Pi_dagger * x0;
    return run_rk4(reduced.r(), z0, config, reduced.full.p(),
                   [&](const Vector& z, const Vector& u) {
                       Vector dz = reduced.A_hat * z - reduced.eval_phi_hat(z);
                       if (reduced.full.p() > 0) dz += reduced.B_hat * u;
                       return dz;
                   });
}

Trajectory lift(const ReducedModel& reduced, const Trajectory& traj_z) {
    if (traj_z.states.cols() != reduced.r())
        throw ValidationError("lift: trajectory dimension does not match the reduced model");
    Trajectory out;
    out.times = traj_z.times;
    out.states = traj_z.states * reduced.Pi.transpose();
    out.inputs = traj_z.inputs;
    return out;
}

EmpiricalGamma empirical_gamma(const Trajectory& traj_x, const Trajectory& traj_x_hat,
                               const Trajectory& traj_u) {
    const auto rows = traj_x.states.rows();
    if (traj_x_hat.states.rows() != rows || traj_u.inputs.rows() != rows)
        throw ValidationError("empirical_gamma: trajectories have different lengths");
    if (traj_x_hat.states.cols() != traj_x.states.cols())
        throw ValidationError("empirical_gamma: state dimensions differ; lift the reduced run first");
    if (traj_x.times.size() < 2)
        throw ValidationError("empirical_gamma: need at least 2 time points");

    const double dt = traj_x.times[1] - traj_x.times[0];
    const double energy_u = traj_u.inputs.squaredNorm() * dt;
    if (!(energy_u > 0.0))
        throw ValidationError("empirical_gamma: input energy is zero");
    const double energy_err = (traj_x.states - traj_x_hat.states).squaredNorm() * dt;
    const double energy_x = traj_x.states.squaredNorm() * dt;

    EmpiricalGamma gamma;
    gamma.error_ratio = std::sqrt(energy_err / energy_u);
    gamma.output_ratio = std::sqrt(energy_x / energy_u);
    return gamma;
}

}  // namespace lure
