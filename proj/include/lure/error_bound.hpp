#pragma once

#include <optional>
#include <vector>

#include "lure/lure_network.hpp"
#include "lure/reduced_model.hpp"
#include "lure/state_space.hpp"

namespace lure {

/// The linear comparison system H(s, Pi) whose H-infinity norm gamma_H
/// drives the a-priori bound:
///   A_H = Pi^dagger A_L Pi,   B_H = Pi^dagger A_L (I - Pi Pi^dagger),
///   C_H = Pi,                 D_H = I - Pi Pi^dagger.
/// It satisfies g - g_hat = H g on both the external-input and the
/// nonlinearity-feedback channels of the linear part.
StateSpace build_H_system(const LureNetwork& model, const ReducedModel& reduced);

/// kappa_ue = ||C (sI - A_L)^{-1} B||_inf and kappa_v = ||(sI - A_L)^{-1}||_inf
/// with C = I. kappa_ue is 0 when the network has no external inputs.
struct TransferNorms {
    double kappa_ue = 0.0;
    double kappa_v = 0.0;
};

TransferNorms transfer_norms(const LureNetwork& model, double rel_tol = 1e-6);

/// Small-gain validity test for the bound: kappa_v < 1 / ((gamma_H + 1) mu_max)
/// with a 1e-9 safety strip on the boundary.
bool bound_condition_holds(double gamma_H, double kappa_v, double mu_max,
                           double boundary_tol = 1e-9);

/// Gamma(gamma_H) = gamma_H kappa_ue /
///        ((1 - (gamma_H + 1) mu_max kappa_v)(1 - mu_max kappa_v)).
/// Throws ValidationError when the validity condition fails.
double gamma_bound(double gamma_H, double kappa_ue, double kappa_v, double mu_max,
                   double boundary_tol = 1e-9);

struct ErrorBoundReport {
    int N = 0;
    int r = 0;
    double gamma_H = 0.0;
    double kappa_ue = 0.0;
    double kappa_v = 0.0;
    double mu_max = 0.0;
    bool condition_holds = false;
    std::optional<double> Gamma;
    double rel_tol = 1e-6;
    double boundary_tol = 1e-9;
};

/// Full a-priori error bound pipeline for one partition: reduce, compute
/// gamma_H = ||H||_inf and the transfer norms, test the validity condition
/// and evaluate Gamma when it holds.
ErrorBoundReport error_bound(const LureNetwork& model, const Partition& partition,
                             double rel_tol = 1e-6);

/// Max relative residual of the factorization G(iw) - G_hat(iw) = H(iw) G(iw)
/// over the given frequencies, checked on both channels. Falls back to the
/// absolute residual when the left side is numerically zero.
double verify_factorization(const LureNetwork& model, const ReducedModel& reduced,
                            const std::vector<double>& omegas);

}  // namespace lure
