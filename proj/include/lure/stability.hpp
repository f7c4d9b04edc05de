#pragma once

#include <optional>
#include <string>
#include <vector>

#include "lure/lure_network.hpp"
#include "lure/reduced_model.hpp"
#include "lure/types.hpp"

namespace lure {

/// Logarithmic frequency grid used by the SPR sweep. `values()` returns
/// omega = 0 first (when enabled) followed by `points` log-spaced samples
/// covering [omega_min, omega_max].
struct FrequencyGrid {
    double omega_min = 1e-4;
    double omega_max = 1e4;
    int points = 400;
    bool include_zero = true;

    std::vector<double> values() const;
};

enum class Verdict { certified, inconclusive, violated };

std::string verdict_name(Verdict v);

/// Outcome of an absolute-stability check. `spr_margin` is the smallest
/// eigenvalue of Z(i omega) + Z(i omega)^H seen across the grid;
/// `hurwitz_margin` is -max Re(lambda) of the state matrix. For reduced
/// systems `lyapunov_margin` holds -lambda_max(A_hat^T P + P A_hat) with
/// P = Pi^T K Pi, the witness that backs the finite sweep.
struct StabilityCertificate {
    std::string system;
    std::string method = "frequency_sweep";
    Verdict verdict = Verdict::inconclusive;
    double hurwitz_margin = 0.0;
    double spr_margin = 0.0;
    double spr_tolerance = 1e-9;
    int frequencies_tested = 0;
    std::optional<double> lyapunov_margin;
    FrequencyGrid grid;
};

/// Returns (hurwitz, margin) where margin = -max Re(lambda(M)).
std::pair<bool, double> is_hurwitz(const Matrix& M, double tol = 0.0);

/// Certifies Z(s) = I + K_mu (sI - A_L)^{-1} strictly positive real by a
/// frequency sweep. A sweep can only refute or fail to refute, so a clean
/// pass reports `certified` on the strength of the grid; a margin inside
/// +-spr_tolerance reports `inconclusive`.
StabilityCertificate check_absolute_stability_full(const LureNetwork& model,
                                                   const FrequencyGrid& grid = {},
                                                   double spr_tolerance = 1e-9);

/// Same sweep for Z_hat(s) = I_N + K_mu Pi (sI_r - A_hat)^{-1} Pi^dagger,
/// plus a Lyapunov witness in the weighting P = Pi^T K_mu Pi. Certification
/// requires the sweep and the witness to agree; a passing sweep with a
/// failing witness downgrades to `inconclusive`.
StabilityCertificate check_absolute_stability_reduced(const ReducedModel& reduced,
                                                      const FrequencyGrid& grid = {},
                                                      double spr_tolerance = 1e-9);

}  // namespace lure
