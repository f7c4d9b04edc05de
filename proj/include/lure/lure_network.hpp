#pragma once

#include <cstdint>
#include <vector>

#include "lure/network_spec.hpp"
#include "lure/types.hpp"

namespace lure {

/// Full-order model  x' = A_L x + B u_e - Phi(x)  with per-node
/// slope-restricted nonlinearities and sector matrix K_mu = diag(mu).
struct LureNetwork {
    Matrix A_L;  ///< N x N, symmetric negative definite when assembled from a spec
    Matrix B;    ///< N x p input gains
    Vector mu;   ///< positive sector slopes, diagonal of K_mu
    std::vector<Nonlinearity> phi;  ///< one entry per node

    int n() const { return static_cast<int>(A_L.rows()); }
    int p() const { return static_cast<int>(B.cols()); }

    /// Elementwise application of the per-node nonlinearities.
    Vector eval_phi(const Vector& x) const;
};

/// Builds the model from a spec. Verifies that every declared slope mu_i
/// covers the nonlinearity's maximal slope (naming the first offending node),
/// that A_L is negative definite, and spot-checks the incremental sector
/// bound with a small randomized sample.
LureNetwork assemble(const NetworkSpec& spec, const Nonlinearity& phi_choice);

/// As above, using spec.nonlinearity; throws ValidationError when absent.
LureNetwork assemble(const NetworkSpec& spec);

/// Skips all assembly validation; intended for adversarial test fixtures.
LureNetwork from_raw_parts(Matrix A_L, Matrix B, Vector mu, std::vector<Nonlinearity> phi);

struct SectorReport {
    double max_value = 0.0;  ///< largest sampled value of the sector quadratic form
    double tolerance = 0.0;  ///< 1e-12 * scale at the reported sample
    bool passed = false;
    Vector worst_xa;
    Vector worst_xb;
};

/// Evaluates q = (Phi(xa)-Phi(xb))^T (Phi(xa)-Phi(xb) - K_mu (xa-xb)) at
/// `samples` random pairs drawn over several magnitude scales; q <= 0 holds
/// for every correctly declared model.
SectorReport check_incremental_sector(const LureNetwork& model, int samples, std::uint64_t seed);

}  // namespace lure
