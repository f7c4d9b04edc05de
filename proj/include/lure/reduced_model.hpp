#pragma once

#include "lure/lure_network.hpp"
#include "lure/partition.hpp"

namespace lure {

/// Projected model  z' = A_hat z + B_hat u_e - Pi_dagger Phi(Pi z)  with lift
/// x_hat = Pi z. Keeps the full model because the projected nonlinearity has
/// no closed form and is evaluated compositionally.
struct ReducedModel {
    Matrix A_hat;      ///< r x r, generally nonsymmetric
    Matrix B_hat;      ///< r x p
    Matrix Pi;         ///< N x r characteristic matrix
    Matrix Pi_dagger;  ///< r x N weighted projection
    Partition partition;
    LureNetwork full;

    int r() const { return static_cast<int>(A_hat.rows()); }
    int n() const { return static_cast<int>(Pi.rows()); }

    Vector eval_phi_hat(const Vector& z) const;  ///< Pi_dagger * Phi(Pi z)
    Vector lift(const Vector& z) const { return Pi * z; }
};

/// Builds A_hat = Pi_dagger A_L Pi and B_hat = Pi_dagger B; verifies
/// Pi_dagger Pi = I_r to tolerance 1e-12 * r.
ReducedModel reduce(const LureNetwork& model, const Partition& partition);

struct StructureParts {
    Vector diag_part;        ///< strictly positive self-dynamics rates
    Matrix laplacian_part;   ///< zero row sums, nonpositive off-diagonals
};

/// Splits -A_hat into a positive diagonal plus a directed Laplacian and
/// checks both parts (tolerance 1e-10 scaled by max-norm); a violation throws
/// NumericalError and indicates an implementation bug, not a valid runtime
/// state.
StructureParts structure_decompose(const ReducedModel& reduced);

}  // namespace lure
