#include "lure/reduced_model.hpp"

#include <sstream>

#include "lure/errors.hpp"

namespace lure {

Vector ReducedModel::eval_phi_hat(const Vector& z) const {
    return Pi_dagger * full.eval_phi(Pi * z);
}

ReducedModel reduce(const LureNetwork& model, const Partition& partition) {
    if (partition.n() != model.n()) {
        std::ostringstream os;
        os << "reduce: partition covers " << partition.n() << " nodes, model has " << model.n();
        throw ValidationError(os.str());
    }

    ReducedModel reduced;
    reduced.Pi = characteristic_matrix(partition);
    reduced.Pi_dagger = generalized_projection(reduced.Pi, model.mu);
    reduced.partition = partition;
    reduced.full = model;

    const Matrix left_inverse = reduced.Pi_dagger * reduced.Pi;
    const double residual =
        (left_inverse - Matrix::Identity(partition.r, partition.r)).cwiseAbs().maxCoeff();
    if (residual > 1e-12 * partition.r)
        throw NumericalError("reduce: Pi_dagger Pi deviates from identity");

    reduced.A_hat = reduced.Pi_dagger * model.A_L * reduced.Pi;
    reduced.B_hat = reduced.Pi_dagger * model.B;
    return reduced;
}

StructureParts structure_decompose(const ReducedModel& reduced) {
    // A_L = -diag(a) - L with L 1 = 0 makes both parts recoverable from A_L
    // alone: a = -A_L 1, L = -A_L - diag(a).
    const Matrix& A_L = reduced.full.A_L;
    const Vector a = -A_L.rowwise().sum();
    Matrix L = -A_L;
    L.diagonal() -= a;

    const Matrix D_full = reduced.Pi_dagger * a.asDiagonal() * reduced.Pi;
    const Matrix L_hat = reduced.Pi_dagger * L * reduced.Pi;

    const double scale = std::max(1.0, reduced.A_hat.cwiseAbs().maxCoeff());
    const double atol = 1e-10 * scale;
    std::ostringstream os;

    Matrix off_diagonal = D_full;
    off_diagonal.diagonal().setZero();
    if (off_diagonal.cwiseAbs().maxCoeff() > atol)
        os << "diagonal part is not diagonal; ";

    const Vector d = D_full.diagonal();
    if (d.minCoeff() <= 0.0) os << "diagonal part not strictly positive; ";

    if (((-reduced.A_hat) - (Matrix(d.asDiagonal()) + L_hat)).cwiseAbs().maxCoeff() > atol)
        os << "decomposition does not reassemble -A_hat; ";
    if (L_hat.rowwise().sum().cwiseAbs().maxCoeff() > atol)
        os << "Laplacian part row sums not zero; ";
    for (int i = 0; i < reduced.r(); ++i)
        for (int j = 0; j < reduced.r(); ++j)
            if (i != j && L_hat(i, j) > atol) {
                os << "Laplacian part has a positive off-diagonal; ";
                j = reduced.r();
                i = reduced.r();
            }

    const std::string msg = os.str();
    if (!msg.empty()) throw NumericalError("structure violation: " + msg);

    return StructureParts{d, L_hat};
}

}  // namespace lure
