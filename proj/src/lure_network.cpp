#include "lure/lure_network.hpp"

#include <limits>
#include <random>
#include <sstream>
#include <utility>

#include "lure/errors.hpp"
#include "lure/graph.hpp"
#include "lure/random_util.hpp"

namespace lure {

Vector LureNetwork::eval_phi(const Vector& x) const {
    if (x.size() != n()) throw ValidationError("eval_phi: state length does not match model");
    Vector out(x.size());
    for (int i = 0; i < x.size(); ++i) out(i) = phi[static_cast<std::size_t>(i)].eval(x(i));
    return out;
}

LureNetwork assemble(const NetworkSpec& spec, const Nonlinearity& phi_choice) {
    spec.validate();

    const double slope = phi_choice.max_slope();
    for (int i = 0; i < spec.n_nodes; ++i) {
        if (spec.slopes(i) + 1e-12 < slope) {
            std::ostringstream os;
            os << "sector violation at node " << i + 1 << ": declared slope "
               << spec.slopes(i) << " < nonlinearity slope " << slope
               << " (" << phi_choice.kind_name() << ")";
            throw ValidationError(os.str());
        }
    }

    LureNetwork model;
    model.A_L = assemble_state_matrix(spec, build_laplacian(spec));
    model.B = spec.input_matrix();
    model.mu = spec.slopes;
    model.phi.assign(static_cast<std::size_t>(spec.n_nodes), phi_choice);

    Eigen::SelfAdjointEigenSolver<Matrix> es(model.A_L, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success) throw NumericalError("assemble: eigensolver failed on A_L");
    if (es.eigenvalues().maxCoeff() >= 0.0)
        throw NumericalError("assemble: A_L is not negative definite");

    const SectorReport report = check_incremental_sector(model, 64, 0x5ec70bULL);
    if (!report.passed)
        throw NumericalError("assemble: incremental sector spot-check failed");

    return model;
}

LureNetwork assemble(const NetworkSpec& spec) {
    if (!spec.nonlinearity)
        throw ValidationError("assemble: spec carries no nonlinearity; pass one explicitly");
    return assemble(spec, *spec.nonlinearity);
}

LureNetwork from_raw_parts(Matrix A_L, Matrix B, Vector mu, std::vector<Nonlinearity> phi) {
    if (A_L.rows() != A_L.cols()) throw ValidationError("from_raw_parts: A_L not square");
    if (B.rows() != A_L.rows()) throw ValidationError("from_raw_parts: B row count mismatch");
    if (mu.size() != A_L.rows()) throw ValidationError("from_raw_parts: mu length mismatch");
    if (phi.size() != static_cast<std::size_t>(A_L.rows()))
        throw ValidationError("from_raw_parts: phi length mismatch");
    LureNetwork model;
    model.A_L = std::move(A_L);
    model.B = std::move(B);
    model.mu = std::move(mu);
    model.phi = std::move(phi);
    return model;
}

SectorReport check_incremental_sector(const LureNetwork& model, int samples, std::uint64_t seed) {
    std::mt19937_64 rng(seed);
    const int n = model.n();

    SectorReport report;
    report.passed = true;
    double worst_excess = -std::numeric_limits<double>::infinity();

    // Cycle through magnitude scales so both the saturated and the linear
    // regions of each nonlinearity get sampled.
    const double scales[] = {1e-2, 1e-1, 1.0, 1e1};
    for (int s = 0; s < samples; ++s) {
        const double range = scales[s % 4];
        Vector xa(n), xb(n);
        for (int i = 0; i < n; ++i) {
            xa(i) = uniform_in(rng, -range, range);
            xb(i) = uniform_in(rng, -range, range);
        }
        const Vector dphi = model.eval_phi(xa) - model.eval_phi(xb);
        const Vector kdx = model.mu.asDiagonal() * (xa - xb);
        const double q = dphi.dot(dphi - kdx);
        const double tol = 1e-12 * (1.0 + dphi.squaredNorm() + kdx.squaredNorm());

        if (q - tol > worst_excess) {
            worst_excess = q - tol;
            report.max_value = q;
            report.tolerance = tol;
            report.worst_xa = xa;
            report.worst_xb = xb;
        }
        if (q > tol) report.passed = false;
    }
    return report;
}

}  // namespace lure
