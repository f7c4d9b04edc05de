#include "lure/error_bound.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "lure/errors.hpp"
#include "lure/hinf.hpp"
#include "lure/stability.hpp"

namespace lure {

namespace {

using Complex = std::complex<double>;

ComplexMatrix resolvent(const Matrix& A, double omega) {
    const int n = static_cast<int>(A.rows());
    ComplexMatrix M = -A.cast<Complex>();
    M.diagonal().array() += Complex(0.0, omega);
    return M.partialPivLu().solve(ComplexMatrix::Identity(n, n));
}

double channel_residual(const ComplexMatrix& G, const ComplexMatrix& G_hat,
                        const ComplexMatrix& H) {
    const ComplexMatrix rhs = H * G;
    const ComplexMatrix lhs = G - G_hat;
    const double err = (lhs - rhs).norm();
    // Once the difference of the two transfer matrices drops below 1e-7 of
    // the operand scale, cancellation has consumed most of its significant
    // digits and a residual relative to ||lhs|| only measures that noise, so
    // the comparison switches to the absolute residual.
    const double scale = G.norm() + G_hat.norm() + rhs.norm();
    const double denom = lhs.norm();
    if (denom < 1e-7 * scale || denom < 1e-300) return err;
    return err / denom;
}

}  // namespace

StateSpace build_H_system(const LureNetwork& model, const ReducedModel& reduced) {
    if (reduced.n() != model.n())
        throw ValidationError("build_H_system: reduced model does not match the network");
    const int n = model.n();
    const Matrix proj = Matrix::Identity(n, n) - reduced.Pi * reduced.Pi_dagger;

    StateSpace H;
    H.A = reduced.A_hat;
    H.B = reduced.Pi_dagger * model.A_L * proj;
    H.C = reduced.Pi;
    H.D = proj;
    return H;
}

TransferNorms transfer_norms(const LureNetwork& model, double rel_tol) {
    const int n = model.n();
    TransferNorms norms;

    StateSpace v_channel;
    v_channel.A = model.A_L;
    v_channel.B = Matrix::Identity(n, n);
    v_channel.C = Matrix::Identity(n, n);
    v_channel.D = Matrix::Zero(n, n);
    norms.kappa_v = hinf_norm(v_channel, rel_tol);

    // A_L is symmetric negative definite, so ||(sI-A_L)^{-1}||_inf = 1/min|lambda|.
    // Disagreement beyond the bisection tolerance flags a numerical problem.
    const Matrix sym_gap = model.A_L - model.A_L.transpose();
    if (sym_gap.cwiseAbs().maxCoeff() <= 1e-10 * (1.0 + model.A_L.cwiseAbs().maxCoeff())) {
        Eigen::SelfAdjointEigenSolver<Matrix> es(model.A_L, Eigen::EigenvaluesOnly);
        if (es.info() != Eigen::Success)
            throw NumericalError("transfer_norms: symmetric eigensolver failed");
        const double closed = 1.0 / es.eigenvalues().cwiseAbs().minCoeff();
        if (std::abs(norms.kappa_v - closed) > 100.0 * rel_tol * closed)
            throw NumericalError("transfer_norms: kappa_v disagrees with the spectral value");
    }

    if (model.p() > 0) {
        StateSpace ue_channel;
        ue_channel.A = model.A_L;
        ue_channel.B = model.B;
        ue_channel.C = Matrix::Identity(n, n);
        ue_channel.D = Matrix::Zero(n, model.p());
        norms.kappa_ue = hinf_norm(ue_channel, rel_tol);
    }
    return norms;
}

bool bound_condition_holds(double gamma_H, double kappa_v, double mu_max,
                           double boundary_tol) {
    if (!(mu_max > 0.0)) throw ValidationError("bound condition: mu_max must be positive");
    return kappa_v + boundary_tol < 1.0 / ((gamma_H + 1.0) * mu_max);
}

double gamma_bound(double gamma_H, double kappa_ue, double kappa_v, double mu_max,
                   double boundary_tol) {
    if (!bound_condition_holds(gamma_H, kappa_v, mu_max, boundary_tol))
        throw ValidationError(
            "gamma_bound: validity condition kappa_v < 1/((gamma_H+1) mu_max) fails");
    const double d1 = 1.0 - (gamma_H + 1.0) * mu_max * kappa_v;
    const double d2 = 1.0 - mu_max * kappa_v;
    return gamma_H * kappa_ue / (d1 * d2);
}

ErrorBoundReport error_bound(const LureNetwork& model, const Partition& partition,
                             double rel_tol) {
    const auto [hurwitz, margin] = is_hurwitz(model.A_L);
    (void)margin;
    if (!hurwitz) throw NumericalError("error_bound: A_L is not Hurwitz");

    const ReducedModel reduced = reduce(model, partition);
    const StateSpace H = build_H_system(model, reduced);

    ErrorBoundReport report;
    report.N = model.n();
    report.r = reduced.r();
    report.rel_tol = rel_tol;
    report.gamma_H = hinf_norm(H, rel_tol);
    const TransferNorms norms = transfer_norms(model, rel_tol);
    report.kappa_ue = norms.kappa_ue;
    report.kappa_v = norms.kappa_v;
    report.mu_max = model.mu.maxCoeff();
    report.condition_holds =
        bound_condition_holds(report.gamma_H, report.kappa_v, report.mu_max, report.boundary_tol);
    if (report.condition_holds)
        report.Gamma = gamma_bound(report.gamma_H, report.kappa_ue, report.kappa_v,
                                   report.mu_max, report.boundary_tol);
    return report;
}

double verify_factorization(const LureNetwork& model, const ReducedModel& reduced,
                            const std::vector<double>& omegas) {
    if (omegas.empty()) throw ValidationError("verify_factorization: no frequencies given");
    const StateSpace H = build_H_system(model, reduced);
    const ComplexMatrix Pi_c = reduced.Pi.cast<Complex>();
    const ComplexMatrix Pid_c = reduced.Pi_dagger.cast<Complex>();
    const ComplexMatrix B_c = model.B.cast<Complex>();

    double worst = 0.0;
    for (double omega : omegas) {
        const ComplexMatrix R_full = resolvent(model.A_L, omega);
        const ComplexMatrix R_red = resolvent(reduced.A_hat, omega);
        const ComplexMatrix H_val = H.eval(omega);

        const ComplexMatrix Gv = R_full;
        const ComplexMatrix Gv_hat = Pi_c * R_red * Pid_c;
        worst = std::max(worst, channel_residual(Gv, Gv_hat, H_val));

        if (model.p() > 0) {
            const ComplexMatrix Gu = R_full * B_c;
            const ComplexMatrix Gu_hat = Pi_c * R_red * (Pid_c * B_c);
            worst = std::max(worst, channel_residual(Gu, Gu_hat, H_val));
        }
    }
    return worst;
}

}  // namespace lure
