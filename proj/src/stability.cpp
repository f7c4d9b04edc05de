#include "lure/stability.hpp"

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>

#include "lure/errors.hpp"
#include "lure/parallel.hpp"

namespace lure {

namespace {

using Complex = std::complex<double>;

double min_eig_sym_part(const ComplexMatrix& Z) {
    const ComplexMatrix S = Z + Z.adjoint();
    Eigen::SelfAdjointEigenSolver<ComplexMatrix> es(S, Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw NumericalError("stability sweep: Hermitian eigensolver failed");
    return es.eigenvalues().minCoeff();
}

}  // namespace

std::vector<double> FrequencyGrid::values() const {
    if (points < 2) throw ValidationError("frequency grid needs at least 2 points");
    if (!(omega_min > 0.0) || !(omega_max > omega_min))
        throw ValidationError("frequency grid requires 0 < omega_min < omega_max");
    std::vector<double> out;
    out.reserve(points + (include_zero ? 1 : 0));
    if (include_zero) out.push_back(0.0);
    const double l0 = std::log10(omega_min);
    const double l1 = std::log10(omega_max);
    for (int k = 0; k < points; ++k)
        out.push_back(std::pow(10.0, l0 + (l1 - l0) * k / (points - 1)));
    return out;
}

std::string verdict_name(Verdict v) {
    switch (v) {
        case Verdict::certified: return "certified";
        case Verdict::inconclusive: return "inconclusive";
        case Verdict::violated: return "violated";
    }
    return "inconclusive";
}

std::pair<bool, double> is_hurwitz(const Matrix& M, double tol) {
    Eigen::EigenSolver<Matrix> es(M, false);
    if (es.info() != Eigen::Success) throw NumericalError("is_hurwitz: eigensolver failed");
    const double max_re = es.eigenvalues().real().maxCoeff();
    return {max_re < -tol, -max_re};
}

StabilityCertificate check_absolute_stability_full(const LureNetwork& model,
                                                   const FrequencyGrid& grid,
                                                   double spr_tolerance) {
    const int n = model.n();
    const std::vector<double> omegas = grid.values();

    StabilityCertificate cert;
    cert.system = "full";
    cert.grid = grid;
    cert.spr_tolerance = spr_tolerance;
    cert.frequencies_tested = static_cast<int>(omegas.size());

    const auto [hurwitz, margin] = is_hurwitz(model.A_L);
    cert.hurwitz_margin = margin;

    const ComplexMatrix I = ComplexMatrix::Identity(n, n);
    const ComplexMatrix K = model.mu.cast<Complex>().asDiagonal();
    std::vector<double> mins(omegas.size());
    parallel_for(static_cast<int>(omegas.size()), [&](int idx) {
        ComplexMatrix M = -model.A_L.cast<Complex>();
        M.diagonal().array() += Complex(0.0, omegas[idx]);
        const ComplexMatrix Z = I + K * M.partialPivLu().solve(I);
        mins[idx] = min_eig_sym_part(Z);
    });
    cert.spr_margin = *std::min_element(mins.begin(), mins.end());

    if (!hurwitz)
        cert.verdict = Verdict::violated;
    else if (cert.spr_margin > spr_tolerance)
        cert.verdict = Verdict::certified;
    else if (cert.spr_margin < -spr_tolerance)
        cert.verdict = Verdict::violated;
    else
        cert.verdict = Verdict::inconclusive;
    return cert;
}

StabilityCertificate check_absolute_stability_reduced(const ReducedModel& reduced,
                                                      const FrequencyGrid& grid,
                                                      double spr_tolerance) {
    const int n = reduced.n();
    const int r = reduced.r();
    const std::vector<double> omegas = grid.values();

    StabilityCertificate cert;
    cert.system = "reduced";
    cert.grid = grid;
    cert.spr_tolerance = spr_tolerance;
    cert.frequencies_tested = static_cast<int>(omegas.size());

    const auto [hurwitz, margin] = is_hurwitz(reduced.A_hat);
    cert.hurwitz_margin = margin;

    const ComplexMatrix I_n = ComplexMatrix::Identity(n, n);
    const ComplexMatrix K = reduced.full.mu.cast<Complex>().asDiagonal();
    const ComplexMatrix Pi_c = reduced.Pi.cast<Complex>();
    const ComplexMatrix Pid_c = reduced.Pi_dagger.cast<Complex>();
    std::vector<double> mins(omegas.size());
    parallel_for(static_cast<int>(omegas.size()), [&](int idx) {
        ComplexMatrix M = -reduced.A_hat.cast<Complex>();
        M.diagonal().array() += Complex(0.0, omegas[idx]);
        const ComplexMatrix Z = I_n + K * Pi_c * M.partialPivLu().solve(Pid_c);
        mins[idx] = min_eig_sym_part(Z);
    });
    cert.spr_margin = *std::min_element(mins.begin(), mins.end());

    const Matrix P = reduced.Pi.transpose() * reduced.full.mu.asDiagonal() * reduced.Pi;
    const Matrix S = reduced.A_hat.transpose() * P + P * reduced.A_hat;
    Eigen::SelfAdjointEigenSolver<Matrix> es(0.5 * (S + S.transpose()), Eigen::EigenvaluesOnly);
    if (es.info() != Eigen::Success)
        throw NumericalError("reduced certificate: Lyapunov eigensolver failed");
    cert.lyapunov_margin = -es.eigenvalues().maxCoeff();
    (void)r;

    const bool sweep_ok = cert.spr_margin > spr_tolerance;
    const bool sweep_bad = cert.spr_margin < -spr_tolerance;
    const bool witness_ok = *cert.lyapunov_margin > 0.0;

    if (!hurwitz || sweep_bad)
        cert.verdict = Verdict::violated;
    else if (sweep_ok && witness_ok)
        cert.verdict = Verdict::certified;
    else
        cert.verdict = Verdict::inconclusive;
    return cert;
}

}  // namespace lure
