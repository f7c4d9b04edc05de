#include "lure/hinf.hpp"

#include <algorithm>
#include <cmath>
#include <complex>

#include "lure/errors.hpp"

namespace lure {

namespace {

using Complex = std::complex<double>;

/// sigma_max(G(i omega)) estimated by power iteration on G^H G with the
/// resolvent applied through one LU factorization. The Rayleigh estimate
/// never exceeds the true value, so it is always a valid lower bracket.
double probe_gain(const StateSpace& sys, double omega) {
    const int m = sys.n_inputs();
    ComplexMatrix M = -sys.A.cast<Complex>();
    M.diagonal().array() += Complex(0.0, omega);
    const Eigen::PartialPivLU<ComplexMatrix> lu(M);

    const ComplexMatrix Bc = sys.B.cast<Complex>();
    const ComplexMatrix Cc = sys.C.cast<Complex>();
    const ComplexMatrix Dc = sys.D.cast<Complex>();

    ComplexVector x(m);
    for (int j = 0; j < m; ++j) x(j) = Complex(1.0 + 0.01 * j, 0.0);
    x /= x.norm();

    double sigma = 0.0;
    for (int iter = 0; iter < 80; ++iter) {
        const ComplexVector y = Cc * lu.solve(Bc * x) + Dc * x;
        const double sigma_new = y.norm();
        if (sigma_new < 1e-300) return 0.0;
        const ComplexVector t = lu.adjoint().solve(Cc.adjoint() * y);
        const ComplexVector w = Bc.adjoint() * t + Dc.adjoint() * y;
        x = w / w.norm();
        if (std::abs(sigma_new - sigma) <= 1e-12 * sigma_new) return sigma_new;
        sigma = sigma_new;
    }
    return sigma;
}

double sigma_max_d(const Matrix& D) {
    if (D.rows() == 0 || D.cols() == 0) return 0.0;
    return D.jacobiSvd().singularValues()(0);
}

bool has_imaginary_eigenvalue(const StateSpace& sys, double gamma, double axis_tol) {
    const int n = sys.order();
    const int m = sys.n_inputs();
    const int q = sys.n_outputs();

    Matrix R = gamma * gamma * Matrix::Identity(m, m) - sys.D.transpose() * sys.D;
    const Eigen::PartialPivLU<Matrix> lu(R);
    const Matrix RiDt = lu.solve(sys.D.transpose());  // m x q
    const Matrix RiBt = lu.solve(sys.B.transpose());  // m x n
    const Matrix Acl = sys.A + sys.B * (RiDt * sys.C);

    Matrix H(2 * n, 2 * n);
    H.topLeftCorner(n, n) = Acl;
    H.topRightCorner(n, n) = sys.B * RiBt;
    H.bottomLeftCorner(n, n) = -sys.C.transpose() * (Matrix::Identity(q, q) + sys.D * RiDt) * sys.C;
    H.bottomRightCorner(n, n) = -Acl.transpose();

    Eigen::EigenSolver<Matrix> es(H, false);
    if (es.info() != Eigen::Success)
        throw NumericalError("hinf_norm: Hamiltonian eigensolver failed");
    for (int i = 0; i < 2 * n; ++i)
        if (std::abs(es.eigenvalues()(i).real()) < axis_tol) return true;
    return false;
}

}  // namespace

HinfResult hinf_norm_detailed(const StateSpace& sys, const HinfOptions& opts) {
    sys.validate_dims();

    HinfResult result;
    if (sys.n_inputs() == 0 || sys.n_outputs() == 0) return result;

    const double sigma_d = sigma_max_d(sys.D);
    if (sys.order() == 0) {
        result.value = sigma_d;
        result.d_dominated = true;
        result.lower = result.upper = sigma_d;
        return result;
    }

    {
        Eigen::EigenSolver<Matrix> es(sys.A, false);
        if (es.info() != Eigen::Success) throw NumericalError("hinf_norm: eigensolver failed on A");
        if (es.eigenvalues().real().maxCoeff() >= 0.0)
            throw NumericalError("hinf_norm: A is not Hurwitz");
    }

    const double rel_tol = std::max(opts.rel_tol, 1e-12);

    double lower = std::max(sigma_d, probe_gain(sys, 0.0));
    for (int k = 0; k < 32; ++k) {
        const double omega = std::pow(10.0, -4.0 + 8.0 * k / 31.0);
        lower = std::max(lower, probe_gain(sys, omega));
    }
    if (lower < opts.abs_floor) return result;  // zero system

    result.lower = lower;
    const double axis_tol = 1e-8 * (1.0 + sys.A.norm());

    double l = lower;
    double u = lower * 2.0;
    int doublings = 0;
    while (has_imaginary_eigenvalue(sys, u, axis_tol)) {
        l = u;
        u *= 2.0;
        if (++doublings > 64) throw NumericalError("hinf_norm: failed to bracket the norm");
    }

    while (u - l > rel_tol * l && result.iterations < 200) {
        const double mid = 0.5 * (l + u);
        if (has_imaginary_eigenvalue(sys, mid, axis_tol))
            l = mid;
        else
            u = mid;
        ++result.iterations;
    }

    result.value = 0.5 * (l + u);
    result.upper = u;
    result.d_dominated = sigma_d > 0.0 && result.value <= sigma_d * (1.0 + 4.0 * rel_tol);
    return result;
}

double hinf_norm(const StateSpace& sys, double rel_tol) {
    HinfOptions opts;
    opts.rel_tol = rel_tol;
    return hinf_norm_detailed(sys, opts).value;
}

}  // namespace lure
