#include "lure/state_space.hpp"

#include <complex>

#include "lure/errors.hpp"

namespace lure {

void StateSpace::validate_dims() const {
    if (A.rows() != A.cols()) throw ValidationError("state space: A not square");
    if (B.rows() != A.rows()) throw ValidationError("state space: B row count mismatch");
    if (C.cols() != A.rows()) throw ValidationError("state space: C column count mismatch");
    if (D.rows() != C.rows() || D.cols() != B.cols())
        throw ValidationError("state space: D dimensions mismatch");
}

ComplexMatrix StateSpace::eval(double omega) const {
    validate_dims();
    const std::complex<double> s(0.0, omega);
    ComplexMatrix M = -A.cast<std::complex<double>>();
    M.diagonal().array() += s;
    return C.cast<std::complex<double>>() * M.partialPivLu().solve(B.cast<std::complex<double>>()) +
           D.cast<std::complex<double>>();
}

double peak_gain_at(const StateSpace& sys, double omega) {
    if (sys.B.cols() == 0 || sys.C.rows() == 0) return 0.0;
    const ComplexMatrix G = sys.eval(omega);
    return G.jacobiSvd().singularValues()(0);
}

}  // namespace lure
