#pragma once

#include <string>

namespace lure {

enum class NonlinearityKind { saturating_abs, scaled_tanh, linear };

/// Scalar slope-restricted nonlinearity: phi(0) = 0 and
/// 0 <= (phi(xa) - phi(xb)) / (xa - xb) <= max_slope() for all xa != xb.
/// A closed enumeration, not user code, so the slope bound is decidable at
/// validation time.
struct Nonlinearity {
    NonlinearityKind kind = NonlinearityKind::linear;
    double c = 0.0;  ///< gain (saturating_abs, scaled_tanh)
    double d = 0.0;  ///< corner/width (saturating_abs, scaled_tanh)
    double k = 0.0;  ///< slope (linear)

    /// phi(x) = c (|x + d| - |x - d|); slope 2c on (-d, d), 0 outside.
    static Nonlinearity saturating_abs(double c, double d);
    /// phi(x) = c d tanh(x / d); slope at most c, attained at 0.
    static Nonlinearity scaled_tanh(double c, double d);
    /// phi(x) = k x, k >= 0.
    static Nonlinearity linear(double k);

    double eval(double x) const;
    double max_slope() const;
    std::string kind_name() const;
};

}  // namespace lure
