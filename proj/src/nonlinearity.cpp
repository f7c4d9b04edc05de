#include "lure/nonlinearity.hpp"

#include <cmath>

#include "lure/errors.hpp"

namespace lure {

Nonlinearity Nonlinearity::saturating_abs(double c, double d) {
    if (!(c > 0.0) || !(d > 0.0))
        throw ValidationError("saturating_abs requires c > 0 and d > 0");
    Nonlinearity nl;
    nl.kind = NonlinearityKind::saturating_abs;
    nl.c = c;
    nl.d = d;
    return nl;
}

Nonlinearity Nonlinearity::scaled_tanh(double c, double d) {
    if (!(c > 0.0) || !(d > 0.0))
        throw ValidationError("scaled_tanh requires c > 0 and d > 0");
    Nonlinearity nl;
    nl.kind = NonlinearityKind::scaled_tanh;
    nl.c = c;
    nl.d = d;
    return nl;
}

Nonlinearity Nonlinearity::linear(double k) {
    if (!(k >= 0.0)) throw ValidationError("linear requires k >= 0");
    Nonlinearity nl;
    nl.kind = NonlinearityKind::linear;
    nl.k = k;
    return nl;
}

double Nonlinearity::eval(double x) const {
    switch (kind) {
        case NonlinearityKind::saturating_abs:
            return c * (std::abs(x + d) - std::abs(x - d));
        case NonlinearityKind::scaled_tanh:
            return c * d * std::tanh(x / d);
        case NonlinearityKind::linear:
            return k * x;
    }
    return 0.0;
}

double Nonlinearity::max_slope() const {
    switch (kind) {
        case NonlinearityKind::saturating_abs:
            return 2.0 * c;
        case NonlinearityKind::scaled_tanh:
            return c;
        case NonlinearityKind::linear:
            return k;
    }
    return 0.0;
}

std::string Nonlinearity::kind_name() const {
    switch (kind) {
        case NonlinearityKind::saturating_abs:
            return "saturating_abs";
        case NonlinearityKind::scaled_tanh:
            return "scaled_tanh";
        case NonlinearityKind::linear:
            return "linear";
    }
    return "unknown";
}

}  // namespace lure
