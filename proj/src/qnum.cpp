#include "qis/qnum.hpp"

#include <cmath>
#include <stdexcept>

namespace qis {

DeformationParameter::DeformationParameter(double q) : q_(q) {
    if (!std::isfinite(q) || q <= 0.0) {
        throw std::domain_error("deformation parameter must be a finite positive real");
    }
}

namespace {

// Threshold below which the series branch of q_bracket is used.
constexpr double kNearUnitWindow = 1e-4;

// sinh(x t)/sinh(t) expanded around t = 0, valid while |x t| stays small:
// x * (1 + (x^2-1) t^2/6 + (x^2-1)(3x^2-7) t^4/360 + O(t^6)).
double bracket_series(double x, double t) {
    const double x2 = x * x;
    const double t2 = t * t;
    return x * (1.0 + (x2 - 1.0) * t2 / 6.0 + (x2 - 1.0) * (3.0 * x2 - 7.0) * t2 * t2 / 360.0);
}

}  // namespace

double q_bracket(double x, DeformationParameter q) {
    if (!std::isfinite(x)) {
        throw std::domain_error("q_bracket argument must be finite");
    }
    if (q.is_unit()) {
        return x;
    }
    const double t = std::log(q.value());
    if (std::abs(q.value() - 1.0) <= kNearUnitWindow && std::abs(x * t) < 1e-2) {
        return bracket_series(x, t);
    }
    return std::sinh(x * t) / std::sinh(t);
}

double q_bracket_ratio(double x, DeformationParameter q) {
    if (!std::isfinite(x)) {
        throw std::domain_error("q_bracket_ratio argument must be finite");
    }
    if (q.is_unit()) {
        return 1.0;
    }
    const double t = std::log(q.value());
    if (x == 0.0) {
        return t / std::sinh(t);
    }
    return q_bracket(x, q) / x;
}

}  // namespace qis
