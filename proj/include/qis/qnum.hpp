#pragma once

namespace qis {

/// Deformation parameter of the q-bracket. Restricted to finite positive
/// reals; q = 1 selects the undeformed limit everywhere.
class DeformationParameter {
public:
    explicit DeformationParameter(double q);

    double value() const { return q_; }
    bool is_unit() const { return q_ == 1.0; }

private:
    double q_;
};

/// q-bracket [x]_q = (q^x - q^{-x}) / (q - q^{-1}), with [x]_1 = x.
///
/// Evaluated as sinh(x ln q)/sinh(ln q), which is free of cancellation for
/// every q > 0.  Below |q - 1| = 1e-4 a truncated expansion in ln q takes
/// over for moderate |x ln q|; the two branches agree to better than 1e-12
/// at the crossover.
double q_bracket(double x, DeformationParameter q);

/// [x]_q / x extended continuously through x = 0, where the limit is
/// 2 ln(q)/(q - q^{-1}).  Exists so ladder-element builders never divide
/// by a vanishing integer factor.
double q_bracket_ratio(double x, DeformationParameter q);

}  // namespace qis
