#pragma once

#include <Eigen/Dense>

#include <complex>
#include <optional>
#include <vector>

#include "qis/repr.hpp"
#include "qis/special.hpp"

namespace qis {

/// One intelligent-state eigenvalue problem.
///
/// alpha = 1 + lambda multiplies the lowering ladder and beta = 1 - lambda
/// the raising one: in ladder form the eigenproblem
/// (X1 - i lambda X2)|psi> = eta|psi> reads
/// (alpha X- + beta X+)|psi> = 2 eta |psi>, and the component rows of that
/// operator are exactly the three-term recurrences solved here.  The same
/// orientation is used for both algebra branches and by the diagonalization
/// oracle, so recurrence states are eigenvectors of the matrix the
/// eigensolver factors.  alpha and beta are stored at construction, never
/// recomputed.
struct ISParams {
    double lambda = 0.5;
    std::complex<double> eta{0.0, 0.0};
    RepresentationSpec spec;
    double alpha = 1.5;
    double beta = 0.5;
    double tail_tol = 1e-12;

    static ISParams make(double lambda, std::complex<double> eta, RepresentationSpec spec,
                         double tail_tol = 1e-12);
    void validate() const;
};

struct StateVector {
    std::vector<std::complex<double>> coeffs;  // normalized, first nonzero made real positive
    double norm_sq_inverse = 1.0;              // |c_0|^{-2} accumulator of the unnormalized series
    double tail = 0.0;                         // |c_{last}|^2
    bool converged = true;                     // discrete series: tail below tolerance
    RepresentationSpec basis;
};

struct VerificationReport {
    double eigen_residual = 0.0;                       // vs the state's own realization
    std::optional<double> eigen_residual_adjoint;      // vs symmetric gauge (dyson, q != 1)
    bool uncertainty_applicable = true;
    double var_x1 = 0.0;
    double var_x2 = 0.0;
    std::complex<double> commutator_expectation{0.0, 0.0};
    double saturation_gap = 0.0;                       // |Var1 Var2 - |<C>|^2/4|
    bool squeezed_x1 = false;                          // Var_i < |<C>|/2, strict
    bool squeezed_x2 = false;
    double lambda_ratio_check = 0.0;                   // |Var1/Var2 - lambda^2|
};

/// Forward three-term recurrence from c_0 = 1, normalized afterwards.
/// Discrete series: starts at spec.truncation and doubles up to 4096 while
/// the tail check fails; a still-failing tail flags the state non-converged
/// (never fatal).  Spin: stops at n = 2j.
StateVector solve_recurrence(const ISParams& params);

/// Closed-form coefficients c_n = (beta_q/alpha_q)^{n/2} P_n(z_n) with the
/// per-n deformed weights and z_n = eta / sqrt(alpha_q beta_q).  Exact at
/// q = 1; at q != 1 the per-n weights make this a formal solution whose
/// deviation from solve_recurrence is a measured diagnostic, not an error.
/// Throws std::domain_error when alpha_q beta_q <= 0 (lambda >= 1); use
/// solve_recurrence there.
StateVector solve_closed_form(const ISParams& params, ExponentMode mode = ExponentMode::half);

struct EigenPair {
    std::complex<double> eta;
    StateVector state;
};

/// Dense IS operator  alpha * X-  +  beta * X+  for the given problem
/// (always real for q > 0 and real lambda).
Eigen::MatrixXd is_operator_matrix(const ISParams& params);

/// Full eigensystem of the IS operator; eta = eigenvalue / 2.  Uses a scaled
/// symmetric tridiagonal solve whenever the similarity transform stays in
/// floating-point range, and a general dense eigensolver otherwise (the
/// dyson_paper matrix at q != 1 is non-normal).  Pairs are sorted by
/// (Re eta, Im eta); the spin branch returns exactly 2j+1 pairs.
std::vector<EigenPair> solve_by_diagonalization(const ISParams& params);

/// Eigen-residual, variances of the Hermitian ladder combinations
/// X1 = (X+ + X-)/2 and X2 = (X+ - X-)/(2i), Robertson saturation gap and
/// squeezing flags.  For dyson_paper at q != 1 the Hermitian pair is taken
/// from the symmetric (adjoint) realization and the uncertainty block is
/// marked not applicable; both eigen-residuals are reported in that case.
VerificationReport verify(const StateVector& state, const ISParams& params);

/// Max relative deviation between closed-form and recurrence coefficient
/// ratios c_{n+1}/c_n over n < max_n, skipping ratios whose denominators are
/// negligible.  Published as a diagnostic for q != 1.
double closed_form_ratio_deviation(const ISParams& params, ExponentMode mode, int max_n);

}  // namespace qis
