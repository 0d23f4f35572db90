#pragma once

#include <complex>

namespace qis {

/// Which power of the gamma-ratio prefactor the Pollaczek evaluation uses.
/// `half` is the normalization that satisfies the defining three-term
/// recurrence and is the library default; `paper` keeps the degree-dependent
/// exponent n/2 available for comparison (it fails the recurrence check and
/// is retained as a diagnostic, not deleted).
enum class ExponentMode { paper, half };

/// Terminating Gauss series 2F1(-n, b; c; z) summed over its n+1 terms with
/// running-product Pochhammer ratios.  The partial sums cancel heavily for
/// large n, so the accumulation runs in MPFR at a precision that grows with
/// the degree; the rounded double result is reliable to the last few ulps.
///
/// Throws std::domain_error when c is a non-positive integer (series pole).
std::complex<double> hyp2f1_terminating(int n, std::complex<double> b, double c, double z);

/// ln Gamma(n+c) - ln Gamma(c) - ln n!, the log of the rising factorial
/// (c)_n / n!.  No overflow for n well beyond 1e5.
double log_gamma_ratio(int n, double c);

/// Arguments of a Pollaczek polynomial evaluation: degree n, spectral
/// argument z (complex in general), and the representation index
/// (Bargmann k or spin j).
struct PollaczekArgs {
    int n = 0;
    std::complex<double> z;
    double idx = 1.0;
};

/// i^n * (Gamma(n+2 idx)/(n! Gamma(2 idx)))^p * 2F1(-n, idx+iz; 2 idx; 2)
/// with p = 1/2 in half mode and p = n/2 in paper mode.
std::complex<double> pollaczek(const PollaczekArgs& args, ExponentMode mode = ExponentMode::half);

}  // namespace qis
