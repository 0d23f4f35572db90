// Generated by generate_fixtures.py (mpmath, 50 digit working precision).
// Regenerate with:  python3 generate_fixtures.py > fixtures.hpp
#pragma once
#include <complex>

namespace fixtures {

// [4]_q / 4 at q = 1.5 (exact value 1261/864)
inline constexpr double q_bracket_ratio_x4_q15 = 1.4594907407407407;

// 2F1(-3, 0.5+0.3i; 1; 2), four-term sum
inline constexpr std::complex<double> hyp2f1_n3{0.0, -0.464};

// Pollaczek value P_2(z=0.7, idx=0.5), square-root gamma prefactor
inline constexpr std::complex<double> pollaczek_n2_z07_k05{0.48, 0.0};

// Dyson-realization raising element <1|Q+|0> at q=2, k=1: sqrt(2)*1.25
inline constexpr double dyson_raise_10_q2_k1 = 1.7677669529663688;

// Two-level eigenvalue magnitude sqrt(1-lambda^2)/2 at lambda=0.5
inline constexpr double eta_twolevel_lam05 = 0.43301270189221932;

// Nonzero spectrum magnitude for j=1, lambda=0.5: sqrt(alpha*beta)
inline constexpr double eta_j1_lam05 = 0.86602540378443865;

// Recurrence coefficients c_1..c_6 for k=1, lambda=0.5, eta=0.3, q=1, c_0=1
inline constexpr double recurrence_k1_lam05_eta03[6] = {
    0.28284271247461901,
    -0.14626206819470519,
    -0.083555555555555556,
    0.030291267535197151,
    0.024953103212802777,
    -0.0069934589124230964,
};

// Equal superposition of the four lowest k=1 basis states: not an
// intelligent state, so the Robertson gap is strictly positive.
inline constexpr double flat4_var_x1 = 1.8876275643042055;
inline constexpr double flat4_var_x2 = 2.2563271263279594;
inline constexpr double flat4_abs_comm = 2.5;
inline constexpr double flat4_gap = 2.6966052777439533;

}  // namespace fixtures
