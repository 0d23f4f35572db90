#!/usr/bin/env python3
"""Regenerates tests/oracles/fixtures.hpp.

Every frozen constant below is computed with mpmath at 50+ decimal digits,
independently of the C++ implementation: hypergeometric sums are evaluated
term by term, states come from exact linear algebra on small matrices, and
q-brackets are evaluated from their defining exponential form.

Usage:  python3 generate_fixtures.py > fixtures.hpp
"""

import mpmath as mp

mp.mp.dps = 50


def qb(x, q):
    q = mp.mpf(q)
    if q == 1:
        return mp.mpf(x)
    return (q**x - q**-x) / (q - 1 / q)


def hyp2f1_terminating(n, b, c, z):
    term = mp.mpc(1)
    total = mp.mpc(1)
    for m in range(n):
        term *= mp.mpf(m - n) * (b + m) / ((c + m) * (m + 1)) * z
        total += term
    return total


def pollaczek_half(n, z, idx):
    g = mp.gamma(n + 2 * idx) / (mp.factorial(n) * mp.gamma(2 * idx))
    return mp.power(1j, n) * mp.sqrt(g) * hyp2f1_terminating(n, idx + 1j * z, 2 * idx, 2)


def su11_lower(n, k):  # <n-1|K-|n>
    return mp.sqrt(mp.mpf(n) * (n + 2 * k - 1))


def su11_raise(n, k):  # <n+1|K+|n>
    return mp.sqrt(mp.mpf(n + 1) * (n + 2 * k))


def recurrence_su11(lam, eta, k, count):
    """alpha * <n|K-|n+1> c_{n+1} + beta * <n|K+|n-1> c_{n-1} = 2 eta c_n, c_0 = 1."""
    al, be = 1 + mp.mpf(lam), 1 - mp.mpf(lam)
    c = [mp.mpf(1)]
    for n in range(count - 1):
        prev = c[n - 1] if n >= 1 else mp.mpf(0)
        b_el = su11_lower(n, k) if n >= 1 else mp.mpf(0)  # K+ element (n-1 -> n)
        c.append((2 * mp.mpf(eta) * c[n] - be * b_el * prev) / (al * su11_lower(n + 1, k)))
    return c


def equal_superposition_report(k, width, dim):
    """Variances of X1, X2 and the Robertson gap for (1,..,1)/sqrt(width), k=1 basis."""
    L = mp.zeros(dim, dim)
    R = mp.zeros(dim, dim)
    for n in range(dim - 1):
        L[n, n + 1] = su11_lower(n + 1, k)
        R[n + 1, n] = su11_raise(n, k)
    X1 = (R + L) / 2
    X2 = (R - L) / (2j)
    psi = mp.matrix([1 if n < width else 0 for n in range(dim)]) / mp.sqrt(width)
    def expect(M):
        return sum((mp.conj(psi[i]) * sum(M[i, j] * psi[j] for j in range(dim))) for i in range(dim))
    e1, e2 = expect(X1), expect(X2)
    e11, e22 = expect(X1 * X1), expect(X2 * X2)
    v1, v2 = e11 - e1 ** 2, e22 - e2 ** 2
    comm = expect(X1 * X2 - X2 * X1)
    gap = abs(v1 * v2 - abs(comm) ** 2 / 4)
    return mp.re(v1), mp.re(v2), abs(comm), gap


def emit(name, value, kind="double"):
    if kind == "double":
        print(f"inline constexpr double {name} = {mp.nstr(value, 17)};")
    elif kind == "cplx":
        print(
            f"inline constexpr std::complex<double> {name}"
            f"{{{mp.nstr(mp.re(value), 17)}, {mp.nstr(mp.im(value), 17)}}};"
        )


print("// Generated by generate_fixtures.py (mpmath, 50 digit working precision).")
print("// Regenerate with:  python3 generate_fixtures.py > fixtures.hpp")
print("#pragma once")
print("#include <complex>")
print()
print("namespace fixtures {")
print()

print("// [4]_q / 4 at q = 1.5 (exact value 1261/864)")
emit("q_bracket_ratio_x4_q15", qb(4, mp.mpf("1.5")) / 4)
print()

print("// 2F1(-3, 0.5+0.3i; 1; 2), four-term sum")
emit("hyp2f1_n3", hyp2f1_terminating(3, mp.mpc("0.5", "0.3"), mp.mpf(1), mp.mpf(2)), "cplx")
print()

print("// Pollaczek value P_2(z=0.7, idx=0.5), square-root gamma prefactor")
emit("pollaczek_n2_z07_k05", pollaczek_half(2, mp.mpf("0.7"), mp.mpf("0.5")), "cplx")
print()

print("// Dyson-realization raising element <1|Q+|0> at q=2, k=1: sqrt(2)*1.25")
emit("dyson_raise_10_q2_k1", mp.sqrt(2) * qb(2, 2) / 2)
print()

print("// Two-level eigenvalue magnitude sqrt(1-lambda^2)/2 at lambda=0.5")
emit("eta_twolevel_lam05", mp.sqrt(mp.mpf(3) / 4) / 2)
print()

print("// Nonzero spectrum magnitude for j=1, lambda=0.5: sqrt(alpha*beta)")
emit("eta_j1_lam05", mp.sqrt(mp.mpf("1.5") * mp.mpf("0.5")))
print()

print("// Recurrence coefficients c_1..c_6 for k=1, lambda=0.5, eta=0.3, q=1, c_0=1")
coeffs = recurrence_su11(mp.mpf("0.5"), mp.mpf("0.3"), mp.mpf(1), 7)
print("inline constexpr double recurrence_k1_lam05_eta03[6] = {")
for c in coeffs[1:7]:
    print(f"    {mp.nstr(c, 17)},")
print("};")
print()

print("// Equal superposition of the four lowest k=1 basis states: not an")
print("// intelligent state, so the Robertson gap is strictly positive.")
v1, v2, comm, gap = equal_superposition_report(mp.mpf(1), 4, 10)
emit("flat4_var_x1", v1)
emit("flat4_var_x2", v2)
emit("flat4_abs_comm", comm)
emit("flat4_gap", gap)
print()

print("}  // namespace fixtures")
