#include "qis/special.hpp"

#include <mpfr.h>

#include <cmath>
#include <stdexcept>

namespace qis {

namespace {

constexpr mpfr_rnd_t R = MPFR_RNDN;

// Scoped bundle of mpfr_t work registers.
struct MpfrBundle {
    static constexpr int kCount = 12;
    mpfr_t v[kCount];
    explicit MpfrBundle(mpfr_prec_t prec) {
        for (auto& x : v) mpfr_init2(x, prec);
    }
    ~MpfrBundle() {
        for (auto& x : v) mpfr_clear(x);
    }
    MpfrBundle(const MpfrBundle&) = delete;
    MpfrBundle& operator=(const MpfrBundle&) = delete;
};

}  // namespace

std::complex<double> hyp2f1_terminating(int n, std::complex<double> b, double c, double z) {
    if (n < 0) {
        throw std::domain_error("hyp2f1_terminating degree must be nonnegative");
    }
    if (!std::isfinite(c) || !std::isfinite(z) || !std::isfinite(b.real()) || !std::isfinite(b.imag())) {
        throw std::domain_error("hyp2f1_terminating arguments must be finite");
    }
    if (c <= 0.0 && c == std::floor(c)) {
        throw std::domain_error("hyp2f1_terminating: lower parameter is a non-positive integer (series pole)");
    }
    if (n == 0) {
        return {1.0, 0.0};
    }

    // The alternating partial sums lose roughly n*log2(4) bits to cancellation
    // in the worst case; scale the working precision with the degree.
    const mpfr_prec_t prec = 128 + 4 * static_cast<mpfr_prec_t>(n);

    MpfrBundle w(prec);
    auto& term_re = w.v[0];
    auto& term_im = w.v[1];
    auto& sum_re = w.v[2];
    auto& sum_im = w.v[3];
    auto& fac = w.v[4];
    auto& den = w.v[5];
    auto& pr = w.v[6];
    auto& bi = w.v[7];
    auto& t1 = w.v[8];
    auto& t2 = w.v[9];
    auto& new_re = w.v[10];
    auto& new_im = w.v[11];

    mpfr_set_si(term_re, 1, R);
    mpfr_set_si(term_im, 0, R);
    mpfr_set_si(sum_re, 1, R);
    mpfr_set_si(sum_im, 0, R);
    mpfr_set_d(bi, b.imag(), R);

    for (int m = 0; m < n; ++m) {
        // real factor (m-n) z / ((c+m)(m+1))
        mpfr_set_d(fac, z, R);
        mpfr_mul_si(fac, fac, m - n, R);
        mpfr_set_d(den, c, R);
        mpfr_add_si(den, den, m, R);
        mpfr_mul_si(den, den, m + 1, R);
        mpfr_div(fac, fac, den, R);
        mpfr_mul(term_re, term_re, fac, R);
        mpfr_mul(term_im, term_im, fac, R);

        // complex factor (b + m)
        mpfr_set_d(pr, b.real(), R);
        mpfr_add_si(pr, pr, m, R);
        mpfr_mul(t1, term_re, pr, R);
        mpfr_mul(t2, term_im, bi, R);
        mpfr_sub(new_re, t1, t2, R);
        mpfr_mul(t1, term_re, bi, R);
        mpfr_mul(t2, term_im, pr, R);
        mpfr_add(new_im, t1, t2, R);
        mpfr_set(term_re, new_re, R);
        mpfr_set(term_im, new_im, R);

        mpfr_add(sum_re, sum_re, term_re, R);
        mpfr_add(sum_im, sum_im, term_im, R);
    }

    return {mpfr_get_d(sum_re, R), mpfr_get_d(sum_im, R)};
}

double log_gamma_ratio(int n, double c) {
    if (n < 0 || !(c > 0.0) || !std::isfinite(c)) {
        throw std::domain_error("log_gamma_ratio requires n >= 0 and c > 0");
    }
    return std::lgamma(n + c) - std::lgamma(c) - std::lgamma(n + 1.0);
}

std::complex<double> pollaczek(const PollaczekArgs& args, ExponentMode mode) {
    if (args.n < 0 || !(args.idx > 0.0)) {
        throw std::domain_error("pollaczek requires n >= 0 and a positive representation index");
    }
    static const std::complex<double> i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
    const std::complex<double> b(args.idx - args.z.imag(), args.z.real());  // idx + i z
    const std::complex<double> f = hyp2f1_terminating(args.n, b, 2.0 * args.idx, 2.0);
    const double p = (mode == ExponentMode::paper) ? args.n / 2.0 : 0.5;
    const double prefactor = std::exp(p * log_gamma_ratio(args.n, 2.0 * args.idx));
    return i_pow[args.n % 4] * prefactor * f;
}

}  // namespace qis
