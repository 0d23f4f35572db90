#include "qis/states.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <cfloat>
#include <cmath>
#include <stdexcept>

namespace qis {

namespace {

constexpr int kMaxAutoTruncation = 4096;
// Deformed ladder elements reach ~1e300 before overflowing, so the running
// prefix must stay near unit scale for the products to remain representable.
constexpr double kRescaleLimit = 1e4;

using Cplx = std::complex<double>;

bool finite(Cplx v) { return std::isfinite(v.real()) && std::isfinite(v.imag()); }

// Row n of (alpha X- + beta X+) c = 2 eta c couples c_{n+1} through the
// lowering element and c_{n-1} through the raising element.
double upper_coeff(const ISParams& p, int n) {  // multiplies c_{n+1}
    return p.alpha * lower_element(p.spec, n + 1);
}

double lower_coeff(const ISParams& p, int n) {  // multiplies c_{n-1}
    return p.beta * raise_element(p.spec, n - 1);
}

void normalize_and_fix_phase(StateVector& s) {
    double peak = 0.0;
    for (const Cplx& c : s.coeffs) peak = std::max(peak, std::abs(c));
    if (peak == 0.0) return;
    double sum = 0.0;
    for (const Cplx& c : s.coeffs) sum += std::norm(c / peak);
    const double norm = peak * std::sqrt(sum);
    for (Cplx& c : s.coeffs) c /= norm;

    for (const Cplx& c : s.coeffs) {
        if (std::abs(c) > 1e-14) {
            const Cplx phase = c / std::abs(c);
            for (Cplx& v : s.coeffs) v /= phase;
            break;
        }
    }
    s.tail = std::norm(s.coeffs.back());
    const double head = std::norm(s.coeffs.front());
    s.norm_sq_inverse = head > 0.0 ? 1.0 / head : std::numeric_limits<double>::infinity();
}

// Single forward pass at fixed length.  Homogeneous, so the running prefix is
// rescaled whenever it threatens overflow; returns false when a ladder
// element itself is no longer representable.
bool run_recurrence(const ISParams& p, int length, std::vector<Cplx>& c) {
    c.assign(length, Cplx(0.0, 0.0));
    c[0] = 1.0;
    const Cplx two_eta = 2.0 * p.eta;
    for (int n = 0; n + 1 < length; ++n) {
        const double up = upper_coeff(p, n);
        const double down = (n >= 1) ? lower_coeff(p, n) : 0.0;
        if (!std::isfinite(up) || !std::isfinite(down) || up == 0.0) {
            c.resize(n + 1);
            return false;
        }
        const Cplx prev = (n >= 1) ? c[n - 1] : Cplx(0.0, 0.0);
        c[n + 1] = (two_eta * c[n] - down * prev) / up;
        if (!finite(c[n + 1])) {
            c.resize(n + 1);
            return false;
        }
        const double mag = std::max(std::abs(c[n + 1].real()), std::abs(c[n + 1].imag()));
        if (mag > kRescaleLimit) {
            const double inv = 1.0 / mag;
            for (int m = 0; m <= n + 1; ++m) c[m] *= inv;
        }
    }
    return true;
}

}  // namespace

ISParams ISParams::make(double lambda, Cplx eta, RepresentationSpec spec, double tail_tol) {
    ISParams p;
    p.lambda = lambda;
    p.eta = eta;
    p.spec = spec;
    p.alpha = 1.0 + lambda;
    p.beta = 1.0 - lambda;
    p.tail_tol = tail_tol;
    p.validate();
    return p;
}

void ISParams::validate() const {
    spec.validate();
    if (!std::isfinite(lambda) || lambda <= 0.0) {
        throw std::domain_error("lambda must be a positive real");
    }
    if (!finite(eta)) {
        throw std::domain_error("eta must be finite");
    }
    if (alpha != 1.0 + lambda || beta != 1.0 - lambda) {
        throw std::domain_error("alpha/beta are fixed to 1+lambda and 1-lambda");
    }
    if (!(tail_tol > 0.0)) {
        throw std::domain_error("tail tolerance must be positive");
    }
}

StateVector solve_recurrence(const ISParams& params) {
    params.validate();

    StateVector state;
    state.basis = params.spec;

    if (params.spec.branch == Branch::spin) {
        std::vector<Cplx> c;
        state.converged = run_recurrence(params, params.spec.dimension(), c);
        state.coeffs = std::move(c);
        normalize_and_fix_phase(state);
        return state;
    }

    int length = params.spec.truncation;
    while (true) {
        ISParams attempt = params;
        attempt.spec.truncation = length;
        std::vector<Cplx> c;
        const bool intact = run_recurrence(attempt, length, c);
        state.basis = attempt.spec;
        state.basis.truncation = static_cast<int>(c.size());
        state.coeffs = std::move(c);
        normalize_and_fix_phase(state);
        state.converged = intact && state.tail < params.tail_tol;
        if (state.converged || !intact || length >= kMaxAutoTruncation) {
            return state;
        }
        length = std::min(2 * length, kMaxAutoTruncation);
    }
}

StateVector solve_closed_form(const ISParams& params, ExponentMode mode) {
    params.validate();
    const RepresentationSpec& spec = params.spec;
    const DeformationParameter q(spec.q);
    const int dim = spec.dimension();
    const bool discrete = spec.branch == Branch::discrete_series;
    const double two_idx = 2.0 * spec.index;

    std::vector<double> log_weight(dim);
    std::vector<Cplx> poll(dim);
    for (int n = 0; n < dim; ++n) {
        const double alpha_q = params.alpha * std::sqrt(q_bracket_ratio(n + 1.0, q));
        const double second = discrete ? (n + two_idx - 1.0) : (two_idx - n + 1.0);
        const double beta_q =
            params.beta * std::sqrt(q_bracket_ratio(n, q)) * q_bracket_ratio(second, q);
        const double product = alpha_q * beta_q;
        if (!(product > 0.0)) {
            throw std::domain_error(
                "closed form needs alpha_q beta_q > 0 (lambda < 1); use solve_recurrence");
        }
        const Cplx z = params.eta / std::sqrt(product);
        log_weight[n] = 0.5 * n * (std::log(beta_q) - std::log(alpha_q));
        poll[n] = pollaczek({n, z, spec.index}, mode);
    }

    // Fold the geometric weights into a common scale so nothing overflows;
    // normalization removes the scale again.
    double top = -std::numeric_limits<double>::infinity();
    for (int n = 0; n < dim; ++n) {
        const double mag = std::abs(poll[n]);
        if (mag > 0.0) top = std::max(top, log_weight[n] + std::log(mag));
    }
    if (!std::isfinite(top)) top = 0.0;

    StateVector state;
    state.basis = spec;
    state.coeffs.resize(dim);
    for (int n = 0; n < dim; ++n) {
        state.coeffs[n] = std::exp(log_weight[n] - top) * poll[n];
    }
    normalize_and_fix_phase(state);
    state.converged = spec.branch == Branch::spin || state.tail < params.tail_tol;
    return state;
}

Eigen::MatrixXd is_operator_matrix(const ISParams& params) {
    params.validate();
    const int dim = params.spec.dimension();
    Eigen::MatrixXd a = Eigen::MatrixXd::Zero(dim, dim);
    for (int n = 0; n + 1 < dim; ++n) {
        a(n, n + 1) = upper_coeff(params, n);
        a(n + 1, n) = lower_coeff(params, n + 1);
    }
    return a;
}

std::vector<EigenPair> solve_by_diagonalization(const ISParams& params) {
    params.validate();
    const int dim = params.spec.dimension();
    if (dim > 5000) {
        throw std::domain_error("diagonalization capped at dimension 5000");
    }

    std::vector<double> up(dim - 1), down(dim - 1);
    for (int n = 0; n + 1 < dim; ++n) {
        up[n] = upper_coeff(params, n);
        down[n] = lower_coeff(params, n + 1);
        if (!std::isfinite(up[n]) || !std::isfinite(down[n])) {
            throw std::domain_error("ladder element overflow: shrink the truncation or move q toward 1");
        }
    }

    // A diagonal similarity with d_{n+1}/d_n = sqrt(up_n/|down_n|) turns the
    // tridiagonal matrix into a symmetric one when all subdiagonal entries
    // share a sign (skew-symmetric when they are negative, which an i^n
    // rescaling makes symmetric again).  The symmetric solve is both far
    // better conditioned and far faster than unbalanced QR on the non-normal
    // original, so it is used whenever the sign structure allows.
    bool all_down_positive = true, all_down_negative = true;
    for (int n = 0; n + 1 < dim; ++n) {
        if (!(up[n] > 0.0)) all_down_positive = all_down_negative = false;
        if (!(down[n] > 0.0)) all_down_positive = false;
        if (!(down[n] < 0.0)) all_down_negative = false;
    }

    std::vector<EigenPair> pairs;
    pairs.reserve(dim);

    auto push_pair = [&](const Cplx& mu, std::vector<Cplx> coeffs) {
        StateVector s;
        s.basis = params.spec;
        s.coeffs = std::move(coeffs);
        normalize_and_fix_phase(s);
        s.converged = params.spec.branch == Branch::spin || s.tail < params.tail_tol;
        pairs.push_back({mu / 2.0, std::move(s)});
    };

    if (all_down_positive || all_down_negative) {
        std::vector<double> log_scale(dim, 0.0);
        Eigen::VectorXd sub(dim - 1);
        for (int n = 0; n + 1 < dim; ++n) {
            log_scale[n + 1] = log_scale[n] + 0.5 * std::log(up[n] / std::abs(down[n]));
            sub[n] = std::sqrt(up[n] * std::abs(down[n]));
        }
        Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es;
        es.computeFromTridiagonal(Eigen::VectorXd::Zero(dim), sub, Eigen::ComputeEigenvectors);
        if (es.info() != Eigen::Success) {
            throw std::runtime_error("tridiagonal eigensolver failed");
        }
        static const Cplx i_pow[4] = {{1, 0}, {0, 1}, {-1, 0}, {0, -1}};
        for (int i = 0; i < dim; ++i) {
            // Each eigenvector is defined up to scale, so it is rebuilt in log
            // space around its own peak; components more than ~300 orders of
            // magnitude below the peak underflow to zero, components under the
            // solver's noise floor are dropped.
            double peak_log = -std::numeric_limits<double>::infinity();
            for (int n = 0; n < dim; ++n) {
                const double u = es.eigenvectors()(n, i);
                if (std::abs(u) > 1e-13) {
                    peak_log = std::max(peak_log, -log_scale[n] + std::log(std::abs(u)));
                }
            }
            std::vector<Cplx> v(dim, Cplx(0, 0));
            for (int n = 0; n < dim; ++n) {
                const double u = es.eigenvectors()(n, i);
                if (std::abs(u) <= 1e-13) continue;
                const double mag =
                    std::exp(-log_scale[n] + std::log(std::abs(u)) - peak_log);
                const Cplx phase = all_down_positive ? Cplx(1, 0) : i_pow[n % 4];
                v[n] = std::copysign(mag, u) * phase;
            }
            const Cplx mu = all_down_positive ? Cplx(es.eigenvalues()[i], 0.0)
                                              : Cplx(0.0, es.eigenvalues()[i]);
            push_pair(mu, std::move(v));
        }
    } else {
        Eigen::EigenSolver<Eigen::MatrixXd> es(is_operator_matrix(params));
        if (es.info() != Eigen::Success) {
            throw std::runtime_error("dense eigensolver failed (matrix is likely ill-conditioned)");
        }
        for (int i = 0; i < dim; ++i) {
            std::vector<Cplx> v(dim);
            for (int n = 0; n < dim; ++n) v[n] = es.eigenvectors()(n, i);
            push_pair(es.eigenvalues()[i], std::move(v));
        }
    }

    std::sort(pairs.begin(), pairs.end(), [](const EigenPair& a, const EigenPair& b) {
        if (a.eta.real() != b.eta.real()) return a.eta.real() < b.eta.real();
        return a.eta.imag() < b.eta.imag();
    });
    return pairs;
}

namespace {

// ||A psi - 2 eta psi|| relative to the size of the terms entering each row,
// so the measure stays meaningful for eta = 0 and for huge deformed ladders.
double eigen_residual_against(const RepresentationSpec& spec, const ISParams& p,
                              const std::vector<Cplx>& c) {
    const int dim = static_cast<int>(c.size());
    const Cplx two_eta = 2.0 * p.eta;
    // extended accumulators: deformed row scales can square past double range
    long double num = 0.0L, den = 0.0L;
    for (int n = 0; n < dim; ++n) {
        Cplx row(0.0, 0.0);
        double row_scale = std::abs(two_eta) * std::abs(c[n]);
        if (n + 1 < dim) {
            const double el = p.alpha * lower_element(spec, n + 1);
            if (!std::isfinite(el)) return 1.0;  // past the representable regime
            row += el * c[n + 1];
            row_scale += std::abs(el) * std::abs(c[n + 1]);
        }
        if (n >= 1) {
            const double el = p.beta * raise_element(spec, n - 1);
            if (!std::isfinite(el)) return 1.0;
            row += el * c[n - 1];
            row_scale += std::abs(el) * std::abs(c[n - 1]);
        }
        row -= two_eta * c[n];
        if (!std::isfinite(row_scale)) return 1.0;
        num += static_cast<long double>(row.real()) * row.real() +
               static_cast<long double>(row.imag()) * row.imag();
        den += static_cast<long double>(row_scale) * row_scale;
    }
    if (den <= 0.0L) return 0.0;
    return static_cast<double>(std::sqrt(num / den));
}

}  // namespace

VerificationReport verify(const StateVector& state, const ISParams& params) {
    const RepresentationSpec& basis = state.basis;
    const int dim = static_cast<int>(state.coeffs.size());
    if (dim == 0) {
        throw std::domain_error("verify requires a non-empty state");
    }

    VerificationReport rep;
    rep.eigen_residual = eigen_residual_against(basis, params, state.coeffs);

    const bool dyson_deformed = basis.realization == Realization::dyson_paper && basis.q != 1.0;
    RepresentationSpec gauge = basis;
    if (dyson_deformed) {
        gauge.realization = Realization::symmetric;
        rep.eigen_residual_adjoint = eigen_residual_against(gauge, params, state.coeffs);
    }
    rep.uncertainty_applicable = !dyson_deformed;

    // X1 = (X+ + X-)/2, X2 = (X+ - X-)/(2i) in the adjoint gauge.
    std::vector<Cplx> x1(dim, Cplx(0, 0)), x2(dim, Cplx(0, 0));
    for (int n = 0; n < dim; ++n) {
        Cplx from_lower(0, 0), from_raise(0, 0);
        if (n + 1 < dim) from_lower = lower_element(gauge, n + 1) * state.coeffs[n + 1];
        if (n >= 1) from_raise = raise_element(gauge, n - 1) * state.coeffs[n - 1];
        x1[n] = 0.5 * (from_raise + from_lower);
        x2[n] = (from_raise - from_lower) / Cplx(0.0, 2.0);
    }

    auto dot = [&](const std::vector<Cplx>& a, const std::vector<Cplx>& b) {
        Cplx s(0, 0);
        for (int n = 0; n < dim; ++n) s += std::conj(a[n]) * b[n];
        return s;
    };

    const double e1 = dot(state.coeffs, x1).real();
    const double e2 = dot(state.coeffs, x2).real();
    double v1 = 0.0, v2 = 0.0;
    for (int n = 0; n < dim; ++n) {
        v1 += std::norm(x1[n] - e1 * state.coeffs[n]);
        v2 += std::norm(x2[n] - e2 * state.coeffs[n]);
    }
    const Cplx comm = dot(x1, x2) - dot(x2, x1);

    rep.var_x1 = v1;
    rep.var_x2 = v2;
    rep.commutator_expectation = comm;
    const double bound = 0.5 * std::abs(comm);
    rep.saturation_gap = std::abs(v1 * v2 - bound * bound);
    rep.squeezed_x1 = v1 < bound;
    rep.squeezed_x2 = v2 < bound;
    rep.lambda_ratio_check =
        v2 > 0.0 ? std::abs(v1 / v2 - params.lambda * params.lambda)
                 : std::numeric_limits<double>::infinity();
    return rep;
}

double closed_form_ratio_deviation(const ISParams& params, ExponentMode mode, int max_n) {
    // Coefficient ratios do not depend on the truncation, so both routes are
    // evaluated on just the compared prefix; this keeps the normalized head
    // well above the underflow floor whatever the mode does to the tail.
    ISParams p = params;
    if (p.spec.branch == Branch::discrete_series) {
        p.spec.truncation = max_n + 2;
    }
    const StateVector rec = solve_recurrence(p);
    const StateVector closed = solve_closed_form(p, mode);

    const int upto = std::min({max_n, static_cast<int>(rec.coeffs.size()) - 1,
                               static_cast<int>(closed.coeffs.size()) - 1});
    double peak_rec = 0.0, peak_closed = 0.0;
    for (int n = 0; n <= upto; ++n) {
        peak_rec = std::max(peak_rec, std::abs(rec.coeffs[n]));
        peak_closed = std::max(peak_closed, std::abs(closed.coeffs[n]));
    }
    const double floor_rec = 1e-12 * peak_rec;
    const double floor_closed = 1e-12 * peak_closed;

    double worst = 0.0;
    for (int n = 0; n + 1 <= upto; ++n) {
        if (std::abs(rec.coeffs[n]) <= floor_rec || std::abs(closed.coeffs[n]) <= floor_closed ||
            std::abs(rec.coeffs[n + 1]) <= floor_rec) {
            continue;
        }
        const Cplx r_rec = rec.coeffs[n + 1] / rec.coeffs[n];
        const Cplx r_closed = closed.coeffs[n + 1] / closed.coeffs[n];
        worst = std::max(worst, std::abs(r_closed - r_rec) / std::abs(r_rec));
    }
    return worst;
}

}  // namespace qis
