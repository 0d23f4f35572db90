#include "qis/repr.hpp"

#include <cmath>
#include <stdexcept>

namespace qis {

int RepresentationSpec::dimension() const {
    if (branch == Branch::spin) {
        return static_cast<int>(std::lround(2.0 * index)) + 1;
    }
    return truncation;
}

void RepresentationSpec::validate() const {
    if (!std::isfinite(index)) {
        throw std::domain_error("representation index must be finite");
    }
    if (branch == Branch::discrete_series) {
        if (index <= 0.0) {
            throw std::domain_error("Bargmann index k must be positive");
        }
        if (truncation < 2) {
            throw std::domain_error("discrete-series truncation must be at least 2");
        }
    } else {
        const double twoj = 2.0 * index;
        if (index < 0.0 || std::abs(twoj - std::lround(twoj)) > 1e-9) {
            throw std::domain_error("spin j must be a nonnegative half-integer");
        }
    }
    DeformationParameter check(q);  // validates q > 0, finite
    (void)check;
}

const char* to_string(Branch b) {
    return b == Branch::discrete_series ? "discrete_series" : "spin";
}

const char* to_string(Realization r) {
    switch (r) {
        case Realization::undeformed: return "undeformed";
        case Realization::dyson_paper: return "dyson_paper";
        default: return "symmetric";
    }
}

Branch branch_from_string(const std::string& s) {
    if (s == "discrete_series") return Branch::discrete_series;
    if (s == "spin") return Branch::spin;
    throw std::domain_error("unknown branch: " + s);
}

Realization realization_from_string(const std::string& s) {
    if (s == "undeformed") return Realization::undeformed;
    if (s == "dyson_paper") return Realization::dyson_paper;
    if (s == "symmetric") return Realization::symmetric;
    throw std::domain_error("unknown realization: " + s);
}

namespace {

// Radicand pairs (a, b) for the ladder actions.  Raising out of state n
// multiplies sqrt(a b); the q-deformation replaces [a] and optionally [b].
struct Radicands {
    double a;
    double b;
};

Radicands raise_radicands(const RepresentationSpec& spec, int n) {
    if (spec.branch == Branch::discrete_series) {
        return {static_cast<double>(n + 1), n + 2.0 * spec.index};
    }
    return {static_cast<double>(n + 1), 2.0 * spec.index - n};
}

Radicands lower_radicands(const RepresentationSpec& spec, int n) {
    if (spec.branch == Branch::discrete_series) {
        return {static_cast<double>(n), n + 2.0 * spec.index - 1.0};
    }
    return {static_cast<double>(n), 2.0 * spec.index - n + 1.0};
}

}  // namespace

double diag_element(const RepresentationSpec& spec, int n) {
    if (spec.branch == Branch::discrete_series) {
        return n + spec.index;
    }
    return n - spec.index;
}

double raise_element(const RepresentationSpec& spec, int n) {
    const auto [a, b] = raise_radicands(spec, n);
    const DeformationParameter q(spec.q);
    switch (spec.realization) {
        case Realization::undeformed:
            return std::sqrt(a * b);
        case Realization::dyson_paper:
            // ratio factor evaluated through its analytic limit where the
            // integer factor vanishes (spin top state), so the product is 0
            return std::sqrt(q_bracket(a, q) * b) * q_bracket_ratio(b, q);
        default:
            return std::sqrt(q_bracket(a, q) * q_bracket(b, q));
    }
}

double lower_element(const RepresentationSpec& spec, int n) {
    const auto [a, b] = lower_radicands(spec, n);
    const DeformationParameter q(spec.q);
    switch (spec.realization) {
        case Realization::undeformed:
            return std::sqrt(a * b);
        case Realization::dyson_paper:
            return std::sqrt(q_bracket(a, q) * b);
        default:
            return std::sqrt(q_bracket(a, q) * q_bracket(b, q));
    }
}

namespace {

OperatorTriple assemble(const RepresentationSpec& spec) {
    spec.validate();
    const int dim = spec.dimension();

    OperatorTriple t;
    t.spec = spec;
    t.diag.role = RoleTag::diagonal;
    t.raise.role = RoleTag::raising;
    t.lower.role = RoleTag::lowering;
    t.diag.entries = Eigen::MatrixXcd::Zero(dim, dim);
    t.raise.entries = Eigen::MatrixXcd::Zero(dim, dim);
    t.lower.entries = Eigen::MatrixXcd::Zero(dim, dim);

    for (int n = 0; n < dim; ++n) {
        t.diag.entries(n, n) = diag_element(spec, n);
    }
    // raising element out of the top state is dropped (projector truncation)
    for (int n = 0; n + 1 < dim; ++n) {
        const double up = raise_element(spec, n);
        const double down = lower_element(spec, n + 1);
        if (!std::isfinite(up) || !std::isfinite(down)) {
            throw std::domain_error("ladder element overflow: shrink the truncation or move q toward 1");
        }
        t.raise.entries(n + 1, n) = up;
        t.lower.entries(n, n + 1) = down;
    }
    return t;
}

}  // namespace

OperatorTriple build_su11(const RepresentationSpec& spec) {
    if (spec.branch != Branch::discrete_series || spec.realization != Realization::undeformed) {
        throw std::domain_error("build_su11 expects the undeformed discrete series");
    }
    return assemble(spec);
}

OperatorTriple build_su2(const RepresentationSpec& spec) {
    if (spec.branch != Branch::spin || spec.realization != Realization::undeformed) {
        throw std::domain_error("build_su2 expects the undeformed spin branch");
    }
    return assemble(spec);
}

OperatorTriple build_q_deformed(const RepresentationSpec& spec) {
    if (spec.realization == Realization::undeformed) {
        throw std::domain_error("build_q_deformed expects the dyson_paper or symmetric realization");
    }
    return assemble(spec);
}

OperatorTriple build_triple(const RepresentationSpec& spec) {
    return assemble(spec);
}

namespace {

double interior_max_norm(const Eigen::MatrixXcd& m, int interior) {
    double worst = 0.0;
    for (int i = 0; i < interior; ++i) {
        for (int j = 0; j < interior; ++j) {
            worst = std::max(worst, std::abs(m(i, j)));
        }
    }
    return worst;
}

}  // namespace

AlgebraReport commutator_report(const OperatorTriple& triple) {
    const auto& spec = triple.spec;
    const int dim = spec.dimension();
    const int interior = (spec.branch == Branch::discrete_series) ? dim - 1 : dim;
    const double sign = (spec.branch == Branch::discrete_series) ? -1.0 : 1.0;
    const DeformationParameter q(spec.q);

    const Eigen::MatrixXcd& d = triple.diag.entries;
    const Eigen::MatrixXcd& r = triple.raise.entries;
    const Eigen::MatrixXcd& l = triple.lower.entries;

    Eigen::MatrixXcd target_bracket2 = Eigen::MatrixXcd::Zero(dim, dim);
    Eigen::MatrixXcd target_2bracket = Eigen::MatrixXcd::Zero(dim, dim);
    for (int n = 0; n < dim; ++n) {
        const double x0 = d(n, n).real();
        target_bracket2(n, n) = sign * q_bracket(2.0 * x0, q);
        target_2bracket(n, n) = sign * 2.0 * q_bracket(x0, q);
    }

    const Eigen::MatrixXcd ladder = r * l - l * r;

    AlgebraReport rep;
    auto rel = [&](const Eigen::MatrixXcd& lhs, const Eigen::MatrixXcd& rhs) {
        const double scale = std::max(1.0, interior_max_norm(rhs, interior));
        return interior_max_norm(lhs - rhs, interior) / scale;
    };
    rep.diag_raise = rel(d * r - r * d, r);
    rep.diag_lower = interior_max_norm(d * l - l * d + l, interior) /
                     std::max(1.0, interior_max_norm(l, interior));
    rep.ladder_bracket_2q0 = rel(ladder, target_bracket2);
    rep.ladder_2_bracket_q0 = rel(ladder, target_2bracket);
    return rep;
}

double hermiticity_report(const OperatorTriple& triple) {
    const Eigen::MatrixXcd diff = triple.raise.entries - triple.lower.entries.adjoint();
    return diff.cwiseAbs().maxCoeff();
}

double casimir_check(const OperatorTriple& triple) {
    const auto& spec = triple.spec;
    if (spec.q != 1.0 || spec.realization != Realization::undeformed) {
        throw std::domain_error("casimir_check is defined for the undeformed algebra only");
    }
    const int dim = spec.dimension();
    const Eigen::MatrixXcd& d = triple.diag.entries;
    const Eigen::MatrixXcd& r = triple.raise.entries;
    const Eigen::MatrixXcd& l = triple.lower.entries;
    const Eigen::MatrixXcd id = Eigen::MatrixXcd::Identity(dim, dim);

    if (spec.branch == Branch::spin) {
        const double j = spec.index;
        const Eigen::MatrixXcd c = d * (d + id) + l * r - j * (j + 1.0) * id;
        return c.cwiseAbs().maxCoeff();
    }
    const double k = spec.index;
    const Eigen::MatrixXcd c = d * (d - id) - r * l - k * (k - 1.0) * id;
    return interior_max_norm(c, dim - 1);
}

}  // namespace qis
