#include "qis/serialize.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

namespace qis::io {

using nlohmann::json;

std::string format_double(double v) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

namespace {

json complex_to_json(std::complex<double> z) { return json::array({z.real(), z.imag()}); }

std::complex<double> complex_from_json(const json& j) {
    if (!j.is_array() || j.size() != 2) {
        throw std::domain_error("expected [re, im] pair");
    }
    return {j[0].get<double>(), j[1].get<double>()};
}

const char* algebra_name(Branch b) { return b == Branch::discrete_series ? "su11" : "su2"; }

double finite_or_null_guard(const json& j, const char* field) {
    if (!j.contains(field) || j[field].is_null()) {
        return std::numeric_limits<double>::quiet_NaN();
    }
    return j[field].get<double>();
}

}  // namespace

json state_to_json(const StateVector& state, const ISParams& params, const StateProvenance& origin) {
    json j;
    j["schema"] = "qis.state.v1";
    j["algebra"] = algebra_name(state.basis.branch);
    j["index"] = state.basis.index;
    j["q"] = state.basis.q;
    j["realization"] = to_string(state.basis.realization);
    j["truncation"] = state.basis.truncation;
    j["lambda"] = params.lambda;
    j["eta"] = complex_to_json(params.eta);
    j["tail_tol"] = params.tail_tol;
    j["method"] = origin.method;
    if (origin.exponent_mode) {
        j["exponent_mode"] = *origin.exponent_mode == ExponentMode::half ? "half" : "paper";
    }
    if (origin.eta_requested) {
        j["eta_requested"] = complex_to_json(*origin.eta_requested);
    }
    if (!origin.diagnostics.is_null() && !origin.diagnostics.empty()) {
        j["diagnostics"] = origin.diagnostics;
    }
    j["converged"] = state.converged;
    j["tail"] = state.tail;
    j["norm_sq_inverse"] = std::isfinite(state.norm_sq_inverse) ? json(state.norm_sq_inverse) : json();
    json coeffs = json::array();
    for (const auto& c : state.coeffs) coeffs.push_back(complex_to_json(c));
    j["coeffs"] = std::move(coeffs);
    return j;
}

LoadedState state_from_json(const json& j) {
    if (!j.is_object() || j.value("schema", "") != "qis.state.v1") {
        throw std::domain_error("not a qis.state.v1 document");
    }
    RepresentationSpec spec;
    const std::string algebra = j.at("algebra").get<std::string>();
    if (algebra == "su11") {
        spec.branch = Branch::discrete_series;
    } else if (algebra == "su2") {
        spec.branch = Branch::spin;
    } else {
        throw std::domain_error("unknown algebra: " + algebra);
    }
    spec.index = j.at("index").get<double>();
    spec.q = j.at("q").get<double>();
    spec.realization = realization_from_string(j.at("realization").get<std::string>());
    spec.truncation = j.at("truncation").get<int>();

    ISParams params = ISParams::make(j.at("lambda").get<double>(), complex_from_json(j.at("eta")),
                                     spec, j.at("tail_tol").get<double>());

    StateVector state;
    state.basis = spec;
    state.converged = j.at("converged").get<bool>();
    state.tail = j.at("tail").get<double>();
    state.norm_sq_inverse = finite_or_null_guard(j, "norm_sq_inverse");
    for (const auto& pair : j.at("coeffs")) {
        state.coeffs.push_back(complex_from_json(pair));
    }
    if (state.coeffs.empty()) {
        throw std::domain_error("state file carries no coefficients");
    }
    return {std::move(state), params};
}

std::string state_to_csv(const StateVector& state) {
    std::string out = "n,re,im,abs2\n";
    for (size_t n = 0; n < state.coeffs.size(); ++n) {
        out += std::to_string(n) + ',' + format_double(state.coeffs[n].real()) + ',' +
               format_double(state.coeffs[n].imag()) + ',' +
               format_double(std::norm(state.coeffs[n])) + '\n';
    }
    return out;
}

json report_to_json(const VerificationReport& report, const StateVector& state,
                    const ISParams& params) {
    json j;
    j["schema"] = "qis.report.v1";
    j["eigen_residual"] = report.eigen_residual;
    j["eigen_residual_adjoint"] =
        report.eigen_residual_adjoint ? json(*report.eigen_residual_adjoint) : json();
    j["uncertainty_applicable"] = report.uncertainty_applicable;
    j["var_x1"] = report.var_x1;
    j["var_x2"] = report.var_x2;
    j["commutator_expectation"] = complex_to_json(report.commutator_expectation);
    j["saturation_gap"] = report.saturation_gap;
    j["squeezed_x1"] = report.squeezed_x1;
    j["squeezed_x2"] = report.squeezed_x2;
    j["lambda_ratio_check"] =
        std::isfinite(report.lambda_ratio_check) ? json(report.lambda_ratio_check) : json();
    j["state"] = {{"algebra", algebra_name(state.basis.branch)},
                  {"index", state.basis.index},
                  {"q", state.basis.q},
                  {"realization", to_string(state.basis.realization)},
                  {"truncation", state.basis.truncation},
                  {"lambda", params.lambda},
                  {"eta", complex_to_json(params.eta)},
                  {"tail", state.tail},
                  {"converged", state.converged}};
    return j;
}

json spectrum_to_json(const std::vector<EigenPair>& pairs, const ISParams& params) {
    json j;
    j["schema"] = "qis.spectrum.v1";
    j["algebra"] = algebra_name(params.spec.branch);
    j["index"] = params.spec.index;
    j["q"] = params.spec.q;
    j["realization"] = to_string(params.spec.realization);
    j["lambda"] = params.lambda;
    j["count"] = pairs.size();
    json rows = json::array();
    for (size_t i = 0; i < pairs.size(); ++i) {
        rows.push_back({{"i", i},
                        {"eta", complex_to_json(pairs[i].eta)},
                        {"tail", pairs[i].state.tail},
                        {"converged", pairs[i].state.converged}});
    }
    j["eigenvalues"] = std::move(rows);
    return j;
}

std::string spectrum_to_csv(const std::vector<EigenPair>& pairs) {
    std::string out = "i,eta_re,eta_im,tail,converged\n";
    for (size_t i = 0; i < pairs.size(); ++i) {
        out += std::to_string(i) + ',' + format_double(pairs[i].eta.real()) + ',' +
               format_double(pairs[i].eta.imag()) + ',' + format_double(pairs[i].state.tail) +
               ',' + (pairs[i].state.converged ? "1" : "0") + '\n';
    }
    return out;
}

json matrix_to_json(const OperatorMatrix& m) {
    json j;
    j["schema"] = "qis.matrix.v1";
    j["rows"] = m.entries.rows();
    j["cols"] = m.entries.cols();
    j["basis_offset"] = m.basis_offset;
    j["role"] = m.role == RoleTag::raising ? "raising"
                : m.role == RoleTag::lowering ? "lowering"
                                              : "diagonal";
    json entries = json::array();
    for (Eigen::Index r = 0; r < m.entries.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.entries.cols(); ++c) {
            entries.push_back(complex_to_json(m.entries(r, c)));
        }
    }
    j["entries"] = std::move(entries);
    return j;
}

std::string matrix_to_csv(const OperatorMatrix& m) {
    std::string out = "row,col,re,im\n";
    for (Eigen::Index r = 0; r < m.entries.rows(); ++r) {
        for (Eigen::Index c = 0; c < m.entries.cols(); ++c) {
            out += std::to_string(r) + ',' + std::to_string(c) + ',' +
                   format_double(m.entries(r, c).real()) + ',' +
                   format_double(m.entries(r, c).imag()) + '\n';
        }
    }
    return out;
}

namespace {

void flatten(const json& j, const std::string& prefix, std::string& out) {
    if (j.is_object()) {
        for (auto it = j.begin(); it != j.end(); ++it) {
            flatten(it.value(), prefix.empty() ? it.key() : prefix + '.' + it.key(), out);
        }
    } else if (j.is_array()) {
        for (size_t i = 0; i < j.size(); ++i) {
            flatten(j[i], prefix + '[' + std::to_string(i) + ']', out);
        }
    } else {
        out += prefix + ',';
        if (j.is_number_float()) {
            out += format_double(j.get<double>());
        } else {
            out += j.dump();
        }
        out += '\n';
    }
}

}  // namespace

std::string flat_json_to_csv(const json& j) {
    std::string out = "key,value\n";
    flatten(j, "", out);
    return out;
}

}  // namespace qis::io
