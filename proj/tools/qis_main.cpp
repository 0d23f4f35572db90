// Command-line front end: generate and verify intelligent states, list
// admissible spectra, sweep (lambda, q) grids and run algebra self-checks.
//
// Exit codes: 0 success, 2 usage error, 3 validation error,
//             4 convergence failure in --strict mode, 5 internal error.

#include <CLI11.hpp>
#include <json.hpp>

#include <complex>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include "qis/repr.hpp"
#include "qis/serialize.hpp"
#include "qis/states.hpp"

namespace fs = std::filesystem;
using nlohmann::json;

namespace {

struct ConvergenceError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

struct ProblemOpts {
    std::string algebra = "su11";
    double index = 1.0;
    bool index_set = false;
    double q = 1.0;
    double lambda = 0.5;
    double eta_re = 0.0;
    double eta_im = 0.0;
    int trunc = 512;
    double tail_tol = 1e-12;
    std::string realization = "symmetric";
    std::string exponent_mode = "auto";
    std::string method = "auto";
    std::string output;
    std::string format;
    bool strict = false;
};

void add_spec_flags(CLI::App* cmd, ProblemOpts& o) {
    cmd->add_option("--algebra", o.algebra, "Algebra branch: su11 or su2")
        ->check(CLI::IsMember({"su11", "su2"}));
    auto* k = cmd->add_option_function<double>(
        "--k", [&o](double v) { o.index = v; o.index_set = true; },
        "Bargmann index (su11)");
    auto* j = cmd->add_option_function<double>(
        "--j", [&o](double v) { o.index = v; o.index_set = true; },
        "Spin j (su2)");
    k->excludes(j);
    cmd->add_option("--q", o.q, "Deformation parameter (default 1)");
    cmd->add_option("--trunc", o.trunc, "Truncation size for the discrete series (default 512)");
    cmd->add_option("--tail-tol", o.tail_tol, "Tail tolerance on |c_last|^2 (default 1e-12)");
    cmd->add_option("--realization", o.realization,
                    "undeformed, dyson_paper or symmetric (default symmetric)")
        ->check(CLI::IsMember({"undeformed", "dyson_paper", "symmetric"}));
}

void add_output_flags(CLI::App* cmd, ProblemOpts& o, const std::string& default_format) {
    o.format = default_format;
    cmd->add_option("-o,--output", o.output, "Output path (QIS_OUTPUT_DIR prefixes relative names)");
    cmd->add_option("--format", o.format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
}

qis::RepresentationSpec make_spec(const ProblemOpts& o) {
    qis::RepresentationSpec spec;
    if (o.algebra == "su11") {
        spec.branch = qis::Branch::discrete_series;
        if (!o.index_set) throw std::domain_error("su11 requires --k");
    } else {
        spec.branch = qis::Branch::spin;
        if (!o.index_set) throw std::domain_error("su2 requires --j");
    }
    spec.index = o.index;
    spec.q = o.q;
    spec.truncation = o.trunc;
    spec.realization = qis::realization_from_string(o.realization);
    return spec;
}

qis::ExponentMode resolve_mode(const std::string& mode) {
    if (mode == "paper") return qis::ExponentMode::paper;
    if (mode == "half" || mode == "auto") return qis::ExponentMode::half;
    throw std::domain_error("exponent mode must be auto, half or paper");
}

fs::path resolve_output(const std::string& requested, const std::string& fallback) {
    fs::path p = requested.empty() ? fs::path(fallback) : fs::path(requested);
    if (p.is_relative()) {
        if (const char* dir = std::getenv("QIS_OUTPUT_DIR")) {
            p = fs::path(dir) / p;
        }
    }
    if (p.has_parent_path()) {
        fs::create_directories(p.parent_path());
    }
    return p;
}

void write_text(const fs::path& path, const std::string& body) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot open " + path.string() + " for writing");
    out << body;
}

void emit(const fs::path& path, const std::string& format, const json& doc,
          const std::string& csv) {
    write_text(path, format == "json" ? doc.dump(2) + "\n" : csv);
    std::cout << path.string() << "\n";
}

struct Grid {
    std::vector<double> values;
};

// start:stop:count inclusive, or a single number.
Grid parse_grid(const std::string& text) {
    Grid g;
    const auto first = text.find(':');
    if (first == std::string::npos) {
        g.values.push_back(std::stod(text));
        return g;
    }
    const auto second = text.find(':', first + 1);
    if (second == std::string::npos) {
        throw std::domain_error("grid must be start:stop:count, got " + text);
    }
    const double start = std::stod(text.substr(0, first));
    const double stop = std::stod(text.substr(first + 1, second - first - 1));
    const long count = std::stol(text.substr(second + 1));
    if (count < 1) throw std::domain_error("grid count must be >= 1");
    if (count == 1) {
        g.values.push_back(start);
        return g;
    }
    for (long i = 0; i < count; ++i) {
        g.values.push_back(start + (stop - start) * static_cast<double>(i) / (count - 1));
    }
    return g;
}

// Spin problems take eta from the admissible spectrum: nearest eigenvalue to
// the requested value, deterministic tie-break on the sorted list.
std::pair<qis::ISParams, qis::StateVector> spin_state_near(const qis::ISParams& requested) {
    const auto pairs = qis::solve_by_diagonalization(requested);
    size_t best = 0;
    double best_dist = std::numeric_limits<double>::infinity();
    for (size_t i = 0; i < pairs.size(); ++i) {
        const double d = std::abs(pairs[i].eta - requested.eta);
        if (d < best_dist) {
            best_dist = d;
            best = i;
        }
    }
    qis::ISParams used = qis::ISParams::make(requested.lambda, pairs[best].eta, requested.spec,
                                             requested.tail_tol);
    return {used, pairs[best].state};
}

int run_gen(const ProblemOpts& o) {
    const auto spec = make_spec(o);
    const std::complex<double> eta_req(o.eta_re, o.eta_im);
    qis::ISParams params = qis::ISParams::make(o.lambda, eta_req, spec, o.tail_tol);

    qis::StateVector state;
    qis::io::StateProvenance origin;
    std::string method = o.method;
    if (method == "auto") {
        method = spec.branch == qis::Branch::spin ? "diagonalization" : "recurrence";
    }

    if (method == "diagonalization") {
        if (spec.branch != qis::Branch::spin) {
            throw std::domain_error("--method diagonalization is the spin route; use spectrum for su11");
        }
        auto [used, s] = spin_state_near(params);
        origin.eta_requested = eta_req;
        params = used;
        state = std::move(s);
        origin.method = "diagonalization";
    } else if (method == "recurrence") {
        state = qis::solve_recurrence(params);
        origin.method = "recurrence";
    } else if (method == "closed") {
        const auto mode = resolve_mode(o.exponent_mode);
        state = qis::solve_closed_form(params, mode);
        origin.method = "closed_form";
        origin.exponent_mode = mode;
        origin.diagnostics["ratio_deviation_vs_recurrence"] = qis::closed_form_ratio_deviation(
            params, mode, std::min(30, spec.dimension() - 1));
    } else {
        throw std::domain_error("--method must be auto, recurrence, closed or diagonalization");
    }

    if (o.strict && !state.converged) {
        throw ConvergenceError("state did not converge at truncation " +
                               std::to_string(state.basis.truncation));
    }

    const auto path = resolve_output(o.output, "state." + o.format);
    emit(path, o.format, qis::io::state_to_json(state, params, origin),
         qis::io::state_to_csv(state));
    return 0;
}

int run_verify(const std::string& input, const ProblemOpts& o) {
    std::ifstream in(input);
    if (!in) throw std::domain_error("cannot read state file " + input);
    json doc = json::parse(in);
    auto loaded = qis::io::state_from_json(doc);
    if (o.strict && !loaded.state.converged) {
        throw ConvergenceError("input state is flagged non-converged");
    }
    const auto report = qis::verify(loaded.state, loaded.params);
    const json out = qis::io::report_to_json(report, loaded.state, loaded.params);
    const auto path = resolve_output(o.output, "report." + o.format);
    emit(path, o.format, out, qis::io::flat_json_to_csv(out));
    return 0;
}

int run_spectrum(const ProblemOpts& o) {
    const auto spec = make_spec(o);
    const qis::ISParams params =
        qis::ISParams::make(o.lambda, {o.eta_re, o.eta_im}, spec, o.tail_tol);
    const auto pairs = qis::solve_by_diagonalization(params);
    const auto path = resolve_output(o.output, "spectrum." + o.format);
    emit(path, o.format, qis::io::spectrum_to_json(pairs, params),
         qis::io::spectrum_to_csv(pairs));
    return 0;
}

int run_sweep(const ProblemOpts& o, const std::string& lambda_grid, const std::string& q_grid) {
    const Grid lambdas = parse_grid(lambda_grid);
    const Grid qs = parse_grid(q_grid);
    const std::complex<double> eta_req(o.eta_re, o.eta_im);

    json rows = json::array();
    std::string csv =
        "lambda,q,eta_re,eta_im,eigen_residual,var_x1,var_x2,saturation_gap,"
        "squeezed_x1,squeezed_x2,tail\n";

    for (double lambda : lambdas.values) {
        for (double qv : qs.values) {
            ProblemOpts point = o;
            point.q = qv;
            auto spec = make_spec(point);
            qis::ISParams params = qis::ISParams::make(lambda, eta_req, spec, o.tail_tol);
            qis::StateVector state;
            if (spec.branch == qis::Branch::spin) {
                auto [used, s] = spin_state_near(params);
                params = used;
                state = std::move(s);
            } else {
                state = qis::solve_recurrence(params);
            }
            if (o.strict && !state.converged) {
                throw ConvergenceError("sweep point lambda=" + std::to_string(lambda) +
                                       " q=" + std::to_string(qv) + " did not converge");
            }
            const auto rep = qis::verify(state, params);
            rows.push_back({{"lambda", lambda},
                            {"q", qv},
                            {"eta", json::array({params.eta.real(), params.eta.imag()})},
                            {"eigen_residual", rep.eigen_residual},
                            {"var_x1", rep.var_x1},
                            {"var_x2", rep.var_x2},
                            {"saturation_gap", rep.saturation_gap},
                            {"squeezed_x1", rep.squeezed_x1},
                            {"squeezed_x2", rep.squeezed_x2},
                            {"tail", state.tail}});
            using qis::io::format_double;
            csv += format_double(lambda) + ',' + format_double(qv) + ',' +
                   format_double(params.eta.real()) + ',' + format_double(params.eta.imag()) +
                   ',' + format_double(rep.eigen_residual) + ',' + format_double(rep.var_x1) +
                   ',' + format_double(rep.var_x2) + ',' + format_double(rep.saturation_gap) +
                   ',' + (rep.squeezed_x1 ? "1" : "0") + ',' + (rep.squeezed_x2 ? "1" : "0") +
                   ',' + format_double(state.tail) + '\n';
        }
    }

    json doc{{"schema", "qis.sweep.v1"}, {"rows", std::move(rows)}};
    const auto path = resolve_output(o.output, "sweep." + o.format);
    emit(path, o.format, doc, csv);
    return 0;
}

int run_algebra_check(const ProblemOpts& o, const std::string& dump_prefix) {
    auto spec = make_spec(o);
    const auto triple = qis::build_triple(spec);
    const auto comm = qis::commutator_report(triple);

    json doc;
    doc["schema"] = "qis.algebra.v1";
    doc["spec"] = {{"algebra", o.algebra},
                   {"index", spec.index},
                   {"q", spec.q},
                   {"realization", qis::to_string(spec.realization)},
                   {"dimension", spec.dimension()}};
    doc["commutator"] = {{"diag_raise", comm.diag_raise},
                         {"diag_lower", comm.diag_lower},
                         {"ladder_vs_bracket_2q0", comm.ladder_bracket_2q0},
                         {"ladder_vs_2_bracket_q0", comm.ladder_2_bracket_q0}};
    doc["hermiticity"] = qis::hermiticity_report(triple);
    if (spec.q == 1.0 && spec.realization == qis::Realization::undeformed) {
        doc["casimir"] = qis::casimir_check(triple);
    } else {
        doc["casimir"] = nullptr;
    }

    if (!dump_prefix.empty()) {
        const qis::OperatorMatrix* parts[3] = {&triple.diag, &triple.raise, &triple.lower};
        const char* names[3] = {"diag", "raise", "lower"};
        for (int i = 0; i < 3; ++i) {
            const auto path = resolve_output(dump_prefix + "." + names[i] + "." + o.format,
                                             dump_prefix);
            write_text(path, o.format == "json" ? qis::io::matrix_to_json(*parts[i]).dump(2) + "\n"
                                                : qis::io::matrix_to_csv(*parts[i]));
        }
    }

    const auto path = resolve_output(o.output, "algebra." + o.format);
    emit(path, o.format, doc, qis::io::flat_json_to_csv(doc));
    return 0;
}

int fail(const std::string& type, const std::string& message, int code) {
    json err{{"error", {{"type", type}, {"message", message}}}};
    std::cerr << err.dump() << "\n";
    return code;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Intelligent (uncertainty-saturating) states for su(1,1), su(2) and their q-deformations"};
    app.require_subcommand(1);

    ProblemOpts gen_o, verify_o, spectrum_o, sweep_o, algebra_o;
    std::string verify_input, sweep_lambda = "0.5", sweep_q = "1", dump_prefix;

    auto* gen = app.add_subcommand("gen", "Construct one intelligent state and write it to a file");
    add_spec_flags(gen, gen_o);
    gen->add_option("--lambda", gen_o.lambda, "Eigenproblem parameter lambda > 0");
    gen->add_option("--eta-re", gen_o.eta_re, "Re eta");
    gen->add_option("--eta-im", gen_o.eta_im, "Im eta");
    gen->add_option("--method", gen_o.method, "auto, recurrence, closed or diagonalization");
    gen->add_option("--exponent-mode", gen_o.exponent_mode, "auto, half or paper (closed form)");
    gen->add_flag("--strict", gen_o.strict, "Fail with exit code 4 on non-convergence");
    add_output_flags(gen, gen_o, "json");

    auto* verify = app.add_subcommand("verify", "Verify a previously generated state file");
    verify->add_option("--input", verify_input, "State JSON file")->required();
    verify->add_flag("--strict", verify_o.strict, "Fail with exit code 4 on non-convergence");
    add_output_flags(verify, verify_o, "json");

    auto* spectrum = app.add_subcommand("spectrum", "Eigenvalues of the IS operator");
    add_spec_flags(spectrum, spectrum_o);
    spectrum->add_option("--lambda", spectrum_o.lambda, "Eigenproblem parameter lambda > 0");
    add_output_flags(spectrum, spectrum_o, "json");

    auto* sweep = app.add_subcommand("sweep", "Verification reports over a (lambda, q) grid");
    add_spec_flags(sweep, sweep_o);
    sweep->add_option("--lambda", sweep_lambda, "lambda grid start:stop:count (inclusive)");
    sweep->add_option("--q-grid,--qs", sweep_q, "q grid start:stop:count (inclusive)");
    sweep->add_option("--eta-re", sweep_o.eta_re, "Re eta");
    sweep->add_option("--eta-im", sweep_o.eta_im, "Im eta");
    sweep->add_flag("--strict", sweep_o.strict, "Fail with exit code 4 on non-convergence");
    add_output_flags(sweep, sweep_o, "csv");

    auto* algebra = app.add_subcommand("algebra-check", "Commutator, hermiticity and Casimir reports");
    add_spec_flags(algebra, algebra_o);
    algebra->add_option("--dump-matrices", dump_prefix, "Also write diag/raise/lower matrix files");
    add_output_flags(algebra, algebra_o, "json");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    }

    try {
        if (gen->parsed()) return run_gen(gen_o);
        if (verify->parsed()) return run_verify(verify_input, verify_o);
        if (spectrum->parsed()) return run_spectrum(spectrum_o);
        if (sweep->parsed()) return run_sweep(sweep_o, sweep_lambda, sweep_q);
        if (algebra->parsed()) return run_algebra_check(algebra_o, dump_prefix);
    } catch (const ConvergenceError& e) {
        return fail("convergence", e.what(), 4);
    } catch (const std::domain_error& e) {
        return fail("validation", e.what(), 3);
    } catch (const std::invalid_argument& e) {
        return fail("validation", e.what(), 3);
    } catch (const std::exception& e) {
        return fail("internal", e.what(), 5);
    }
    return 0;
}
