#pragma once

#include <optional>
#include <string>

#include <json.hpp>

#include "qis/repr.hpp"
#include "qis/states.hpp"

namespace qis::io {

/// Shortest-round-trip-safe fixed formatting used by every CSV writer
/// (17 significant digits, locale independent).
std::string format_double(double v);

/// Metadata describing how a state file was produced.
struct StateProvenance {
    std::string method = "recurrence";  // recurrence | closed_form | diagonalization
    std::optional<ExponentMode> exponent_mode;
    std::optional<std::complex<double>> eta_requested;
    nlohmann::json diagnostics;  // optional free-form block
};

nlohmann::json state_to_json(const StateVector& state, const ISParams& params,
                             const StateProvenance& origin);

struct LoadedState {
    StateVector state;
    ISParams params;
};

/// Inverse of state_to_json; throws std::domain_error on malformed input.
LoadedState state_from_json(const nlohmann::json& j);

std::string state_to_csv(const StateVector& state);  // n, re, im, |c|^2

nlohmann::json report_to_json(const VerificationReport& report, const StateVector& state,
                              const ISParams& params);

nlohmann::json spectrum_to_json(const std::vector<EigenPair>& pairs, const ISParams& params);
std::string spectrum_to_csv(const std::vector<EigenPair>& pairs);

nlohmann::json matrix_to_json(const OperatorMatrix& m);   // row-major [re, im] pairs
std::string matrix_to_csv(const OperatorMatrix& m);       // row, col, re, im

/// Flattens a JSON object into deterministic "path,value" CSV rows.
std::string flat_json_to_csv(const nlohmann::json& j);

}  // namespace qis::io
