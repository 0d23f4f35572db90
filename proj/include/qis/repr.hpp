#pragma once

#include <Eigen/Dense>

#include <string>

#include "qis/qnum.hpp"

namespace qis {

enum class Branch { discrete_series, spin };

/// Which set of ladder matrix elements is built.
///  - undeformed:  the plain su(1,1)/su(2) elements (q is ignored, forced 1).
///  - dyson_paper: the literal Dyson-realization ket actions; the raising
///    element carries the bracket-over-integer ratio factor, so raise and
///    lower are NOT mutually adjoint for q != 1. hermiticity_report measures
///    the defect instead of hiding it.
///  - symmetric:   fully q-deformed radicands on both ladders, adjoint by
///    construction.
enum class Realization { undeformed, dyson_paper, symmetric };

struct RepresentationSpec {
    Branch branch = Branch::discrete_series;
    double index = 1.0;   // Bargmann k (> 0) or spin j (half-integer >= 0)
    int truncation = 512; // discrete series only; spin dimension is 2j+1
    double q = 1.0;
    Realization realization = Realization::undeformed;

    int dimension() const;
    /// Throws std::domain_error on invalid parameters.
    void validate() const;
};

const char* to_string(Branch b);
const char* to_string(Realization r);
Branch branch_from_string(const std::string& s);
Realization realization_from_string(const std::string& s);

// Scalar matrix elements, the single source of truth shared by the matrix
// builders, the recurrence solver and the verification routines.  n is the
// basis index of the source state.
double diag_element(const RepresentationSpec& spec, int n);   // <n|X0|n>
double raise_element(const RepresentationSpec& spec, int n);  // <n+1|X+|n>
double lower_element(const RepresentationSpec& spec, int n);  // <n-1|X-|n>

enum class RoleTag { lowering, raising, diagonal };

struct OperatorMatrix {
    Eigen::MatrixXcd entries;
    int basis_offset = 0;  // index of the first retained basis state
    RoleTag role = RoleTag::diagonal;
};

struct OperatorTriple {
    OperatorMatrix diag;
    OperatorMatrix raise;
    OperatorMatrix lower;
    RepresentationSpec spec;
};

/// Positive discrete series of su(1,1), undeformed elements, truncated by
/// dropping the raising element out of the top state.
OperatorTriple build_su11(const RepresentationSpec& spec);

/// Spin-j representation of su(2); dimension 2j+1, no truncation artifacts.
OperatorTriple build_su2(const RepresentationSpec& spec);

/// q-deformed triple in the dyson_paper or symmetric realization. At q = 1
/// both reproduce the undeformed builders entry for entry.
OperatorTriple build_q_deformed(const RepresentationSpec& spec);

/// Dispatch on spec.realization.
OperatorTriple build_triple(const RepresentationSpec& spec);

/// Relative max-norm residuals of the defining commutation relations over
/// interior basis states (the truncation boundary row/column is excluded for
/// the discrete series).  The ladder commutator is compared against both
/// candidate targets, s*[2X0]_q and s*2[X0]_q (s = -1 for su(1,1), +1 for
/// su(2)), so the data decides which bracket convention the algebra closes
/// under.
struct AlgebraReport {
    double diag_raise = 0;          // [X0, X+] - X+
    double diag_lower = 0;          // [X0, X-] + X-
    double ladder_bracket_2q0 = 0;  // [X+, X-] vs s*[2 X0]_q
    double ladder_2_bracket_q0 = 0; // [X+, X-] vs s*2 [X0]_q
};

AlgebraReport commutator_report(const OperatorTriple& triple);

/// Absolute max-norm of (raise - adjoint(lower)).  Zero to rounding for the
/// undeformed and symmetric realizations; strictly positive for dyson_paper
/// at q != 1.
double hermiticity_report(const OperatorTriple& triple);

/// Casimir residual, undeformed triples only (throws std::domain_error for
/// q != 1).  Spin: max-norm of X0(X0+1) + X-X+ - j(j+1) I over all states.
/// Discrete series: max-norm of X0(X0-1) - X+X- - k(k-1) I over interior
/// states.
double casimir_check(const OperatorTriple& triple);

}  // namespace qis
