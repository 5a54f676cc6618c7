#ifndef HVEC_VERIFIER_HPP
#define HVEC_VERIFIER_HPP

/**
 * Executable upper/lower bound statements. Each check returns a
 * VerificationReport listing the hypotheses it tested and every inequality
 * instance of its conclusion.
 *
 * Conclusions are evaluated even when a hypothesis fails; such reports are
 * marked vacuous and their overall outcome is HypothesesNotMet regardless of
 * whether the inequalities hold. Fail is reserved for a violated conclusion
 * under satisfied hypotheses.
 */

#include "hvec/homology.hpp"

#include <string>
#include <vector>

namespace hvec {

struct HypothesisResult {
    std::string condition;
    Flag status = Flag::NotApplicable;
    std::optional<Witness> witness;
};

enum class Relation { LessEqual, GreaterEqual, Equal };

const char* to_string(Relation r);

struct InequalityResult {
    std::string label;
    Integer lhs;
    Relation relation = Relation::LessEqual;
    Integer rhs;
    bool holds = false;
};

InequalityResult compare(std::string label, Integer lhs, Relation rel, Integer rhs);

enum class Outcome { Pass, Fail, HypothesesNotMet };

const char* to_string(Outcome o);

/// Process exit status for an outcome: 0 pass, 1 fail, 2 hypotheses not met.
int exit_code(Outcome o);

struct VerificationReport {
    std::string statement;
    std::vector<HypothesisResult> hypotheses;
    std::vector<InequalityResult> conclusion;
    /// Reported but never asserted (e.g. questions left open).
    std::vector<InequalityResult> observations;
    std::vector<std::string> notes;
    bool vacuous = false;
    Outcome overall = Outcome::HypothesesNotMet;

    bool hypotheses_met() const;
    /// Sets `vacuous` and `overall` from the hypotheses and conclusion.
    void finalize();
};

enum class UbcMode { Theorem, Corollary };

/**
 * Hypotheses of the odd-dimensional upper bound theorem for a pure
 * (2k+1)-dimensional complex, k >= 1, one entry per vertex link (plus the
 * oriented-pseudomanifold condition in corollary mode). Throws ComplexError
 * for impure input, even dimension, or dimension 1.
 */
std::vector<HypothesisResult> check_ubc_hypotheses(const SimplicialComplex& complex, UbcMode mode);

/// f_i(Δ) <= f_i(C_{2k+2}(n)) for 1 <= i <= 2k+1, plus the intermediate
/// short h-vector bound h̃_i(Δ) <= h̃_i(C_{2k+2}(n)) for 0 <= i <= k+1.
VerificationReport verify_ubc(const SimplicialComplex& complex, UbcMode mode = UbcMode::Theorem);

/// h_i(K) <= h_i(C_{2k+1}(r)) for 0 <= i <= k+1 on a 2k-dimensional K.
VerificationReport check_lemma_hh(const SimplicialComplex& complex, int k);

/// h_i(K) <= h_i(C_d(n)) for 0 <= i <= d-1 on a (d-1)-dimensional homology sphere.
VerificationReport check_sphere_ubc(const SimplicialComplex& complex);

/// h_i = h_{d-i} for Eulerian complexes.
VerificationReport check_dehn_sommerville(const SimplicialComplex& complex);

/// (-1)^i χ_i >= 0 for 0 <= i <= (d-1)/2 on Buchsbaum complexes.
VerificationReport check_lower_bounds(const SimplicialComplex& complex);

/// Names accepted by verify_statement.
const std::vector<std::string>& statement_names();

/// Dispatch by statement name; lemma-hh takes k = dim/2. Throws
/// std::invalid_argument for an unknown name.
VerificationReport verify_statement(const std::string& statement, const SimplicialComplex& complex);

}  // namespace hvec

#endif
