#ifndef HVEC_REPORT_IO_HPP
#define HVEC_REPORT_IO_HPP

#include "hvec/homology.hpp"
#include "hvec/vectors.hpp"
#include "hvec/verifier.hpp"

#include <json.hpp>

#include <optional>
#include <string>

namespace hvec {

struct Invariants {
    FVector f;
    HVector h;
    std::optional<ShortHVector> short_h;  // pure complexes only
    BettiVector betti;
    std::vector<Integer> chi_partial;     // χ_0 .. χ_dim
};

Invariants compute_invariants(const SimplicialComplex& complex);

/// Field order is fixed so that reports can be compared byte for byte.
nlohmann::ordered_json to_json(const VerificationReport& report);
nlohmann::ordered_json to_json(const ClassificationReport& report);
nlohmann::ordered_json to_json(const Invariants& inv);

std::string format_report(const VerificationReport& report);
std::string format_classification(const ClassificationReport& report);
/// Human-readable lines: "f = (1,9,...)", "h = (...)", ...
std::string format_invariants(const Invariants& inv);

}  // namespace hvec

#endif
