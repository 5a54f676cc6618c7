#ifndef HVEC_GENERATORS_HPP
#define HVEC_GENERATORS_HPP

/**
 * Named test complexes.
 *
 * A spec is either a base generator with integer parameters or an operation
 * on other specs:
 *
 *   simplex(d)            the full d-simplex
 *   boundary-simplex(d)   boundary of the d-simplex, d >= 1
 *   cross-polytope(d)     boundary of the d-dimensional cross-polytope
 *   cyclic(d,n)           boundary of the cyclic polytope C_d(n)
 *   torus-7, rp2-6, icosahedron
 *   cone(X), suspension(X), join(X,Y), disjoint(X,Y)
 *   wedge(X,Y) / wedge(X,Y,a,b)   identify vertex a of X with vertex b of Y
 *                                 (both default to the smallest vertex)
 *
 * Parameters may also be written with spaces ("cyclic 4 9") or dashes
 * ("cyclic-4-9"). Generated complexes are relabeled to 0..n-1.
 */

#include "hvec/complex.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hvec {

class SpecError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

struct NamedComplexSpec {
    std::string name;
    std::vector<long> params;
    std::vector<NamedComplexSpec> children;

    /// Throws SpecError on malformed text.
    static NamedComplexSpec parse(const std::string& text);
    /// Canonical name, e.g. "cyclic-4-9" or "wedge(boundary-simplex-4,boundary-simplex-4)".
    std::string str() const;
};

/// Throws SpecError for unknown generators, bad parameters or missing wedge vertices.
SimplicialComplex generate(const NamedComplexSpec& spec);
SimplicialComplex generate(const std::string& spec);

/// Specs of the built-in corpus: dimensions 0 through 5, at most 12 vertices.
const std::vector<std::string>& standard_corpus();

}  // namespace hvec

#endif
