#ifndef HVEC_CYCLIC_HPP
#define HVEC_CYCLIC_HPP

#include "hvec/complex.hpp"

namespace hvec {

/// Boundary complex of the d-dimensional cyclic polytope on n vertices.
struct CyclicSpec {
    int d = 0;
    int n = 0;

    /// Throws ComplexError unless 2 <= d < n.
    CyclicSpec(int dim, int vertices);
};

/// Facets by Gale's evenness condition: d-subsets S of {0..n-1} such that
/// any two non-members are separated by an even number of members.
SimplicialComplex gale_facets(const CyclicSpec& spec);

/// h_i(C_d(n)) = C(n-d+i-1, i) for i <= d/2, extended palindromically.
/// Accepts any 1 <= d < n so it can also serve odd link dimensions.
Integer cyclic_h(int d, int n, int i);
inline Integer cyclic_h(const CyclicSpec& spec, int i) { return cyclic_h(spec.d, spec.n, i); }

/// Largest l such that every l-subset of vertices spans a face.
int neighborliness(const SimplicialComplex& complex);

}  // namespace hvec

#endif
