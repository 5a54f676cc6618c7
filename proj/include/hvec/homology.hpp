#ifndef HVEC_HOMOLOGY_HPP
#define HVEC_HOMOLOGY_HPP

/**
 * Reduced simplicial homology over Q and the link-based classifiers built
 * on it (Eulerian, homology manifold, pseudomanifold, Cohen-Macaulay, ...).
 *
 * Boundary matrices carry the augmentation row for the empty face, so
 * every Betti number here is the reduced one; {∅} has β̃_{-1} = 1.
 */

#include "hvec/complex.hpp"

#include <optional>
#include <string>
#include <vector>

namespace hvec {

/// β̃_{-1}, ..., β̃_{dim}.
struct BettiVector {
    std::vector<long> values;

    int dim() const { return static_cast<int>(values.size()) - 2; }
    /// β̃_i; zero outside -1..dim.
    long operator[](int i) const {
        if (i < -1 || i > dim()) return 0;
        return values[static_cast<std::size_t>(i + 1)];
    }
    friend bool operator==(const BettiVector&, const BettiVector&) = default;
};

enum class Flag { True, False, NotApplicable };

const char* to_string(Flag f);
inline Flag to_flag(bool b) { return b ? Flag::True : Flag::False; }

/// The face at which a condition first failed, in sorted face order.
struct Witness {
    Face face;
    std::string reason;
};

struct Classification {
    Flag value = Flag::NotApplicable;
    std::optional<Witness> witness;

    explicit operator bool() const { return value == Flag::True; }
};

struct ManifoldClassification {
    Flag manifold = Flag::NotApplicable;
    Flag orientable = Flag::NotApplicable;
    std::optional<Witness> witness;
};

struct ClassificationReport {
    bool pure = false;
    Classification eulerian;
    Classification semi_eulerian;
    Classification homology_sphere;
    Classification homology_manifold;
    Classification orientable;
    Classification pseudomanifold;
    Classification cohen_macaulay;
    Classification buchsbaum;
};

/// Thrown when the Euler-Poincaré identity fails on a computed Betti vector.
class HomologyInvariantError : public std::logic_error {
public:
    using std::logic_error::logic_error;
};

/**
 * β̃_i = nullity(∂_i) - rank(∂_{i+1}) over Q. Verifies
 * Σ (-1)^i β̃_i = χ - 1 before returning.
 */
BettiVector betti_numbers(const SimplicialComplex& complex);

/// True iff `b` is the reduced homology of S^sphere_dim (sphere_dim >= -1).
bool is_sphere_homology(const BettiVector& b, int sphere_dim);

/// χ(lk F) = 1 + (-1)^{dim lk F} for every face F including ∅.
Classification is_eulerian(const SimplicialComplex& complex);
/// As is_eulerian, with the empty face exempt.
Classification is_semi_eulerian(const SimplicialComplex& complex);

/// Every nonempty face link has the homology of a sphere of complementary
/// dimension. orientable := β̃_dim equals the number of components.
/// Impure input yields NotApplicable for both flags.
ManifoldClassification is_homology_manifold(const SimplicialComplex& complex);

/// Homology manifold with the global homology of S^dim.
Classification is_homology_sphere(const SimplicialComplex& complex);

/// Every ridge in exactly two facets and each component strongly connected.
ManifoldClassification is_pseudomanifold(const SimplicialComplex& complex);

/// β_k ≤ 2β_{k-1} + 2Σ_{i=0}^{k-3} β_i on reduced Betti numbers. Requires
/// dim = 2k and k >= 1; throws ComplexError otherwise.
bool satisfies_beta_condition(const SimplicialComplex& complex, int k);
bool satisfies_beta_condition(const BettiVector& betti, int k);

/// Reisner's criterion over Q at every face, ∅ included.
Classification is_cohen_macaulay(const SimplicialComplex& complex);
/// Pure, with Cohen-Macaulay vertex links.
Classification is_buchsbaum(const SimplicialComplex& complex);

ClassificationReport classify(const SimplicialComplex& complex);

}  // namespace hvec

#endif
