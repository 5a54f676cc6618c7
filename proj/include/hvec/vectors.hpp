#ifndef HVEC_VECTORS_HPP
#define HVEC_VECTORS_HPP

// f-, h- and short h-vectors of a (d-1)-dimensional complex, and the exact
// coefficient computations that relate them. Everything is integer or
// rational arithmetic; nothing here uses floating point.

#include "hvec/arith.hpp"
#include "hvec/complex.hpp"

#include <stdexcept>
#include <string>
#include <vector>

namespace hvec {

/// (f_{-1}, f_0, ..., f_{d-1}); f_{-1} = 1.
struct FVector {
    std::vector<Integer> values;

    /// The parameter d (values.size() - 1).
    int d() const { return static_cast<int>(values.size()) - 1; }
    /// f_j for -1 <= j <= d-1.
    const Integer& operator[](int j) const { return values.at(static_cast<std::size_t>(j + 1)); }

    friend bool operator==(const FVector&, const FVector&) = default;
};

/// (h_0, ..., h_d).
struct HVector {
    std::vector<Integer> values;

    int d() const { return static_cast<int>(values.size()) - 1; }
    const Integer& operator[](int i) const { return values.at(static_cast<std::size_t>(i)); }

    friend bool operator==(const HVector&, const HVector&) = default;
};

/// (h̃_0, ..., h̃_{d-1}): the vertexwise sum of link h-vectors.
struct ShortHVector {
    std::vector<Integer> values;

    int d() const { return static_cast<int>(values.size()); }
    const Integer& operator[](int i) const { return values.at(static_cast<std::size_t>(i)); }

    friend bool operator==(const ShortHVector&, const ShortHVector&) = default;
};

/// Raised when a short h-vector does not reconstruct to an integral f-vector.
class NotRealizableError : public std::domain_error {
public:
    using std::domain_error::domain_error;
};

FVector f_vector(const SimplicialComplex& complex);

HVector h_from_f(const FVector& f);
FVector f_from_h(const HVector& h);

/// Σ_v h(lk v). Requires a pure complex; throws ComplexError otherwise.
ShortHVector short_h_from_links(const SimplicialComplex& complex);

/// h̃_i = Σ_{j<=i} (-1)^{i-j} (j+1) C(d-1-j, d-1-i) f_j.
ShortHVector short_h_from_f(const FVector& f);

/// f_j = (j+1)^{-1} Σ_{i<=j} C(d-1-i, d-1-j) h̃_i. Throws NotRealizableError
/// when a weighted sum is not divisible by j+1.
FVector f_from_short_h(const ShortHVector& short_h);

/// The coefficient (j+1)^{-1} C(d-1-i, d-1-j) of h̃_i in f_j.
Rational reconstruction_coeff(int d, int i, int j);

/**
 * ∫_0^1 x^i (x-1)^{r-i-1} dx for 0 <= i < r, evaluated as the finite sum
 * Σ_{j=i+1}^{r} (1/j) (-1)^{r-j} C(r-i-1, r-j). The result is checked
 * against the Beta-function value (-1)^{r-i-1} i! (r-i-1)! / r!; a mismatch
 * throws std::logic_error.
 */
Rational beta_integral(int i, int r);

/// Coefficient of h̃_i in the expansion of h_r for a (2k+1)-dimensional
/// complex: C(2k+1-i, 2k+2-r) · beta_integral(i, r). Zero for i >= r.
Rational h_short_coeff(int k, int i, int r);

/**
 * h_r of a (2k+1)-dimensional pure complex written in terms of its short
 * h-vector:
 *   h_r = (-1)^r C(2k+2, r) + Σ_{i<r} h̃_i · h_short_coeff(k, i, r).
 * Requires short_h.d() == 2k+2 and 0 <= r <= 2k+2.
 */
Rational h_via_short_h(const ShortHVector& short_h, int k, int r);

/**
 * c(i, l, d) = Σ_{j=l}^{i} (-1)^{i-j} (j+1)^{-1} C(d-1-l, d-1-j), the
 * coefficient of h̃_l in (-1)^i χ_i. Requires 0 <= l <= i <= d-1.
 */
Rational lower_bound_coeff(int d, int i, int l);

std::string format_vector(const std::vector<Integer>& values);

}  // namespace hvec

#endif
