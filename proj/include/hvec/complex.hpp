#ifndef HVEC_COMPLEX_HPP
#define HVEC_COMPLEX_HPP

/**
 * Finite abstract simplicial complexes given by their facets.
 *
 * A complex is immutable once built. The full face lattice is enumerated
 * on first request and cached; copies of a complex share the cache, and
 * concurrent first access is serialized through std::call_once.
 */

#include "hvec/arith.hpp"

#include <cstdint>
#include <initializer_list>
#include <memory>
#include <mutex>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace hvec {

using Vertex = std::uint32_t;

/// Thrown for malformed complexes and out-of-range face/dimension requests.
class ComplexError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

/**
 * A sorted, duplicate-free set of vertex ids. The empty face has
 * dimension -1.
 */
class Face {
public:
    Face() = default;

    /// Sorts the ids; throws ComplexError on a repeated vertex.
    explicit Face(std::vector<Vertex> vertices);
    Face(std::initializer_list<Vertex> vertices)
        : Face(std::vector<Vertex>(vertices)) {}

    int dim() const { return static_cast<int>(vertices_.size()) - 1; }
    std::size_t size() const { return vertices_.size(); }
    bool empty() const { return vertices_.empty(); }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    auto begin() const { return vertices_.begin(); }
    auto end() const { return vertices_.end(); }
    Vertex operator[](std::size_t i) const { return vertices_[i]; }

    bool contains(Vertex v) const;
    bool is_subset_of(const Face& other) const;
    bool is_disjoint_from(const Face& other) const;

    Face with(const Face& other) const;     ///< union
    Face without(const Face& other) const;  ///< set difference
    /// The codimension-one face obtained by dropping position `i`.
    Face drop(std::size_t i) const;

    std::string str() const;

    friend auto operator<=>(const Face&, const Face&) = default;
    friend bool operator==(const Face&, const Face&) = default;

private:
    struct Sorted {};
    Face(Sorted, std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {}

    std::vector<Vertex> vertices_;
};

class SimplicialComplex {
public:
    /**
     * The complex generated by `facets`. Non-maximal entries are absorbed.
     * Throws ComplexError if the list is empty (the void complex) or a
     * face repeats a vertex. `{{}}` yields the empty complex {∅}.
     */
    static SimplicialComplex from_facets(const std::vector<std::vector<Vertex>>& facets);
    static SimplicialComplex from_faces(std::vector<Face> faces);

    /// Dimension; -1 for {∅}.
    int dim() const { return dim_; }
    bool is_pure() const { return pure_; }

    const std::vector<Vertex>& vertices() const { return vertices_; }
    std::size_t num_vertices() const { return vertices_.size(); }
    /// Inclusion-maximal faces, sorted.
    const std::vector<Face>& facets() const { return facets_; }

    /// All faces of dimension `d`, sorted; d ranges over -1..dim().
    const std::vector<Face>& faces(int d) const;
    /// Number of faces of dimension `d`; 0 outside -1..dim().
    std::size_t count(int d) const;

    bool has_face(const Face& f) const;
    /// Index of `f` in faces(f.dim()), or -1.
    long index_of(const Face& f) const;

    friend bool operator==(const SimplicialComplex& a, const SimplicialComplex& b) {
        return a.facets_ == b.facets_;
    }

private:
    struct Lattice {
        std::once_flag once;
        std::vector<std::vector<Face>> by_dim;  // index d + 1
    };

    SimplicialComplex() = default;
    const Lattice& lattice() const;

    std::vector<Vertex> vertices_;
    std::vector<Face> facets_;
    int dim_ = -1;
    bool pure_ = true;
    std::shared_ptr<Lattice> lattice_;
};

/// Convenience wrapper for SimplicialComplex::from_facets.
SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& facets);

/// lk F = { G : G ∩ F = ∅, G ∪ F ∈ Δ }. Throws if F is not a face.
SimplicialComplex link(const SimplicialComplex& complex, const Face& face);

/// All faces of dimension at most `i`, for -1 <= i <= dim.
SimplicialComplex skeleton(const SimplicialComplex& complex, int i);

/// Σ_{j=0}^{i} (-1)^j f_j, for 0 <= i <= dim.
Integer chi_partial(const SimplicialComplex& complex, int i);

/// Non-reduced Euler characteristic Σ_{j>=0} (-1)^j f_j; 0 for {∅}.
Integer euler_characteristic(const SimplicialComplex& complex);

/// Connected components of the 1-skeleton, as sorted vertex lists.
std::vector<std::vector<Vertex>> connected_components(const SimplicialComplex& complex);

/// The complex with every vertex v replaced by map(v). `map` must be injective
/// on the vertex set.
template <typename Map>
SimplicialComplex relabel(const SimplicialComplex& complex, Map&& map) {
    std::vector<Face> faces;
    faces.reserve(complex.facets().size());
    for (const Face& f : complex.facets()) {
        std::vector<Vertex> vs;
        vs.reserve(f.size());
        for (Vertex v : f) vs.push_back(map(v));
        faces.emplace_back(std::move(vs));
    }
    return SimplicialComplex::from_faces(std::move(faces));
}

}  // namespace hvec

#endif
