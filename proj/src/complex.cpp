#include "hvec/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>
#include <sstream>

namespace hvec {

Integer binomial(long a, long b) {
    if (b < 0 || a < 0 || b > a) return 0;
    b = std::min(b, a - b);
    Integer result = 1;
    for (long i = 1; i <= b; ++i) {
        result *= a - b + i;
        result /= i;
    }
    return result;
}

std::string to_string(const Rational& q) {
    if (boost::multiprecision::denominator(q) == 1) return boost::multiprecision::numerator(q).str();
    return boost::multiprecision::numerator(q).str() + "/" + boost::multiprecision::denominator(q).str();
}

// ---------------------------------------------------------------- Face

Face::Face(std::vector<Vertex> vertices) : vertices_(std::move(vertices)) {
    std::sort(vertices_.begin(), vertices_.end());
    auto dup = std::adjacent_find(vertices_.begin(), vertices_.end());
    if (dup != vertices_.end())
        throw ComplexError("face repeats vertex " + std::to_string(*dup));
}

bool Face::contains(Vertex v) const {
    return std::binary_search(vertices_.begin(), vertices_.end(), v);
}

bool Face::is_subset_of(const Face& other) const {
    return std::includes(other.vertices_.begin(), other.vertices_.end(),
                         vertices_.begin(), vertices_.end());
}

bool Face::is_disjoint_from(const Face& other) const {
    auto a = vertices_.begin();
    auto b = other.vertices_.begin();
    while (a != vertices_.end() && b != other.vertices_.end()) {
        if (*a == *b) return false;
        if (*a < *b) ++a; else ++b;
    }
    return true;
}

Face Face::with(const Face& other) const {
    std::vector<Vertex> out;
    std::set_union(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                   other.vertices_.end(), std::back_inserter(out));
    return Face(Sorted{}, std::move(out));
}

Face Face::without(const Face& other) const {
    std::vector<Vertex> out;
    std::set_difference(vertices_.begin(), vertices_.end(), other.vertices_.begin(),
                        other.vertices_.end(), std::back_inserter(out));
    return Face(Sorted{}, std::move(out));
}

Face Face::drop(std::size_t i) const {
    std::vector<Vertex> out;
    out.reserve(vertices_.size() - 1);
    for (std::size_t k = 0; k < vertices_.size(); ++k)
        if (k != i) out.push_back(vertices_[k]);
    return Face(Sorted{}, std::move(out));
}

std::string Face::str() const {
    std::ostringstream os;
    os << '{';
    for (std::size_t i = 0; i < vertices_.size(); ++i) os << (i ? "," : "") << vertices_[i];
    os << '}';
    return os.str();
}

// ---------------------------------------------------------------- SimplicialComplex

SimplicialComplex SimplicialComplex::from_facets(const std::vector<std::vector<Vertex>>& facets) {
    std::vector<Face> faces;
    faces.reserve(facets.size());
    for (const auto& f : facets) faces.emplace_back(f);
    return from_faces(std::move(faces));
}

SimplicialComplex SimplicialComplex::from_faces(std::vector<Face> faces) {
    if (faces.empty()) throw ComplexError("empty facet list (the void complex is not supported)");

    // Largest first, so a face can only be absorbed by something already kept.
    std::sort(faces.begin(), faces.end(), [](const Face& a, const Face& b) {
        if (a.size() != b.size()) return a.size() > b.size();
        return a < b;
    });
    faces.erase(std::unique(faces.begin(), faces.end()), faces.end());

    SimplicialComplex c;
    for (Face& f : faces) {
        bool absorbed = std::any_of(c.facets_.begin(), c.facets_.end(),
                                    [&](const Face& g) { return f.is_subset_of(g); });
        if (!absorbed) c.facets_.push_back(std::move(f));
    }
    std::sort(c.facets_.begin(), c.facets_.end());

    std::set<Vertex> verts;
    c.dim_ = -1;
    for (const Face& f : c.facets_) {
        verts.insert(f.begin(), f.end());
        c.dim_ = std::max(c.dim_, f.dim());
    }
    c.vertices_.assign(verts.begin(), verts.end());
    c.pure_ = std::all_of(c.facets_.begin(), c.facets_.end(),
                          [&](const Face& f) { return f.dim() == c.dim_; });
    c.lattice_ = std::make_shared<Lattice>();
    return c;
}

const SimplicialComplex::Lattice& SimplicialComplex::lattice() const {
    std::call_once(lattice_->once, [this] {
        std::vector<std::set<Face>> sets(static_cast<std::size_t>(dim_ + 2));
        for (const Face& facet : facets_) {
            const std::size_t m = facet.size();
            for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << m); ++mask) {
                std::vector<Vertex> sub;
                for (std::size_t b = 0; b < m; ++b)
                    if (mask & (std::uint64_t{1} << b)) sub.push_back(facet[b]);
                sets[sub.size()].insert(Face(std::move(sub)));
            }
        }
        lattice_->by_dim.reserve(sets.size());
        for (auto& s : sets) lattice_->by_dim.emplace_back(s.begin(), s.end());
    });
    return *lattice_;
}

const std::vector<Face>& SimplicialComplex::faces(int d) const {
    if (d < -1 || d > dim_)
        throw ComplexError("face dimension " + std::to_string(d) + " outside -1.." +
                           std::to_string(dim_));
    return lattice().by_dim[static_cast<std::size_t>(d + 1)];
}

std::size_t SimplicialComplex::count(int d) const {
    if (d < -1 || d > dim_) return 0;
    return faces(d).size();
}

long SimplicialComplex::index_of(const Face& f) const {
    if (f.dim() > dim_) return -1;
    const auto& fs = faces(f.dim());
    auto it = std::lower_bound(fs.begin(), fs.end(), f);
    if (it == fs.end() || *it != f) return -1;
    return static_cast<long>(it - fs.begin());
}

bool SimplicialComplex::has_face(const Face& f) const {
    return std::any_of(facets_.begin(), facets_.end(),
                       [&](const Face& g) { return f.is_subset_of(g); });
}

// ---------------------------------------------------------------- operations

SimplicialComplex build_complex(const std::vector<std::vector<Vertex>>& facets) {
    return SimplicialComplex::from_facets(facets);
}

SimplicialComplex link(const SimplicialComplex& complex, const Face& face) {
    if (face.empty()) return complex;
    std::vector<Face> parts;
    for (const Face& g : complex.facets())
        if (face.is_subset_of(g)) parts.push_back(g.without(face));
    if (parts.empty()) throw ComplexError("link: " + face.str() + " is not a face");
    return SimplicialComplex::from_faces(std::move(parts));
}

SimplicialComplex skeleton(const SimplicialComplex& complex, int i) {
    if (i < -1 || i > complex.dim())
        throw ComplexError("skeleton: dimension " + std::to_string(i) + " outside -1.." +
                           std::to_string(complex.dim()));
    std::vector<Face> faces = complex.faces(i);
    for (const Face& f : complex.facets())
        if (f.dim() < i) faces.push_back(f);
    return SimplicialComplex::from_faces(std::move(faces));
}

Integer chi_partial(const SimplicialComplex& complex, int i) {
    if (i < 0 || i > complex.dim())
        throw ComplexError("chi_partial: index " + std::to_string(i) + " outside 0.." +
                           std::to_string(complex.dim()));
    Integer chi = 0;
    for (int j = 0; j <= i; ++j) chi += sign_power(j) * complex.count(j);
    return chi;
}

Integer euler_characteristic(const SimplicialComplex& complex) {
    if (complex.dim() < 0) return 0;
    return chi_partial(complex, complex.dim());
}

std::vector<std::vector<Vertex>> connected_components(const SimplicialComplex& complex) {
    const auto& vs = complex.vertices();
    std::vector<std::size_t> parent(vs.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    auto pos = [&](Vertex v) {
        return static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    };
    for (const Face& f : complex.facets())
        for (std::size_t k = 1; k < f.size(); ++k)
            parent[find(pos(f[k]))] = find(pos(f[0]));

    std::vector<std::vector<Vertex>> out;
    std::vector<long> slot(vs.size(), -1);
    for (std::size_t i = 0; i < vs.size(); ++i) {
        std::size_t r = find(i);
        if (slot[r] < 0) {
            slot[r] = static_cast<long>(out.size());
            out.emplace_back();
        }
        out[static_cast<std::size_t>(slot[r])].push_back(vs[i]);
    }
    return out;
}

}  // namespace hvec
