#include "hvec/homology.hpp"

#include "hvec/linalg.hpp"

#include <map>
#include <numeric>
#include <sstream>

namespace hvec {

namespace {

// ∂_i : C_i -> C_{i-1}, rows indexed by (i-1)-faces (∅ when i = 0).
IntMatrix boundary_matrix(const SimplicialComplex& complex, int i) {
    const auto& rows = complex.faces(i - 1);
    const auto& cols = complex.faces(i);
    IntMatrix m(rows.size(), cols.size());
    for (std::size_t c = 0; c < cols.size(); ++c) {
        const Face& f = cols[c];
        for (std::size_t p = 0; p < f.size(); ++p) {
            const long r = complex.index_of(f.drop(p));
            m(static_cast<std::size_t>(r), c) = (p % 2 == 0) ? 1 : -1;
        }
    }
    return m;
}

// Faces in the order witnesses are reported: by dimension, then lexicographic.
template <typename Fn>
std::optional<Witness> first_failure(const SimplicialComplex& complex, int from_dim, Fn&& check) {
    for (int d = from_dim; d <= complex.dim(); ++d)
        for (const Face& f : complex.faces(d))
            if (auto reason = check(f)) return Witness{f, *reason};
    return std::nullopt;
}

Classification from_witness(std::optional<Witness> w) {
    Classification c;
    c.value = w ? Flag::False : Flag::True;
    c.witness = std::move(w);
    return c;
}

Classification not_applicable(const std::string& reason) {
    Classification c;
    c.value = Flag::NotApplicable;
    c.witness = Witness{Face{}, reason};
    return c;
}

std::string describe(const BettiVector& b) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < b.values.size(); ++i) os << (i ? "," : "") << b.values[i];
    os << ')';
    return os.str();
}

// Top Betti number of the unreduced homology; equals the reduced one unless dim = 0.
long top_betti(const SimplicialComplex& complex, const BettiVector& b) {
    return b[complex.dim()] + (complex.dim() == 0 ? 1 : 0);
}

std::optional<std::string> euler_condition(const SimplicialComplex& complex, const Face& f) {
    const SimplicialComplex lk = link(complex, f);
    const Integer chi = euler_characteristic(lk);
    const Integer expected = 1 + sign_power(lk.dim());
    if (chi == expected) return std::nullopt;
    return "chi(lk " + f.str() + ") = " + chi.str() + ", expected " + expected.str();
}

}  // namespace

const char* to_string(Flag f) {
    switch (f) {
        case Flag::True: return "true";
        case Flag::False: return "false";
        case Flag::NotApplicable: return "not-applicable";
    }
    return "?";
}

BettiVector betti_numbers(const SimplicialComplex& complex) {
    const int dim = complex.dim();
    // rank[i + 1] = rank ∂_i for i = -1..dim+1.
    std::vector<long> rank(static_cast<std::size_t>(dim + 3), 0);
    for (int i = 0; i <= dim; ++i)
        rank[static_cast<std::size_t>(i + 1)] =
            static_cast<long>(exact_rank(boundary_matrix(complex, i)));

    BettiVector b;
    long alternating = 0;
    for (int i = -1; i <= dim; ++i) {
        const long f = static_cast<long>(complex.count(i));
        const long beta = f - rank[static_cast<std::size_t>(i + 1)] - rank[static_cast<std::size_t>(i + 2)];
        b.values.push_back(beta);
        alternating += (i % 2 == 0) ? beta : -beta;
    }

    const Integer chi = euler_characteristic(complex);
    if (Integer(alternating) != chi - 1)
        throw HomologyInvariantError("Euler-Poincare check failed: alternating Betti sum " +
                                     std::to_string(alternating) + " != chi - 1 = " +
                                     Integer(chi - 1).str());
    return b;
}

bool is_sphere_homology(const BettiVector& b, int sphere_dim) {
    const int top = std::max(b.dim(), sphere_dim);
    for (int i = -1; i <= top; ++i)
        if (b[i] != (i == sphere_dim ? 1 : 0)) return false;
    return true;
}

Classification is_eulerian(const SimplicialComplex& complex) {
    if (!complex.is_pure()) return not_applicable("complex is not pure");
    return from_witness(first_failure(complex, -1, [&](const Face& f) {
        return euler_condition(complex, f);
    }));
}

Classification is_semi_eulerian(const SimplicialComplex& complex) {
    if (!complex.is_pure()) return not_applicable("complex is not pure");
    return from_witness(first_failure(complex, 0, [&](const Face& f) {
        return euler_condition(complex, f);
    }));
}

ManifoldClassification is_homology_manifold(const SimplicialComplex& complex) {
    ManifoldClassification out;
    if (!complex.is_pure()) {
        out.witness = Witness{Face{}, "complex is not pure"};
        return out;
    }
    out.witness = first_failure(complex, 0, [&](const Face& f) -> std::optional<std::string> {
        const int expected = complex.dim() - f.dim() - 1;
        const BettiVector b = betti_numbers(link(complex, f));
        if (is_sphere_homology(b, expected)) return std::nullopt;
        return "lk " + f.str() + " has reduced Betti numbers " + describe(b) +
               ", not those of S^" + std::to_string(expected);
    });
    out.manifold = to_flag(!out.witness);
    if (out.manifold == Flag::True) {
        const BettiVector b = betti_numbers(complex);
        const auto components = static_cast<long>(connected_components(complex).size());
        const bool orientable = top_betti(complex, b) == components;
        out.orientable = to_flag(orientable);
        if (!orientable)
            out.witness = Witness{Face{}, "top Betti number " + std::to_string(top_betti(complex, b)) +
                                              " != " + std::to_string(components) + " components"};
    }
    return out;
}

Classification is_homology_sphere(const SimplicialComplex& complex) {
    const ManifoldClassification m = is_homology_manifold(complex);
    if (m.manifold != Flag::True) {
        Classification c;
        c.value = Flag::False;
        c.witness = m.witness;
        return c;
    }
    const BettiVector b = betti_numbers(complex);
    if (is_sphere_homology(b, complex.dim())) return from_witness(std::nullopt);
    return from_witness(Witness{Face{}, "reduced Betti numbers " + describe(b) +
                                            " are not those of S^" + std::to_string(complex.dim())});
}

ManifoldClassification is_pseudomanifold(const SimplicialComplex& complex) {
    ManifoldClassification out;
    if (!complex.is_pure()) {
        out.witness = Witness{Face{}, "complex is not pure"};
        return out;
    }
    if (complex.dim() < 0) {
        out.witness = Witness{Face{}, "empty complex"};
        return out;
    }

    const auto& facets = complex.facets();
    std::map<Face, std::vector<std::size_t>> ridges;
    for (std::size_t k = 0; k < facets.size(); ++k)
        for (std::size_t p = 0; p < facets[k].size(); ++p) ridges[facets[k].drop(p)].push_back(k);

    for (const auto& [ridge, owners] : ridges) {
        if (owners.size() != 2) {
            out.manifold = Flag::False;
            out.witness = Witness{ridge, "ridge lies in " + std::to_string(owners.size()) +
                                             " facets"};
            return out;
        }
    }

    std::vector<std::size_t> parent(facets.size());
    std::iota(parent.begin(), parent.end(), 0);
    auto find = [&](std::size_t x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };
    for (const auto& [ridge, owners] : ridges) parent[find(owners[0])] = find(owners[1]);

    std::size_t classes = 0;
    for (std::size_t k = 0; k < facets.size(); ++k) classes += (find(k) == k);
    const auto components = connected_components(complex);
    if (classes != components.size()) {
        // Report a vertex shared by facets from different strong components.
        for (const auto& comp : components) {
            for (Vertex v : comp) {
                std::size_t seen = facets.size();
                for (std::size_t k = 0; k < facets.size(); ++k) {
                    if (!facets[k].contains(v)) continue;
                    if (seen == facets.size()) seen = find(k);
                    else if (find(k) != seen) {
                        out.manifold = Flag::False;
                        out.witness = Witness{Face{v}, "facets through this vertex are not strongly connected"};
                        return out;
                    }
                }
            }
        }
        out.manifold = Flag::False;
        out.witness = Witness{Face{}, "facet graph not strongly connected"};
        return out;
    }

    out.manifold = Flag::True;
    const BettiVector b = betti_numbers(complex);
    const bool orientable = top_betti(complex, b) == static_cast<long>(components.size());
    out.orientable = to_flag(orientable);
    if (!orientable)
        out.witness = Witness{Face{}, "top Betti number " + std::to_string(top_betti(complex, b)) +
                                          " != " + std::to_string(components.size()) + " components"};
    return out;
}

bool satisfies_beta_condition(const BettiVector& b, int k) {
    if (k < 1) throw ComplexError("beta condition is only defined for k >= 1");
    if (b.dim() != 2 * k)
        throw ComplexError("beta condition with k=" + std::to_string(k) + " needs dimension " +
                           std::to_string(2 * k) + ", got " + std::to_string(b.dim()));
    long rhs = 2 * b[k - 1];
    for (int i = 0; i <= k - 3; ++i) rhs += 2 * b[i];
    return b[k] <= rhs;
}

bool satisfies_beta_condition(const SimplicialComplex& complex, int k) {
    if (k < 1) throw ComplexError("beta condition is only defined for k >= 1");
    if (complex.dim() != 2 * k)
        throw ComplexError("beta condition with k=" + std::to_string(k) + " needs dimension " +
                           std::to_string(2 * k) + ", got " + std::to_string(complex.dim()));
    return satisfies_beta_condition(betti_numbers(complex), k);
}

Classification is_cohen_macaulay(const SimplicialComplex& complex) {
    return from_witness(first_failure(complex, -1, [&](const Face& f) -> std::optional<std::string> {
        const SimplicialComplex lk = link(complex, f);
        const BettiVector b = betti_numbers(lk);
        for (int i = -1; i < lk.dim(); ++i)
            if (b[i] != 0)
                return "reduced H_" + std::to_string(i) + "(lk " + f.str() + ") has dimension " +
                       std::to_string(b[i]) + " below the link dimension " + std::to_string(lk.dim());
        return std::nullopt;
    }));
}

Classification is_buchsbaum(const SimplicialComplex& complex) {
    if (!complex.is_pure()) return not_applicable("complex is not pure");
    for (Vertex v : complex.vertices()) {
        const Classification c = is_cohen_macaulay(link(complex, Face{v}));
        if (c.value != Flag::True)
            return from_witness(Witness{Face{v}, "vertex link is not Cohen-Macaulay: " +
                                                     (c.witness ? c.witness->reason : std::string())});
    }
    return from_witness(std::nullopt);
}

ClassificationReport classify(const SimplicialComplex& complex) {
    ClassificationReport r;
    r.pure = complex.is_pure();
    r.eulerian = is_eulerian(complex);
    r.semi_eulerian = is_semi_eulerian(complex);
    r.homology_sphere = is_homology_sphere(complex);

    const ManifoldClassification m = is_homology_manifold(complex);
    r.homology_manifold.value = m.manifold;
    r.orientable.value = m.orientable;
    if (m.manifold != Flag::True) r.homology_manifold.witness = m.witness;
    else if (m.orientable != Flag::True) r.orientable.witness = m.witness;

    const ManifoldClassification p = is_pseudomanifold(complex);
    r.pseudomanifold.value = p.manifold;
    if (p.manifold != Flag::True) r.pseudomanifold.witness = p.witness;

    r.cohen_macaulay = is_cohen_macaulay(complex);
    r.buchsbaum = is_buchsbaum(complex);
    return r;
}

}  // namespace hvec
