#include "hvec/cyclic.hpp"

#include <algorithm>
#include <string>

namespace hvec {

CyclicSpec::CyclicSpec(int dim, int vertices) : d(dim), n(vertices) {
    if (d < 2) throw ComplexError("cyclic polytope needs d >= 2, got " + std::to_string(d));
    if (n <= d)
        throw ComplexError("cyclic polytope needs n > d, got d=" + std::to_string(d) +
                           ", n=" + std::to_string(n));
}

namespace {

bool gale_even(const std::vector<bool>& in) {
    const auto n = in.size();
    std::size_t prev = n;  // last non-member seen
    std::size_t between = 0;
    for (std::size_t i = 0; i < n; ++i) {
        if (in[i]) {
            ++between;
            continue;
        }
        if (prev != n && between % 2 != 0) return false;
        prev = i;
        between = 0;
    }
    return true;
}

}  // namespace

SimplicialComplex gale_facets(const CyclicSpec& spec) {
    const auto n = static_cast<std::size_t>(spec.n);
    const auto d = static_cast<std::size_t>(spec.d);
    std::vector<bool> in(n, false);
    std::fill(in.begin(), in.begin() + static_cast<long>(d), true);

    // Walk all d-subsets via prev_permutation on the indicator vector.
    std::vector<std::vector<Vertex>> facets;
    do {
        if (!gale_even(in)) continue;
        std::vector<Vertex> f;
        for (std::size_t i = 0; i < n; ++i)
            if (in[i]) f.push_back(static_cast<Vertex>(i));
        facets.push_back(std::move(f));
    } while (std::prev_permutation(in.begin(), in.end()));
    return build_complex(facets);
}

Integer cyclic_h(int d, int n, int i) {
    if (d < 1 || n <= d)
        throw ComplexError("cyclic_h needs 1 <= d < n, got d=" + std::to_string(d) +
                           ", n=" + std::to_string(n));
    if (i < 0 || i > d)
        throw std::out_of_range("cyclic_h: index " + std::to_string(i) + " outside 0.." +
                                std::to_string(d));
    const int j = (i <= d / 2) ? i : d - i;
    return binomial(n - d + j - 1, j);
}

int neighborliness(const SimplicialComplex& complex) {
    const long n = static_cast<long>(complex.num_vertices());
    int l = 0;
    while (l < n && l <= complex.dim() && Integer(complex.count(l)) == binomial(n, l + 1)) ++l;
    return l;
}

}  // namespace hvec
