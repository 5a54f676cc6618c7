#include "hvec/homology.hpp"
#include "hvec/vectors.hpp"
#include "test_support.hpp"

#include <doctest.h>

using namespace hvec;
using testing::named;

namespace {

BettiVector betti(std::initializer_list<long> xs) { return BettiVector{{xs.begin(), xs.end()}}; }

const SimplicialComplex tetra_boundary = named("boundary-simplex-3");
const SimplicialComplex octahedron = named("cross-polytope-3");
const SimplicialComplex torus = named("torus-7");
const SimplicialComplex solid_triangle = named("simplex-2");

}  // namespace

TEST_CASE("betti_numbers") {
    CHECK(betti_numbers(solid_triangle) == betti({0, 0, 0, 0}));
    CHECK(betti_numbers(tetra_boundary) == betti({0, 0, 0, 1}));
    CHECK(betti_numbers(torus) == betti({0, 0, 2, 1}));
    CHECK(betti_numbers(octahedron) == betti({0, 0, 0, 1}));
    CHECK(betti_numbers(named("rp2-6")) == betti({0, 0, 0, 0}));
    CHECK(betti_numbers(build_complex({{}})) == betti({1}));
    CHECK(betti_numbers(build_complex({{0}})) == betti({0, 0}));
    CHECK(betti_numbers(build_complex({{0}, {1}, {2}})) == betti({0, 2}));
    CHECK(betti_numbers(named("join(boundary-simplex-2,boundary-simplex-2)")) == betti({0, 0, 0, 0, 1}));
    CHECK(betti_numbers(named("disjoint(boundary-simplex-3,boundary-simplex-3)")) == betti({0, 1, 0, 2}));
}

TEST_CASE("is_sphere_homology") {
    CHECK(is_sphere_homology(betti({1}), -1));
    CHECK(is_sphere_homology(betti({0, 1}), 0));
    CHECK_FALSE(is_sphere_homology(betti({0, 1}), 1));
    CHECK(is_sphere_homology(betti({0, 0, 0, 1}), 2));
    CHECK_FALSE(is_sphere_homology(betti({0, 0, 2, 1}), 2));
}

TEST_CASE("is_eulerian") {
    CHECK(is_eulerian(tetra_boundary).value == Flag::True);
    CHECK(is_eulerian(named("boundary-simplex-4")).value == Flag::True);

    const auto t = is_eulerian(torus);
    CHECK(t.value == Flag::False);
    REQUIRE(t.witness);
    CHECK(t.witness->face == Face{});
    CHECK(euler_characteristic(torus) == 0);

    CHECK(is_eulerian(build_complex({{0, 1, 2}, {3}})).value == Flag::NotApplicable);
}

TEST_CASE("is_semi_eulerian") {
    CHECK(is_semi_eulerian(torus).value == Flag::True);
    CHECK(is_semi_eulerian(tetra_boundary).value == Flag::True);

    const auto s = is_semi_eulerian(solid_triangle);
    CHECK(s.value == Flag::False);
    REQUIRE(s.witness);
    CHECK(s.witness->face.dim() == 0);
    CHECK(euler_characteristic(link(solid_triangle, s.witness->face)) == 1);

    CHECK(is_semi_eulerian(build_complex({{0, 1}, {2}})).value == Flag::NotApplicable);
}

TEST_CASE("is_homology_sphere") {
    CHECK(is_homology_sphere(tetra_boundary));
    CHECK(is_homology_sphere(octahedron));
    CHECK(is_homology_sphere(named("icosahedron")));
    CHECK_FALSE(is_homology_sphere(torus));
    CHECK_FALSE(is_homology_sphere(solid_triangle));
    CHECK_FALSE(is_homology_sphere(build_complex({{0, 1, 2}, {3}})));
}

TEST_CASE("is_homology_manifold") {
    const auto t = is_homology_manifold(torus);
    CHECK(t.manifold == Flag::True);
    CHECK(t.orientable == Flag::True);

    const auto w = is_homology_manifold(named("wedge(boundary-simplex-3,boundary-simplex-3)"));
    CHECK(w.manifold == Flag::False);
    REQUIRE(w.witness);
    CHECK(w.witness->face == Face{0});
    // the wedge point's link is two disjoint circles
    CHECK(betti_numbers(link(named("wedge(boundary-simplex-3,boundary-simplex-3)"), Face{0})) ==
          betti({0, 1, 2}));

    const auto s = is_homology_manifold(named("boundary-simplex-4"));
    CHECK(s.manifold == Flag::True);
    CHECK(s.orientable == Flag::True);

    const auto rp2 = is_homology_manifold(named("rp2-6"));
    CHECK(rp2.manifold == Flag::True);
    CHECK(rp2.orientable == Flag::False);

    CHECK(is_homology_manifold(build_complex({{0, 1}, {2}})).manifold == Flag::NotApplicable);
    // two disjoint spheres: one generator of top homology per component
    CHECK(is_homology_manifold(named("disjoint(boundary-simplex-3,boundary-simplex-3)")).orientable == Flag::True);
}

TEST_CASE("is_pseudomanifold") {
    const auto t = is_pseudomanifold(torus);
    CHECK(t.manifold == Flag::True);
    CHECK(t.orientable == Flag::True);

    const auto w = is_pseudomanifold(named("wedge(boundary-simplex-3,boundary-simplex-3)"));
    CHECK(w.manifold == Flag::False);
    REQUIRE(w.witness);
    CHECK(w.witness->face == Face{0});

    const auto s = is_pseudomanifold(tetra_boundary);
    CHECK(s.manifold == Flag::True);
    CHECK(s.orientable == Flag::True);

    const auto tri = is_pseudomanifold(solid_triangle);
    CHECK(tri.manifold == Flag::False);
    CHECK(tri.witness->face.dim() == 1);

    CHECK(is_pseudomanifold(named("rp2-6")).orientable == Flag::False);
    // the suspension of a torus is a pseudomanifold but not a manifold
    CHECK(is_pseudomanifold(named("suspension(torus-7)")).manifold == Flag::True);
    CHECK(is_homology_manifold(named("suspension(torus-7)")).manifold == Flag::False);
}

TEST_CASE("satisfies_beta_condition") {
    CHECK(satisfies_beta_condition(octahedron, 1));
    CHECK(satisfies_beta_condition(named("disjoint(boundary-simplex-3,boundary-simplex-3)"), 1));
    CHECK_FALSE(satisfies_beta_condition(torus, 1));
    CHECK_THROWS_AS(satisfies_beta_condition(torus, 0), ComplexError);
    CHECK_THROWS_AS(satisfies_beta_condition(torus, 2), ComplexError);
    CHECK_THROWS_AS(satisfies_beta_condition(named("boundary-simplex-4"), 1), ComplexError);

    // k = 3: β_3 <= 2β_2 + 2β_0
    CHECK(satisfies_beta_condition(betti({0, 1, 0, 1, 4, 0, 0, 1}), 3));
    CHECK_FALSE(satisfies_beta_condition(betti({0, 1, 0, 1, 5, 0, 0, 1}), 3));
    CHECK(satisfies_beta_condition(betti({0, 0, 0, 1, 2, 0, 0, 1}), 3));
}

TEST_CASE("Cohen-Macaulay and Buchsbaum") {
    CHECK(is_cohen_macaulay(solid_triangle));
    CHECK(is_cohen_macaulay(tetra_boundary));
    CHECK(is_cohen_macaulay(named("rp2-6")));

    const auto two_edges = is_cohen_macaulay(build_complex({{0, 1}, {2, 3}}));
    CHECK(two_edges.value == Flag::False);
    REQUIRE(two_edges.witness);
    CHECK(two_edges.witness->face == Face{});

    const auto t = is_cohen_macaulay(torus);
    CHECK(t.value == Flag::False);
    CHECK(t.witness->face == Face{});
    CHECK(is_buchsbaum(torus));
    for (Vertex v : torus.vertices()) CHECK(is_cohen_macaulay(link(torus, Face{v})));

    CHECK_FALSE(is_cohen_macaulay(build_complex({{0, 1, 2}, {2, 3}})));
    CHECK(is_buchsbaum(build_complex({{0, 1, 2}, {2, 3}})).value == Flag::NotApplicable);
    CHECK_FALSE(is_buchsbaum(named("wedge(boundary-simplex-3,boundary-simplex-3)")));
}

TEST_CASE("classify collects every flag with witnesses on failure") {
    const ClassificationReport r = classify(torus);
    CHECK(r.pure);
    CHECK(r.eulerian.value == Flag::False);
    CHECK(r.semi_eulerian.value == Flag::True);
    CHECK(r.homology_manifold.value == Flag::True);
    CHECK(r.orientable.value == Flag::True);
    CHECK(r.pseudomanifold.value == Flag::True);
    CHECK(r.cohen_macaulay.value == Flag::False);
    CHECK(r.buchsbaum.value == Flag::True);
    CHECK(r.homology_sphere.value == Flag::False);

    for (const auto& c : testing::corpus_complexes()) {
        const ClassificationReport cr = classify(c);
        for (const Classification* f : {&cr.eulerian, &cr.semi_eulerian, &cr.homology_sphere,
                                         &cr.homology_manifold, &cr.orientable, &cr.pseudomanifold,
                                         &cr.cohen_macaulay, &cr.buchsbaum})
            if (f->value == Flag::False) CHECK(f->witness.has_value());
    }
}

TEST_CASE("property: odd-dimensional homology manifolds are Eulerian") {
    int checked = 0;
    for (const auto& c : testing::corpus_complexes()) {
        if (c.dim() > 3 || c.dim() % 2 == 0 || !c.is_pure()) continue;
        if (is_homology_manifold(c).manifold != Flag::True) continue;
        CHECK(is_eulerian(c));
        ++checked;
    }
    CHECK(checked >= 5);
}

TEST_CASE("property: odd-dimensional semi-Eulerian complexes are Eulerian") {
    std::mt19937 rng(31);
    std::vector<SimplicialComplex> cs = testing::corpus_complexes();
    for (int t = 0; t < 200; ++t) cs.push_back(testing::random_pure_complex(rng, 1, 7));
    int checked = 0;
    for (const auto& c : cs) {
        if (!c.is_pure() || c.dim() % 2 == 0) continue;
        if (is_semi_eulerian(c).value != Flag::True) continue;
        CHECK(is_eulerian(c));
        ++checked;
    }
    CHECK(checked >= 5);
}

TEST_CASE("property: cones are acyclic") {
    for (const auto& s : standard_corpus()) {
        const auto b = betti_numbers(generate("cone(" + s + ")"));
        for (long x : b.values) CHECK(x == 0);
    }
}

TEST_CASE("property: homology is invariant under vertex relabeling") {
    std::mt19937 rng(37);
    for (const auto& c : testing::corpus_complexes()) {
        std::vector<Vertex> perm(c.num_vertices());
        std::iota(perm.begin(), perm.end(), Vertex{100});
        std::shuffle(perm.begin(), perm.end(), rng);
        const auto& vs = c.vertices();
        const auto relabeled = relabel(c, [&](Vertex v) {
            return perm[static_cast<std::size_t>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin())];
        });
        CHECK(betti_numbers(relabeled) == betti_numbers(c));
        CHECK(is_homology_manifold(relabeled).manifold == is_homology_manifold(c).manifold);
    }
}

TEST_CASE("property: Euler-Poincare on random complexes") {
    // betti_numbers throws if the alternating sum disagrees with χ - 1
    std::mt19937 rng(41);
    for (int t = 0; t < 200; ++t) {
        const auto c = testing::random_complex(rng, 8);
        const auto b = betti_numbers(c);
        long alt = 0;
        for (int i = -1; i <= b.dim(); ++i) alt += (i % 2 == 0 ? 1 : -1) * b[i];
        CHECK(Integer(alt) == euler_characteristic(c) - 1);
        for (long x : b.values) CHECK(x >= 0);
    }
}
