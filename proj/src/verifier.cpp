#include "hvec/verifier.hpp"

#include "hvec/cyclic.hpp"
#include "hvec/vectors.hpp"

#include <algorithm>

namespace hvec {

const char* to_string(Relation r) {
    switch (r) {
        case Relation::LessEqual: return "<=";
        case Relation::GreaterEqual: return ">=";
        case Relation::Equal: return "==";
    }
    return "?";
}

const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Pass: return "pass";
        case Outcome::Fail: return "fail";
        case Outcome::HypothesesNotMet: return "hypotheses-not-met";
    }
    return "?";
}

int exit_code(Outcome o) {
    switch (o) {
        case Outcome::Pass: return 0;
        case Outcome::Fail: return 1;
        case Outcome::HypothesesNotMet: return 2;
    }
    return 1;
}

InequalityResult compare(std::string label, Integer lhs, Relation rel, Integer rhs) {
    bool holds = false;
    switch (rel) {
        case Relation::LessEqual: holds = lhs <= rhs; break;
        case Relation::GreaterEqual: holds = lhs >= rhs; break;
        case Relation::Equal: holds = lhs == rhs; break;
    }
    return InequalityResult{std::move(label), std::move(lhs), rel, std::move(rhs), holds};
}

bool VerificationReport::hypotheses_met() const {
    return std::all_of(hypotheses.begin(), hypotheses.end(),
                       [](const HypothesisResult& h) { return h.status == Flag::True; });
}

void VerificationReport::finalize() {
    vacuous = !hypotheses_met();
    if (vacuous) {
        overall = Outcome::HypothesesNotMet;
        return;
    }
    const bool ok = std::all_of(conclusion.begin(), conclusion.end(),
                                [](const InequalityResult& r) { return r.holds; });
    overall = ok ? Outcome::Pass : Outcome::Fail;
}

namespace {

HypothesisResult hypothesis(std::string condition, const Classification& c) {
    return HypothesisResult{std::move(condition), c.value, c.witness};
}

int odd_dimension_k(const SimplicialComplex& complex, const char* who) {
    if (!complex.is_pure()) throw ComplexError(std::string(who) + ": complex is not pure");
    const int dim = complex.dim();
    if (dim < 3 || dim % 2 == 0)
        throw ComplexError(std::string(who) + ": needs dimension 2k+1 with k >= 1, got " +
                           std::to_string(dim));
    return (dim - 1) / 2;
}

std::string label(const char* name, int i) { return std::string(name) + "_" + std::to_string(i); }

// Link condition of the theorem for one vertex link of dimension 2k.
HypothesisResult theorem_link_condition(const SimplicialComplex& lk, Vertex v, int k) {
    HypothesisResult h;
    h.condition = "lk " + Face{v}.str() +
                  " is a homology manifold with chi = 2, or oriented with the beta condition";
    auto fail = [&](std::string reason) {
        h.status = Flag::False;
        h.witness = Witness{Face{v}, std::move(reason)};
        return h;
    };

    const ManifoldClassification m = is_homology_manifold(lk);
    if (m.manifold != Flag::True)
        return fail("link is not a homology manifold" +
                    (m.witness ? ": " + m.witness->reason : std::string()));

    const BettiVector b = betti_numbers(lk);
    if (is_sphere_homology(b, lk.dim())) {
        h.status = Flag::True;
        return h;
    }
    const Integer chi = euler_characteristic(lk);
    if (chi == 2) {
        h.status = Flag::True;
        return h;
    }
    if (m.orientable != Flag::True)
        return fail("link has chi = " + chi.str() + " and is not orientable");
    if (!satisfies_beta_condition(b, k)) {
        long rhs = 2 * b[k - 1];
        for (int i = 0; i <= k - 3; ++i) rhs += 2 * b[i];
        return fail("link has chi = " + chi.str() + " and beta_" + std::to_string(k) + " = " +
                    std::to_string(b[k]) + " > " + std::to_string(rhs));
    }
    h.status = Flag::True;
    return h;
}

HypothesisResult corollary_link_condition(const SimplicialComplex& lk, Vertex v, int k) {
    HypothesisResult h;
    h.condition = "lk " + Face{v}.str() +
                  " is a homology manifold with vanishing middle homology or (-1)^k (chi - 2) <= 0";
    const ManifoldClassification m = is_homology_manifold(lk);
    if (m.manifold != Flag::True) {
        h.status = Flag::False;
        h.witness = Witness{Face{v}, "link is not a homology manifold" +
                                         (m.witness ? ": " + m.witness->reason : std::string())};
        return h;
    }
    const BettiVector b = betti_numbers(lk);
    const Integer chi = euler_characteristic(lk);
    if (b[k] == 0 || sign_power(k) * (chi - 2) <= 0) {
        h.status = Flag::True;
        return h;
    }
    h.status = Flag::False;
    h.witness = Witness{Face{v}, "beta_" + std::to_string(k) + " = " + std::to_string(b[k]) +
                                     " and chi = " + chi.str()};
    return h;
}

}  // namespace

std::vector<HypothesisResult> check_ubc_hypotheses(const SimplicialComplex& complex, UbcMode mode) {
    const int k = odd_dimension_k(complex, "ubc hypotheses");
    std::vector<HypothesisResult> out;
    if (mode == UbcMode::Corollary) {
        const ManifoldClassification p = is_pseudomanifold(complex);
        HypothesisResult h{"complex is an oriented pseudomanifold", Flag::True, std::nullopt};
        if (p.manifold != Flag::True || p.orientable != Flag::True) {
            h.status = Flag::False;
            h.witness = p.witness;
        }
        out.push_back(std::move(h));
    }
    for (Vertex v : complex.vertices()) {
        const SimplicialComplex lk = link(complex, Face{v});
        out.push_back(mode == UbcMode::Theorem ? theorem_link_condition(lk, v, k)
                                               : corollary_link_condition(lk, v, k));
    }
    return out;
}

VerificationReport verify_ubc(const SimplicialComplex& complex, UbcMode mode) {
    const int k = odd_dimension_k(complex, "ubc");
    const int d = 2 * k + 2;
    const int n = static_cast<int>(complex.num_vertices());

    VerificationReport r;
    r.statement = mode == UbcMode::Theorem ? "ubc" : "ubc-corollary";
    r.hypotheses = check_ubc_hypotheses(complex, mode);

    if (n <= d) {
        r.notes.push_back("C_" + std::to_string(d) + "(" + std::to_string(n) +
                          ") is undefined for n <= d; conclusion not evaluated");
        r.finalize();
        return r;
    }

    const SimplicialComplex cyclic = gale_facets(CyclicSpec(d, n));
    const FVector f = f_vector(complex);
    const FVector fc = f_vector(cyclic);
    for (int i = 1; i <= 2 * k + 1; ++i)
        r.conclusion.push_back(compare(label("f", i), f[i], Relation::LessEqual, fc[i]));

    const ShortHVector sh = short_h_from_links(complex);
    const ShortHVector shc = short_h_from_links(cyclic);
    for (int i = 0; i <= k + 1; ++i)
        r.conclusion.push_back(compare(label("h~", i), sh[i], Relation::LessEqual, shc[i]));

    const HVector h = h_from_f(f);
    const HVector hc = h_from_f(fc);
    for (int i = 0; i <= k + 1; ++i)
        r.observations.push_back(compare(label("h", i), h[i], Relation::LessEqual, hc[i]));
    r.notes.push_back("observations: h_i(D) <= h_i(C_d(n)) is an open question and is not asserted");

    r.finalize();
    return r;
}

VerificationReport check_lemma_hh(const SimplicialComplex& complex, int k) {
    if (k < 0 || complex.dim() != 2 * k)
        throw ComplexError("lemma-hh: needs dimension 2k = " + std::to_string(2 * k) + ", got " +
                           std::to_string(complex.dim()));
    VerificationReport r;
    r.statement = "lemma-hh";

    const ManifoldClassification m = is_homology_manifold(complex);
    r.hypotheses.push_back(HypothesisResult{"complex is a homology manifold", m.manifold,
                                            m.manifold == Flag::True ? std::nullopt : m.witness});

    HypothesisResult route{"chi = 2, or oriented with the beta condition", Flag::False, std::nullopt};
    const Integer chi = euler_characteristic(complex);
    if (chi == 2) {
        route.status = Flag::True;
    } else if (m.orientable != Flag::True) {
        route.witness = Witness{Face{}, "chi = " + chi.str() + " and not an oriented homology manifold"};
    } else if (k < 1) {
        route.witness = Witness{Face{}, "chi = " + chi.str() + "; beta condition needs k >= 1"};
    } else if (satisfies_beta_condition(complex, k)) {
        route.status = Flag::True;
    } else {
        route.witness = Witness{Face{}, "chi = " + chi.str() + " and the beta condition fails"};
    }
    r.hypotheses.push_back(std::move(route));

    const int rv = static_cast<int>(complex.num_vertices());
    const int d = 2 * k + 1;
    if (rv > d) {
        const HVector h = h_from_f(f_vector(complex));
        for (int i = 0; i <= k + 1; ++i)
            r.conclusion.push_back(compare(label("h", i), h[i], Relation::LessEqual, cyclic_h(d, rv, i)));
    } else {
        r.notes.push_back("C_" + std::to_string(d) + "(" + std::to_string(rv) +
                          ") is undefined; conclusion not evaluated");
    }
    r.finalize();
    return r;
}

VerificationReport check_sphere_ubc(const SimplicialComplex& complex) {
    VerificationReport r;
    r.statement = "sphere-ubc";
    r.hypotheses.push_back(hypothesis("complex is a homology sphere", is_homology_sphere(complex)));

    const int d = complex.dim() + 1;
    const int n = static_cast<int>(complex.num_vertices());
    if (d >= 1 && n > d) {
        const HVector h = h_from_f(f_vector(complex));
        for (int i = 0; i <= d - 1; ++i)
            r.conclusion.push_back(compare(label("h", i), h[i], Relation::LessEqual, cyclic_h(d, n, i)));
    } else {
        r.notes.push_back("no cyclic comparison for d = " + std::to_string(d) + ", n = " +
                          std::to_string(n));
    }
    r.finalize();
    return r;
}

VerificationReport check_dehn_sommerville(const SimplicialComplex& complex) {
    VerificationReport r;
    r.statement = "dehn-sommerville";
    r.hypotheses.push_back(hypothesis("complex is Eulerian", is_eulerian(complex)));

    const HVector h = h_from_f(f_vector(complex));
    const int d = h.d();
    for (int i = 0; i <= d / 2; ++i)
        r.conclusion.push_back(compare(label("h", i), h[i], Relation::Equal, h[d - i]));
    r.finalize();
    return r;
}

VerificationReport check_lower_bounds(const SimplicialComplex& complex) {
    if (!complex.is_pure()) throw ComplexError("lower-bounds: complex is not pure");
    VerificationReport r;
    r.statement = "lower-bounds";
    r.hypotheses.push_back(hypothesis("complex is Buchsbaum", is_buchsbaum(complex)));

    const int d = complex.dim() + 1;
    if (d >= 1) {
        for (int i = 0; i <= (d - 1) / 2; ++i)
            r.conclusion.push_back(compare("(-1)^" + std::to_string(i) + " chi_" + std::to_string(i),
                                           sign_power(i) * chi_partial(complex, i),
                                           Relation::GreaterEqual, 0));
        const ShortHVector sh = short_h_from_links(complex);
        for (int i = 0; i < sh.d(); ++i)
            r.observations.push_back(compare(label("h~", i), sh[i], Relation::GreaterEqual, 0));
    }
    r.finalize();
    return r;
}

const std::vector<std::string>& statement_names() {
    static const std::vector<std::string> names = {
        "ubc", "ubc-corollary", "lemma-hh", "sphere-ubc", "dehn-sommerville", "lower-bounds"};
    return names;
}

VerificationReport verify_statement(const std::string& statement, const SimplicialComplex& complex) {
    if (statement == "ubc") return verify_ubc(complex, UbcMode::Theorem);
    if (statement == "ubc-corollary") return verify_ubc(complex, UbcMode::Corollary);
    if (statement == "lemma-hh") {
        if (complex.dim() < 0 || complex.dim() % 2 != 0)
            throw ComplexError("lemma-hh: needs even dimension, got " + std::to_string(complex.dim()));
        return check_lemma_hh(complex, complex.dim() / 2);
    }
    if (statement == "sphere-ubc") return check_sphere_ubc(complex);
    if (statement == "dehn-sommerville") return check_dehn_sommerville(complex);
    if (statement == "lower-bounds") return check_lower_bounds(complex);
    throw std::invalid_argument("unknown statement '" + statement + "'");
}

}  // namespace hvec
