#include "hvec/generators.hpp"

#include "hvec/cyclic.hpp"
#include "hvec/homology.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <map>
#include <string_view>

namespace hvec {

// ---------------------------------------------------------------- parsing

namespace {

bool is_fixed_name(const std::string& name) {
    static constexpr std::array<std::string_view, 3> names = {"torus-7", "rp2-6", "icosahedron"};
    return std::find(names.begin(), names.end(), name) != names.end();
}

class SpecParser {
public:
    explicit SpecParser(const std::string& text) : s_(text) {}

    NamedComplexSpec parse_top() {
        skip_ws();
        NamedComplexSpec spec = parse_spec();
        // "cyclic 4 9": bare integers after a parameterless name.
        skip_ws();
        while (pos_ < s_.size() && spec.children.empty()) {
            if (!is_int_start()) break;
            spec.params.push_back(parse_int());
            skip_ws();
        }
        if (pos_ != s_.size()) fail("unexpected '" + std::string(1, s_[pos_]) + "'");
        return spec;
    }

private:
    NamedComplexSpec parse_spec() {
        NamedComplexSpec spec;
        spec.name = parse_name();
        skip_ws();
        if (pos_ < s_.size() && s_[pos_] == '(') {
            ++pos_;
            skip_ws();
            if (pos_ < s_.size() && s_[pos_] == ')') fail("empty argument list");
            while (true) {
                skip_ws();
                if (is_int_start()) spec.params.push_back(parse_int());
                else spec.children.push_back(parse_spec());
                skip_ws();
                if (pos_ < s_.size() && s_[pos_] == ',') { ++pos_; continue; }
                if (pos_ < s_.size() && s_[pos_] == ')') { ++pos_; break; }
                fail("expected ',' or ')'");
            }
        }
        return spec;
    }

    std::string parse_name() {
        const std::size_t start = pos_;
        while (pos_ < s_.size() && (std::isalnum(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-' ||
                                    s_[pos_] == '_'))
            ++pos_;
        if (start == pos_) fail("expected a generator name");
        return s_.substr(start, pos_ - start);
    }

    bool is_int_start() const {
        return pos_ < s_.size() && (std::isdigit(static_cast<unsigned char>(s_[pos_])) || s_[pos_] == '-');
    }

    long parse_int() {
        const std::size_t start = pos_;
        if (s_[pos_] == '-') ++pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (pos_ == start || (pos_ == start + 1 && s_[start] == '-')) fail("expected an integer");
        return std::stol(s_.substr(start, pos_ - start));
    }

    void skip_ws() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw SpecError("bad complex spec '" + s_ + "' at position " + std::to_string(pos_) + ": " + what);
    }

    const std::string& s_;
    std::size_t pos_ = 0;
};

// Rewrites dashed parameters into the parenthesized form before parsing:
// "wedge(boundary-simplex-4,cyclic-4-9)" -> "wedge(boundary-simplex(4),cyclic(4,9))".
NamedComplexSpec fold_dashed(const std::string& text) {
    std::string out;
    std::size_t i = 0;
    while (i < text.size()) {
        if (std::isalpha(static_cast<unsigned char>(text[i]))) {
            std::size_t j = i;
            while (j < text.size() && (std::isalnum(static_cast<unsigned char>(text[j])) || text[j] == '-' ||
                                       text[j] == '_'))
                ++j;
            std::string name = text.substr(i, j - i);
            std::vector<std::string> dashed;
            if (!is_fixed_name(name)) {
                while (true) {
                    const auto dash = name.rfind('-');
                    if (dash == std::string::npos || dash + 1 == name.size()) break;
                    const std::string tail = name.substr(dash + 1);
                    if (!std::all_of(tail.begin(), tail.end(),
                                     [](unsigned char c) { return std::isdigit(c); }))
                        break;
                    dashed.insert(dashed.begin(), tail);
                    name.erase(dash);
                }
            }
            out += name;
            if (!dashed.empty()) {
                out += '(';
                for (std::size_t k = 0; k < dashed.size(); ++k) out += (k ? "," : "") + dashed[k];
                out += ')';
            }
            i = j;
        } else {
            out += text[i++];
        }
    }
    SpecParser parser(out);
    return parser.parse_top();
}

}  // namespace

NamedComplexSpec NamedComplexSpec::parse(const std::string& text) { return fold_dashed(text); }

std::string NamedComplexSpec::str() const {
    if (children.empty()) {
        std::string s = name;
        for (long p : params) s += "-" + std::to_string(p);
        return s;
    }
    std::string s = name + "(";
    for (std::size_t i = 0; i < children.size(); ++i) s += (i ? "," : "") + children[i].str();
    for (long p : params) s += "," + std::to_string(p);
    return s + ")";
}

// ---------------------------------------------------------------- generators

namespace {

using FacetList = std::vector<std::vector<Vertex>>;

SimplicialComplex compact(const SimplicialComplex& c) {
    const auto& vs = c.vertices();
    return relabel(c, [&](Vertex v) {
        return static_cast<Vertex>(std::lower_bound(vs.begin(), vs.end(), v) - vs.begin());
    });
}

Vertex next_free(const SimplicialComplex& c) {
    return c.vertices().empty() ? 0 : c.vertices().back() + 1;
}

FacetList subsets_of_size(Vertex n, std::size_t k) {
    FacetList out;
    std::vector<bool> in(n, false);
    std::fill(in.begin(), in.begin() + static_cast<long>(k), true);
    do {
        std::vector<Vertex> f;
        for (Vertex i = 0; i < n; ++i)
            if (in[i]) f.push_back(i);
        out.push_back(std::move(f));
    } while (std::prev_permutation(in.begin(), in.end()));
    return out;
}

SimplicialComplex join(const SimplicialComplex& a, const SimplicialComplex& b) {
    const Vertex shift = next_free(a);
    std::vector<Face> faces;
    for (const Face& f : a.facets())
        for (const Face& g : b.facets()) {
            std::vector<Vertex> vs(f.begin(), f.end());
            for (Vertex v : g) vs.push_back(v + shift);
            faces.emplace_back(std::move(vs));
        }
    return SimplicialComplex::from_faces(std::move(faces));
}

SimplicialComplex disjoint(const SimplicialComplex& a, const SimplicialComplex& b) {
    const Vertex shift = next_free(a);
    std::vector<Face> faces(a.facets());
    const SimplicialComplex moved = relabel(b, [&](Vertex v) { return v + shift; });
    faces.insert(faces.end(), moved.facets().begin(), moved.facets().end());
    return SimplicialComplex::from_faces(std::move(faces));
}

SimplicialComplex wedge(const SimplicialComplex& a, const SimplicialComplex& b, Vertex va, Vertex vb) {
    const auto& av = a.vertices();
    const auto& bv = b.vertices();
    if (!std::binary_search(av.begin(), av.end(), va))
        throw SpecError("wedge: vertex " + std::to_string(va) + " is not in the first complex");
    if (!std::binary_search(bv.begin(), bv.end(), vb))
        throw SpecError("wedge: vertex " + std::to_string(vb) + " is not in the second complex");
    const Vertex shift = next_free(a);
    std::vector<Face> faces(a.facets());
    const SimplicialComplex moved = relabel(b, [&](Vertex v) { return v == vb ? va : v + shift; });
    faces.insert(faces.end(), moved.facets().begin(), moved.facets().end());
    return SimplicialComplex::from_faces(std::move(faces));
}

SimplicialComplex torus7() {
    FacetList f;
    for (Vertex i = 0; i < 7; ++i) {
        f.push_back({i, (i + 1) % 7, (i + 3) % 7});
        f.push_back({i, (i + 2) % 7, (i + 3) % 7});
    }
    return build_complex(f);
}

SimplicialComplex rp2_6() {
    return build_complex({{0, 1, 2}, {0, 2, 3}, {0, 3, 4}, {0, 4, 5}, {0, 5, 1},
                          {1, 2, 4}, {2, 3, 5}, {3, 4, 1}, {4, 5, 2}, {5, 1, 3}});
}

SimplicialComplex icosahedron() {
    // 0 top, 1..5 upper ring, 6..10 lower ring, 11 bottom.
    FacetList f;
    for (Vertex j = 0; j < 5; ++j) {
        const Vertex u = 1 + j, u1 = 1 + (j + 1) % 5;
        const Vertex l = 6 + j, l1 = 6 + (j + 1) % 5;
        f.push_back({0, u, u1});
        f.push_back({u, u1, l});
        f.push_back({u1, l, l1});
        f.push_back({11, l, l1});
    }
    return build_complex(f);
}

// Embedded triangulations are checked against their advertised homology once.
void validate_embedded(const std::string& name, const SimplicialComplex& c) {
    std::string problem;
    const BettiVector b = betti_numbers(c);
    if (name == "torus-7") {
        const auto m = is_homology_manifold(c);
        if (c.facets().size() != 14 || c.num_vertices() != 7) problem = "expected 14 facets on 7 vertices";
        else if (b != BettiVector{{0, 0, 2, 1}}) problem = "unexpected Betti numbers";
        else if (m.manifold != Flag::True || m.orientable != Flag::True) problem = "not an orientable manifold";
    } else if (name == "rp2-6") {
        if (c.facets().size() != 10 || c.num_vertices() != 6) problem = "expected 10 facets on 6 vertices";
        else if (b != BettiVector{{0, 0, 0, 0}} || euler_characteristic(c) != 1) problem = "unexpected homology";
        else if (is_homology_manifold(c).manifold != Flag::True) problem = "not a manifold";
    } else if (name == "icosahedron") {
        if (c.facets().size() != 20 || c.num_vertices() != 12) problem = "expected 20 facets on 12 vertices";
        else if (!is_homology_sphere(c)) problem = "not a homology sphere";
    }
    if (!problem.empty()) throw std::logic_error("embedded triangulation " + name + ": " + problem);
}

const SimplicialComplex& embedded(const std::string& name) {
    static const std::map<std::string, SimplicialComplex> table = [] {
        std::map<std::string, SimplicialComplex> t;
        t.emplace("torus-7", torus7());
        t.emplace("rp2-6", rp2_6());
        t.emplace("icosahedron", icosahedron());
        for (const auto& [n, c] : t) validate_embedded(n, c);
        return t;
    }();
    return table.at(name);
}

void expect_shape(const NamedComplexSpec& s, std::size_t params, std::size_t children) {
    if (s.params.size() != params || s.children.size() != children)
        throw SpecError("'" + s.name + "' takes " + std::to_string(children) + " complex and " +
                        std::to_string(params) + " integer argument(s), got '" + s.str() + "'");
}

long param_in(const NamedComplexSpec& s, std::size_t i, long lo, long hi, const char* what) {
    const long v = s.params[i];
    if (v < lo || v > hi)
        throw SpecError(s.name + ": " + what + " = " + std::to_string(v) + " outside " +
                        std::to_string(lo) + ".." + std::to_string(hi));
    return v;
}

SimplicialComplex generate_raw(const NamedComplexSpec& s) {
    const std::string& n = s.name;
    if (is_fixed_name(n)) {
        expect_shape(s, 0, 0);
        return embedded(n);
    }
    if (n == "simplex") {
        expect_shape(s, 1, 0);
        const long d = param_in(s, 0, 0, 16, "d");
        std::vector<Vertex> f(static_cast<std::size_t>(d + 1));
        for (std::size_t i = 0; i < f.size(); ++i) f[i] = static_cast<Vertex>(i);
        return build_complex({f});
    }
    if (n == "boundary-simplex") {
        expect_shape(s, 1, 0);
        const long d = param_in(s, 0, 1, 16, "d");
        return build_complex(subsets_of_size(static_cast<Vertex>(d + 1), static_cast<std::size_t>(d)));
    }
    if (n == "cross-polytope") {
        expect_shape(s, 1, 0);
        const long d = param_in(s, 0, 1, 12, "d");
        FacetList f;
        for (std::uint32_t mask = 0; mask < (1u << d); ++mask) {
            std::vector<Vertex> face;
            for (long i = 0; i < d; ++i) face.push_back(static_cast<Vertex>(2 * i + ((mask >> i) & 1u)));
            f.push_back(std::move(face));
        }
        return build_complex(f);
    }
    if (n == "cyclic") {
        expect_shape(s, 2, 0);
        const long d = param_in(s, 0, 2, 16, "d");
        const long nv = param_in(s, 1, d + 1, 24, "n");
        return gale_facets(CyclicSpec(static_cast<int>(d), static_cast<int>(nv)));
    }
    if (n == "cone") {
        expect_shape(s, 0, 1);
        return join(generate(s.children[0]), build_complex({{0}}));
    }
    if (n == "suspension") {
        expect_shape(s, 0, 1);
        return join(generate(s.children[0]), build_complex({{0}, {1}}));
    }
    if (n == "join") {
        expect_shape(s, 0, 2);
        return join(generate(s.children[0]), generate(s.children[1]));
    }
    if (n == "disjoint") {
        expect_shape(s, 0, 2);
        return disjoint(generate(s.children[0]), generate(s.children[1]));
    }
    if (n == "wedge") {
        if (s.children.size() != 2 || (s.params.size() != 0 && s.params.size() != 2))
            throw SpecError("'wedge' takes two complexes and optionally two vertices, got '" + s.str() + "'");
        const SimplicialComplex a = generate(s.children[0]);
        const SimplicialComplex b = generate(s.children[1]);
        if (a.vertices().empty() || b.vertices().empty()) throw SpecError("wedge: complex without vertices");
        Vertex va = a.vertices().front(), vb = b.vertices().front();
        if (s.params.size() == 2) {
            if (s.params[0] < 0 || s.params[1] < 0) throw SpecError("wedge: negative vertex id");
            va = static_cast<Vertex>(s.params[0]);
            vb = static_cast<Vertex>(s.params[1]);
        }
        return wedge(a, b, va, vb);
    }
    throw SpecError("unknown generator '" + n + "'");
}

}  // namespace

SimplicialComplex generate(const NamedComplexSpec& spec) { return compact(generate_raw(spec)); }

SimplicialComplex generate(const std::string& spec) { return generate(NamedComplexSpec::parse(spec)); }

const std::vector<std::string>& standard_corpus() {
    static const std::vector<std::string> corpus = {
        // dimension 0 and 1
        "boundary-simplex-1",
        "boundary-simplex-2",
        "cyclic-2-5",
        "disjoint(simplex-1,simplex-1)",
        // dimension 2
        "simplex-2",
        "wedge(simplex-2,simplex-2)",
        "boundary-simplex-3",
        "cross-polytope-3",
        "icosahedron",
        "torus-7",
        "rp2-6",
        "suspension(boundary-simplex-2)",
        "cyclic-3-7",
        "disjoint(boundary-simplex-3,boundary-simplex-3)",
        "wedge(boundary-simplex-3,boundary-simplex-3)",
        // dimension 3
        "boundary-simplex-4",
        "cross-polytope-4",
        "cyclic-4-7",
        "cyclic-4-9",
        "join(boundary-simplex-2,boundary-simplex-2)",
        "wedge(boundary-simplex-4,boundary-simplex-4)",
        "suspension(torus-7)",
        "suspension(rp2-6)",
        "cone(torus-7)",
        "disjoint(boundary-simplex-4,boundary-simplex-4)",
        // dimension 4 and 5
        "boundary-simplex-5",
        "cyclic-5-8",
        "suspension(boundary-simplex-4)",
        "cyclic-6-9",
    };
    return corpus;
}

}  // namespace hvec
