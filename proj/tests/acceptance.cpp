// Acceptance suite: one [PASS]/[FAIL] line per criterion, nonzero exit on any failure.
//
// Every comparison below is exact (integer or rational equality); there is no
// floating-point tolerance anywhere.

#include "hvec/cli.hpp"
#include "hvec/cyclic.hpp"
#include "hvec/facet_io.hpp"
#include "hvec/homology.hpp"
#include "hvec/verifier.hpp"
#include "hvec/vectors.hpp"
#include "test_support.hpp"

#include <chrono>
#include <filesystem>
#include <functional>
#include <iostream>
#include <sstream>

using namespace hvec;
using testing::named;

namespace {

/// Exact comparison: allowed absolute deviation between computed and expected values.
constexpr long kTolerance = 0;
/// Wall-clock budget for the whole suite.
constexpr double kTimeBudgetSeconds = 60.0;

class Failure : public std::runtime_error {
public:
    using std::runtime_error::runtime_error;
};

void require(bool ok, const std::string& what) {
    if (!ok) throw Failure(what);
}

void require_equal(const Integer& got, const Integer& want, const std::string& what) {
    Integer diff = got - want;
    if (diff < 0) diff = -diff;
    if (diff > kTolerance) throw Failure(what + ": got " + to_string(got) + ", expected " + to_string(want));
}

struct Criterion {
    std::string id;
    std::string title;
    std::function<std::string()> check;  // returns a short summary on success
};

std::vector<std::pair<std::string, SimplicialComplex>> corpus() {
    std::vector<std::pair<std::string, SimplicialComplex>> out;
    for (const auto& s : standard_corpus()) out.emplace_back(s, generate(s));
    return out;
}

std::string ac1() {
    int count = 0;
    std::set<int> dims;
    for (const auto& [name, c] : corpus()) {
        const FVector f = f_vector(c);
        require(f_from_h(h_from_f(f)) == f, name + ": f_from_h(h_from_f(f)) != f");
        require(c.is_pure(), name + ": corpus complex is not pure");
        const ShortHVector sh = short_h_from_f(f);
        require(f_from_short_h(sh) == f, name + ": f_from_short_h(short_h_from_f(f)) != f");
        require(short_h_from_links(c) == sh, name + ": short_h_from_links != short_h_from_f(f_vector)");
        ++count;
        dims.insert(c.dim());
    }
    require(count >= 15, "corpus has fewer than 15 complexes");
    for (int d = 1; d <= 4; ++d) require(dims.count(d) == 1, "corpus lacks dimension " + std::to_string(d));
    return std::to_string(count) + " complexes";
}

std::string ac2() {
    int checks = 0;
    for (const auto& [name, c] : corpus()) {
        if (!c.is_pure()) continue;
        for (int j = 0; j <= c.dim(); ++j) {
            Integer sum = 0;
            for (Vertex v : c.vertices()) sum += static_cast<long>(link(c, Face{v}).count(j - 1));
            require_equal(sum, Integer(j + 1) * static_cast<long>(c.count(j)),
                          name + ": vertex-link identity at j = " + std::to_string(j));
            ++checks;
        }
    }
    return std::to_string(checks) + " (complex, j) pairs";
}

std::string ac3() {
    int pairs = 0;
    for (int d = 2; d <= 6; ++d)
        for (int n = d + 1; n <= 10; ++n) {
            const HVector h = h_from_f(f_vector(gale_facets(CyclicSpec(d, n))));
            for (int i = 0; i <= d; ++i)
                require_equal(h[i], cyclic_h(d, n, i),
                              "h_" + std::to_string(i) + "(C_" + std::to_string(d) + "(" + std::to_string(n) + "))");
            ++pairs;
        }
    for (auto [d, n] : {std::pair{3, 5}, std::pair{4, 6}})
        require(testing::facet_set(gale_facets(CyclicSpec(d, n))) == testing::moment_curve_hull(d, n),
                "Gale facets of C_" + std::to_string(d) + "(" + std::to_string(n) + ") differ from the hull");
    return std::to_string(pairs) + " (d, n) pairs, 2 hull comparisons";
}

Rational integral_by_expansion(int i, int m) {
    Rational s = 0;
    for (int t = 0; t <= m; ++t) s += Rational(binomial(m, t) * sign_power(m - t), i + t + 1);
    return s;
}

std::string ac4() {
    int complexes = 0;
    for (const auto& [name, c] : corpus()) {
        if (!c.is_pure() || c.dim() != 3) continue;
        const HVector h = h_from_f(f_vector(c));
        const ShortHVector sh = short_h_from_links(c);
        for (int r = 0; r <= 4; ++r) {
            const Rational v = h_via_short_h(sh, 1, r);
            require(denominator(v) == 1, name + ": h_" + std::to_string(r) + " via h~ is not an integer");
            require_equal(numerator(v), h[r], name + ": h_" + std::to_string(r) + " via h~");
        }
        ++complexes;
    }
    require(complexes >= 3, "fewer than 3 pure 3-dimensional corpus complexes");
    for (int r = 1; r <= 10; ++r)
        for (int i = 0; i < r; ++i)
            require(beta_integral(i, r) == integral_by_expansion(i, r - i - 1),
                    "I(" + std::to_string(i) + "," + std::to_string(r) + ") disagrees with expansion");
    for (int k = 0; k <= 4; ++k)
        for (int r = 0; r <= 2 * k + 2; ++r)
            for (int i = 0; i < r; ++i) {
                const Rational coeff = h_short_coeff(k, i, r);
                require(coeff != 0 && (coeff > 0) == ((r - i - 1) % 2 == 0),
                        "coefficient sign at k=" + std::to_string(k) + " i=" + std::to_string(i) +
                            " r=" + std::to_string(r));
            }
    return std::to_string(complexes) + " complexes, 55 integrals, signs for k <= 4";
}

struct CliRun {
    int code;
    std::string out;
};

CliRun run_cli(const std::vector<std::string>& args) {
    std::ostringstream out, err;
    const int code = run(args, out, err);
    return {code, out.str()};
}

std::string ac5() {
    const auto dir = std::filesystem::temp_directory_path() / "hvec_acceptance";
    std::filesystem::remove_all(dir);
    std::filesystem::create_directories(dir);
    const auto file = [&](const std::string& spec) {
        const std::string path = (dir / corpus_file_name(spec)).string();
        require(run_cli({"gen", spec, "-o", path}).code == 0, "gen " + spec);
        return path;
    };
    struct Expect {
        std::string spec;
        int code;
        long f3;
        long f3_cyclic;
    };
    const std::vector<Expect> cases = {
        {"boundary-simplex-4", 0, 5, 5},
        {"wedge(boundary-simplex-4,boundary-simplex-4)", 0, 10, 27},
        {"cross-polytope-4", 0, 16, 20},
    };
    for (const auto& e : cases) {
        const auto r = run_cli({"verify", "ubc", file(e.spec)});
        require(r.code == e.code, e.spec + ": exit " + std::to_string(r.code));
        const auto report = verify_ubc(generate(e.spec));
        bool found = false;
        for (const auto& row : report.conclusion)
            if (row.label == "f_3") {
                require_equal(row.lhs, e.f3, e.spec + ": f_3");
                require_equal(row.rhs, e.f3_cyclic, e.spec + ": f_3 of the cyclic polytope");
                found = true;
            }
        require(found, e.spec + ": no f_3 row");
    }
    const auto s4 = verify_ubc(generate("boundary-simplex-4"));
    for (const auto& row : s4.conclusion) require(row.lhs == row.rhs, "boundary-simplex-4: not an equality case");

    const std::string susp = "suspension(torus-7)";
    const auto r = run_cli({"verify", "ubc", file(susp)});
    require(r.code == 2, susp + ": exit " + std::to_string(r.code));
    const auto report = verify_ubc(generate(susp));
    int witnessed = 0;
    for (const auto& h : report.hypotheses)
        if (h.status == Flag::False) {
            require(h.witness && h.witness->face.dim() == 0, susp + ": failing hypothesis without a vertex witness");
            ++witnessed;
        }
    require(witnessed > 0, susp + ": no failing vertex");
    std::filesystem::remove_all(dir);
    return "3 passes with exit 0, suspension exits 2 with " + std::to_string(witnessed) + " vertex witnesses";
}

std::string ac6() {
    for (const auto* spec : {"cross-polytope-3", "boundary-simplex-3"}) {
        const auto r = check_lemma_hh(generate(spec), 1);
        require(r.overall == Outcome::Pass, std::string(spec) + ": not pass");
        for (const auto& row : r.conclusion)
            require(row.lhs == row.rhs, std::string(spec) + ": " + row.label + " is not an equality");
    }
    const auto t = check_lemma_hh(generate("torus-7"), 1);
    require(t.overall == Outcome::HypothesesNotMet && t.vacuous, "torus-7: not reported as hypotheses-not-met");
    bool h2 = false;
    for (const auto& row : t.conclusion)
        if (row.label == "h_2") {
            require_equal(row.lhs, 10, "torus-7 h_2");
            require_equal(row.rhs, 4, "cyclic h_2");
            require(!row.holds, "torus-7: h_2 <= 4 unexpectedly holds");
            h2 = true;
        }
    require(h2, "torus-7: no h_2 row");
    return "equality on octahedron and tetrahedron boundary, torus h_2 = 10 > 4 vacuous";
}

std::string ac7() {
    for (int d = 1; d <= 12; ++d)
        for (int i = 0; i <= (d - 1) / 2; ++i)
            for (int l = 0; l <= i; ++l)
                require(lower_bound_coeff(d, i, l) >= 0, "c(" + std::to_string(i) + "," + std::to_string(l) + "," +
                                                             std::to_string(d) + ") < 0");
    int buchsbaum = 0;
    for (const auto& [name, c] : corpus()) {
        if (!c.is_pure() || is_buchsbaum(c).value != Flag::True) continue;
        require(check_lower_bounds(c).overall == Outcome::Pass, name + ": lower bounds fail");
        ++buchsbaum;
    }
    const auto t = check_lower_bounds(generate("torus-7"));
    require(t.overall == Outcome::Pass, "torus-7: lower bounds fail");
    require(t.conclusion.size() == 2, "torus-7: expected two inequalities");
    require_equal(t.conclusion[0].lhs, 7, "torus-7 chi_0");
    require_equal(t.conclusion[1].lhs, 14, "torus-7 -chi_1");
    return std::to_string(buchsbaum) + " Buchsbaum corpus complexes";
}

std::string ac8() {
    for (int d = 2; d <= 5; ++d)
        require(is_eulerian(generate("boundary-simplex-" + std::to_string(d))).value == Flag::True,
                "boundary-simplex-" + std::to_string(d) + " not Eulerian");
    const auto torus = generate("torus-7");
    require(is_semi_eulerian(torus).value == Flag::True, "torus-7 not semi-Eulerian");
    require(is_eulerian(torus).value == Flag::False, "torus-7 Eulerian");
    int odd = 0, eulerian = 0;
    for (const auto& [name, c] : corpus()) {
        if (c.is_pure() && c.dim() % 2 == 1 && is_semi_eulerian(c).value == Flag::True) {
            require(is_eulerian(c).value == Flag::True, name + ": odd-dimensional semi-Eulerian but not Eulerian");
            ++odd;
        }
        if (is_eulerian(c).value == Flag::True) {
            const HVector h = h_from_f(f_vector(c));
            const int d = h.d();
            for (int i = 0; i <= d; ++i) require_equal(h[i], h[d - i], name + ": h not palindromic");
            ++eulerian;
        }
    }
    return std::to_string(odd) + " odd semi-Eulerian, " + std::to_string(eulerian) + " Eulerian corpus complexes";
}

std::string ac9() {
    const std::vector<std::pair<std::string, std::vector<long>>> expected = {
        {"boundary-simplex-3", {0, 0, 0, 1}},
        {"cross-polytope-3", {0, 0, 0, 1}},
        {"torus-7", {0, 0, 2, 1}},
        {"rp2-6", {0, 0, 0, 0}},
        {"join(boundary-simplex-2,boundary-simplex-2)", {0, 0, 0, 0, 1}},
    };
    for (const auto& [spec, b] : expected)
        require(betti_numbers(generate(spec)).values == b, spec + ": wrong Betti numbers");
    int checked = 0;
    for (const auto& [name, c] : corpus()) {
        const BettiVector b = betti_numbers(c);
        Integer alt = 0;
        for (int i = -1; i <= b.dim(); ++i) alt += sign_power(i + 2) * b[i];
        require_equal(alt, euler_characteristic(c) - 1, name + ": Euler-Poincare");
        ++checked;
    }
    return "5 reference complexes, Euler-Poincare on " + std::to_string(checked);
}

}  // namespace

int main() {
    const std::vector<Criterion> criteria = {
        {"AC1", "transform identities", ac1},
        {"AC2", "vertex-link face-count identity", ac2},
        {"AC3", "cyclic h-vectors and hull oracle", ac3},
        {"AC4", "h from the short h-vector", ac4},
        {"AC5", "upper bound pipeline", ac5},
        {"AC6", "2k-dimensional manifold h-bound sharpness", ac6},
        {"AC7", "lower-bound coefficients and Buchsbaum sweep", ac7},
        {"AC8", "classifier ground truth", ac8},
        {"AC9", "homology oracle", ac9},
    };
    const auto start = std::chrono::steady_clock::now();
    int failed = 0;
    for (const auto& c : criteria) {
        std::string detail;
        bool ok = false;
        try {
            detail = c.check();
            ok = true;
        } catch (const std::exception& e) {
            detail = e.what();
        }
        if (!ok) ++failed;
        std::cout << (ok ? "[PASS] " : "[FAIL] ") << c.id << " " << c.title << ": " << detail << "\n";
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    if (seconds > kTimeBudgetSeconds) {
        std::cout << "time budget exceeded: " << seconds << " s\n";
        ++failed;
    }
    std::cout << (criteria.size() - static_cast<std::size_t>(failed)) << "/" << criteria.size() << " criteria passed\n";
    return failed == 0 ? 0 : 1;
}
