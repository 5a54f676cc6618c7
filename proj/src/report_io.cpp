#include "hvec/report_io.hpp"

#include <sstream>

namespace hvec {

using ojson = nlohmann::ordered_json;

namespace {

ojson integer_json(const Integer& v) {
    if (v >= std::numeric_limits<long long>::min() && v <= std::numeric_limits<long long>::max())
        return static_cast<long long>(v);
    return v.str();
}

ojson integers_json(const std::vector<Integer>& vs) {
    ojson a = ojson::array();
    for (const Integer& v : vs) a.push_back(integer_json(v));
    return a;
}

ojson witness_json(const std::optional<Witness>& w) {
    if (!w) return nullptr;
    ojson face = ojson::array();
    for (Vertex v : w->face) face.push_back(v);
    return ojson{{"face", face}, {"reason", w->reason}};
}

ojson inequality_json(const InequalityResult& r) {
    ojson j;
    j["label"] = r.label;
    j["lhs"] = integer_json(r.lhs);
    j["relation"] = to_string(r.relation);
    j["rhs"] = integer_json(r.rhs);
    j["holds"] = r.holds;
    return j;
}

ojson classification_json(const Classification& c) {
    ojson j;
    j["value"] = to_string(c.value);
    j["witness"] = witness_json(c.witness);
    return j;
}

}  // namespace

Invariants compute_invariants(const SimplicialComplex& complex) {
    Invariants inv;
    inv.f = f_vector(complex);
    inv.h = h_from_f(inv.f);
    if (complex.is_pure()) inv.short_h = short_h_from_links(complex);
    inv.betti = betti_numbers(complex);
    for (int i = 0; i <= complex.dim(); ++i) inv.chi_partial.push_back(chi_partial(complex, i));
    return inv;
}

ojson to_json(const VerificationReport& report) {
    ojson j;
    j["statement"] = report.statement;
    j["overall"] = to_string(report.overall);
    j["vacuous"] = report.vacuous;
    ojson hyps = ojson::array();
    for (const auto& h : report.hypotheses) {
        ojson e;
        e["condition"] = h.condition;
        e["status"] = to_string(h.status);
        e["witness"] = witness_json(h.witness);
        hyps.push_back(std::move(e));
    }
    j["hypotheses"] = std::move(hyps);
    ojson concl = ojson::array();
    for (const auto& r : report.conclusion) concl.push_back(inequality_json(r));
    j["conclusion"] = std::move(concl);
    ojson obs = ojson::array();
    for (const auto& r : report.observations) obs.push_back(inequality_json(r));
    j["observations"] = std::move(obs);
    j["notes"] = report.notes;
    return j;
}

ojson to_json(const ClassificationReport& r) {
    ojson j;
    j["pure"] = r.pure;
    j["eulerian"] = classification_json(r.eulerian);
    j["semi_eulerian"] = classification_json(r.semi_eulerian);
    j["homology_sphere"] = classification_json(r.homology_sphere);
    j["homology_manifold"] = classification_json(r.homology_manifold);
    j["orientable"] = classification_json(r.orientable);
    j["pseudomanifold"] = classification_json(r.pseudomanifold);
    j["cohen_macaulay"] = classification_json(r.cohen_macaulay);
    j["buchsbaum"] = classification_json(r.buchsbaum);
    return j;
}

ojson to_json(const Invariants& inv) {
    ojson j;
    j["f"] = integers_json(inv.f.values);
    j["h"] = integers_json(inv.h.values);
    j["short_h"] = inv.short_h ? integers_json(inv.short_h->values) : ojson(nullptr);
    j["betti"] = inv.betti.values;
    j["chi_partial"] = integers_json(inv.chi_partial);
    return j;
}

std::string format_report(const VerificationReport& report) { return to_json(report).dump(2) + "\n"; }

std::string format_classification(const ClassificationReport& report) {
    return to_json(report).dump(2) + "\n";
}

std::string format_invariants(const Invariants& inv) {
    std::ostringstream os;
    os << "f = " << format_vector(inv.f.values) << '\n';
    os << "h = " << format_vector(inv.h.values) << '\n';
    if (inv.short_h) os << "short h = " << format_vector(inv.short_h->values) << '\n';
    else os << "short h = (undefined: complex is not pure)\n";
    std::vector<Integer> betti(inv.betti.values.begin(), inv.betti.values.end());
    os << "reduced betti = " << format_vector(betti) << '\n';
    os << "chi_i = " << format_vector(inv.chi_partial) << '\n';
    return os.str();
}

}  // namespace hvec
