#include "hvec/cli.hpp"

#include "hvec/facet_io.hpp"
#include "hvec/generators.hpp"
#include "hvec/report_io.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <future>
#include <iomanip>
#include <map>
#include <optional>
#include <ostream>

namespace hvec {

namespace fs = std::filesystem;

namespace {

struct SweepRow {
    std::string file;
    std::string outcome;
    std::string detail;
};

SweepRow sweep_one(const std::string& statement, const fs::path& path) {
    SweepRow row{path.filename().string(), "", ""};
    std::optional<FacetFile> file;
    try {
        file = load_facet_file(path);
    } catch (const std::exception& e) {
        row.outcome = "error";
        row.detail = e.what();
        return row;
    }
    try {
        const VerificationReport r = verify_statement(statement, file->complex);
        row.outcome = to_string(r.overall);
        const auto bad = std::find_if(r.conclusion.begin(), r.conclusion.end(),
                                      [](const InequalityResult& i) { return !i.holds; });
        if (r.overall == Outcome::HypothesesNotMet) {
            const auto h = std::find_if(r.hypotheses.begin(), r.hypotheses.end(),
                                        [](const HypothesisResult& x) { return x.status != Flag::True; });
            if (h != r.hypotheses.end())
                row.detail = h->witness ? (h->witness->face.str() + " " + h->witness->reason) : h->condition;
        } else if (bad != r.conclusion.end()) {
            row.detail = bad->label + ": " + bad->lhs.str() + " " + to_string(bad->relation) + " " +
                         bad->rhs.str() + " fails";
        }
    } catch (const ComplexError& e) {
        row.outcome = "skipped";
        row.detail = e.what();
    }
    return row;
}

int sweep(const std::string& statement, const fs::path& dir, std::ostream& out) {
    std::vector<fs::path> files;
    for (const auto& entry : fs::directory_iterator(dir))
        if (entry.is_regular_file() && entry.path().extension() == ".json") files.push_back(entry.path());
    std::sort(files.begin(), files.end());

    std::vector<std::future<SweepRow>> jobs;
    jobs.reserve(files.size());
    for (const auto& f : files) jobs.push_back(std::async(std::launch::async, sweep_one, statement, f));

    std::size_t width = 4;
    std::vector<SweepRow> rows;
    for (auto& j : jobs) {
        rows.push_back(j.get());
        width = std::max(width, rows.back().file.size());
    }

    std::map<std::string, int> tally;
    out << std::left << std::setw(static_cast<int>(width)) << "file" << "  " << std::setw(18) << "outcome"
        << "  detail\n";
    for (const auto& r : rows) {
        ++tally[r.outcome];
        out << std::left << std::setw(static_cast<int>(width)) << r.file << "  " << std::setw(18) << r.outcome
            << "  " << r.detail << '\n';
    }
    out << rows.size() << " files:";
    for (const char* k : {"pass", "fail", "hypotheses-not-met", "skipped", "error"})
        out << ' ' << tally[k] << ' ' << k << (std::string(k) == "error" ? "" : ",");
    out << '\n';
    return (tally["fail"] > 0 || tally["error"] > 0) ? 1 : 0;
}

}  // namespace

std::string corpus_file_name(const std::string& spec) {
    std::string name;
    for (char c : spec) {
        if (c == '(' || c == ',') name += '_';
        else if (c != ')' && c != ' ') name += c;
    }
    return name + ".json";
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
    CLI::App app{"Face-vector invariants and upper/lower bound checks for simplicial complexes", "hvec"};
    app.require_subcommand(1);

    std::string file, statement, output, dir;
    bool as_json = false;
    std::vector<std::string> spec_tokens;

    auto* invariants = app.add_subcommand("invariants", "Print f, h, short h, Betti numbers and chi_i");
    invariants->add_option("file", file, "facet-list file")->required();
    invariants->add_flag("--json", as_json, "print a JSON document instead of text");

    auto* classify_cmd = app.add_subcommand("classify", "Print the classification report");
    classify_cmd->add_option("file", file, "facet-list file")->required();

    auto* verify = app.add_subcommand("verify", "Verify one statement on a complex");
    verify->add_option("statement", statement, "statement name")
        ->required()
        ->check(CLI::IsMember(statement_names()));
    verify->add_option("file", file, "facet-list file")->required();

    auto* gen = app.add_subcommand("gen", "Generate a named complex");
    gen->add_option("spec", spec_tokens, "generator spec, e.g. 'cyclic 4 9' or 'wedge(torus-7,rp2-6)'")
        ->required();
    gen->add_option("-o,--output", output, "write the facet file here instead of stdout");

    auto* sweep_cmd = app.add_subcommand("sweep", "Verify a statement on every .json file in a directory");
    sweep_cmd->add_option("statement", statement, "statement name")
        ->required()
        ->check(CLI::IsMember(statement_names()));
    sweep_cmd->add_option("dir", dir, "directory of facet files")->required()->check(CLI::ExistingDirectory);

    auto* corpus_cmd = app.add_subcommand("corpus", "Write the built-in test corpus as facet files");
    corpus_cmd->add_option("dir", dir, "output directory")->required();

    std::vector<std::string> argv_storage{"hvec"};
    argv_storage.insert(argv_storage.end(), args.begin(), args.end());
    std::vector<const char*> argv;
    for (const auto& a : argv_storage) argv.push_back(a.c_str());

    try {
        app.parse(static_cast<int>(argv.size()), argv.data());
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? 0 : kUsageError;
    }

    try {
        if (*invariants) {
            const Invariants inv = compute_invariants(load_facet_file(file).complex);
            out << (as_json ? to_json(inv).dump(2) + "\n" : format_invariants(inv));
            return 0;
        }
        if (*classify_cmd) {
            out << format_classification(classify(load_facet_file(file).complex));
            return 0;
        }
        if (*verify) {
            const VerificationReport r = verify_statement(statement, load_facet_file(file).complex);
            out << format_report(r);
            return exit_code(r.overall);
        }
        if (*gen) {
            std::string text;
            for (const auto& t : spec_tokens) text += (text.empty() ? "" : " ") + t;
            const NamedComplexSpec spec = NamedComplexSpec::parse(text);
            const SimplicialComplex c = generate(spec);
            if (output.empty()) out << format_facet_file(spec.str(), c);
            else save_facet_file(output, spec.str(), c);
            return 0;
        }
        if (*sweep_cmd) return sweep(statement, dir, out);
        if (*corpus_cmd) {
            fs::create_directories(dir);
            for (const auto& s : standard_corpus()) {
                const NamedComplexSpec spec = NamedComplexSpec::parse(s);
                save_facet_file(fs::path(dir) / corpus_file_name(spec.str()), spec.str(), generate(spec));
            }
            out << "wrote " << standard_corpus().size() << " complexes to " << dir << '\n';
            return 0;
        }
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return kUsageError;
    }
    return kUsageError;
}

}  // namespace hvec
