#include "hvec/facet_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <cctype>
#include <fstream>
#include <iterator>
#include <limits>
#include <optional>
#include <sstream>

namespace hvec {

namespace {

using json = nlohmann::json;

// Forward iterator over the text that records how far the parser has read.
class TrackingIterator {
public:
    using iterator_category = std::forward_iterator_tag;
    using value_type = char;
    using difference_type = std::ptrdiff_t;
    using pointer = const char*;
    using reference = const char&;

    TrackingIterator() = default;
    TrackingIterator(const char* p, const char* base, std::size_t* consumed)
        : p_(p), base_(base), consumed_(consumed) {}

    reference operator*() const { return *p_; }
    TrackingIterator& operator++() {
        ++p_;
        *consumed_ = std::max(*consumed_, static_cast<std::size_t>(p_ - base_));
        return *this;
    }
    TrackingIterator operator++(int) {
        TrackingIterator old = *this;
        ++*this;
        return old;
    }
    friend bool operator==(const TrackingIterator& a, const TrackingIterator& b) { return a.p_ == b.p_; }
    friend bool operator!=(const TrackingIterator& a, const TrackingIterator& b) { return a.p_ != b.p_; }

private:
    const char* p_ = nullptr;
    const char* base_ = nullptr;
    std::size_t* consumed_ = nullptr;
};

std::size_t line_at(std::string_view text, std::size_t pos) {
    pos = std::min(pos, text.size());
    // The lexer may have read one character past a number; back up to the token.
    while (pos > 0 && std::isspace(static_cast<unsigned char>(text[pos - 1]))) --pos;
    return 1 + static_cast<std::size_t>(std::count(text.begin(), text.begin() + static_cast<long>(pos), '\n'));
}

class FacetSax : public nlohmann::json_sax<json> {
public:
    FacetSax(std::string_view text, const std::size_t* consumed) : text_(text), consumed_(consumed) {}

    bool null() override { return unexpected("null"); }
    bool boolean(bool) override { return unexpected("boolean"); }
    bool number_float(number_float_t, const string_t&) override {
        return unexpected("non-integer number");
    }
    bool number_integer(number_integer_t v) override {
        if (v < 0 && depth_ == 3) fail("negative vertex id " + std::to_string(v));
        return unexpected("integer");
    }
    bool number_unsigned(number_unsigned_t v) override {
        if (depth_ != 3) return unexpected("integer");
        if (v > std::numeric_limits<Vertex>::max()) fail("vertex id " + std::to_string(v) + " too large");
        current_.push_back(static_cast<Vertex>(v));
        return true;
    }
    bool string(string_t& s) override {
        if (depth_ == 1 && key_ == "name") {
            name_ = s;
            return true;
        }
        return unexpected("string");
    }
    bool binary(binary_t&) override { return unexpected("binary value"); }

    bool start_object(std::size_t) override {
        if (depth_ != 0) return unexpected("object");
        ++depth_;
        return true;
    }
    bool key(string_t& k) override {
        if (k != "name" && k != "facets") fail("unknown field \"" + k + "\"");
        if ((k == "name" && name_) || (k == "facets" && facets_)) fail("duplicate field \"" + k + "\"");
        key_ = k;
        return true;
    }
    bool end_object() override {
        --depth_;
        if (!name_) fail("missing field \"name\"");
        if (!facets_) fail("missing field \"facets\"");
        return true;
    }
    bool start_array(std::size_t) override {
        if (depth_ == 1 && key_ == "facets") {
            facets_.emplace();
        } else if (depth_ == 2) {
            current_.clear();
        } else {
            return unexpected("array");
        }
        ++depth_;
        return true;
    }
    bool end_array() override {
        --depth_;
        if (depth_ == 2) {
            std::vector<Vertex> sorted = current_;
            std::sort(sorted.begin(), sorted.end());
            auto dup = std::adjacent_find(sorted.begin(), sorted.end());
            if (dup != sorted.end()) fail("facet repeats vertex " + std::to_string(*dup));
            facets_->push_back(current_);
        } else if (depth_ == 1 && facets_->empty()) {
            fail("\"facets\" is empty (the void complex is not supported)");
        }
        return true;
    }

    bool parse_error(std::size_t position, const std::string&, const nlohmann::detail::exception& ex) override {
        std::string msg = ex.what();
        // Strip nlohmann's "[json.exception.parse_error.101] " prefix.
        if (auto close = msg.find("] "); close != std::string::npos) msg = msg.substr(close + 2);
        // Drop nlohmann's own "parse error at line N, column M: " location.
        if (auto colon = msg.find(": "); msg.rfind("parse error", 0) == 0 && colon != std::string::npos)
            msg = msg.substr(colon + 2);
        throw FacetFormatError(line_at(text_, position), "malformed JSON: " + msg);
    }

    FacetFile result() {
        if (!name_ || !facets_) fail("expected an object with \"name\" and \"facets\"");
        return FacetFile{*name_, build_complex(*facets_)};
    }

private:
    [[noreturn]] bool unexpected(const std::string& what) {
        const std::string where = depth_ == 0   ? std::string("at top level")
                                  : depth_ == 1 ? "in field \"" + key_ + "\""
                                  : depth_ == 2 ? std::string("in the facet list")
                                                : std::string("inside a facet");
        fail("unexpected " + what + " " + where);
    }

    [[noreturn]] void fail(const std::string& what) const {
        throw FacetFormatError(line_at(text_, *consumed_), what);
    }

    std::string_view text_;
    const std::size_t* consumed_;
    int depth_ = 0;
    std::string key_;
    std::optional<std::string> name_;
    std::optional<std::vector<std::vector<Vertex>>> facets_;
    std::vector<Vertex> current_;
};

}  // namespace

FacetFile parse_facet_file(std::string_view text) {
    std::size_t consumed = 0;
    FacetSax sax(text, &consumed);
    TrackingIterator first(text.data(), text.data(), &consumed);
    TrackingIterator last(text.data() + text.size(), text.data(), &consumed);
    json::sax_parse(first, last, &sax);
    return sax.result();
}

FacetFile load_facet_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open " + path.string());
    std::ostringstream buf;
    buf << in.rdbuf();
    return parse_facet_file(buf.str());
}

std::string format_facet_file(const std::string& name, const SimplicialComplex& complex) {
    std::ostringstream os;
    os << "{\n  \"name\": " << json(name).dump() << ",\n  \"facets\": [";
    const auto& facets = complex.facets();
    for (std::size_t i = 0; i < facets.size(); ++i) {
        os << (i ? ",\n    [" : "\n    [");
        for (std::size_t k = 0; k < facets[i].size(); ++k) os << (k ? "," : "") << facets[i][k];
        os << ']';
    }
    os << "\n  ]\n}\n";
    return os.str();
}

void save_facet_file(const std::filesystem::path& path, const std::string& name,
                     const SimplicialComplex& complex) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write " + path.string());
    out << format_facet_file(name, complex);
}

}  // namespace hvec
