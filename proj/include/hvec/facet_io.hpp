#ifndef HVEC_FACET_IO_HPP
#define HVEC_FACET_IO_HPP

// Facet-list documents:
//
//   { "name": "torus-7", "facets": [[0,1,3],[0,2,3], ...] }
//
// Standard JSON; vertex ids are non-negative decimal integers.

#include "hvec/complex.hpp"

#include <filesystem>
#include <stdexcept>
#include <string>
#include <string_view>

namespace hvec {

class FacetFormatError : public std::runtime_error {
public:
    FacetFormatError(std::size_t line, const std::string& what)
        : std::runtime_error("line " + std::to_string(line) + ": " + what), line_(line) {}

    std::size_t line() const { return line_; }

private:
    std::size_t line_;
};

struct FacetFile {
    std::string name;
    SimplicialComplex complex;
};

/// Throws FacetFormatError naming the offending line.
FacetFile parse_facet_file(std::string_view text);
FacetFile load_facet_file(const std::filesystem::path& path);

/// One facet per line, facets in sorted order.
std::string format_facet_file(const std::string& name, const SimplicialComplex& complex);
void save_facet_file(const std::filesystem::path& path, const std::string& name,
                     const SimplicialComplex& complex);

}  // namespace hvec

#endif
