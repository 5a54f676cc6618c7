#ifndef HVEC_CLI_HPP
#define HVEC_CLI_HPP

#include <filesystem>
#include <iosfwd>
#include <string>
#include <vector>

namespace hvec {

/// Exit status for usage and input errors.
inline constexpr int kUsageError = 64;

/**
 * Runs the command line `args` (without the program name).
 *
 *   invariants <file> [--json]
 *   classify <file>
 *   verify <statement> <file>
 *   gen <spec...> [-o file]
 *   sweep <statement> <dir>
 *   corpus <dir>
 *
 * Returns 0 / 1 / 2 for pass / fail / hypotheses-not-met and 64 for usage
 * or input errors.
 */
int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err);

/// File name used by `corpus` for a spec, e.g. "wedge_boundary-simplex-4_boundary-simplex-4.json".
std::string corpus_file_name(const std::string& spec);

}  // namespace hvec

#endif
