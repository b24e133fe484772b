#ifndef OCCLOGIC_COMMON_HPP
#define OCCLOGIC_COMMON_HPP

#include <cstdint>
#include <stdexcept>
#include <string>

namespace occlogic {

/// Execution mode for the scan kernels. Serial runs the plain reference
/// loops; Parallel runs the bitsliced OpenMP kernels. Results are identical.
enum class Exec { Serial, Parallel };

/// Enumeration limits. All exhaustive scans check their limit up front and
/// throw CapError instead of truncating.
struct Caps {
    int bool_vars = 26;        // Boolean model enumeration: max variables
    int lpm_vars = 16;         // three-valued scan: max variables (3^n growth)
    int occurrences = 20;      // o-interpretation scan: max |Occ(K)|
    // Relation-space scans walk the product of per-variable partition
    // lattices; this bounds the number of combinations.
    std::uint64_t relation_combos = std::uint64_t{1} << 22;
};

struct CapError : std::runtime_error {
    explicit CapError(const std::string& what) : std::runtime_error(what) {}
};

struct ParseError : std::runtime_error {
    ParseError(int line, int column, const std::string& msg)
        : std::runtime_error("line " + std::to_string(line) + ", column " +
                             std::to_string(column) + ": " + msg),
          line(line),
          column(column) {}
    int line;
    int column;
};

}  // namespace occlogic

#endif
