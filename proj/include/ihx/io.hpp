#ifndef IHX_IO_HPP
#define IHX_IO_HPP

#include "ihx/cyclic.hpp"
#include "ihx/stratified.hpp"

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

namespace ihx {

inline constexpr const char* tool_version = "ihx 1.0.0";

/// Thrown on malformed input text; message carries the 1-based line number.
struct ParseError : std::runtime_error {
    int line;
    ParseError(int line_, const std::string& what_)
        : std::runtime_error("line " + std::to_string(line_) + ": " + what_), line(line_)
    {
    }
};

/// Line-oriented complex file:
///   dim N                    ambient filtration dimension
///   simplex v0 v1 ...        maximal simplex of the ambient complex
///   skeleton i               starts the block of maximal simplices of X_i
///   simplex v0 ...           (inside a block) maximal simplex of X_i
/// '#' starts a comment; blank lines are ignored. Skeleta nest
/// automatically: X_i also contains everything declared for j < i.
struct ParsedComplex {
    FilteredComplex filtered;
    bool has_filtration = false;
};

ParsedComplex parse_complex_file(const std::string& text);
std::string serialize_complex(const ParsedComplex& pc);

/// Algebra file:
///   dim d
///   basis l0 l1 ...          first label is the unit
///   mul li lj : c0 c1 ... c{d-1}    coefficients of li*lj, exact rationals
/// Every product must be given exactly once.
FiniteAlgebra parse_algebra_file(const std::string& text);
std::string serialize_algebra(const FiniteAlgebra& a);

/// Machine-readable key=value records plus a human-readable table.
/// Rendering is deterministic: records appear in insertion order.
struct Report {
    std::vector<std::pair<std::string, std::string>> records;
    std::vector<std::string> summary;

    void add(const std::string& key, const std::string& value);
    void add(const std::string& key, long value);
    void note(const std::string& line);
    std::string render_records() const;
    std::string render_table() const;
};

/// FNV-1a 64-bit content digest used to stamp inputs into reports.
std::uint64_t fnv1a(const std::string& bytes);
std::string digest_hex(const std::string& bytes);

} // namespace ihx

#endif
