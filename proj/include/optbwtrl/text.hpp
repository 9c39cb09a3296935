#pragma once

#include <cstdint>
#include <filesystem>
#include <string>
#include <string_view>
#include <vector>

namespace optbwtrl {

// Text and SA positions are 1-based throughout the library. Arrays indexed by
// position carry an unused slot 0 so that sa[i] means the same thing as SA[i].
using pos_t = std::uint64_t;
using symbol_t = std::uint8_t;

// Encoded pattern symbols are wider than text symbols so that bytes absent
// from the text get a value no text symbol can take.
using pattern_symbol_t = std::uint16_t;
inline constexpr pattern_symbol_t absent_symbol = 0x100;

inline constexpr symbol_t sentinel_symbol = 0;
inline constexpr symbol_t separator_symbol = 1;
inline constexpr char sentinel_char = '$';

// A validated text over a dense alphabet [0, sigma). The last symbol is the
// unique sentinel (dense value 0).
struct Text {
    std::vector<symbol_t> symbols;
    unsigned sigma = 0;
    // dense symbol -> original byte, used for rendering and pattern encoding
    std::vector<char> alphabet;
    bool has_separator = false;

    pos_t size() const noexcept { return symbols.size(); }
    // 1-based access
    symbol_t at(pos_t i) const { return symbols[i - 1]; }

    std::vector<pattern_symbol_t> encode(std::string_view pattern) const;
    std::string decode(pos_t from, pos_t len) const;
};

// Validates raw bytes: a '$' may only appear as the final byte; one is
// appended when missing. The remaining bytes are remapped order-preserving
// onto [1, sigma).
Text validate_text(std::string_view raw);

// Concatenates records with the separator symbol (dense value 1) between
// them and a single final sentinel. Records must not contain '$'.
Text text_from_records(const std::vector<std::string>& records);

// Raw file: the trailing newline (and CR) is stripped.
std::string read_raw_file(const std::filesystem::path& path);
// FASTA-like file: header lines ('>') start a new record; whitespace is dropped.
std::vector<std::string> read_fasta_records(const std::filesystem::path& path);

struct SuffixStructures {
    pos_t n = 0;
    std::vector<pos_t> sa, isa, lcp, plcp, lf, phi, phi_inv;
    std::vector<symbol_t> bwt; // bwt[i], 1-based, slot 0 unused
};

// Prefix-doubling suffix sort followed by the PLCP-first LCP scan.
SuffixStructures build_suffix_structures(const Text& t);

struct Run {
    symbol_t symbol;
    pos_t start;

    bool operator==(const Run&) const = default;
};

struct Rlbwt {
    std::vector<Run> runs;
    pos_t n = 0;

    std::size_t r() const noexcept { return runs.size(); }
    std::vector<symbol_t> expand() const;
};

Rlbwt build_rlbwt(const SuffixStructures& s);

// Recovers the text from the run-length BWT alone by repeated LF steps from
// the sentinel row.
std::vector<symbol_t> invert_bwt(const Rlbwt& rl);

} // namespace optbwtrl
