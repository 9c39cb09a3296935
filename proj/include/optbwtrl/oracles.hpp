#pragma once

#include <span>
#include <vector>

#include "optbwtrl/matching.hpp"
#include "optbwtrl/text.hpp"

// Brute-force references. Nothing here touches the index code.
namespace optbwtrl::oracle {

// Suffix array by direct comparison, 1-based (slot 0 unused).
std::vector<pos_t> naive_suffix_array(std::span<const symbol_t> text);

// All LEMs of length >= min_length, sorted.
std::vector<Lem> naive_lems(std::span<const pattern_symbol_t> pattern, std::span<const symbol_t> text,
                            pos_t min_length);

// MEMs, one triple per text occurrence, sorted.
std::vector<Lem> naive_mems(std::span<const pattern_symbol_t> pattern, std::span<const symbol_t> text);

// Matching statistics with the smallest row among the longest matches.
// Interval fields are left at 0.
AugmentedMs naive_matching_statistics(std::span<const pattern_symbol_t> pattern, std::span<const symbol_t> text);

// Sorted 1-based occurrence starts.
std::vector<pos_t> naive_occurrences(std::span<const pattern_symbol_t> pattern, std::span<const symbol_t> text);

} // namespace optbwtrl::oracle
