#include "optbwtrl/oracles.hpp"

#include <algorithm>
#include <numeric>

namespace optbwtrl::oracle {

namespace {

// length of the common run of P[p..] and T[t..], 0-based starts
pos_t run_length(std::span<const pattern_symbol_t> p, std::size_t pi, std::span<const symbol_t> t, std::size_t ti) {
    pos_t len = 0;
    while (pi + len < p.size() && ti + len < t.size() && p[pi + len] == t[ti + len]) ++len;
    return len;
}

} // namespace

std::vector<pos_t> naive_suffix_array(std::span<const symbol_t> text) {
    std::vector<pos_t> sa(text.size());
    std::iota(sa.begin(), sa.end(), pos_t{0});
    std::sort(sa.begin(), sa.end(), [&](pos_t a, pos_t b) {
        return std::lexicographical_compare(text.begin() + a, text.end(), text.begin() + b, text.end());
    });
    std::vector<pos_t> out{0};
    for (pos_t p : sa) out.push_back(p + 1);
    return out;
}

std::vector<Lem> naive_lems(std::span<const pattern_symbol_t> pattern, std::span<const symbol_t> text,
                            pos_t min_length) {
    std::vector<Lem> out;
    for (std::size_t p = 0; p < pattern.size(); ++p) {
        for (std::size_t t = 0; t < text.size(); ++t) {
            if (pattern[p] != text[t]) continue;
            if (p > 0 && t > 0 && pattern[p - 1] == text[t - 1]) continue;
            const pos_t len = run_length(pattern, p, text, t);
            if (len >= min_length) out.push_back({p + 1, t + 1, len});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::vector<Lem> naive_mems(std::span<const pattern_symbol_t> pattern, std::span<const symbol_t> text) {
    // longest match starting at each pattern position
    std::vector<pos_t> ms(pattern.size(), 0);
    for (std::size_t p = 0; p < pattern.size(); ++p) {
        for (std::size_t t = 0; t < text.size(); ++t) ms[p] = std::max(ms[p], run_length(pattern, p, text, t));
    }
    std::vector<Lem> out;
    for (std::size_t p = 0; p < pattern.size(); ++p) {
        if (ms[p] == 0) continue;
        // a longer match starting one position earlier would contain this one
        if (p > 0 && ms[p - 1] > ms[p]) continue;
        for (std::size_t t = 0; t < text.size(); ++t) {
            if (run_length(pattern, p, text, t) == ms[p]) out.push_back({p + 1, t + 1, ms[p]});
        }
    }
    std::sort(out.begin(), out.end());
    return out;
}

AugmentedMs naive_matching_statistics(std::span<const pattern_symbol_t> pattern, std::span<const symbol_t> text) {
    const auto sa = naive_suffix_array(text);
    AugmentedMs ms(pattern.size());
    for (std::size_t p = 0; p < pattern.size(); ++p) {
        for (pos_t row = 1; row < sa.size(); ++row) {
            const pos_t len = run_length(pattern, p, text, sa[row] - 1);
            if (len > ms[p].len) ms[p] = MsEntry{len, sa[row], row, 0, 0, 0};
        }
    }
    return ms;
}

std::vector<pos_t> naive_occurrences(std::span<const pattern_symbol_t> pattern, std::span<const symbol_t> text) {
    std::vector<pos_t> out;
    if (pattern.empty()) return out;
    for (std::size_t t = 0; t + pattern.size() <= text.size(); ++t) {
        if (run_length(pattern, 0, text, t) == pattern.size()) out.push_back(t + 1);
    }
    return out;
}

} // namespace optbwtrl::oracle
