#include <algorithm>

#include "optbwtrl/errors.hpp"
#include "optbwtrl/matching.hpp"

namespace optbwtrl {

namespace {

// Text recovered from the suffix structures: T[j] = BWT[ISA[j+1]], T[n] = $.
std::vector<symbol_t> recover_text(const SuffixStructures& s) {
    std::vector<symbol_t> t(s.n + 1, sentinel_symbol);
    for (pos_t j = 1; j < s.n; ++j) t[j] = s.bwt[s.isa[j + 1]];
    return t;
}

} // namespace

AugmentedMs compute_matching_statistics(const SuffixStructures& s, const Index& ix,
                                        std::span<const pattern_symbol_t> pattern) {
    if (pattern.empty()) throw invalid_input("pattern is empty");
    if (s.n != ix.n()) throw invalid_input("suffix structures and index describe different texts");
    const auto text = recover_text(s);
    const pos_t n = s.n;

    // symbol at depth l of the suffix in `row`; -1 past the end
    auto symbol_at = [&](pos_t row, pos_t l) -> int {
        const pos_t p = s.sa[row] + l;
        return p <= n ? text[p] : -1;
    };

    AugmentedMs ms(pattern.size());
    for (std::size_t f = 0; f < pattern.size(); ++f) {
        pos_t lo = 1, hi = n + 1; // half-open row range sharing the first l symbols
        pos_t l = 0;
        while (f + l < pattern.size()) {
            const int c = pattern[f + l];
            auto first = [&](int bound, bool strict) {
                pos_t a = lo, b = hi;
                while (a < b) {
                    const pos_t mid = a + (b - a) / 2;
                    const int x = symbol_at(mid, l);
                    if (strict ? x <= bound : x < bound) a = mid + 1;
                    else b = mid;
                }
                return a;
            };
            const pos_t nlo = first(c, false), nhi = first(c, true);
            if (nlo == nhi) break;
            lo = nlo, hi = nhi;
            ++l;
        }
        if (l == 0) continue;
        MsEntry& e = ms[f];
        e.len = l;
        e.row = lo;
        e.suff = s.sa[lo];
        e.i_lf = ix.lf_structure().interval_of(e.row);
        e.w_phi = ix.phi_structure().interval_of(e.suff);
        e.x_phi_inv = ix.phi_inv_structure().interval_of(e.suff);
    }
    return ms;
}

} // namespace optbwtrl
