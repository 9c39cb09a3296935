#include <algorithm>
#include <numeric>

#include "optbwtrl/errors.hpp"
#include "optbwtrl/text.hpp"

namespace optbwtrl {

namespace {

// Prefix doubling over 0-based offsets. The unique minimal sentinel makes
// every suffix distinct, so the loop ends once all ranks differ.
std::vector<pos_t> prefix_doubling(const std::vector<symbol_t>& s) {
    const std::size_t n = s.size();
    std::vector<pos_t> sa(n), rank(n), tmp(n);
    std::iota(sa.begin(), sa.end(), pos_t{0});
    for (std::size_t i = 0; i < n; ++i) rank[i] = s[i];
    if (n <= 1) return sa;

    for (std::size_t h = 1;; h <<= 1) {
        auto key = [&](pos_t i) {
            return std::pair<pos_t, pos_t>{rank[i], i + h < n ? rank[i + h] + 1 : 0};
        };
        std::sort(sa.begin(), sa.end(), [&](pos_t a, pos_t b) { return key(a) < key(b); });
        tmp[sa[0]] = 0;
        for (std::size_t k = 1; k < n; ++k) {
            tmp[sa[k]] = tmp[sa[k - 1]] + (key(sa[k - 1]) < key(sa[k]) ? 1 : 0);
        }
        rank.swap(tmp);
        if (rank[sa[n - 1]] == n - 1) break;
    }
    return sa;
}

} // namespace

SuffixStructures build_suffix_structures(const Text& t) {
    const pos_t n = t.size();
    if (n == 0 || t.symbols.back() != sentinel_symbol) {
        throw invalid_input("text must end with the sentinel");
    }

    SuffixStructures s;
    s.n = n;
    s.sa.assign(n + 1, 0);
    s.isa.assign(n + 1, 0);
    s.lcp.assign(n + 1, 0);
    s.plcp.assign(n + 1, 0);
    s.lf.assign(n + 1, 0);
    s.phi.assign(n + 1, 0);
    s.phi_inv.assign(n + 1, 0);
    s.bwt.assign(n + 1, 0);

    auto sa0 = prefix_doubling(t.symbols);
    for (pos_t i = 1; i <= n; ++i) {
        s.sa[i] = sa0[i - 1] + 1;
        s.isa[s.sa[i]] = i;
    }
    for (pos_t i = 1; i <= n; ++i) {
        s.phi[s.sa[i]] = i > 1 ? s.sa[i - 1] : s.sa[n];
        s.phi_inv[s.sa[i]] = i < n ? s.sa[i + 1] : s.sa[1];
        s.bwt[i] = s.sa[i] > 1 ? t.at(s.sa[i] - 1) : t.at(n);
        s.lf[i] = s.sa[i] > 1 ? s.isa[s.sa[i] - 1] : s.isa[n];
    }

    // PLCP[j] >= PLCP[j-1] - 1; compare each suffix with the one above it.
    pos_t h = 0;
    for (pos_t j = 1; j <= n; ++j) {
        if (s.isa[j] == 1) {
            s.plcp[j] = 0;
            h = 0;
            continue;
        }
        const pos_t above = s.phi[j];
        while (j + h <= n && above + h <= n && t.at(j + h) == t.at(above + h)) ++h;
        s.plcp[j] = h;
        if (h > 0) --h;
    }
    for (pos_t i = 1; i <= n; ++i) s.lcp[i] = s.plcp[s.sa[i]];
    return s;
}

} // namespace optbwtrl
