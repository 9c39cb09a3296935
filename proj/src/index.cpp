#include "optbwtrl/index.hpp"

#include <algorithm>
#include <array>

#include "optbwtrl/errors.hpp"

namespace optbwtrl {

namespace {

IntervalSequence checked(IntervalSequence seq, const char* name) {
    if (auto v = validate_disjoint(seq)) {
        throw internal_error(std::string(name) + " is not a disjoint interval sequence: " + v->message +
                             " (pair " + std::to_string(v->index) + ")");
    }
    return seq;
}

} // namespace

Index Index::build(const SuffixStructures& s, const Rlbwt& rl, unsigned d) {
    if (d < 2) throw invalid_input("balancing parameter d must be at least 2");
    const pos_t n = s.n;
    if (n == 0 || rl.n != n || rl.runs.empty()) throw invalid_input("suffix structures and RLBWT disagree");

    Index ix;
    ix.n_ = n;
    ix.r_ = rl.r();
    unsigned max_symbol = 0;
    for (const auto& run : rl.runs) max_symbol = std::max<unsigned>(max_symbol, run.symbol);
    ix.sigma_ = max_symbol + 1;

    auto run_end = [&](std::size_t k) { return k + 1 < rl.r() ? rl.runs[k + 1].start - 1 : n; };

    // LF: one pair per run, (l_i, LF[l_i])
    IntervalSequence lf_seq{n, {}, {}};
    for (const auto& run : rl.runs) {
        lf_seq.p.push_back(run.start);
        lf_seq.q.push_back(s.lf[run.start]);
    }

    // phi: run-top suffixes in text order, (p+, phi(p+)), payload PLCP[p+]
    std::vector<pos_t> tops, bottoms;
    for (std::size_t k = 0; k < rl.r(); ++k) {
        tops.push_back(s.sa[rl.runs[k].start]);
        bottoms.push_back(s.sa[run_end(k)]);
    }
    std::sort(tops.begin(), tops.end());
    std::sort(bottoms.begin(), bottoms.end());

    IntervalSequence phi_seq{n, tops, {}};
    std::vector<pos_t> lcp_plus;
    for (pos_t p : tops) {
        phi_seq.q.push_back(s.phi[p]);
        lcp_plus.push_back(s.plcp[p]);
    }

    // phi^-1: run-bottom suffixes, payload PLCP[phi^-1(p-)]
    IntervalSequence phi_inv_seq{n, bottoms, {}};
    std::vector<pos_t> lcp_minus;
    for (pos_t p : bottoms) {
        phi_inv_seq.q.push_back(s.phi_inv[p]);
        lcp_minus.push_back(s.plcp[s.phi_inv[p]]);
    }

    ix.f_lf_ = MoveStructure::build(checked(std::move(lf_seq), "I_LF"), d);
    ix.f_phi_ = MoveStructure::build(checked(std::move(phi_seq), "I_phi"), d, std::move(lcp_plus));
    ix.f_phi_inv_ = MoveStructure::build(checked(std::move(phi_inv_seq), "I_phi_inv"), d, std::move(lcp_minus));

    const std::size_t k = ix.f_lf_.size();
    ix.l_first_.resize(k);
    ix.sa_top_.resize(k);
    ix.sa_bot_.resize(k);
    ix.sa_top_phi_.resize(k);
    ix.sa_top_idx_.resize(k);
    ix.sa_bot_idx_.resize(k);
    ix.sa_bot_phi_.resize(k);
    for (interval_t x = 1; x <= k; ++x) {
        const pos_t top = ix.f_lf_.start(x), bot = ix.f_lf_.start(x + 1) - 1;
        ix.l_first_[x - 1] = s.bwt[top];
        ix.sa_top_[x - 1] = s.sa[top];
        ix.sa_bot_[x - 1] = s.sa[bot];
        ix.sa_top_phi_[x - 1] = ix.f_phi_.interval_of(s.sa[top]);
        ix.sa_top_idx_[x - 1] = ix.f_phi_inv_.interval_of(s.sa[top]);
        ix.sa_bot_idx_[x - 1] = ix.f_phi_inv_.interval_of(s.sa[bot]);
        ix.sa_bot_phi_[x - 1] = ix.f_phi_.interval_of(s.sa[bot]);
    }

    ix.nd_.resize(k);
    ix.pd_.resize(k);
    ix.nd_[k - 1] = k + 1;
    for (interval_t x = k - 1; x >= 1; --x) {
        ix.nd_[x - 1] = ix.l_first_[x] != ix.l_first_[x - 1] ? x + 1 : ix.nd_[x];
    }
    ix.pd_[0] = 0;
    for (interval_t x = 2; x <= k; ++x) {
        ix.pd_[x - 1] = ix.l_first_[x - 2] != ix.l_first_[x - 1] ? x - 1 : ix.pd_[x - 2];
    }
    ix.sa_last_ = s.sa[n];

    ix.build_lookups();
    if constexpr (checks_enabled) ix.validate(s);
    return ix;
}

Index Index::build(const Text& t, unsigned d) {
    auto s = build_suffix_structures(t);
    auto rl = build_rlbwt(s);
    Index ix = build(s, rl, d);
    ix.alphabet_ = t.alphabet;
    ix.has_separator_ = t.has_separator;
    ix.sigma_ = std::max(ix.sigma_, t.sigma);
    ix.build_lookups();
    return ix;
}

void Index::build_lookups() {
    char_positions_.assign(sigma_, {});
    for (interval_t x = 1; x <= l_first_.size(); ++x) {
        const auto c = l_first_[x - 1];
        if (c >= char_positions_.size()) char_positions_.resize(c + 1u);
        char_positions_[c].push_back(x);
    }
}

// Checks every structure against the uncompressed arrays, position by position.
void Index::validate(const SuffixStructures& s) const {
    const pos_t n = n_;
    interval_t x = 1, v = 1, y = 1;
    for (pos_t i = 1; i <= n; ++i) {
        if (i == f_lf_.start(x + 1)) ++x;
        if (i == f_phi_.start(v + 1)) ++v;
        if (i == f_phi_inv_.start(y + 1)) ++y;

        ensure(l_first(x) == s.bwt[i], "an LF interval spans more than one BWT run");
        const auto lf = lf_step(i, x);
        ensure(lf.pos == s.lf[i] && f_lf_.contains(lf.interval, lf.pos), "LF structure disagrees with LF");
        const auto ph = phi_step(i, v);
        ensure(ph.pos == s.phi[i] && f_phi_.contains(ph.interval, ph.pos), "phi structure disagrees with phi");
        const auto pi = phi_inv_step(i, y);
        ensure(pi.pos == s.phi_inv[i] && f_phi_inv_.contains(pi.interval, pi.pos),
               "phi^-1 structure disagrees with phi^-1");
        ensure(plcp_at(i, v) == s.plcp[i], "PLCP is not linear along a phi interval");
        ensure(plcp_below(i, y) == s.plcp[s.phi_inv[i]], "PLCP of phi^-1 is not linear along a phi^-1 interval");
    }
    for (interval_t z = 1; z <= intervals(); ++z) {
        ensure(f_phi_.contains(sa_top_phi(z), sa_top(z)) && f_phi_inv_.contains(sa_top_idx(z), sa_top(z)) &&
                   f_phi_inv_.contains(sa_bot_idx(z), sa_bot(z)) && f_phi_.contains(sa_bot_phi(z), sa_bot(z)),
               "SA sample pointers do not contain their samples");
    }
}

std::optional<interval_t> Index::first_interval_with_char(pattern_symbol_t c, interval_t lo, interval_t hi) const {
    if (c >= char_positions_.size() || lo > hi) return std::nullopt;
    const auto& list = char_positions_[c];
    auto it = std::lower_bound(list.begin(), list.end(), lo);
    if (it == list.end() || *it > hi) return std::nullopt;
    return *it;
}

std::optional<interval_t> Index::last_interval_with_char(pattern_symbol_t c, interval_t lo, interval_t hi) const {
    if (c >= char_positions_.size() || lo > hi) return std::nullopt;
    const auto& list = char_positions_[c];
    auto it = std::upper_bound(list.begin(), list.end(), hi);
    if (it == list.begin() || *std::prev(it) < lo) return std::nullopt;
    return *std::prev(it);
}

SaLcpInterval Index::full_range() const {
    const interval_t v = f_phi_.interval_of(n_);
    const interval_t x = f_phi_inv_.interval_of(n_);
    // SA[1] = n: the sentinel suffix is the smallest
    return {1, 1, n_, n_, n_, sa_last_, 1, 1, intervals(), v, v, x, f_phi_inv_.interval_of(sa_last_)};
}

SaIntervalSimple Index::full_range_simple() const {
    return {1, n_, 1, intervals(), n_, f_phi_inv_.interval_of(n_)};
}

std::optional<SaIntervalSimple> Index::extend(const SaIntervalSimple& t, pattern_symbol_t c, bool empty_string) const {
    if (c >= sigma_ || (c == sentinel_symbol && !empty_string)) return std::nullopt;
    SaIntervalSimple out{};

    if (l_first(t.i) == c) {
        const auto m = lf_step(t.b, t.i);
        out.b = m.pos;
        out.i = m.interval;
        out.sa_b = t.sa_b == 1 ? n_ : t.sa_b - 1;
        out.x = t.sa_b == 1 ? f_phi_inv_.size() : (t.sa_b == f_phi_inv_.start(t.x) ? t.x - 1 : t.x);
    } else {
        const auto top = first_interval_with_char(c, t.i, t.k);
        if (!top) return std::nullopt;
        const auto m = lf_step(f_lf_.start(*top), *top);
        out.b = m.pos;
        out.i = m.interval;
        const pos_t sa = sa_top(*top);
        const interval_t x = sa_top_idx(*top);
        out.sa_b = sa == 1 ? n_ : sa - 1;
        out.x = sa == 1 ? f_phi_inv_.size() : (sa == f_phi_inv_.start(x) ? x - 1 : x);
    }

    if (l_first(t.k) == c) {
        const auto m = lf_step(t.e, t.k);
        out.e = m.pos;
        out.k = m.interval;
    } else {
        const auto bot = last_interval_with_char(c, t.i, t.k);
        ensure(bot.has_value(), "backward search found a top occurrence but no bottom one");
        const auto m = lf_step(f_lf_.start(*bot + 1) - 1, *bot);
        out.e = m.pos;
        out.k = m.interval;
    }
    return out;
}

std::optional<SaIntervalSimple> Index::find(std::span<const pattern_symbol_t> pattern) const {
    if (pattern.empty()) throw invalid_input("pattern is empty");
    SaIntervalSimple t = full_range_simple();
    for (std::size_t k = pattern.size(); k-- > 0;) {
        auto next = extend(t, pattern[k], k + 1 == pattern.size());
        if (!next) return std::nullopt;
        t = *next;
    }
    return t;
}

std::uint64_t Index::count(std::span<const pattern_symbol_t> pattern) const {
    auto t = find(pattern);
    return t ? t->width() : 0;
}

std::vector<pos_t> Index::locate(std::span<const pattern_symbol_t> pattern) const {
    std::vector<pos_t> out;
    auto t = find(pattern);
    if (!t) return out;
    out.reserve(t->width());
    pos_t sa = t->sa_b;
    interval_t x = t->x;
    out.push_back(sa);
    for (pos_t row = t->b; row < t->e; ++row) {
        const auto m = phi_inv_step(sa, x);
        sa = m.pos;
        x = m.interval;
        out.push_back(sa);
    }
    return out;
}

std::vector<pattern_symbol_t> Index::encode(std::string_view pattern) const {
    Text view;
    view.alphabet = alphabet_;
    view.has_separator = has_separator_;
    return view.encode(pattern);
}

Text Index::recover_text() const {
    Text t;
    t.sigma = sigma_;
    t.alphabet = alphabet_;
    t.has_separator = has_separator_;
    t.symbols.assign(n_, sentinel_symbol);
    MoveResult at{1, 1}; // row of the suffix "$"
    for (pos_t j = n_ - 1; j >= 1; --j) {
        t.symbols[j - 1] = l_first(at.interval);
        at = lf_step(at.pos, at.interval);
    }
    return t;
}

std::size_t Index::stored_integers() const noexcept {
    std::size_t total = f_lf_.stored_integers() + f_phi_.stored_integers() + f_phi_inv_.stored_integers();
    total += l_first_.size() + sa_top_.size() + sa_bot_.size();
    total += sa_top_phi_.size() + sa_top_idx_.size() + sa_bot_idx_.size() + sa_bot_phi_.size();
    total += nd_.size() + pd_.size();
    for (const auto& list : char_positions_) total += list.size();
    return total;
}

} // namespace optbwtrl
