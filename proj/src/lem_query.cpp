#include <algorithm>

#include "optbwtrl/errors.hpp"
#include "optbwtrl/matching.hpp"

namespace optbwtrl {

void DiagonalDict::insert(key_t key, pos_t end) {
    if (work_) ++work_->dict_ops;
    const bool fresh = map_.emplace(key, end).second;
    ensure(fresh, "diagonal " + std::to_string(key) + " inserted twice");
    ++inserts_;
}

pos_t DiagonalDict::take(key_t key) {
    if (work_) ++work_->dict_ops;
    auto it = map_.find(key);
    ensure(it != map_.end(), "diagonal " + std::to_string(key) + " missing from the dictionary");
    const pos_t end = it->second;
    map_.erase(it);
    ++deletes_;
    return end;
}

namespace {

void emit(DiagonalDict& dict, pos_t s, pos_t f, const LemSink& sink) {
    const pos_t g = dict.take(DiagonalDict::diagonal(s, f + 1));
    ensure(g > f, "match ends before it starts");
    sink(Lem{f + 1, s, g - f});
}

} // namespace

void output_matches_up(const Index& ix, DiagonalDict& dict, pos_t s, interval_t v, pos_t z, pos_t f,
                       const LemSink& sink, WorkCounters* work) {
    for (pos_t t = 1; t <= z; ++t) {
        emit(dict, s, f, sink);
        if (t == z) break;
        const auto m = ix.phi_step(s, v);
        if (work) ++work->move_queries;
        s = m.pos, v = m.interval;
    }
}

void output_matches_down(const Index& ix, DiagonalDict& dict, pos_t s, interval_t x, pos_t z, pos_t f,
                         const LemSink& sink, WorkCounters* work) {
    for (pos_t t = 1; t <= z; ++t) {
        emit(dict, s, f, sink);
        if (t == z) break;
        const auto m = ix.phi_inv_step(s, x);
        if (work) ++work->move_queries;
        s = m.pos, x = m.interval;
    }
}

namespace {

class Advancer {
  public:
    Advancer(const Index& ix, std::span<const pattern_symbol_t> pattern, DiagonalDict& dict, pos_t min_length,
             const LemSink& sink, WorkCounters* work)
        : ix_(ix), pattern_(pattern), dict_(dict), len_(min_length), sink_(sink), work_(work) {}

    std::optional<SaLcpInterval> step(pos_t f, const std::optional<SaLcpInterval>& cur, const WindowSeeder& seed) {
        if (cur) {
            emit_window(f, *cur);
        } else {
            ensure(dict_.empty(), "dictionary holds matches of an absent window");
        }
        if (f == 0) return std::nullopt;

        std::optional<SaLcpInterval> next;
        if (cur) next = ix_.extend(*cur, pattern_[f - 1], search_strategy::scan, work_);
        if (!next) {
            next = seed(f);
            if (!next) return std::nullopt;
            ensure(next->b == next->e, "window seed must be a single row");
            dict_.insert(DiagonalDict::diagonal(next->sa_b, f), f + len_ - 1);
        }
        expand(f, *next);
        return next;
    }

  private:
    // Rows whose preceding symbol is P[f] extend left and stay alive.
    bool stays(pos_t f, interval_t o) const {
        if (f == 0) return false;
        const auto c = pattern_[f - 1];
        return c != sentinel_symbol && ix_.l_first(o) == c;
    }

    void emit_window(pos_t f, const SaLcpInterval& t) {
        const auto& lf = ix_.lf_structure();
        if (t.i == t.k) {
            if (stays(f, t.i)) return;
            output_matches_up(ix_, dict_, t.sa_d, t.w, t.d - t.b + 1, f, sink_, work_);
            if (t.e > t.d) {
                const auto below = ix_.phi_inv_step(t.sa_d, t.x);
                if (work_) ++work_->move_queries;
                output_matches_down(ix_, dict_, below.pos, below.interval, t.e - t.d, f, sink_, work_);
            }
            return;
        }
        if (!stays(f, t.i)) {
            output_matches_up(ix_, dict_, ix_.sa_bot(t.i), ix_.sa_bot_phi(t.i), lf.start(t.i + 1) - t.b, f, sink_,
                              work_);
        }
        interval_t o = t.i + 1;
        while (o < t.k) {
            if (stays(f, o)) {
                o = ix_.run_jump(o, direction::forward);
                if (work_) ++work_->run_jumps;
                continue;
            }
            output_matches_down(ix_, dict_, ix_.sa_top(o), ix_.sa_top_idx(o), lf.length(o), f, sink_, work_);
            ++o;
        }
        if (!stays(f, t.k)) {
            output_matches_down(ix_, dict_, ix_.sa_top(t.k), ix_.sa_top_idx(t.k), t.e - lf.start(t.k) + 1, f, sink_,
                                work_);
        }
    }

    // Grow the tuple of P[f, f+L] (or a seed row) to the tuple of P[f, f+L-1].
    void expand(pos_t f, SaLcpInterval& t) {
        const auto& lf = ix_.lf_structure();
        while (plcp(t.sa_b, t.v, true) >= len_) {
            if (t.b == lf.start(t.i)) --t.i;
            --t.b;
            const auto m = ix_.phi_step(t.sa_b, t.v);
            if (work_) ++work_->move_queries;
            t.sa_b = m.pos, t.v = m.interval;
            dict_.insert(DiagonalDict::diagonal(t.sa_b, f), f + len_ - 1);
        }
        while (plcp(t.sa_e, t.y, false) >= len_) {
            if (t.e == lf.start(t.k + 1) - 1) ++t.k;
            ++t.e;
            const auto m = ix_.phi_inv_step(t.sa_e, t.y);
            if (work_) ++work_->move_queries;
            t.sa_e = m.pos, t.y = m.interval;
            dict_.insert(DiagonalDict::diagonal(t.sa_e, f), f + len_ - 1);
        }
    }

    pos_t plcp(pos_t tpos, interval_t iv, bool above) const {
        if (work_) ++work_->move_queries;
        return above ? ix_.plcp_at(tpos, iv) : ix_.plcp_below(tpos, iv);
    }

    const Index& ix_;
    std::span<const pattern_symbol_t> pattern_;
    DiagonalDict& dict_;
    pos_t len_;
    const LemSink& sink_;
    WorkCounters* work_;
};

SaLcpInterval single_row(pos_t row, pos_t sa, interval_t i, interval_t v, interval_t x) {
    return {row, row, row, sa, sa, sa, i, i, i, v, v, x, x};
}

void check_query(const Index& ix, std::span<const pattern_symbol_t> pattern, pos_t min_length) {
    if (pattern.empty()) throw invalid_input("pattern is empty");
    if (min_length < 1) throw invalid_input("minimum length must be at least 1");
    if (ix.n() == 0) throw invalid_input("index is empty");
}

void scan(const Index& ix, std::span<const pattern_symbol_t> pattern, pos_t min_length, const WindowSeeder& seed,
          const LemSink& sink, WorkCounters* work) {
    const pos_t m = pattern.size();
    DiagonalDict dict(work);
    Advancer adv(ix, pattern, dict, min_length, sink, work);
    std::optional<SaLcpInterval> cur;
    if (min_length <= m) {
        for (pos_t f = m - min_length + 1; f >= 1; --f) cur = adv.step(f, cur, seed);
        adv.step(0, cur, seed);
    }
    ensure(dict.empty(), "dictionary not empty after the final flush");
    ensure(dict.inserts() == dict.deletes(), "dictionary inserts and deletes disagree");
}

} // namespace

std::optional<SaLcpInterval> advance_long_interval(const Index& ix, std::span<const pattern_symbol_t> pattern,
                                                   pos_t f, const std::optional<SaLcpInterval>& cur,
                                                   DiagonalDict& dict, pos_t min_length, const WindowSeeder& seed,
                                                   const LemSink& sink, WorkCounters* work) {
    return Advancer(ix, pattern, dict, min_length, sink, work).step(f, cur, seed);
}

void long_lem_query(const Index& ix, const AugmentedMs& ms, std::span<const pattern_symbol_t> pattern,
                    pos_t min_length, const LemSink& sink, WorkCounters* work) {
    check_query(ix, pattern, min_length);
    if (ms.size() != pattern.size()) throw invalid_input("matching statistics do not match the pattern length");
    const pos_t m = pattern.size();
    auto seed = [&](pos_t f) -> std::optional<SaLcpInterval> {
        if (f + min_length - 1 > m) return std::nullopt;
        const MsEntry& e = ms[f - 1];
        ensure(e.len <= min_length, "matching statistics longer than a window that does not extend");
        if (e.len < min_length) return std::nullopt;
        return single_row(e.row, e.suff, e.i_lf, e.w_phi, e.x_phi_inv);
    };
    scan(ix, pattern, min_length, seed, sink, work);
}

std::vector<Lem> long_lem_query(const Index& ix, const AugmentedMs& ms, std::span<const pattern_symbol_t> pattern,
                                pos_t min_length, WorkCounters* work) {
    std::vector<Lem> out;
    long_lem_query(ix, ms, pattern, min_length, [&](const Lem& l) { out.push_back(l); }, work);
    return out;
}

void long_lem_query_direct(const Index& ix, std::span<const pattern_symbol_t> pattern, pos_t min_length,
                           const LemSink& sink, WorkCounters* work) {
    check_query(ix, pattern, min_length);
    const pos_t m = pattern.size();
    auto seed = [&](pos_t f) -> std::optional<SaLcpInterval> {
        if (f + min_length - 1 > m) return std::nullopt;
        const auto t = ix.backward_search(pattern.subspan(f - 1, min_length), search_strategy::rank, work);
        if (!t) return std::nullopt;
        return single_row(t->d, t->sa_d, t->j, t->w, t->x);
    };
    scan(ix, pattern, min_length, seed, sink, work);
}

std::vector<Lem> long_lem_query_direct(const Index& ix, std::span<const pattern_symbol_t> pattern,
                                       pos_t min_length, WorkCounters* work) {
    std::vector<Lem> out;
    long_lem_query_direct(ix, pattern, min_length, [&](const Lem& l) { out.push_back(l); }, work);
    return out;
}

} // namespace optbwtrl
