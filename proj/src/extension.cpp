// Backward extension of the balanced sa_lcp-interval.

#include "optbwtrl/errors.hpp"
#include "optbwtrl/index.hpp"

namespace optbwtrl {

namespace {

struct Suffix {
    pos_t sa;
    interval_t idx;
};

// SA value of the LF image of a row holding `sa`, and the interval of `ms`
// containing it. The interval index only drops when sa starts its interval.
Suffix preceding(const MoveStructure& ms, pos_t sa, interval_t idx) {
    if (sa == 1) return {ms.domain(), ms.size()};
    return {sa - 1, sa == ms.start(idx) ? idx - 1 : idx};
}

class Extender {
  public:
    Extender(const Index& ix, pattern_symbol_t c, search_strategy how, WorkCounters* work)
        : ix_(ix), c_(c), how_(how), work_(work) {}

    std::optional<SaLcpInterval> run(const SaLcpInterval& t) const {
        SaLcpInterval out{};

        // top
        if (ix_.l_first(t.i) == c_) {
            const auto m = lf(t.b, t.i);
            const auto s = preceding(ix_.phi_structure(), t.sa_b, t.v);
            out.b = m.pos, out.i = m.interval, out.sa_b = s.sa, out.v = s.idx;
        } else {
            const auto top = first(t.i, t.k);
            if (!top) return std::nullopt;
            // *top follows an interval of another symbol inside [i, k], so it
            // starts a BWT run and sa_top(*top) starts a phi interval.
            require(ix_.phi_structure().start(ix_.sa_top_phi(*top)) == ix_.sa_top(*top),
                    "run-top sample is not a phi interval start");
            const auto m = lf(ix_.lf_structure().start(*top), *top);
            const auto s = preceding(ix_.phi_structure(), ix_.sa_top(*top), ix_.sa_top_phi(*top));
            out.b = m.pos, out.i = m.interval, out.sa_b = s.sa, out.v = s.idx;
        }

        // bottom
        if (ix_.l_first(t.k) == c_) {
            const auto m = lf(t.e, t.k);
            const auto s = preceding(ix_.phi_inv_structure(), t.sa_e, t.y);
            out.e = m.pos, out.k = m.interval, out.sa_e = s.sa, out.y = s.idx;
        } else {
            const auto bot = last(t.i, t.k);
            ensure(bot.has_value(), "extension found a top occurrence but no bottom one");
            require(ix_.phi_inv_structure().start(ix_.sa_bot_idx(*bot)) == ix_.sa_bot(*bot),
                    "run-bottom sample is not a phi^-1 interval start");
            const auto m = lf(ix_.lf_structure().start(*bot + 1) - 1, *bot);
            const auto s = preceding(ix_.phi_inv_structure(), ix_.sa_bot(*bot), ix_.sa_bot_idx(*bot));
            out.e = m.pos, out.k = m.interval, out.sa_e = s.sa, out.y = s.idx;
        }

        // middle
        if (ix_.l_first(t.j) == c_) {
            const auto m = lf(t.d, t.j);
            const auto above = preceding(ix_.phi_structure(), t.sa_d, t.w);
            const auto below = preceding(ix_.phi_inv_structure(), t.sa_d, t.x);
            out.d = m.pos, out.j = m.interval, out.sa_d = above.sa, out.w = above.idx, out.x = below.idx;
        } else if (const auto pre = last(t.i, t.j)) {
            // the middle lands on the bottom of the nearest c-run above it
            const auto m = lf(ix_.lf_structure().start(*pre + 1) - 1, *pre);
            const auto below = preceding(ix_.phi_inv_structure(), ix_.sa_bot(*pre), ix_.sa_bot_idx(*pre));
            const auto above = preceding(ix_.phi_structure(), ix_.sa_bot(*pre), ix_.sa_bot_phi(*pre));
            out.d = m.pos, out.j = m.interval, out.sa_d = below.sa, out.w = above.idx, out.x = below.idx;
        } else {
            const auto post = first(t.j, t.k);
            ensure(post.has_value(), "extension lost the middle position");
            const auto m = lf(ix_.lf_structure().start(*post), *post);
            const auto above = preceding(ix_.phi_structure(), ix_.sa_top(*post), ix_.sa_top_phi(*post));
            const auto below = preceding(ix_.phi_inv_structure(), ix_.sa_top(*post), ix_.sa_top_idx(*post));
            out.d = m.pos, out.j = m.interval, out.sa_d = above.sa, out.w = above.idx, out.x = below.idx;
        }
        return out;
    }

  private:
    MoveResult lf(pos_t row, interval_t x) const {
        if (work_) ++work_->move_queries;
        return ix_.lf_step(row, x);
    }

    std::optional<interval_t> first(interval_t lo, interval_t hi) const {
        if (how_ == search_strategy::rank) return ix_.first_interval_with_char(c_, lo, hi);
        interval_t o = lo;
        while (o <= hi && ix_.l_first(o) != c_) {
            o = ix_.run_jump(o, direction::forward);
            if (work_) ++work_->run_jumps;
        }
        return o <= hi ? std::optional<interval_t>(o) : std::nullopt;
    }

    std::optional<interval_t> last(interval_t lo, interval_t hi) const {
        if (how_ == search_strategy::rank) return ix_.last_interval_with_char(c_, lo, hi);
        interval_t o = hi;
        while (o >= lo && ix_.l_first(o) != c_) {
            o = ix_.run_jump(o, direction::backward);
            if (work_) ++work_->run_jumps;
            if (o == 0) break;
        }
        return o >= lo && o != 0 ? std::optional<interval_t>(o) : std::nullopt;
    }

    const Index& ix_;
    pattern_symbol_t c_;
    search_strategy how_;
    WorkCounters* work_;
};

} // namespace

std::optional<SaLcpInterval> Index::extend(const SaLcpInterval& t, pattern_symbol_t c, search_strategy how,
                                           WorkCounters* work) const {
    if (c >= sigma_ || c == sentinel_symbol) return std::nullopt;
    return Extender(*this, c, how, work).run(t);
}

std::optional<SaLcpInterval> Index::symbol_interval(pattern_symbol_t c, search_strategy how,
                                                    WorkCounters* work) const {
    if (c >= sigma_) return std::nullopt;
    return Extender(*this, c, how, work).run(full_range());
}

std::optional<SaLcpInterval> Index::backward_search(std::span<const pattern_symbol_t> pattern,
                                                    search_strategy how, WorkCounters* work) const {
    if (pattern.empty()) throw invalid_input("pattern is empty");
    auto t = symbol_interval(pattern.back(), how, work);
    for (std::size_t k = pattern.size() - 1; t && k-- > 0;) t = extend(*t, pattern[k], how, work);
    return t;
}

} // namespace optbwtrl
