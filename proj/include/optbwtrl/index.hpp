#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "optbwtrl/move_structure.hpp"
#include "optbwtrl/text.hpp"

namespace optbwtrl {

enum class search_strategy { rank, scan };
enum class direction { forward, backward };

// Instrumentation for the linear-work checks. Owned by the caller.
struct WorkCounters {
    std::uint64_t move_queries = 0;
    std::uint64_t dict_ops = 0;
    std::uint64_t run_jumps = 0;
    std::uint64_t max_scan = 0; // longest interval scan seen in one move query

    std::uint64_t total() const noexcept { return move_queries + dict_ops + run_jumps; }
};

// Reduced tuple used by count and locate: the sa-interval [b, e], the LF
// intervals of both ends, and the toehold SA[b] with its phi^-1 interval.
struct SaIntervalSimple {
    pos_t b, e;
    interval_t i, k;
    pos_t sa_b;
    interval_t x;

    pos_t width() const noexcept { return e - b + 1; }
    bool operator==(const SaIntervalSimple&) const = default;
};

// The balanced sa_lcp-interval: top b, middle d and bottom e of an
// sa-interval with their SA values and LF intervals (i, j, k), the phi
// intervals of SA[b] and SA[d] (v, w) and the phi^-1 intervals of SA[d] and
// SA[e] (x, y).
struct SaLcpInterval {
    pos_t b, d, e;
    pos_t sa_b, sa_d, sa_e;
    interval_t i, j, k;
    interval_t v, w;
    interval_t x, y;

    pos_t width() const noexcept { return e - b + 1; }
    bool operator==(const SaLcpInterval&) const = default;
};

// Run-length compressed index answering LF, phi, phi^-1 and PLCP in
// constant time via move structures, plus count and locate.
class Index {
  public:
    Index() = default;

    static Index build(const SuffixStructures& s, const Rlbwt& rl, unsigned d = 2);
    // Builds suffix structures internally and keeps the alphabet for pattern encoding.
    static Index build(const Text& t, unsigned d = 2);

    pos_t n() const noexcept { return n_; }
    std::size_t r() const noexcept { return r_; }
    unsigned sigma() const noexcept { return sigma_; }
    unsigned balance_parameter() const noexcept { return f_lf_.balance_parameter(); }

    const MoveStructure& lf_structure() const noexcept { return f_lf_; }
    const MoveStructure& phi_structure() const noexcept { return f_phi_; }
    const MoveStructure& phi_inv_structure() const noexcept { return f_phi_inv_; }

    // k' of the LF structure
    std::size_t intervals() const noexcept { return f_lf_.size(); }

    // per LF-interval samples, 1-based
    symbol_t l_first(interval_t x) const { return l_first_[x - 1]; }
    pos_t sa_top(interval_t x) const { return sa_top_[x - 1]; }
    pos_t sa_bot(interval_t x) const { return sa_bot_[x - 1]; }
    interval_t sa_top_phi(interval_t x) const { return sa_top_phi_[x - 1]; }
    interval_t sa_top_idx(interval_t x) const { return sa_top_idx_[x - 1]; }
    interval_t sa_bot_idx(interval_t x) const { return sa_bot_idx_[x - 1]; }
    interval_t sa_bot_phi(interval_t x) const { return sa_bot_phi_[x - 1]; }

    MoveResult lf_step(pos_t row, interval_t x) const { return f_lf_.move(row, x); }
    MoveResult phi_step(pos_t tpos, interval_t v) const { return f_phi_.move(tpos, v); }
    MoveResult phi_inv_step(pos_t tpos, interval_t x) const { return f_phi_inv_.move(tpos, x); }
    // PLCP[tpos]
    pos_t plcp_at(pos_t tpos, interval_t v) const { return f_phi_.payload(tpos, v); }
    // PLCP[phi^-1(tpos)], the LCP between tpos and the suffix below it
    pos_t plcp_below(pos_t tpos, interval_t x) const { return f_phi_inv_.payload(tpos, x); }

    // ND / PD; sentinels k'+1 and 0.
    interval_t run_jump(interval_t x, direction dir) const {
        return dir == direction::forward ? nd_[x - 1] : pd_[x - 1];
    }

    std::optional<interval_t> first_interval_with_char(pattern_symbol_t c, interval_t lo, interval_t hi) const;
    std::optional<interval_t> last_interval_with_char(pattern_symbol_t c, interval_t lo, interval_t hi) const;

    // Tuple of the empty string: the whole suffix array.
    SaLcpInterval full_range() const;
    SaIntervalSimple full_range_simple() const;

    // Tuple of cP from the tuple of a nonempty string P; none when cP does not
    // occur. The sentinel never extends a nonempty string.
    std::optional<SaLcpInterval> extend(const SaLcpInterval& t, pattern_symbol_t c, search_strategy how,
                                        WorkCounters* work = nullptr) const;
    // Tuple of the single symbol c (the sentinel included).
    std::optional<SaLcpInterval> symbol_interval(pattern_symbol_t c, search_strategy how,
                                                 WorkCounters* work = nullptr) const;
    // Tuple of the whole pattern, one backward step per symbol.
    std::optional<SaLcpInterval> backward_search(std::span<const pattern_symbol_t> pattern,
                                                 search_strategy how = search_strategy::rank,
                                                 WorkCounters* work = nullptr) const;

    std::optional<SaIntervalSimple> extend(const SaIntervalSimple& t, pattern_symbol_t c, bool empty_string) const;
    std::optional<SaIntervalSimple> find(std::span<const pattern_symbol_t> pattern) const;

    std::uint64_t count(std::span<const pattern_symbol_t> pattern) const;
    // occurrence starts in SA order
    std::vector<pos_t> locate(std::span<const pattern_symbol_t> pattern) const;

    // Alphabet of the indexed text (empty when built from bare suffix structures).
    const std::vector<char>& alphabet() const noexcept { return alphabet_; }
    bool has_separator() const noexcept { return has_separator_; }
    std::vector<pattern_symbol_t> encode(std::string_view pattern) const;
    // The indexed text, spelled backwards from the sentinel row by LF steps.
    Text recover_text() const;

    // total integers held in all arrays of the index
    std::size_t stored_integers() const noexcept;

    void serialize(std::ostream& out) const;
    static Index deserialize(std::istream& in);

    bool operator==(const Index&) const = default;

  private:
    friend struct IndexCodec;

    void build_lookups();
    void validate(const SuffixStructures& s) const;

    pos_t n_ = 0;
    std::size_t r_ = 0;
    unsigned sigma_ = 0;
    std::vector<char> alphabet_;
    bool has_separator_ = false;

    MoveStructure f_lf_, f_phi_, f_phi_inv_;
    std::vector<symbol_t> l_first_;
    std::vector<pos_t> sa_top_, sa_bot_;
    std::vector<interval_t> sa_top_phi_, sa_top_idx_, sa_bot_idx_, sa_bot_phi_;
    std::vector<interval_t> nd_, pd_;
    pos_t sa_last_ = 0; // SA[n]

    // derived from l_first_ on build and load
    std::vector<std::vector<interval_t>> char_positions_;
};

} // namespace optbwtrl
