#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <span>
#include <unordered_map>
#include <vector>

#include "optbwtrl/index.hpp"

namespace optbwtrl {

// Matching statistics of one pattern position, augmented with the move
// structure intervals of its row and text position. len = 0 marks an entry
// with no match; the remaining fields are then 0.
struct MsEntry {
    pos_t len = 0;
    pos_t suff = 0;
    pos_t row = 0;
    interval_t i_lf = 0;
    interval_t w_phi = 0;
    interval_t x_phi_inv = 0;

    bool operator==(const MsEntry&) const = default;
};

// Entry f-1 describes pattern position f.
using AugmentedMs = std::vector<MsEntry>;

// Desk-scale matching statistics from the uncompressed suffix array. Among
// rows reaching the longest match the smallest is reported.
AugmentedMs compute_matching_statistics(const SuffixStructures& s, const Index& ix,
                                        std::span<const pattern_symbol_t> pattern);

// A match P[p_start, p_start+len-1] = T[t_start, t_start+len-1].
struct Lem {
    pos_t p_start;
    pos_t t_start;
    pos_t len;

    auto operator<=>(const Lem&) const = default;
};

using LemSink = std::function<void(const Lem&)>;

// Text start minus pattern start of the matches alive in the current window,
// mapped to the pattern position where each match ends.
class DiagonalDict {
  public:
    using key_t = std::int64_t;

    explicit DiagonalDict(WorkCounters* work = nullptr) : work_(work) {}

    void insert(key_t key, pos_t end);
    // lookup and delete
    pos_t take(key_t key);

    bool contains(key_t key) const { return map_.contains(key); }
    std::size_t size() const noexcept { return map_.size(); }
    bool empty() const noexcept { return map_.empty(); }
    std::uint64_t inserts() const noexcept { return inserts_; }
    std::uint64_t deletes() const noexcept { return deletes_; }

    static key_t diagonal(pos_t text_pos, pos_t pattern_pos) {
        return static_cast<key_t>(text_pos) - static_cast<key_t>(pattern_pos);
    }

  private:
    std::unordered_map<key_t, pos_t> map_;
    std::uint64_t inserts_ = 0, deletes_ = 0;
    WorkCounters* work_;
};

// Emit the z suffixes s, phi(s), phi(phi(s)), ... as matches starting at
// pattern position f+1 and remove their diagonals.
void output_matches_up(const Index& ix, DiagonalDict& dict, pos_t s, interval_t v, pos_t z, pos_t f,
                       const LemSink& sink, WorkCounters* work = nullptr);
// Same walking downwards with phi^-1; x is the phi^-1 interval of s.
void output_matches_down(const Index& ix, DiagonalDict& dict, pos_t s, interval_t x, pos_t z, pos_t f,
                         const LemSink& sink, WorkCounters* work = nullptr);

// Single-row tuple for the window P[f, f+L-1], or none when it does not occur.
using WindowSeeder = std::function<std::optional<SaLcpInterval>(pos_t f)>;

// One step of the long-window scan. `cur` is the tuple of P[f+1, f+L] (none
// when absent). Emits every match of that window that cannot extend left by
// P[f] and returns the tuple of P[f, f+L-1]. f = 0 emits everything.
std::optional<SaLcpInterval> advance_long_interval(const Index& ix, std::span<const pattern_symbol_t> pattern,
                                                   pos_t f, const std::optional<SaLcpInterval>& cur,
                                                   DiagonalDict& dict, pos_t min_length, const WindowSeeder& seed,
                                                   const LemSink& sink, WorkCounters* work = nullptr);

// All LEMs of length >= min_length, given the matching statistics of the pattern.
void long_lem_query(const Index& ix, const AugmentedMs& ms, std::span<const pattern_symbol_t> pattern,
                    pos_t min_length, const LemSink& sink, WorkCounters* work = nullptr);
std::vector<Lem> long_lem_query(const Index& ix, const AugmentedMs& ms, std::span<const pattern_symbol_t> pattern,
                                pos_t min_length, WorkCounters* work = nullptr);

// Same output without matching statistics: broken windows are recomputed by
// backward search.
void long_lem_query_direct(const Index& ix, std::span<const pattern_symbol_t> pattern, pos_t min_length,
                           const LemSink& sink, WorkCounters* work = nullptr);
std::vector<Lem> long_lem_query_direct(const Index& ix, std::span<const pattern_symbol_t> pattern,
                                       pos_t min_length, WorkCounters* work = nullptr);

} // namespace optbwtrl
