#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "optbwtrl/errors.hpp"
#include "optbwtrl/text.hpp"

namespace optbwtrl {

using interval_t = std::uint64_t; // 1-based interval index

// Pairs (p_x, q_x), x = 1..k, stored at offset x-1. Input interval x is
// [p_x, p_{x+1}-1] with p_{k+1} = n+1; it maps onto [q_x, q_x + len_x - 1].
struct IntervalSequence {
    pos_t n = 0;
    std::vector<pos_t> p, q;

    std::size_t size() const noexcept { return p.size(); }
    pos_t length(interval_t x) const { return (x < p.size() ? p[x] : n + 1) - p[x - 1]; }

    bool operator==(const IntervalSequence&) const = default;
};

struct DisjointViolation {
    enum class condition {
        shape,            // empty sequence, mismatched p/q sizes or n = 0
        first_start,      // p_1 != 1
        increasing,       // p not strictly increasing or p_k > n
        output_range,     // some output interval leaves [1, n]
        tiling,           // output intervals overlap or leave a gap
    };
    condition which;
    std::size_t index; // 1-based offending pair, 0 when not tied to one pair
    std::string message;
};

std::optional<DisjointViolation> validate_disjoint(const IntervalSequence& seq);

// Evaluates the bijection at i by binary search; used for construction and tests.
pos_t evaluate(const IntervalSequence& seq, pos_t i);

// Splits intervals until every output interval contains at most d input
// starts. Represents the same bijection.
IntervalSequence balance(const IntervalSequence& seq, unsigned d);

struct MoveResult {
    pos_t pos;
    interval_t interval;

    bool operator==(const MoveResult&) const = default;
};

// A balanced disjoint interval sequence with per-interval destination
// pointers and an optional payload sampled at every interval start. The
// payload decreases by one per position inside an interval, which is how
// PLCP behaves along the phi and phi^-1 intervals.
class MoveStructure {
  public:
    MoveStructure() = default;

    // `payload`, when given, holds one value per pre-balance interval start.
    static MoveStructure build(const IntervalSequence& seq, unsigned d,
                               std::optional<std::vector<pos_t>> payload = std::nullopt);

    std::size_t size() const noexcept { return q_.size(); }
    pos_t domain() const noexcept { return n_; }
    unsigned balance_parameter() const noexcept { return d_; }
    std::size_t pre_balance_size() const noexcept { return k_input_; }

    // p_x for x in [1, k'+1]
    pos_t start(interval_t x) const { return p_[x - 1]; }
    pos_t length(interval_t x) const { return p_[x] - p_[x - 1]; }
    pos_t dest(interval_t x) const { return q_[x - 1]; }
    interval_t dest_interval(interval_t x) const { return dest_[x - 1]; }
    bool has_payload() const noexcept { return !payload_.empty(); }
    pos_t payload_at_start(interval_t x) const;

    bool contains(interval_t x, pos_t i) const {
        return x >= 1 && x <= size() && p_[x - 1] <= i && i < p_[x];
    }

    MoveResult move(pos_t i, interval_t x) const {
        std::size_t visited;
        return move(i, x, visited);
    }

    // `visited` receives the number of intervals inspected while resolving x'.
    MoveResult move(pos_t i, interval_t x, std::size_t& visited) const {
        require(contains(x, i), "move query: interval does not contain position");
        const pos_t pos = q_[x - 1] + (i - p_[x - 1]);
        interval_t y = dest_[x - 1];
        visited = 1;
        while (p_[y] <= pos) {
            ++y;
            ++visited;
        }
        return {pos, y};
    }

    pos_t payload(pos_t i, interval_t x) const {
        if (payload_.empty()) throw contract_error("payload query on a move structure without payload");
        require(contains(x, i), "payload query: interval does not contain position");
        require(payload_[x - 1] >= i - p_[x - 1], "payload query: value below zero");
        return payload_[x - 1] - (i - p_[x - 1]);
    }

    // O(log k') lookup of the interval containing i.
    interval_t interval_of(pos_t i) const;

    IntervalSequence sequence() const;

    // number of integers stored in the arrays (p, q, dest, payload)
    std::size_t stored_integers() const noexcept {
        return p_.size() + q_.size() + dest_.size() + payload_.size();
    }

    bool operator==(const MoveStructure&) const = default;

    // raw views for serialization
    struct raw_parts {
        pos_t n;
        std::uint64_t d, k_input;
        std::vector<pos_t> p, q, dest, payload;
    };
    raw_parts parts() const;
    static MoveStructure from_parts(raw_parts parts);

  private:
    pos_t n_ = 0;
    unsigned d_ = 2;
    std::size_t k_input_ = 0;
    std::vector<pos_t> p_;    // k'+1 entries, p_[k'] = n+1
    std::vector<pos_t> q_;    // k' entries
    std::vector<interval_t> dest_;
    std::vector<pos_t> payload_;
};

} // namespace optbwtrl
