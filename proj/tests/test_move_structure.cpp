#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "optbwtrl/errors.hpp"
#include "optbwtrl/move_structure.hpp"

using namespace optbwtrl;
using cond = DisjointViolation::condition;

namespace {

// Random permutation-like bijection: cut [1, n] into k pieces and shuffle
// their output order.
IntervalSequence random_sequence(std::mt19937_64& rng, pos_t n, std::size_t k) {
    std::vector<pos_t> cuts(n - 1);
    std::iota(cuts.begin(), cuts.end(), pos_t{2});
    std::shuffle(cuts.begin(), cuts.end(), rng);
    cuts.resize(std::min<std::size_t>(k - 1, cuts.size()));
    cuts.push_back(1);
    std::sort(cuts.begin(), cuts.end());

    IntervalSequence seq{n, cuts, {}};
    std::vector<std::size_t> order(seq.size());
    std::iota(order.begin(), order.end(), std::size_t{1});
    std::shuffle(order.begin(), order.end(), rng);
    seq.q.assign(seq.size(), 0);
    pos_t next = 1;
    for (std::size_t x : order) {
        seq.q[x - 1] = next;
        next += seq.length(x);
    }
    return seq;
}

// Runs-of-BWT style worst case: many short inputs landing in one long output.
IntervalSequence funnel(pos_t n) {
    IntervalSequence seq{n, {1}, {n}};
    for (pos_t p = 2; p <= n; ++p) {
        seq.p.push_back(p);
        seq.q.push_back(p - 1);
    }
    return seq;
}

} // namespace

TEST_CASE("disjoint interval sequence validation") {
    IntervalSequence ok{5, {1, 3}, {4, 1}};
    CHECK_FALSE(validate_disjoint(ok).has_value());

    CHECK(validate_disjoint({0, {}, {}})->which == cond::shape);
    CHECK(validate_disjoint({5, {1, 3}, {1}})->which == cond::shape);
    CHECK(validate_disjoint({5, {2, 3}, {4, 1}})->which == cond::first_start);
    CHECK(validate_disjoint({5, {1, 1}, {4, 1}})->which == cond::increasing);
    CHECK(validate_disjoint({5, {1, 6}, {1, 5}})->which == cond::increasing);
    CHECK(validate_disjoint({5, {1, 3}, {5, 1}})->which == cond::output_range);
    CHECK(validate_disjoint({5, {1, 3}, {0, 3}})->which == cond::output_range);
    const auto overlap = validate_disjoint({5, {1, 3}, {1, 2}});
    REQUIRE(overlap);
    CHECK(overlap->which == cond::tiling);
    CHECK(overlap->index == 2);
    CHECK(validate_disjoint({6, {1, 3, 5}, {1, 4, 3}})->which == cond::tiling);
}

TEST_CASE("evaluate and move agree on a hand-made sequence") {
    const IntervalSequence seq{5, {1, 3}, {4, 1}};
    CHECK(evaluate(seq, 1) == 4);
    CHECK(evaluate(seq, 2) == 5);
    CHECK(evaluate(seq, 3) == 1);
    CHECK(evaluate(seq, 5) == 3);

    const auto ms = MoveStructure::build(seq, 2);
    CHECK(ms.size() == 2);
    CHECK(ms.start(3) == 6);
    CHECK(ms.move(1, 1) == MoveResult{4, 2});
    CHECK(ms.move(4, 2) == MoveResult{2, 1});
    CHECK(ms.interval_of(4) == 2);
    CHECK_THROWS_AS(ms.interval_of(0), contract_error);
    if constexpr (checks_enabled) {
        CHECK_THROWS_AS(ms.move(3, 1), contract_error);
    }
}

TEST_CASE("balancing bounds the interval count and the scan length") {
    for (unsigned d : {2u, 3u, 4u}) {
        const auto seq = funnel(64);
        const auto bal = balance(seq, d);
        CHECK_FALSE(validate_disjoint(bal).has_value());
        CHECK(bal.size() <= (seq.size() * d + d - 2) / (d - 1));
        for (pos_t i = 1; i <= seq.n; ++i) CHECK(evaluate(bal, i) == evaluate(seq, i));
    }
    CHECK_THROWS_AS(balance(funnel(4), 1), invalid_input);
    CHECK_THROWS_AS(balance({5, {1, 3}, {1, 2}}, 2), invalid_input);
}

TEST_CASE("balancing an interval that overlaps its own image") {
    // LF of bbbbbababbbbbababbbbbbbabbbbbaba$: [16,27] maps onto [20,31]
    const IntervalSequence seq{33, {1, 2, 9, 10, 14, 16, 28, 29, 30, 31, 33}, {2, 9, 3, 16, 4, 20, 6, 1, 7, 32, 8}};
    REQUIRE_FALSE(validate_disjoint(seq).has_value());
    const auto bal = balance(seq, 3);
    CHECK(bal.size() <= 17);
    for (pos_t i = 1; i <= seq.n; ++i) CHECK(evaluate(bal, i) == evaluate(seq, i));
    const auto ms = MoveStructure::build(seq, 3);
    interval_t x = 1;
    for (pos_t i = 1; i <= seq.n; ++i) {
        if (i == ms.start(x + 1)) ++x;
        std::size_t visited = 0;
        ms.move(i, x, visited);
        CHECK(visited <= 4);
    }
}

TEST_CASE("move structures reproduce random bijections") {
    std::mt19937_64 rng(11);
    for (int round = 0; round < 200; ++round) {
        const pos_t n = 1 + rng() % 300;
        const std::size_t k = 1 + rng() % n;
        const unsigned d = 2 + round % 3;
        const auto seq = random_sequence(rng, n, k);
        REQUIRE_FALSE(validate_disjoint(seq).has_value());
        const auto ms = MoveStructure::build(seq, d);
        CHECK(ms.size() <= (k * d + d - 2) / (d - 1));
        CHECK(ms.pre_balance_size() == seq.size());

        interval_t x = 1;
        for (pos_t i = 1; i <= n; ++i) {
            if (i == ms.start(x + 1)) ++x;
            std::size_t visited = 0;
            const auto m = ms.move(i, x, visited);
            CHECK(m.pos == evaluate(seq, i));
            CHECK(ms.contains(m.interval, m.pos));
            CHECK(visited <= d + 1);
        }
    }
}

TEST_CASE("payload decreases by one inside each interval") {
    // three intervals of length 3, 2, 4 with payloads 7, 2, 3
    const IntervalSequence seq{9, {1, 4, 6}, {3, 1, 6}};
    const auto ms = MoveStructure::build(seq, 2, std::vector<pos_t>{7, 2, 3});
    REQUIRE(ms.has_payload());
    const std::vector<pos_t> expected{0, 7, 6, 5, 2, 1, 3, 2, 1, 0};
    for (pos_t i = 1; i <= 9; ++i) CHECK(ms.payload(i, ms.interval_of(i)) == expected[i]);

    CHECK_THROWS_AS(MoveStructure::build(seq, 2, std::vector<pos_t>{1}), invalid_input);
    if constexpr (checks_enabled) {
        const auto short_payload = MoveStructure::build(seq, 2, std::vector<pos_t>{1, 2, 3});
        CHECK(short_payload.payload(2, 1) == 0);
        CHECK_THROWS_AS(short_payload.payload(3, 1), contract_error);
    }
    CHECK_THROWS_AS(MoveStructure::build(seq, 2).payload(1, 1), contract_error);
}

TEST_CASE("raw parts round trip and reject corruption") {
    std::mt19937_64 rng(3);
    const auto seq = random_sequence(rng, 50, 12);
    const auto ms = MoveStructure::build(seq, 2);
    CHECK(MoveStructure::from_parts(ms.parts()) == ms);

    auto bad = ms.parts();
    bad.dest[0] = bad.dest.size() + 1;
    CHECK_THROWS_AS(MoveStructure::from_parts(bad), format_error);
    bad = ms.parts();
    bad.q[0] = bad.q[1];
    CHECK_THROWS_AS(MoveStructure::from_parts(bad), format_error);
    bad = ms.parts();
    bad.payload = {1};
    CHECK_THROWS_AS(MoveStructure::from_parts(bad), format_error);
}
