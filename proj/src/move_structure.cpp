#include "optbwtrl/move_structure.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <vector>

namespace optbwtrl {

std::optional<DisjointViolation> validate_disjoint(const IntervalSequence& seq) {
    using c = DisjointViolation::condition;
    const std::size_t k = seq.size();
    if (seq.n == 0 || k == 0 || seq.q.size() != k) {
        return DisjointViolation{c::shape, 0, "sequence is empty or p/q sizes differ"};
    }
    if (seq.p[0] != 1) return DisjointViolation{c::first_start, 1, "p_1 must be 1"};
    for (std::size_t x = 1; x < k; ++x) {
        if (seq.p[x] <= seq.p[x - 1]) {
            return DisjointViolation{c::increasing, x + 1, "p is not strictly increasing"};
        }
    }
    if (seq.p[k - 1] > seq.n) return DisjointViolation{c::increasing, k, "p_k exceeds n"};

    for (std::size_t x = 1; x <= k; ++x) {
        const pos_t q = seq.q[x - 1];
        if (q < 1 || q + seq.length(x) - 1 > seq.n) {
            return DisjointViolation{c::output_range, x, "output interval leaves [1, n]"};
        }
    }

    std::vector<std::size_t> order(k);
    std::iota(order.begin(), order.end(), std::size_t{1});
    std::sort(order.begin(), order.end(),
              [&](std::size_t a, std::size_t b) { return seq.q[a - 1] < seq.q[b - 1]; });
    pos_t expected = 1;
    for (std::size_t x : order) {
        if (seq.q[x - 1] != expected) {
            return DisjointViolation{c::tiling, x,
                                     seq.q[x - 1] < expected ? "output intervals overlap"
                                                             : "output intervals leave a gap"};
        }
        expected += seq.length(x);
    }
    return std::nullopt;
}

pos_t evaluate(const IntervalSequence& seq, pos_t i) {
    auto it = std::upper_bound(seq.p.begin(), seq.p.end(), i);
    const auto x = static_cast<std::size_t>(it - seq.p.begin()) - 1;
    return seq.q[x] + (i - seq.p[x]);
}

IntervalSequence balance(const IntervalSequence& seq, unsigned d) {
    if (d < 2) throw invalid_input("balancing parameter d must be at least 2");
    if (auto v = validate_disjoint(seq)) throw invalid_input("cannot balance: " + v->message);

    std::map<pos_t, pos_t> input;  // p -> q
    std::map<pos_t, pos_t> output; // q -> p
    for (std::size_t x = 0; x < seq.size(); ++x) {
        input.emplace(seq.p[x], seq.q[x]);
        output.emplace(seq.q[x], seq.p[x]);
    }
    auto length_of = [&](pos_t p) {
        auto next = input.upper_bound(p);
        return (next == input.end() ? seq.n + 1 : next->first) - p;
    };
    auto starts_in = [&](pos_t q) {
        const pos_t end = q + length_of(output.at(q));
        std::vector<pos_t> inside;
        for (auto s = input.lower_bound(q); s != input.end() && s->first < end; ++s) inside.push_back(s->first);
        return inside;
    };

    // heaviest output interval first; stale counts are refreshed when popped
    std::priority_queue<std::pair<std::size_t, pos_t>> pending;
    for (pos_t q : seq.q) pending.emplace(starts_in(q).size(), q);
    const std::size_t split_cap = seq.n;
    std::size_t splits = 0;
    while (!pending.empty()) {
        const auto [count, q] = pending.top();
        pending.pop();
        const auto inside = starts_in(q);
        const std::size_t c = inside.size();
        if (c <= d) continue;
        if (c != count) {
            pending.emplace(c, q);
            continue;
        }

        // the new input start lands at cut - (q - p); keep it out of the piece that is now full
        const pos_t p = output.at(q);
        const pos_t cut = q > p ? inside[c - d] : inside[d];
        const pos_t t = cut - q;
        const pos_t np = p + t, nq = q + t;
        input.emplace(np, nq);
        output.emplace(nq, np);
        ensure(++splits <= split_cap, "balancing did not converge");

        for (pos_t o : {q, nq, std::prev(output.upper_bound(np))->first}) pending.emplace(starts_in(o).size(), o);
    }

    IntervalSequence out;
    out.n = seq.n;
    out.p.reserve(input.size());
    out.q.reserve(input.size());
    for (auto [p, q] : input) {
        out.p.push_back(p);
        out.q.push_back(q);
    }
    return out;
}

MoveStructure MoveStructure::build(const IntervalSequence& seq, unsigned d,
                                   std::optional<std::vector<pos_t>> payload) {
    if (payload && payload->size() != seq.size()) {
        throw invalid_input("payload length " + std::to_string(payload->size()) +
                            " does not match interval count " + std::to_string(seq.size()));
    }
    IntervalSequence balanced = balance(seq, d);

    MoveStructure ms;
    ms.n_ = seq.n;
    ms.d_ = d;
    ms.k_input_ = seq.size();
    ms.p_ = balanced.p;
    ms.p_.push_back(seq.n + 1);
    ms.q_ = std::move(balanced.q);
    ms.dest_.resize(ms.q_.size());
    for (std::size_t x = 0; x < ms.q_.size(); ++x) ms.dest_[x] = ms.interval_of(ms.q_[x]);

    if (payload) {
        ms.payload_.resize(ms.q_.size());
        for (std::size_t x = 0; x < ms.q_.size(); ++x) {
            auto it = std::upper_bound(seq.p.begin(), seq.p.end(), ms.p_[x]);
            const auto origin = static_cast<std::size_t>(it - seq.p.begin()) - 1;
            const pos_t offset = ms.p_[x] - seq.p[origin];
            ensure((*payload)[origin] >= offset, "payload is not linear with slope -1 over its interval");
            ms.payload_[x] = (*payload)[origin] - offset;
        }
    }
    return ms;
}

pos_t MoveStructure::payload_at_start(interval_t x) const {
    if (payload_.empty()) throw contract_error("move structure has no payload");
    return payload_.at(x - 1);
}

interval_t MoveStructure::interval_of(pos_t i) const {
    if (i < 1 || i > n_) throw contract_error("interval_of: position out of range");
    auto it = std::upper_bound(p_.begin(), p_.end() - 1, i);
    return static_cast<interval_t>(it - p_.begin());
}

IntervalSequence MoveStructure::sequence() const {
    IntervalSequence s;
    s.n = n_;
    s.p.assign(p_.begin(), p_.end() - 1);
    s.q = q_;
    return s;
}

MoveStructure::raw_parts MoveStructure::parts() const {
    return {n_, d_, k_input_, std::vector<pos_t>(p_.begin(), p_.end() - 1), q_, dest_, payload_};
}

MoveStructure MoveStructure::from_parts(raw_parts parts) {
    const std::size_t k = parts.q.size();
    if (parts.n == 0 || k == 0 || parts.p.size() != k || parts.dest.size() != k ||
        (!parts.payload.empty() && parts.payload.size() != k) || parts.d < 2) {
        throw format_error(format_error::kind::malformed, "move structure arrays are inconsistent");
    }
    MoveStructure ms;
    ms.n_ = parts.n;
    ms.d_ = static_cast<unsigned>(parts.d);
    ms.k_input_ = parts.k_input;
    ms.p_ = std::move(parts.p);
    ms.p_.push_back(parts.n + 1);
    ms.q_ = std::move(parts.q);
    ms.dest_ = std::move(parts.dest);
    ms.payload_ = std::move(parts.payload);

    IntervalSequence seq = ms.sequence();
    if (validate_disjoint(seq)) {
        throw format_error(format_error::kind::malformed, "move structure is not a disjoint interval sequence");
    }
    for (std::size_t x = 0; x < k; ++x) {
        const interval_t y = ms.dest_[x];
        if (y < 1 || y > k || !ms.contains(y, ms.q_[x])) {
            throw format_error(format_error::kind::malformed, "move structure destination pointer is wrong");
        }
    }
    return ms;
}

} // namespace optbwtrl
