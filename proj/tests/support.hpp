#pragma once

#include <random>
#include <string>
#include <vector>

#include "optbwtrl/index.hpp"
#include "optbwtrl/matching.hpp"
#include "optbwtrl/oracles.hpp"
#include "optbwtrl/text.hpp"

namespace support {

using namespace optbwtrl;

inline const std::string small_text = "missisismississippi";

inline std::string random_string(std::mt19937_64& rng, std::size_t len, unsigned sigma) {
    std::uniform_int_distribution<unsigned> pick(0, sigma - 1);
    std::string s(len, 'a');
    for (auto& ch : s) ch = static_cast<char>('a' + pick(rng));
    return s;
}

inline std::size_t uniform(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

// `copies` copies of a random base string, each position mutated with
// probability `rate`.
inline std::string repetitive_string(std::mt19937_64& rng, std::size_t base_len, std::size_t copies, double rate,
                                     unsigned sigma) {
    const std::string base = random_string(rng, base_len, sigma);
    std::bernoulli_distribution mutate(rate);
    std::uniform_int_distribution<unsigned> pick(0, sigma - 1);
    std::string out;
    out.reserve(base_len * copies);
    for (std::size_t c = 0; c < copies; ++c) {
        for (char ch : base) out.push_back(mutate(rng) ? static_cast<char>('a' + pick(rng)) : ch);
    }
    return out;
}

// Pattern that is either random or a mutated substring of the text.
inline std::string random_pattern(std::mt19937_64& rng, const std::string& text, std::size_t len, unsigned sigma) {
    if (uniform(rng, 0, 1) == 0 || text.empty()) return random_string(rng, len, sigma);
    const std::size_t from = uniform(rng, 0, text.size() - 1);
    std::string p = text.substr(from, len);
    std::uniform_int_distribution<unsigned> pick(0, sigma - 1);
    for (auto& ch : p) {
        if (uniform(rng, 0, 19) == 0) ch = static_cast<char>('a' + pick(rng));
    }
    return p;
}

template <typename T>
std::vector<T> sorted(std::vector<T> v) {
    std::sort(v.begin(), v.end());
    return v;
}

} // namespace support
