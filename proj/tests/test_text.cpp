#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "optbwtrl/errors.hpp"
#include "support.hpp"

using namespace optbwtrl;
using support::small_text;

namespace {

std::vector<pos_t> one_based(std::initializer_list<pos_t> v) {
    std::vector<pos_t> out{0};
    out.insert(out.end(), v);
    return out;
}

pos_t brute_lcp(const std::vector<symbol_t>& t, pos_t a, pos_t b) {
    pos_t l = 0;
    while (a + l <= t.size() && b + l <= t.size() && t[a + l - 1] == t[b + l - 1]) ++l;
    return l;
}

} // namespace

TEST_CASE("small text suffix structures") {
    const Text t = validate_text(small_text);
    REQUIRE(t.size() == 20);
    const auto s = build_suffix_structures(t);

    CHECK(s.sa == one_based({20, 19, 16, 5, 7, 13, 2, 10, 1, 9, 18, 17, 15, 4, 6, 12, 8, 14, 3, 11}));
    CHECK(s.lcp == one_based({0, 0, 1, 1, 2, 2, 4, 5, 0, 6, 0, 1, 0, 2, 3, 3, 1, 1, 3, 4}));
    CHECK(s.plcp == one_based({0, 4, 3, 2, 1, 3, 2, 1, 6, 5, 4, 3, 2, 1, 0, 1, 1, 0, 0, 0}));

    std::string bwt;
    for (pos_t i = 1; i <= s.n; ++i) bwt.push_back(t.alphabet[s.bwt[i]]);
    CHECK(bwt == "ipssssmm$spissisiiii");

    CHECK(s.sa[10] == 9);
    CHECK(s.lcp[10] == 6);
    CHECK(s.plcp[9] == 6);
    CHECK(s.phi[9] == 1);
    CHECK(s.phi_inv[1] == 9);
    CHECK(s.lf[9] == 1);
    CHECK(s.lf[4] == 14);
    CHECK(s.phi[20] == 11);
    CHECK(s.plcp[4] == 2);
    CHECK(s.plcp[5] == 1);
    CHECK(s.plcp[2] == 4);

    const auto rl = build_rlbwt(s);
    CHECK(rl.r() == 12);
    std::vector<pos_t> starts;
    for (const auto& run : rl.runs) starts.push_back(run.start);
    CHECK(starts == std::vector<pos_t>{1, 2, 3, 7, 9, 10, 11, 12, 13, 15, 16, 17});
}

TEST_CASE("text validation") {
    CHECK_THROWS_AS(validate_text(""), invalid_input);
    CHECK_THROWS_AS(validate_text("ab$c"), invalid_input);
    CHECK(validate_text("abc$").size() == 4);
    CHECK(validate_text("abc").size() == 4);
    const Text one = validate_text("$");
    CHECK(one.size() == 1);
    CHECK(one.at(1) == sentinel_symbol);

    const Text t = validate_text("banana");
    CHECK(t.at(7) == sentinel_symbol);
    CHECK(t.decode(1, 6) == "banana");
    CHECK(t.sigma == 4);
    const auto p = t.encode("anz$");
    CHECK(p[0] == t.at(2));
    CHECK(p[1] == t.at(3));
    CHECK(p[2] == absent_symbol);
    CHECK(p[3] == sentinel_symbol);
}

TEST_CASE("records are joined by the separator") {
    const Text t = text_from_records({"acg", "tt"});
    CHECK(t.has_separator);
    CHECK(t.size() == 7);
    CHECK(t.at(4) == separator_symbol);
    CHECK(t.at(7) == sentinel_symbol);
    CHECK(t.encode("\n")[0] == absent_symbol);
    CHECK_THROWS_AS(text_from_records({}), invalid_input);
    CHECK_THROWS_AS(text_from_records({"a$"}), invalid_input);

    const auto dir = std::filesystem::temp_directory_path();
    const auto path = dir / "optbwtrl_records_test.fa";
    {
        std::ofstream out(path);
        out << ">one\nAC\nG T\n>two\n\n>three\nTT\n";
    }
    CHECK(read_fasta_records(path) == std::vector<std::string>{"ACGT", "TT"});
    std::filesystem::remove(path);
    CHECK_THROWS_AS(read_raw_file(dir / "optbwtrl_no_such_file"), std::ios_base::failure);
}

TEST_CASE("suffix structures agree with brute force on random texts") {
    std::mt19937_64 rng(7);
    for (int round = 0; round < 60; ++round) {
        const unsigned sigma = 1 + round % 4;
        const Text t = validate_text(support::random_string(rng, support::uniform(rng, 1, 200), sigma));
        const auto s = build_suffix_structures(t);
        const pos_t n = t.size();
        REQUIRE(s.sa == oracle::naive_suffix_array(t.symbols));
        for (pos_t i = 1; i <= n; ++i) {
            CHECK(s.isa[s.sa[i]] == i);
            CHECK(s.lcp[i] == (i == 1 ? 0 : brute_lcp(t.symbols, s.sa[i], s.sa[i - 1])));
            CHECK(s.plcp[s.sa[i]] == s.lcp[i]);
            CHECK(s.phi[s.sa[i]] == s.sa[i == 1 ? n : i - 1]);
            CHECK(s.phi_inv[s.sa[i]] == s.sa[i == n ? 1 : i + 1]);
            const pos_t prev = s.sa[i] == 1 ? n : s.sa[i] - 1;
            CHECK(s.bwt[i] == t.at(prev));
            CHECK(s.lf[i] == s.isa[prev]);
        }
        const auto rl = build_rlbwt(s);
        CHECK(rl.expand() == std::vector<symbol_t>(s.bwt.begin() + 1, s.bwt.end()));
        CHECK(invert_bwt(rl) == t.symbols);
    }
}
