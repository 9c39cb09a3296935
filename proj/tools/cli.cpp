#include "cli.hpp"

#include <CLI11.hpp>

#include <algorithm>
#include <array>
#include <fstream>
#include <iomanip>
#include <ostream>
#include <random>
#include <sstream>

#include "optbwtrl/errors.hpp"
#include "optbwtrl/index.hpp"
#include "optbwtrl/matching.hpp"
#include "optbwtrl/oracles.hpp"

namespace optbwtrl::cli {

namespace {

struct Config {
    std::string input;
    std::string output;
    std::vector<std::string> patterns;
    std::string pattern_file;
    pos_t min_length = 10;
    unsigned balance = 2;
    bool direct = false;
    bool fasta = false;
    bool header = false;
    std::size_t cases = 50;
    std::uint64_t seed = 1;
};

// The loaded input: an index, plus the text when it is needed or at hand.
struct Loaded {
    Index ix;
    std::optional<Text> text;
};

bool is_index_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path);
    std::array<char, 4> head{};
    in.read(head.data(), head.size());
    return in.gcount() == 4 && std::string_view(head.data(), 4) == "OBRL";
}

Text read_text(const Config& cfg) {
    if (cfg.fasta) return text_from_records(read_fasta_records(cfg.input));
    return validate_text(read_raw_file(cfg.input));
}

Loaded load(const Config& cfg, bool need_text) {
    Loaded l;
    if (is_index_file(cfg.input)) {
        std::ifstream in(cfg.input, std::ios::binary);
        if (!in) throw std::ios_base::failure("cannot open " + cfg.input);
        l.ix = Index::deserialize(in);
        if (need_text) l.text = l.ix.recover_text();
    } else {
        l.text = read_text(cfg);
        l.ix = Index::build(*l.text, cfg.balance);
    }
    return l;
}

std::vector<std::string> read_patterns(const Config& cfg) {
    std::vector<std::string> out = cfg.patterns;
    if (!cfg.pattern_file.empty()) {
        std::ifstream in(cfg.pattern_file);
        if (!in) throw std::ios_base::failure("cannot open " + cfg.pattern_file);
        std::string line;
        while (std::getline(in, line)) {
            if (!line.empty() && line.back() == '\r') line.pop_back();
            if (line.empty() || line.front() == '>') continue;
            out.push_back(line);
        }
        if (in.bad()) throw std::ios_base::failure("read error on " + cfg.pattern_file);
    }
    if (out.empty()) throw invalid_input("no patterns given (use -p or --pattern-file)");
    for (const auto& p : out) {
        if (p.empty()) throw invalid_input("pattern is empty");
    }
    return out;
}

// With several patterns every row is prefixed by the 1-based pattern number.
void row_prefix(std::ostream& out, std::size_t patterns, std::size_t k) {
    if (patterns > 1) out << k + 1 << '\t';
}

void header(std::ostream& out, const Config& cfg, std::size_t patterns, std::string_view columns) {
    if (!cfg.header) return;
    if (patterns > 1) out << "pattern\t";
    out << columns << '\n';
}

int cmd_build(const Config& cfg, std::ostream& out) {
    const Text t = read_text(cfg);
    const Index ix = Index::build(t, cfg.balance);
    std::ofstream file(cfg.output, std::ios::binary);
    if (!file) throw std::ios_base::failure("cannot create " + cfg.output);
    ix.serialize(file);
    file.close();
    if (!file) throw std::ios_base::failure("write error on " + cfg.output);
    out << "n\t" << ix.n() << "\nr\t" << ix.r() << '\n';
    return exit_ok;
}

int cmd_stats(const Config& cfg, std::ostream& out) {
    const Index ix = load(cfg, false).ix;
    out << "n\t" << ix.n() << '\n';
    out << "r\t" << ix.r() << '\n';
    out << "sigma\t" << ix.sigma() << '\n';
    out << "d\t" << ix.balance_parameter() << '\n';
    out << "intervals_lf\t" << ix.lf_structure().size() << '\n';
    out << "intervals_phi\t" << ix.phi_structure().size() << '\n';
    out << "intervals_phi_inv\t" << ix.phi_inv_structure().size() << '\n';
    out << "n_over_r\t" << std::fixed << std::setprecision(3)
        << static_cast<double>(ix.n()) / static_cast<double>(ix.r()) << '\n';
    out << "stored_integers\t" << ix.stored_integers() << '\n';
    return exit_ok;
}

int cmd_count(const Config& cfg, std::ostream& out) {
    const auto patterns = read_patterns(cfg);
    const Index ix = load(cfg, false).ix;
    header(out, cfg, patterns.size(), "count");
    for (std::size_t k = 0; k < patterns.size(); ++k) {
        row_prefix(out, patterns.size(), k);
        out << ix.count(ix.encode(patterns[k])) << '\n';
    }
    return exit_ok;
}

int cmd_locate(const Config& cfg, std::ostream& out) {
    const auto patterns = read_patterns(cfg);
    const Index ix = load(cfg, false).ix;
    header(out, cfg, patterns.size(), "t_start");
    for (std::size_t k = 0; k < patterns.size(); ++k) {
        auto occ = ix.locate(ix.encode(patterns[k]));
        std::sort(occ.begin(), occ.end());
        for (pos_t p : occ) {
            row_prefix(out, patterns.size(), k);
            out << p << '\n';
        }
    }
    return exit_ok;
}

int cmd_ms(const Config& cfg, std::ostream& out) {
    const auto patterns = read_patterns(cfg);
    const Loaded l = load(cfg, true);
    const auto s = build_suffix_structures(*l.text);
    header(out, cfg, patterns.size(), "f\tlen\tsuff\trow");
    for (std::size_t k = 0; k < patterns.size(); ++k) {
        const auto ms = compute_matching_statistics(s, l.ix, l.ix.encode(patterns[k]));
        for (std::size_t f = 0; f < ms.size(); ++f) {
            row_prefix(out, patterns.size(), k);
            out << f + 1 << '\t' << ms[f].len << '\t' << ms[f].suff << '\t' << ms[f].row << '\n';
        }
    }
    return exit_ok;
}

void print_matches(std::ostream& out, std::vector<Lem> rows, std::size_t patterns, std::size_t k) {
    std::sort(rows.begin(), rows.end());
    for (const auto& l : rows) {
        row_prefix(out, patterns, k);
        out << l.p_start << '\t' << l.t_start << '\t' << l.len << '\n';
    }
}

int cmd_lems(const Config& cfg, std::ostream& out) {
    const auto patterns = read_patterns(cfg);
    const Loaded l = load(cfg, !cfg.direct);
    std::optional<SuffixStructures> s;
    if (!cfg.direct) s = build_suffix_structures(*l.text);
    header(out, cfg, patterns.size(), "p_start\tt_start\tlen");
    for (std::size_t k = 0; k < patterns.size(); ++k) {
        const auto p = l.ix.encode(patterns[k]);
        if (cfg.direct) {
            print_matches(out, long_lem_query_direct(l.ix, p, cfg.min_length), patterns.size(), k);
        } else {
            const auto ms = compute_matching_statistics(*s, l.ix, p);
            print_matches(out, long_lem_query(l.ix, ms, p, cfg.min_length), patterns.size(), k);
        }
    }
    return exit_ok;
}

int cmd_mems(const Config& cfg, std::ostream& out) {
    const auto patterns = read_patterns(cfg);
    const Loaded l = load(cfg, true);
    header(out, cfg, patterns.size(), "p_start\tt_start\tlen");
    for (std::size_t k = 0; k < patterns.size(); ++k) {
        auto rows = oracle::naive_mems(l.ix.encode(patterns[k]), l.text->symbols);
        std::erase_if(rows, [&](const Lem& m) { return m.len < cfg.min_length; });
        print_matches(out, std::move(rows), patterns.size(), k);
    }
    return exit_ok;
}

// Random instances checked against the brute-force references.
int cmd_selftest(const Config& cfg, std::ostream& out) {
    std::mt19937_64 rng(cfg.seed);
    auto uniform = [&](std::uint64_t lo, std::uint64_t hi) {
        return std::uniform_int_distribution<std::uint64_t>(lo, hi)(rng);
    };
    std::size_t failures = 0;
    for (std::size_t c = 0; c < cfg.cases; ++c) {
        const unsigned sigma = uniform(0, 1) ? 4 : 2;
        std::string raw(uniform(1, 300), 'a');
        for (auto& ch : raw) ch = static_cast<char>('a' + uniform(0, sigma - 1));
        const Text t = validate_text(raw);
        const Index ix = Index::build(t, static_cast<unsigned>(uniform(2, 4)));
        const auto s = build_suffix_structures(t);

        std::string pat(uniform(1, 60), 'a');
        for (auto& ch : pat) ch = static_cast<char>('a' + uniform(0, sigma - 1));
        if (uniform(0, 1)) {
            const std::size_t from = uniform(0, raw.size() - 1);
            pat = raw.substr(from, pat.size());
        }
        const auto p = t.encode(pat);
        const pos_t len = uniform(1, 12);

        auto given = long_lem_query(ix, compute_matching_statistics(s, ix, p), p, len);
        auto direct = long_lem_query_direct(ix, p, len);
        std::sort(given.begin(), given.end());
        std::sort(direct.begin(), direct.end());
        const auto expected = oracle::naive_lems(p, t.symbols, len);

        auto occ = ix.locate(p);
        std::sort(occ.begin(), occ.end());
        const auto naive_occ = oracle::naive_occurrences(p, t.symbols);

        const bool ok = given == expected && direct == expected && occ == naive_occ && ix.count(p) == occ.size();
        if (!ok) {
            ++failures;
            out << "FAIL case " << c + 1 << " text=" << raw << " pattern=" << pat << " L=" << len << '\n';
        }
    }
    out << "selftest\t" << cfg.cases << " cases\t" << failures << " failures\n";
    return failures == 0 ? exit_ok : exit_internal;
}

} // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    Config cfg;
    CLI::App app{"Run-length BWT index with long-LEM queries", "optbwtrl"};
    app.require_subcommand(1);

    auto input = [&](CLI::App* sub) {
        sub->add_option("input", cfg.input, "Text file or index file")->required();
        sub->add_option("-d,--balance", cfg.balance, "Balancing parameter when building")
            ->check(CLI::Range(2u, 1024u));
        sub->add_flag("--fasta", cfg.fasta, "Read the text as FASTA records");
    };
    auto pattern_opts = [&](CLI::App* sub) {
        sub->add_option("-p,--pattern", cfg.patterns, "Pattern (repeatable)");
        sub->add_option("--pattern-file", cfg.pattern_file, "File with one pattern per line");
        sub->add_flag("--header", cfg.header, "Print a header row");
    };

    auto* build = app.add_subcommand("build", "Build an index file from a text");
    input(build);
    build->add_option("-o,--output", cfg.output, "Index file to write")->required();

    auto* stats = app.add_subcommand("stats", "Print index statistics");
    input(stats);

    auto* count = app.add_subcommand("count", "Count pattern occurrences");
    input(count);
    pattern_opts(count);

    auto* locate = app.add_subcommand("locate", "List pattern occurrences");
    input(locate);
    pattern_opts(locate);

    auto* ms = app.add_subcommand("ms", "Print matching statistics");
    input(ms);
    pattern_opts(ms);

    auto* lems = app.add_subcommand("lems", "Print long locally maximal exact matches");
    input(lems);
    pattern_opts(lems);
    lems->add_option("-L,--min-length", cfg.min_length, "Minimum match length")->check(CLI::PositiveNumber);
    lems->add_flag("--direct", cfg.direct, "Recompute windows by backward search instead of matching statistics");

    auto* mems = app.add_subcommand("mems", "Print maximal exact matches (brute force)");
    input(mems);
    pattern_opts(mems);
    mems->add_option("-L,--min-length", cfg.min_length, "Minimum match length")->check(CLI::PositiveNumber);

    auto* selftest = app.add_subcommand("selftest", "Check random instances against brute force");
    selftest->add_option("--cases", cfg.cases, "Number of instances");
    selftest->add_option("--seed", cfg.seed, "Random seed");

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return exit_ok;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return exit_ok;
    } catch (const CLI::ParseError& e) {
        err << "optbwtrl: " << e.what() << '\n';
        return exit_usage;
    }
    // -L defaults to 1 for mems so that every MEM is listed
    if (mems->parsed() && mems->count("--min-length") == 0) cfg.min_length = 1;

    try {
        if (build->parsed()) return cmd_build(cfg, out);
        if (stats->parsed()) return cmd_stats(cfg, out);
        if (count->parsed()) return cmd_count(cfg, out);
        if (locate->parsed()) return cmd_locate(cfg, out);
        if (ms->parsed()) return cmd_ms(cfg, out);
        if (lems->parsed()) return cmd_lems(cfg, out);
        if (mems->parsed()) return cmd_mems(cfg, out);
        if (selftest->parsed()) return cmd_selftest(cfg, out);
    } catch (const format_error& e) {
        err << "optbwtrl: malformed index: " << e.what() << '\n';
        return exit_bad_index;
    } catch (const std::ios_base::failure& e) {
        err << "optbwtrl: " << e.what() << '\n';
        return exit_io;
    } catch (const invalid_input& e) {
        err << "optbwtrl: invalid input: " << e.what() << '\n';
        return exit_bad_input;
    } catch (const internal_error& e) {
        err << "optbwtrl: internal consistency error: " << e.what() << '\n';
        return exit_internal;
    } catch (const contract_error& e) {
        err << "optbwtrl: internal consistency error: " << e.what() << '\n';
        return exit_internal;
    }
    return exit_usage;
}

} // namespace optbwtrl::cli
