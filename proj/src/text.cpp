#include "optbwtrl/text.hpp"

#include <algorithm>
#include <array>
#include <cctype>
#include <fstream>
#include <iterator>
#include <sstream>

#include "optbwtrl/errors.hpp"

namespace optbwtrl {

namespace {

// Builds the dense alphabet for the given bytes; dense values below `first`
// are reserved (sentinel, separator).
Text remap(std::string_view body, unsigned first, bool separator_at_newline) {
    std::array<bool, 256> present{};
    for (unsigned char ch : body) present[ch] = true;
    if (separator_at_newline) present[static_cast<unsigned char>('\n')] = false;

    std::array<int, 256> dense{};
    dense.fill(-1);
    Text t;
    t.alphabet.push_back(sentinel_char);
    if (first > 1) t.alphabet.push_back('#');
    unsigned next = first;
    for (unsigned c = 0; c < 256; ++c) {
        if (!present[c]) continue;
        if (next > 255) throw invalid_input("alphabet too large for 8-bit dense symbols");
        dense[c] = static_cast<int>(next++);
        t.alphabet.push_back(static_cast<char>(c));
    }
    t.sigma = next;

    t.symbols.reserve(body.size() + 1);
    for (unsigned char ch : body) {
        if (separator_at_newline && ch == '\n') {
            t.symbols.push_back(separator_symbol);
        } else {
            t.symbols.push_back(static_cast<symbol_t>(dense[ch]));
        }
    }
    t.symbols.push_back(sentinel_symbol);
    return t;
}

} // namespace

Text validate_text(std::string_view raw) {
    if (raw.empty()) throw invalid_input("text is empty");
    auto pos = raw.find(sentinel_char);
    if (pos != std::string_view::npos && pos + 1 != raw.size()) {
        throw invalid_input("sentinel '$' found at position " + std::to_string(pos + 1) +
                            ", only the final position may hold it");
    }
    std::string_view body = raw;
    if (pos != std::string_view::npos) body.remove_suffix(1);
    return remap(body, 1, false);
}

Text text_from_records(const std::vector<std::string>& records) {
    if (records.empty()) throw invalid_input("no records");
    std::string joined;
    for (std::size_t k = 0; k < records.size(); ++k) {
        const auto& rec = records[k];
        if (rec.find(sentinel_char) != std::string::npos) {
            throw invalid_input("record " + std::to_string(k + 1) + " contains '$'");
        }
        if (rec.find('\n') != std::string::npos) {
            throw invalid_input("record " + std::to_string(k + 1) + " contains a newline");
        }
        if (k > 0) joined.push_back('\n');
        joined += rec;
    }
    Text t = remap(joined, 2, true);
    t.has_separator = true;
    return t;
}

std::vector<pattern_symbol_t> Text::encode(std::string_view pattern) const {
    std::array<pattern_symbol_t, 256> lookup;
    lookup.fill(absent_symbol);
    // the separator is never a pattern symbol, so it is skipped here
    for (std::size_t d = 0; d < alphabet.size(); ++d) {
        if (has_separator && d == separator_symbol) continue;
        lookup[static_cast<unsigned char>(alphabet[d])] = static_cast<pattern_symbol_t>(d);
    }
    std::vector<pattern_symbol_t> out;
    out.reserve(pattern.size());
    for (unsigned char ch : pattern) out.push_back(lookup[ch]);
    return out;
}

std::string Text::decode(pos_t from, pos_t len) const {
    std::string out;
    out.reserve(len);
    for (pos_t i = from; i < from + len && i <= size(); ++i) out.push_back(alphabet[at(i)]);
    return out;
}

std::string read_raw_file(const std::filesystem::path& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::ios_base::failure("cannot open " + path.string());
    std::string data((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    if (in.bad()) throw std::ios_base::failure("read error on " + path.string());
    if (!data.empty() && data.back() == '\n') data.pop_back();
    if (!data.empty() && data.back() == '\r') data.pop_back();
    return data;
}

std::vector<std::string> read_fasta_records(const std::filesystem::path& path) {
    std::ifstream in(path);
    if (!in) throw std::ios_base::failure("cannot open " + path.string());
    std::vector<std::string> records;
    std::string line;
    bool open = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.front() == '>') {
            records.emplace_back();
            open = true;
            continue;
        }
        if (!open) {
            records.emplace_back();
            open = true;
        }
        for (char ch : line) {
            if (!std::isspace(static_cast<unsigned char>(ch))) records.back().push_back(ch);
        }
    }
    if (in.bad()) throw std::ios_base::failure("read error on " + path.string());
    std::erase_if(records, [](const std::string& r) { return r.empty(); });
    return records;
}

std::vector<symbol_t> Rlbwt::expand() const {
    std::vector<symbol_t> out;
    out.reserve(n);
    for (std::size_t k = 0; k < runs.size(); ++k) {
        pos_t end = k + 1 < runs.size() ? runs[k + 1].start : n + 1;
        out.insert(out.end(), end - runs[k].start, runs[k].symbol);
    }
    return out;
}

Rlbwt build_rlbwt(const SuffixStructures& s) {
    Rlbwt rl;
    rl.n = s.n;
    for (pos_t i = 1; i <= s.n; ++i) {
        if (i == 1 || s.bwt[i] != s.bwt[i - 1]) rl.runs.push_back({s.bwt[i], i});
    }
    return rl;
}

std::vector<symbol_t> invert_bwt(const Rlbwt& rl) {
    auto bwt = rl.expand();
    const pos_t n = bwt.size();
    std::array<pos_t, 257> count{};
    for (auto c : bwt) ++count[c + 1];
    for (std::size_t c = 1; c < count.size(); ++c) count[c] += count[c - 1];
    // lf[i] for 0-based rows
    std::vector<pos_t> lf(n);
    std::array<pos_t, 256> seen{};
    for (pos_t i = 0; i < n; ++i) lf[i] = count[bwt[i]] + seen[bwt[i]]++;

    std::vector<symbol_t> text(n);
    // row 0 holds the sentinel suffix; its BWT symbol is T[n-1]
    pos_t row = 0;
    for (pos_t k = n; k-- > 0;) {
        text[k] = k + 1 == n ? sentinel_symbol : bwt[row];
        if (k + 1 != n) row = lf[row];
    }
    return text;
}

} // namespace optbwtrl
