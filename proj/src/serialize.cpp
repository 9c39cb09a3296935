// Index file layout (all integers little-endian):
//   "OBRL" | u32 version | u64 n, r, sigma, d | components... | u32 crc32
// Each component is a u64 word count followed by that many u64 words.

#include <zlib.h>

#include <array>
#include <cstring>
#include <istream>
#include <iterator>
#include <ostream>

#include "optbwtrl/errors.hpp"
#include "optbwtrl/index.hpp"

namespace optbwtrl {

namespace {

constexpr std::array<char, 4> magic{'O', 'B', 'R', 'L'};
constexpr std::uint32_t format_version = 1;

class Writer {
  public:
    void u32(std::uint32_t v) {
        for (int b = 0; b < 4; ++b) bytes_.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
    }
    void u64(std::uint64_t v) {
        for (int b = 0; b < 8; ++b) bytes_.push_back(static_cast<char>((v >> (8 * b)) & 0xff));
    }
    template <typename T>
    void component(const std::vector<T>& values) {
        u64(values.size());
        for (auto v : values) u64(static_cast<std::uint64_t>(v));
    }
    void raw(const char* p, std::size_t len) { bytes_.insert(bytes_.end(), p, p + len); }

    std::string& bytes() { return bytes_; }

  private:
    std::string bytes_;
};

class Reader {
  public:
    explicit Reader(std::string_view bytes) : bytes_(bytes) {}

    std::uint32_t u32() {
        need(4);
        std::uint32_t v = 0;
        for (int b = 0; b < 4; ++b) v |= std::uint32_t(static_cast<unsigned char>(bytes_[pos_ + b])) << (8 * b);
        pos_ += 4;
        return v;
    }
    std::uint64_t u64() {
        need(8);
        std::uint64_t v = 0;
        for (int b = 0; b < 8; ++b) v |= std::uint64_t(static_cast<unsigned char>(bytes_[pos_ + b])) << (8 * b);
        pos_ += 8;
        return v;
    }
    template <typename T>
    std::vector<T> component() {
        const std::uint64_t len = u64();
        if (len > (bytes_.size() - pos_) / 8) {
            throw format_error(format_error::kind::truncated, "index file is truncated");
        }
        std::vector<T> out(len);
        for (auto& v : out) v = static_cast<T>(u64());
        return out;
    }
    void need(std::size_t len) const {
        if (bytes_.size() - pos_ < len) throw format_error(format_error::kind::truncated, "index file is truncated");
    }
    std::size_t pos() const { return pos_; }
    std::size_t remaining() const { return bytes_.size() - pos_; }

  private:
    std::string_view bytes_;
    std::size_t pos_ = 0;
};

void write_move(Writer& w, const MoveStructure& ms) {
    const auto parts = ms.parts();
    std::vector<std::uint64_t> block;
    block.push_back(parts.q.size());
    block.push_back(parts.k_input);
    block.insert(block.end(), parts.p.begin(), parts.p.end());
    block.insert(block.end(), parts.q.begin(), parts.q.end());
    block.insert(block.end(), parts.dest.begin(), parts.dest.end());
    block.push_back(parts.payload.size());
    block.insert(block.end(), parts.payload.begin(), parts.payload.end());
    w.component(block);
}

MoveStructure read_move(Reader& rd, pos_t n, std::uint64_t d) {
    const auto block = rd.component<std::uint64_t>();
    auto malformed = [] { return format_error(format_error::kind::malformed, "move structure block is malformed"); };
    if (block.size() < 3) throw malformed();
    const std::uint64_t k = block[0];
    if (k == 0 || k > n || block.size() < 3 + 3 * k) throw malformed();
    MoveStructure::raw_parts parts{n, d, block[1], {}, {}, {}, {}};
    auto it = block.begin() + 2;
    parts.p.assign(it, it + k);
    parts.q.assign(it + k, it + 2 * k);
    parts.dest.assign(it + 2 * k, it + 3 * k);
    it += 3 * k;
    const std::uint64_t payload_len = *it++;
    if (payload_len != 0 && payload_len != k) throw malformed();
    if (static_cast<std::uint64_t>(block.end() - it) != payload_len) throw malformed();
    parts.payload.assign(it, block.end());
    return MoveStructure::from_parts(std::move(parts));
}

} // namespace

struct IndexCodec {
    static void write(const Index& ix, std::ostream& out) {
        Writer w;
        w.raw(magic.data(), magic.size());
        w.u32(format_version);
        w.u64(ix.n_);
        w.u64(ix.r_);
        w.u64(ix.sigma_);
        w.u64(ix.balance_parameter());

        std::vector<std::uint64_t> alphabet;
        for (char ch : ix.alphabet_) alphabet.push_back(static_cast<unsigned char>(ch));
        w.component(alphabet);
        w.component(std::vector<std::uint64_t>{ix.has_separator_ ? 1u : 0u, ix.sa_last_});
        write_move(w, ix.f_lf_);
        write_move(w, ix.f_phi_);
        write_move(w, ix.f_phi_inv_);
        w.component(ix.l_first_);
        w.component(ix.sa_top_);
        w.component(ix.sa_bot_);
        w.component(ix.sa_top_phi_);
        w.component(ix.sa_top_idx_);
        w.component(ix.sa_bot_idx_);
        w.component(ix.sa_bot_phi_);
        w.component(ix.nd_);
        w.component(ix.pd_);

        auto& bytes = w.bytes();
        const auto crc = crc32(0L, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(bytes.size()));
        w.u32(static_cast<std::uint32_t>(crc));
        out.write(bytes.data(), static_cast<std::streamsize>(bytes.size()));
        if (!out) throw std::ios_base::failure("failed to write index");
    }

    static Index read(std::istream& in) {
        std::string bytes((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
        if (in.bad()) throw std::ios_base::failure("failed to read index");
        Reader rd(bytes);

        rd.need(magic.size());
        if (std::memcmp(bytes.data(), magic.data(), magic.size()) != 0) {
            throw format_error(format_error::kind::bad_magic, "not an index file (bad magic)");
        }
        rd.u32(); // magic
        const auto version = rd.u32();
        if (version != format_version) {
            throw format_error(format_error::kind::version_mismatch,
                               "index format version " + std::to_string(version) + " is not supported");
        }

        Index ix;
        ix.n_ = rd.u64();
        ix.r_ = rd.u64();
        const auto sigma = rd.u64();
        const auto d = rd.u64();
        auto malformed = [](const char* what) { return format_error(format_error::kind::malformed, what); };
        if (ix.n_ == 0 || ix.r_ == 0 || ix.r_ > ix.n_ || sigma == 0 || sigma > 257 || d < 2) {
            throw malformed("index header values are out of range");
        }
        ix.sigma_ = static_cast<unsigned>(sigma);

        for (auto ch : rd.component<std::uint64_t>()) ix.alphabet_.push_back(static_cast<char>(ch));
        const auto flags = rd.component<std::uint64_t>();
        if (flags.size() != 2) throw malformed("index flags block is malformed");
        ix.has_separator_ = flags[0] != 0;
        ix.sa_last_ = flags[1];
        ix.f_lf_ = read_move(rd, ix.n_, d);
        ix.f_phi_ = read_move(rd, ix.n_, d);
        ix.f_phi_inv_ = read_move(rd, ix.n_, d);
        ix.l_first_ = rd.component<symbol_t>();
        ix.sa_top_ = rd.component<pos_t>();
        ix.sa_bot_ = rd.component<pos_t>();
        ix.sa_top_phi_ = rd.component<interval_t>();
        ix.sa_top_idx_ = rd.component<interval_t>();
        ix.sa_bot_idx_ = rd.component<interval_t>();
        ix.sa_bot_phi_ = rd.component<interval_t>();
        ix.nd_ = rd.component<interval_t>();
        ix.pd_ = rd.component<interval_t>();

        const std::size_t body = rd.pos();
        const auto stored_crc = rd.u32();
        if (rd.remaining() != 0) throw malformed("trailing bytes after the checksum");
        const auto crc = crc32(0L, reinterpret_cast<const Bytef*>(bytes.data()), static_cast<uInt>(body));
        if (static_cast<std::uint32_t>(crc) != stored_crc) {
            throw format_error(format_error::kind::checksum, "index checksum mismatch");
        }

        const std::size_t k = ix.f_lf_.size();
        for (std::size_t len : {ix.l_first_.size(), ix.sa_top_.size(), ix.sa_bot_.size(), ix.sa_top_phi_.size(),
                                ix.sa_top_idx_.size(), ix.sa_bot_idx_.size(), ix.sa_bot_phi_.size(), ix.nd_.size(),
                                ix.pd_.size()}) {
            if (len != k) throw malformed("per-interval arrays disagree with the LF structure size");
        }
        if (ix.sa_last_ < 1 || ix.sa_last_ > ix.n_) throw malformed("SA sample out of range");
        const std::size_t kv = ix.f_phi_.size(), ky = ix.f_phi_inv_.size();
        for (interval_t x = 1; x <= k; ++x) {
            const bool ok = ix.l_first(x) < ix.sigma_ && ix.sa_top(x) >= 1 && ix.sa_top(x) <= ix.n_ &&
                            ix.sa_bot(x) >= 1 && ix.sa_bot(x) <= ix.n_ &&
                            ix.f_phi_.contains(ix.sa_top_phi(x), ix.sa_top(x)) &&
                            ix.f_phi_.contains(ix.sa_bot_phi(x), ix.sa_bot(x)) &&
                            ix.f_phi_inv_.contains(ix.sa_top_idx(x), ix.sa_top(x)) &&
                            ix.f_phi_inv_.contains(ix.sa_bot_idx(x), ix.sa_bot(x)) && ix.nd_[x - 1] > x &&
                            ix.nd_[x - 1] <= k + 1 && ix.pd_[x - 1] < x;
            if (!ok) throw malformed("per-interval sample or pointer out of range");
        }
        if (!ix.f_phi_.has_payload() || !ix.f_phi_inv_.has_payload() || kv == 0 || ky == 0) {
            throw malformed("phi structures are missing their LCP payload");
        }
        ix.build_lookups();
        return ix;
    }
};

void Index::serialize(std::ostream& out) const { IndexCodec::write(*this, out); }

Index Index::deserialize(std::istream& in) { return IndexCodec::read(in); }

} // namespace optbwtrl
