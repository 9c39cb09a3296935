#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <unistd.h>

#include "cli.hpp"

namespace fs = std::filesystem;
using namespace optbwtrl::cli;

namespace {

struct Result {
    int status;
    std::string out, err;
};

Result invoke(std::vector<std::string> args) {
    args.insert(args.begin(), "optbwtrl");
    std::vector<const char*> argv;
    for (const auto& a : args) argv.push_back(a.c_str());
    std::ostringstream out, err;
    const int status = run(static_cast<int>(argv.size()), argv.data(), out, err);
    return {status, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("optbwtrl_cli_" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }

    std::string write(const std::string& name, const std::string& content) const {
        std::ofstream(path / name, std::ios::binary) << content;
        return (path / name).string();
    }
    std::string file(const std::string& name) const { return (path / name).string(); }
};

} // namespace

TEST_CASE("cli commands on the small text") {
    TempDir dir;
    const auto text = dir.write("t.txt", "missisismississippi\n");

    const auto stats = invoke({"stats", text});
    CHECK(stats.status == exit_ok);
    CHECK(stats.out.find("n\t20\n") != std::string::npos);
    CHECK(stats.out.find("r\t12\n") != std::string::npos);

    CHECK(invoke({"count", text, "-p", "iss"}).out == "3\n");
    CHECK(invoke({"count", text, "-p", "iss", "-p", "zz", "--header"}).out == "pattern\tcount\n1\t3\n2\t0\n");
    CHECK(invoke({"locate", text, "-p", "iss"}).out == "2\n10\n13\n");

    const std::string lems = "1\t3\t4\n1\t11\t4\n1\t14\t3\n2\t6\t3\n";
    CHECK(invoke({"lems", text, "-p", "ssis", "-L", "3"}).out == lems);
    CHECK(invoke({"lems", text, "-p", "ssis", "-L", "3", "--direct"}).out == lems);
    CHECK(invoke({"lems", text, "-p", "ssis", "-L", "3", "--header"}).out == "p_start\tt_start\tlen\n" + lems);
    CHECK(invoke({"mems", text, "-p", "ssis"}).out == "1\t3\t4\n1\t11\t4\n");
    CHECK(invoke({"ms", text, "-p", "sippis"}).out.starts_with("1\t5\t15\t13\n"));

    const auto patterns = dir.write("p.txt", ">first\nssis\n\nsis\n");
    const auto multi = invoke({"lems", text, "--pattern-file", patterns, "-L", "3"});
    CHECK(multi.status == exit_ok);
    CHECK(multi.out.starts_with("1\t1\t3\t4\n"));
    CHECK(multi.out.find("2\t1\t") != std::string::npos);
}

TEST_CASE("cli index files behave like the text") {
    TempDir dir;
    const auto text = dir.write("t.txt", "acgtacgtttacgatacgtacgaacgt");
    const auto index = dir.file("t.obrl");
    const auto built = invoke({"build", text, "-o", index, "-d", "3"});
    REQUIRE(built.status == exit_ok);

    for (const auto& cmd : {"count", "locate", "ms", "lems", "mems"}) {
        std::vector<std::string> args{cmd, "", "-p", "tacgtac", "-p", "gat"};
        if (std::string(cmd) == "lems") args.insert(args.end(), {"-L", "3"});
        args[1] = text;
        const auto from_text = invoke(args);
        args[1] = index;
        const auto from_index = invoke(args);
        CHECK(from_text.status == exit_ok);
        CHECK(from_index.out == from_text.out);
    }
    CHECK(invoke({"lems", index, "-p", "tacgtac", "-L", "3", "--direct"}).out ==
          invoke({"lems", text, "-p", "tacgtac", "-L", "3"}).out);
    CHECK(invoke({"stats", index}).out.find("d\t3\n") != std::string::npos);
}

TEST_CASE("cli FASTA input") {
    TempDir dir;
    const auto fasta = dir.write("r.fa", ">a\nACGTAC\n>b\nGTACGG\n");
    const auto out = invoke({"locate", fasta, "--fasta", "-p", "GTAC"});
    CHECK(out.status == exit_ok);
    CHECK(out.out == "3\n8\n");
    CHECK(invoke({"count", fasta, "--fasta", "-p", "TACG"}).out == "1\n");
    CHECK(invoke({"count", fasta, "--fasta", "-p", "ACGTACG"}).out == "0\n");
}

TEST_CASE("cli exit statuses") {
    TempDir dir;
    const auto text = dir.write("t.txt", "abracadabra");
    CHECK(invoke({}).status == exit_usage);
    CHECK(invoke({"frobnicate"}).status == exit_usage);
    CHECK(invoke({"lems", text, "-p", "abra", "-L", "0"}).status == exit_usage);
    CHECK(invoke({"stats", text, "-d", "1"}).status == exit_usage);
    CHECK(invoke({"build", text}).status == exit_usage);
    CHECK(invoke({"--help"}).status == exit_ok);

    CHECK(invoke({"stats", dir.file("missing.txt")}).status == exit_io);
    CHECK(invoke({"build", text, "-o", dir.file("no/such/dir/x.obrl")}).status == exit_io);

    const auto bad = dir.write("bad.obrl", "OBRL\x01\x00\x00\x00garbage");
    const auto r = invoke({"stats", bad});
    CHECK(r.status == exit_bad_index);
    CHECK(r.err.find("malformed index") != std::string::npos);

    CHECK(invoke({"count", text}).status == exit_bad_input);
    CHECK(invoke({"count", text, "-p", ""}).status == exit_bad_input);
    CHECK(invoke({"stats", dir.write("dollar.txt", "ab$cd")}).status == exit_bad_input);
    CHECK(invoke({"stats", dir.write("empty.txt", "")}).status == exit_bad_input);
}

TEST_CASE("cli selftest") {
    const auto r = invoke({"selftest", "--cases", "25", "--seed", "9"});
    CHECK(r.status == exit_ok);
    CHECK(r.out.find("0 failures") != std::string::npos);
}
