#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cli.hpp"
#include "racklab/families.hpp"
#include "racklab/rack_io.hpp"

using namespace racklab;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
    std::string err;
};

Run run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = cli::run_cli(args, out, err);
    return {code, out.str(), err.str()};
}

fs::path tmp(const std::string& name) {
    const fs::path dir = fs::path(RACKLAB_TEST_TMP) / "cli";
    fs::create_directories(dir);
    return dir / name;
}

std::string write_rack(const std::string& name, const Table& t) {
    const fs::path p = tmp(name);
    write_table_file(p, t);
    return p.string();
}

std::string write_text(const std::string& name, const std::string& text) {
    const fs::path p = tmp(name);
    std::ofstream(p) << text;
    return p.string();
}

}  // namespace

TEST_SUITE("cli") {

TEST_CASE("check") {
    CHECK(run({"check", write_rack("triv3.rack", trivial_rack(3).table())}).code == 0);

    const Run bad = run({"check", write_rack("idswap.rack", Table::from_rows({{0, 1}, {1, 0}}))});
    CHECK(bad.code == 1);
    const auto j = nlohmann::json::parse(bad.out);
    CHECK(j["is_rack"] == false);
    CHECK(j["violations"][0]["kind"] == "ConjugationFail");
    CHECK(j["violations"][0]["y"] == 0);
    CHECK(j["violations"][0]["z"] == 1);

    CHECK(run({"check", write_text("garbage.rack", "2\n0 1\nzz 0\n")}).code == 2);
    CHECK(run({"check", tmp("missing.rack").string()}).code == 2);
    CHECK(run({"check"}).code == 2);
    CHECK(run({"frobnicate"}).code == 2);
}

TEST_CASE("enumerate") {
    const Run one = run({"enumerate", "--n", "1"});
    CHECK(one.code == 0);
    CHECK(nlohmann::json::parse(one.out)["classes"] == 1);

    const Run two = run({"enumerate", "--n", "2", "--oracle"});
    CHECK(two.code == 0);
    const auto j = nlohmann::json::parse(two.out);
    CHECK(j["classes"] == 2);
    CHECK(j["oracle"]["agree"] == true);

    const fs::path dir = tmp("enum3");
    fs::remove_all(dir);
    CHECK(run({"enumerate", "--n", "3", "--out", dir.string()}).code == 0);
    std::size_t files = 0;
    for (const auto& e : fs::directory_iterator(dir)) files += e.path().extension() == ".rack";
    CHECK(files == nlohmann::json::parse(std::ifstream(dir / "summary.json"))["classes"].get<std::size_t>());

    CHECK(run({"enumerate", "--n", "7"}).code == 3);
    CHECK(run({"enumerate", "--n", "4", "--oracle"}).code == 3);
}

TEST_CASE("encode, decode and diff") {
    const Table s3 = conjugation_quandle(symmetric_group(3)).table();
    const std::string in = write_rack("s3.rack", s3);
    const std::string rke = tmp("s3.rke").string();
    const std::string back = tmp("s3_back.rack").string();
    CHECK(run({"encode", in, "--out", rke, "--delta", "1", "--cap-l", "2"}).code == 0);
    CHECK(run({"decode", rke, "--out", back}).code == 0);
    CHECK(read_table_file(back) == s3);
    const Run printed = run({"decode", rke});
    CHECK(printed.out == format_table(s3));

    // Tampered stream
    std::vector<char> bytes;
    {
        std::ifstream f(rke, std::ios::binary);
        bytes.assign(std::istreambuf_iterator<char>(f), {});
    }
    bytes.resize(bytes.size() - 1);
    const std::string cut = tmp("cut.rke").string();
    std::ofstream(cut, std::ios::binary).write(bytes.data(), std::streamsize(bytes.size()));
    CHECK(run({"decode", cut}).code == 2);

    CHECK(run({"encode", in, "--delta", "9"}).code == 2);
}

TEST_CASE("stats") {
    const Run t = run({"stats", write_rack("triv8.rack", trivial_rack(8).table())});
    CHECK(t.code == 0);
    CHECK(nlohmann::json::parse(t.out)["zeta"] == 0.0);

    // x |> y = (x)sigma with sigma a product of four swaps
    Table pairs(8);
    for (std::size_t x = 0; x < 8; ++x)
        for (std::size_t y = 0; y < 8; ++y) pairs.at(x, y) = Element(x ^ 1);
    const Run p = run({"stats", write_rack("pairs8.rack", pairs), "--delta", "1", "--cap-l", "1"});
    CHECK(p.code == 0);
    const auto j = nlohmann::json::parse(p.out);
    CHECK(j["zeta"].get<double>() == doctest::Approx(16.0));
    CHECK(j["n2_over_4"] == 16.0);
    CHECK(j["eta"]["2"] == 8);

    const std::string dot = tmp("d3.dot").string();
    CHECK(run({"stats", write_rack("d3.rack", dihedral_quandle(3).table()), "--dot", dot}).code == 0);
    CHECK(fs::exists(dot));
}

TEST_CASE("audit") {
    const Run t = run({"audit", write_rack("triv5.rack", trivial_rack(5).table()), "--delta", "1", "--cap-l", "2"});
    CHECK(t.code == 0);
    const auto j = nlohmann::json::parse(t.out);
    CHECK(j["merge_bound"]["x"] == nlohmann::json::array({0, 0, 0, 0, 0}));
    CHECK(j["pass"] == true);

    CHECK(run({"audit", write_rack("idswap2.rack", Table::from_rows({{0, 1}, {1, 0}}))}).code == 1);
}

TEST_CASE("analyze") {
    const Run z = run({"analyze", "zeta-sweep", "--n", "8"});
    CHECK(z.code == 0);
    const auto j = nlohmann::json::parse(z.out);
    for (const char* key : {"check", "params", "seed", "statistic", "bound", "pass"}) CHECK(j.contains(key));
    CHECK(j["statistic"] == 16.0);

    CHECK(run({"analyze", "claim-calc"}).code == 0);
    CHECK(run({"analyze", "chernoff", "--n", "200", "--trials", "5000"}).code == 0);
    CHECK(run({"analyze", "find-w", "--p", "0.8", "--seed", "7"}).code == 0);
    CHECK(run({"analyze", "nonsense"}).code == 2);

    const std::string out = tmp("rs.json").string();
    CHECK(run({"analyze", "random-subset", "--n", "40", "--p", "0.3", "--trials", "2000", "--out", out}).code == 0);
    CHECK(nlohmann::json::parse(std::ifstream(out))["check"] == "random-subset");
}

TEST_CASE("json output does not depend on the thread count") {
    const std::vector<std::string> base{"analyze", "chernoff", "--n", "100", "--trials", "20000", "--seed", "5"};
    auto with = [&](const char* t) {
        auto a = base;
        a.push_back("--threads");
        a.push_back(t);
        return run(a).out;
    };
    CHECK(with("1") == with("3"));

    const std::string in = write_rack("d6.rack", dihedral_quandle(6).table());
    CHECK(run({"stats", in, "--threads", "1"}).out == run({"stats", in, "--threads", "4"}).out);
}

TEST_CASE("text format") {
    const Run r = run({"check", write_rack("triv2.rack", trivial_rack(2).table()), "--format", "text"});
    CHECK(r.code == 0);
    CHECK(r.out.find("is_rack: true") != std::string::npos);
    CHECK(run({"check", "x", "--format", "xml"}).code == 2);
}

}
