#include <doctest.h>

#include "hclat/cli.hpp"
#include "hclat/json_io.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

#include <unistd.h>

namespace fs = std::filesystem;
using hcl::Json;

namespace {

struct Result {
    int code;
    std::string out;
    std::string err;
    Json json() const { return Json::parse(out); }
};

Result run(std::vector<std::string> args) {
    std::ostringstream out, err;
    const int code = hcl::cli::run(args, out, err);
    return {code, out.str(), err.str()};
}

struct TempDir {
    fs::path path;
    TempDir() {
        path = fs::temp_directory_path() / ("hclat_cli_" + std::to_string(::getpid()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
    std::string write(const std::string& name, const std::string& text) const {
        std::ofstream(path / name) << text;
        return (path / name).string();
    }
};

}  // namespace

TEST_CASE("envelope has the fixed key order") {
    const auto r = run({"forces", "table", "--d2", "5"});
    REQUIRE(r.code == hcl::cli::ok);
    const Json j = r.json();
    std::vector<std::string> keys;
    for (const auto& [k, v] : j.items()) keys.push_back(k);
    CHECK(keys == std::vector<std::string>{"command", "version", "inputs", "results", "provenance"});
    CHECK(j["command"] == "forces table");
    CHECK(j["version"] == hcl::cli::version);
    CHECK(j["results"]["normalization_constant"] == "9/1");
}

TEST_CASE("identical runs give identical bytes") {
    const auto a = run({"forces", "verify", "--d2", "9"});
    const auto b = run({"forces", "verify", "--d2", "9", "--threads", "3"});
    CHECK(a.out == b.out);
}

TEST_CASE("forces verify reports the search") {
    const auto r = run({"forces", "verify", "--d2", "5", "--raw"});
    REQUIRE(r.code == hcl::cli::ok);
    const Json j = r.json();
    CHECK(j["d2"] == 5);
    CHECK(j["fstar"] == "1/1");
    CHECK(j["max_occupancy"] == 3);
    CHECK(j["signatures"].size() == 3);
    CHECK(r.err.find("searching") != std::string::npos);
}

TEST_CASE("forces verify against the golden files") {
    const auto r = run({"forces", "verify", "--d2", "4", "--golden", HCLAT_GOLDEN_DIR, "--raw"});
    CHECK(r.code == hcl::cli::ok);
    TempDir tmp;
    tmp.write("second_max.json", R"({"second_max": {"5": "1/2"}})");
    const auto bad = run({"forces", "verify", "--d2", "5", "--golden", tmp.path.string()});
    CHECK(bad.code == hcl::cli::check_failed);
}

TEST_CASE("unsupported D^2 is a usage error") {
    const auto r = run({"forces", "table", "--d2", "11"});
    CHECK(r.code == hcl::cli::usage_error);
    CHECK(r.err.find("no LRFF known") != std::string::npos);
}

TEST_CASE("bad arguments are usage errors") {
    CHECK(run({}).code == hcl::cli::usage_error);
    CHECK(run({"forces"}).code == hcl::cli::usage_error);
    CHECK(run({"forces", "table"}).code == hcl::cli::usage_error);
    CHECK(run({"sublat", "r3", "--ell", "0"}).code == hcl::cli::usage_error);
    CHECK(run({"nonsense"}).code == hcl::cli::usage_error);
}

TEST_CASE("version and help") {
    const auto v = run({"--version"});
    CHECK(v.code == hcl::cli::ok);
    CHECK(v.out.find(hcl::cli::version) != std::string::npos);
    CHECK(run({"--help"}).code == hcl::cli::ok);
}

TEST_CASE("pc build, then check and classify from the written file") {
    const auto b = run({"pc", "build", "--d2", "5", "--family", "d5-triangular", "--i", "0", "--seq", "01"});
    REQUIRE(b.code == hcl::cli::ok);
    const Json j = b.json();
    CHECK(j["results"]["density"] == "1/9");
    CHECK(j["results"]["perfect"] == true);
    CHECK(j["results"]["reciprocal_normalization"] == true);

    TempDir tmp;
    const auto file = tmp.write("hcp.json", b.out);
    CHECK(run({"pc", "check", "--d2", "5", "--in", file}).code == hcl::cli::ok);
    CHECK(run({"pc", "check", "--d2", "4", "--in", file}).code == hcl::cli::check_failed);

    const auto c = run({"exc", "classify", "--pc", file, "--site", "0,2,1", "--raw"});
    REQUIRE(c.code == hcl::cli::ok);
    CHECK(c.json()["type"] == "IIa");

    const auto d = run({"exc", "iia-density", "--pc", file, "--raw"});
    REQUIRE(d.code == hcl::cli::ok);
    CHECK(d.json()["density"] == "1/9");

    const auto ins = tmp.write("ins.json", "[[0,2,1]]");
    const auto rep = run({"exc", "report", "--pc", file, "--insert", ins, "--raw"});
    REQUIRE(rep.code == hcl::cli::ok);
    CHECK(rep.json()["energy"] == 2);
    const auto p = run({"exc", "peierls", "--pc", file, "--insert", ins, "--raw"});
    REQUIRE(p.code == hcl::cli::ok);
    CHECK(p.json()["holds"] == true);
}

TEST_CASE("malformed inputs") {
    TempDir tmp;
    const auto junk = tmp.write("junk.json", "{not json");
    CHECK(run({"pc", "check", "--d2", "5", "--in", junk}).code == hcl::cli::usage_error);
    const auto empty = tmp.write("empty.json", "{}");
    CHECK(run({"pc", "check", "--d2", "5", "--in", empty}).code == hcl::cli::usage_error);
    CHECK(run({"pc", "check", "--d2", "5", "--in", (tmp.path / "missing.json").string()}).code ==
          hcl::cli::usage_error);
    const auto b = run({"pc", "build", "--d2", "2", "--family", "fcc", "--l", "1"});
    const auto fcc = tmp.write("fcc.json", b.out);
    CHECK(run({"exc", "classify", "--pc", fcc, "--site", "1,2", "--d2", "2"}).code == hcl::cli::usage_error);
    CHECK(run({"exc", "classify", "--pc", fcc, "--site", "1,0,0", "--d2", "2"}).code == hcl::cli::usage_error);
}

TEST_CASE("inadmissible or imperfect builds exit with 1") {
    CHECK(run({"pc", "build", "--d2", "3", "--family", "fcc", "--l", "1"}).code == hcl::cli::check_failed);
    CHECK(run({"pc", "build", "--d2", "2", "--family", "2l2-triangular", "--l", "1", "--i", "0", "--seq", "021"})
              .code == hcl::cli::usage_error);
}

TEST_CASE("censuses and the density table") {
    CHECK(run({"pc", "census", "--d2", "10", "--raw"}).json()["count"] == 208);
    CHECK(run({"pc", "census", "--d2", "6", "--raw"}).json()["count"] == "ℵ₀");
    CHECK(run({"pc", "census", "--d2", "5", "--raw"}).json()["hcp_family"] == 72);
    const auto t = run({"table", "densities", "--raw"});
    REQUIRE(t.code == hcl::cli::ok);
    CHECK(t.out.find("1/250") != std::string::npos);
}

TEST_CASE("sliding witness") {
    const auto r = run({"pc", "slide", "--l", "2", "--n", "10", "--raw"});
    CHECK(r.code == hcl::cli::ok);
    CHECK(r.json()["removed"] == 4);
    CHECK(r.json()["bound"] == 8);
}

TEST_CASE("sublattice commands") {
    const auto r3 = run({"sublat", "r3", "--ell", "7", "--brute", "--raw"});
    REQUIRE(r3.code == hcl::cli::ok);
    CHECK(r3.json()["r3"] == 54);

    const auto e = run({"sublat", "enumerate", "--ell", "5", "--raw"});
    REQUIRE(e.code == hcl::cli::ok);
    CHECK(e.json()["count"] == 7);

    const auto csv = run({"sublat", "enumerate", "--ell", "5", "--format", "csv"});
    REQUIRE(csv.code == hcl::cli::ok);
    std::istringstream lines(csv.out);
    std::string line;
    std::getline(lines, line);
    CHECK(line == "b11,b12,b13,b21,b22,b23,b31,b32,b33,class,stabilizer_order");
    int rows = 0;
    while (std::getline(lines, line)) {
        ++rows;
        CHECK(std::count(line.begin(), line.end(), ',') == 10);
    }
    CHECK(rows == 7);

    const auto q = run({"sublat", "quaternion", "1,1,1,0", "--raw"});
    REQUIRE(q.code == hcl::cli::ok);
    CHECK(q.json()["ell"] == 3);

    const auto f = run({"sublat", "fcc-census", "--ell", "2", "--raw"});
    REQUIRE(f.code == hcl::cli::ok);
    CHECK(f.json()["configurations"] == 16);
}
