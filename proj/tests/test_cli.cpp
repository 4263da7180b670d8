#include <doctest.h>

#include <json.hpp>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>

#include "lgf/cache.hpp"

using namespace lgf;
using json = nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct Run {
    int code;
    std::string out;
};

Run cli(const std::string& args) {
    std::string cmd = std::string(LGF_CLI_PATH) + " " + args + " 2>/dev/null";
    Run r{0, {}};
    FILE* p = popen(cmd.c_str(), "r");
    std::array<char, 4096> buf;
    size_t n;
    while ((n = fread(buf.data(), 1, buf.size(), p)) > 0) r.out.append(buf.data(), n);
    int st = pclose(p);
    r.code = WIFEXITED(st) ? WEXITSTATUS(st) : -1;
    return r;
}

json report(const std::string& args, int expect) {
    auto r = cli(args);
    CHECK_MESSAGE(r.code == expect, args);
    return json::parse(r.out);
}

struct TempDir {
    fs::path path;
    TempDir() : path(fs::temp_directory_path() / ("lgf-test-" + std::to_string(::getpid()))) {
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

}  // namespace

TEST_CASE("cache format") {
    TempDir tmp;
    auto t = coeffs(make_spec(Family::bcc, 3), 10);
    std::string text = cache_to_text(t);
    CHECK(text.rfind("lgf-cache v1 bcc 3 11\n1\n8\n216\n", 0) == 0);
    CHECK(cache_from_text(text).values == t.values);
    std::string p = cache_path(tmp.path.string(), t.spec);
    CHECK(fs::path(p).filename() == "bcc-3.txt");
    write_cache(p, t);
    CHECK(read_cache(p).values == t.values);
    CHECK(cache_lookup(tmp.path.string(), t.spec, 5)->values.size() == 6);
    CHECK_FALSE(cache_lookup(tmp.path.string(), t.spec, 20).has_value());
    // a shorter table never replaces a longer one
    cache_store(tmp.path.string(), coeffs(make_spec(Family::bcc, 3), 4));
    CHECK(read_cache(p).values.size() == 11);
    bool threw = false;
    try {
        cache_from_text("lgf-cache v1 bcc 3 4\n1\n8\n");
    } catch (const Error& e) {
        threw = e.kind() == ErrorKind::ParseError;
    }
    CHECK(threw);
}

TEST_CASE("coeffs command") {
    auto j = report("coeffs --family bcc --dim 3 --terms 3", 0);
    CHECK(j["values"] == json({"1", "8", "216"}));
    CHECK(j["command"] == "coeffs");
    report("coeffs --family square --dim 2 --terms 20 --method all", 0);
    auto e = report("coeffs --family fcc --dim 5 --method formula", 4);
    CHECK(e["error"]["kind"] == "UnsupportedLattice");
    auto c = cli("coeffs --family sc --dim 3 --terms 4 --format csv");
    CHECK(c.out == "n,a_n\n0,1\n1,6\n2,90\n3,1860\n");
    report("coeffs --family sincos4 --dim 4 --terms 6 --method all", 0);
}

TEST_CASE("ode command") {
    auto y = report("ode yukawa sc4 --terms 6", 0);
    CHECK(y["K"][0] == "1");
    CHECK(y["K"][4] == "196772");
    CHECK(report("ode verify bcc4 --terms 40", 0)["pass"] == true);
    auto s = report("ode symsq sc3", 0);
    CHECK(s["Q"].get<std::string>().find("x") != std::string::npos);
    CHECK(report("ode cy-report sc4 --terms 20", 0)["pass"] == true);
    report("ode verify nope", 4);
    TempDir tmp;
    std::string out = (tmp.path / "op.txt").string();
    report("ode fit bcc4 --order 4 --degree 1 --terms 20 --out " + out, 0);
    CHECK(report("ode verify " + out + " --family bcc --dim 4 --terms 30", 0)["pass"] == true);
    // an operator that does not annihilate the series
    CHECK(report("ode verify " + out + " --family sc --dim 4 --terms 30", 2)["pass"] == false);
}

TEST_CASE("eval command") {
    auto w = report("eval watson --lattice sc --prec 30", 0);
    CHECK(w["value"].get<std::string>().rfind("1.516386", 0) == 0);
    // ratio 1/4 per term: 25 terms reach about 2.5e-16, 42 terms pass 1e-25
    report("eval ramanujan --id bcc-256 --terms 25 --prec 40 --check 1e-15", 0);
    report("eval ramanujan --id bcc-256 --terms 42 --prec 40 --check 1e-25", 0);
    report("eval ramanujan --id bcc-256 --terms 5 --prec 40 --check 1e-25", 2);
    auto l = report("eval lgf --family bcc --dim 4 --z 1 --tail corrected --prec 30", 0);
    CHECK(l["result"]["value"].get<std::string>().rfind("1.1186363871", 0) == 0);
    report("eval lgf --family square --dim 2 --z 1", 4);
    report("eval return-prob --family sc --dim 3 --prec 20", 0);
    report("eval closed --id sc3 --z 0.2 --prec 30 --check 1e-12", 0);
}

TEST_CASE("determinism and precision default") {
    auto a = json::parse(cli("eval watson --lattice bcc --prec 25").out);
    auto b = json::parse(cli("eval watson --lattice bcc --prec 25").out);
    a.erase("timings");
    b.erase("timings");
    CHECK(a == b);
    CHECK(json::parse(cli("eval watson --lattice bcc").out)["inputs"]["prec"] == 128);
    setenv("LGF_PREC", "20", 1);
    auto e = json::parse(cli("eval watson --lattice bcc").out);
    auto f = json::parse(cli("eval watson --lattice bcc --prec 30").out);
    unsetenv("LGF_PREC");
    CHECK(e["inputs"]["prec"] == 20);
    CHECK(f["inputs"]["prec"] == 30);
}
