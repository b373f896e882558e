#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "dispatch.hpp"
#include "run_config.hpp"
#include "symbol_lang.hpp"

#include "fock/serialize.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fockcli;
using fock::Complex;
using fock::Json;
using fock::Point;
using fock::point1;

namespace {

std::string slurp(const std::filesystem::path& p) {
    std::ifstream in(p);
    REQUIRE(in.good());
    std::stringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::filesystem::path fresh_dir(const std::string& tag) {
    std::filesystem::path p = std::filesystem::temp_directory_path() / ("fock-test-" + tag);
    std::filesystem::remove_all(p);
    std::filesystem::create_directories(p);
    return p;
}

}  // namespace

TEST_CASE("symbol language: constants and arithmetic") {
    Point z = point1(Complex(0.0, 0.0));
    CHECK(parse_symbol("const(2)")(z) == Complex(2.0, 0.0));
    CHECK(parse_symbol("const(1+2i)")(z) == Complex(1.0, 2.0));
    CHECK(parse_symbol("const(-0.5i)")(z) == Complex(0.0, -0.5));
    CHECK(parse_symbol("3")(z) == Complex(3.0, 0.0));
    CHECK(parse_symbol("1 + 2 * 3")(z) == Complex(7.0, 0.0));
    CHECK(parse_symbol("(1 + 2) * 3")(z) == Complex(9.0, 0.0));
    CHECK(parse_symbol("5 - 2 - 1")(z) == Complex(2.0, 0.0));
}

TEST_CASE("symbol language: constructors") {
    Point origin = point1(Complex(0.0, 0.0));
    Point far = point1(Complex(10.0, 0.0));

    CHECK(parse_symbol("bump(0, 1, 0.5)")(origin) == Complex(0.5, 0.0));
    CHECK(parse_symbol("bump(center=0, radius=1, height=0.5)")(far) == Complex(0.0, 0.0));
    CHECK(parse_symbol("indicator(R=1)")(origin) == Complex(1.0, 0.0));
    CHECK(parse_symbol("indicator(1)")(far) == Complex(0.0, 0.0));
    CHECK(parse_symbol("radial(1/(1+s))")(far).real() == doctest::Approx(1.0 / 101.0));
    CHECK(parse_symbol("radial(sin(s)*exp(-s))")(origin) == Complex(0.0, 0.0));

    Complex ang = parse_symbol("angular(1)")(far);
    CHECK(ang.real() == doctest::Approx(10.0 / std::sqrt(101.0)));

    Complex combo = parse_symbol("const(1) + bump(0,1,0.5)")(origin);
    CHECK(combo == Complex(1.5, 0.0));
    CHECK(parse_symbol("const(2) * indicator(1)")(far) == Complex(0.0, 0.0));
}

TEST_CASE("symbol language: rejects malformed input") {
    CHECK_THROWS_AS(parse_symbol(""), SymbolParseError);
    CHECK_THROWS_AS(parse_symbol("unknown(1)"), SymbolParseError);
    CHECK_THROWS_AS(parse_symbol("const(1"), SymbolParseError);
    CHECK_THROWS_AS(parse_symbol("bump(0,1)"), SymbolParseError);
    CHECK_THROWS_AS(parse_symbol("const(1) +"), SymbolParseError);
    CHECK_THROWS_AS(parse_symbol("radial(q+1)"), SymbolParseError);
    CHECK_THROWS_AS(parse_symbol("const(1) const(2)"), SymbolParseError);
    CHECK(std::string(SymbolParseError("x").what()) == "x");
}

TEST_CASE("config: normalization round-trip and validation") {
    RunConfig c;
    c.symbol = "angular(2)";
    c.grid_size = 24;
    c.t_values = {1.0, 0.25};
    c.lambda = Complex(0.5, -0.5);

    RunConfig back = parse_config(to_json(c));
    CHECK(fock::dump_json(to_json(back)) == fock::dump_json(to_json(c)));

    Json bad = to_json(c);
    bad["cluster_tol"] = -1.0;
    CHECK_THROWS_AS(parse_config(bad), std::invalid_argument);
    bad = to_json(c);
    bad["schedule"]["r_last"] = 0.5;  // below r_first
    CHECK_THROWS_AS(parse_config(bad), std::invalid_argument);
    bad = to_json(c);
    bad["surprise"] = 1;
    CHECK_THROWS_AS(parse_config(bad), std::invalid_argument);
    bad = to_json(c);
    bad["t_values"] = Json::array({0.25, 1.0});  // must be descending
    CHECK_THROWS_AS(parse_config(bad), std::invalid_argument);
    CHECK_THROWS_AS(parse_config(Json::array()), std::invalid_argument);
}

TEST_CASE("dispatch: deterministic byte-identical reports") {
    RunConfig c;
    c.symbol = "const(1) + bump(0, 1, 0.5)";
    c.r_first = 6.0;
    c.r_last = 40.0;
    auto d1 = fresh_dir("det1"), d2 = fresh_dir("det2");
    c.out_dir = d1.string();
    CHECK(dispatch("ess-spec", c) == 0);
    c.out_dir = d2.string();
    CHECK(dispatch("ess-spec", c) == 0);

    std::string r1 = slurp(d1 / "ess-spec.json"), r2 = slurp(d2 / "ess-spec.json");
    // identical configs up to the output path produce identical reports there
    auto scrub = [](std::string s, const std::string& dir) {
        for (size_t p = s.find(dir); p != std::string::npos; p = s.find(dir))
            s.replace(p, dir.size(), "OUT");
        return s;
    };
    r1 = scrub(r1, d1.string());
    r2 = scrub(r2, d2.string());
    REQUIRE(r1.find("OUT") != std::string::npos);
    CHECK(r1 == r2);
    CHECK(slurp(d1 / "ess-spec.csv") == slurp(d2 / "ess-spec.csv"));
}

TEST_CASE("dispatch: emitted reports re-validate as configurations") {
    RunConfig c;
    c.symbol = "radial(1/(1+s))";
    c.N = 6;
    c.grid_size = 16;
    auto dir = fresh_dir("roundtrip");
    c.out_dir = dir.string();
    CHECK(dispatch("assemble", c) == 0);
    CHECK(dispatch("osc", c) == 0);

    for (const char* name : {"assemble.json", "osc.json"}) {
        Json report = Json::parse(slurp(dir / name));
        RunConfig back = parse_config(report);  // throws on schema violation
        CHECK(back.symbol == c.symbol);
        CHECK(back.N == c.N);
    }
}

TEST_CASE("dispatch: command results") {
    auto dir = fresh_dir("results");

    RunConfig c;
    c.out_dir = dir.string();
    c.symbol = "const(1) + bump(0, 1, 0.5)";
    c.r_first = 6.0;
    c.r_last = 40.0;
    CHECK(dispatch("ess-spec", c) == 0);
    Json rep = Json::parse(slurp(dir / "ess-spec.json"));
    REQUIRE(rep["result"]["points"].size() == 1);
    CHECK(rep["result"]["points"][0]["re"].get<double>() == doctest::Approx(1.0).epsilon(1e-3));
    CHECK(std::abs(rep["result"]["points"][0]["im"].get<double>()) <= 1e-3);

    c.symbol = "const(0)";
    CHECK(dispatch("osc", c) == 0);
    rep = Json::parse(slurp(dir / "osc.json"));
    for (const auto& v : rep["result"]["values"]) CHECK(v.get<double>() == 0.0);

    CHECK_THROWS_AS(dispatch("spectrogram", c), std::invalid_argument);
}

#ifdef FOCK_CLI_BIN
TEST_CASE("cli binary exit statuses") {
    auto dir = fresh_dir("exit");
    std::string bin = FOCK_CLI_BIN;
    std::string base = bin + " osc --out " + (dir / "ok").string();

    auto run = [](const std::string& cmd) {
        int raw = std::system((cmd + " > /dev/null 2>&1").c_str());
        return WEXITSTATUS(raw);
    };

    CHECK(run(base + " --symbol 'const(1)'") == 0);
    CHECK(run(base + " --symbol 'oops('") == 2);
    CHECK(run(bin + " --symbol 'const(1)'") == 2);  // missing subcommand
    // numeric policy violation: truncation degree beyond the grid exactness
    CHECK(run(bin + " assemble --symbol 'const(1)' --N 40 --grid-size 10 --out " +
              (dir / "num").string()) == 3);
}
#endif
