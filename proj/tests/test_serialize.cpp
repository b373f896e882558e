#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "fock/serialize.hpp"

#include <filesystem>
#include <fstream>
#include <sstream>

using namespace fock;

TEST_CASE("json floats carry 17 significant digits") {
    Json j;
    j["x"] = 0.1;
    j["third"] = 1.0 / 3.0;
    std::string s = dump_json(j);
    CHECK(s.find("0.10000000000000001") != std::string::npos);
    CHECK(s.find("0.33333333333333331") != std::string::npos);
    CHECK(s.back() == '\n');
}

TEST_CASE("json dump is deterministic and parseable") {
    Json j;
    j["b"] = 2;
    j["a"] = Json::array({1.5, Json(nullptr), Json("quote \" and \\ backslash")});
    j["nested"]["k"] = true;
    std::string s1 = dump_json(j), s2 = dump_json(j);
    CHECK(s1 == s2);
    Json round = Json::parse(s1);
    CHECK(round["a"][2].get<std::string>() == "quote \" and \\ backslash");
    CHECK(round["nested"]["k"].get<bool>() == true);
    // ordered_json preserves insertion order: "b" printed before "a"
    CHECK(s1.find("\"b\"") < s1.find("\"a\""));
}

TEST_CASE("complex values serialize as re/im pairs") {
    Json j = to_json(Complex(1.5, -2.0));
    CHECK(j["re"].get<double>() == 1.5);
    CHECK(j["im"].get<double>() == -2.0);
}

TEST_CASE("csv cells carry 9 significant digits") {
    CHECK(csv_cell(1.0 / 3.0) == "0.333333333");
    CHECK(csv_cell(2.0) == "2");
    CHECK(csv_cell(Complex(1.0, -0.5)) == "1,-0.5");
}

TEST_CASE("matrix and curve csv files") {
    auto dir = std::filesystem::temp_directory_path() / "fock-test-serialize";
    std::filesystem::create_directories(dir);

    Eigen::MatrixXcd m(2, 2);
    m << Complex(1, 0), Complex(0, 2), Complex(-3, 0), Complex(0.25, -0.5);
    std::string mp = (dir / "m.csv").string();
    write_matrix_csv(mp, m);
    std::ifstream in(mp);
    std::string line;
    std::getline(in, line);
    CHECK(line == "1,0,0,2");
    std::getline(in, line);
    CHECK(line == "-3,0,0.25,-0.5");

    std::string cp = (dir / "c.csv").string();
    write_curve_csv(cp, "t", "D", {1.0, 0.5}, {0.25, 0.125});
    std::ifstream cin_(cp);
    std::getline(cin_, line);
    CHECK(line == "t,D");
    std::getline(cin_, line);
    CHECK(line == "1,0.25");
}
