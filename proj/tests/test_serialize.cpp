#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include <json.hpp>

#include "whls/criteria.hpp"
#include "whls/nonexistence.hpp"
#include "whls/serialize.hpp"

using namespace whls;

TEST_CASE("format_double round-trips") {
    for (double x : {1.0, -0.1, 3.141592653589793, 1e-300, 123456789.123456789, 2.0 / 3.0}) {
        const std::string s = format_double(x);
        CHECK(std::stod(s) == x);
        CHECK(s.find(',') == std::string::npos);
    }
    CHECK(format_double(1.0) == "1");
    CHECK(format_double(0.5) == "0.5");
}

TEST_CASE("classification JSON carries verdicts and exponents") {
    const Classification c = classify(Params{5, 2.0, 0.0, 0.0, 3.0, 3.0});
    const nlohmann::json j = c;
    CHECK(j.at("general_verdict") == "Exists");
    CHECK(j.at("radial_verdict") == "NoConclusion");
    CHECK(j.at("exponents_valid") == true);
    CHECK(j.at("exponents").at("M").get<double>() == doctest::Approx(1.0));

    const Classification c2 = classify(Params{5, 2.0, 0.0, 0.0, 1.0, 1.0});
    const nlohmann::json j2 = c2;
    CHECK(j2.at("exponents_valid") == false);
    CHECK_FALSE(j2.contains("exponents"));
}

TEST_CASE("identity report JSON") {
    const IdentityReport rep = make_report("demo", 2.0, 2.0000002);
    const nlohmann::json j = rep;
    CHECK(j.at("identity") == "demo");
    CHECK(j.at("residual").get<double>() == doctest::Approx(1e-7).epsilon(1e-3));
}

TEST_CASE("trace CSV has a header and one row per index") {
    const ExponentTrace t = iterate_exponents(Params{5, 2.0, 0.0, 0.0, 1.5, 1.5}, 5);
    const std::string csv = csv_trace(t);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "j,a_j,b_j");
    int rows = 0;
    while (std::getline(in, line)) ++rows;
    CHECK(rows == 6);
    CHECK(csv.find("1.75") != std::string::npos); // a_1 = 4 - 2.25
}

TEST_CASE("radial CSV round-trips values") {
    const RadialGrid g = RadialGrid::log_spaced(0.1, 10.0, 8);
    const RadialFunction f = sample(g, [](double r) { return 1.0 / (1.0 + r); }, 0.0, -1.0);
    const std::string csv = csv_radial(f);
    std::istringstream in(csv);
    std::string line;
    std::getline(in, line);
    CHECK(line == "r,value");
    std::getline(in, line);
    const auto comma = line.find(',');
    CHECK(std::stod(line.substr(0, comma)) == g.r[0]);
    CHECK(std::stod(line.substr(comma + 1)) == f.values[0]);
}

TEST_CASE("write_text_file reports I/O failures") {
    CHECK_THROWS_AS(write_text_file("/nonexistent-dir/x/y.csv", "data"), io_error);
    const std::string path = "serialize_test_tmp.txt";
    write_text_file(path, "hello");
    std::ifstream in(path);
    std::string got;
    std::getline(in, got);
    CHECK(got == "hello");
    in.close();
    std::remove(path.c_str());
}
