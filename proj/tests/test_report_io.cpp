#include <doctest.h>

#include <cmath>
#include <limits>
#include <random>

#include "cvinv/errors.hpp"
#include "cvinv/report_io.hpp"

using namespace cvinv;

TEST_CASE("format_real uses 17 significant digits") {
  CHECK(format_real(1.0) == "1");
  CHECK(format_real(0.1) == "0.10000000000000001");
  CHECK(format_real(-2.5e-300) == "-2.5e-300");
  CHECK(format_real(2.0 / 3.0) == "0.66666666666666663");
  CHECK(format_real(std::numeric_limits<double>::infinity()) == "inf");
  CHECK(json_real(std::numeric_limits<double>::infinity()) == "\"inf\"");
  CHECK(json_complex({1.0, -0.5}) == "[1,-0.5]");
}

TEST_CASE("complex CSV encoding") {
  CHECK(format_complex_csv({1.0, 0.0}) == "1+0j");
  CHECK(format_complex_csv({0.5, -0.25}) == "0.5-0.25j");
  CHECK(format_complex_csv({-1e-5, 2e-7}) == "-1.0000000000000001e-05+1.9999999999999999e-07j");
  CHECK(parse_complex_csv("-1.5e-05-2e+03j") == Complex{-1.5e-05, -2e+03});
  CHECK_THROWS_AS(parse_complex_csv("1+2"), Error);
  CHECK_THROWS_AS(parse_complex_csv("abc"), Error);
  CHECK_THROWS_AS(parse_complex_csv("1x+2j"), Error);
}

TEST_CASE("property: complex CSV text round-trips bit-exactly") {
  std::mt19937_64 rng(17);
  std::uniform_real_distribution<double> mant(-1.0, 1.0);
  std::uniform_int_distribution<int> expo(-300, 300);
  for (int i = 0; i < 2000; ++i) {
    const Complex z{std::ldexp(mant(rng), expo(rng)), std::ldexp(mant(rng), expo(rng))};
    const Complex back = parse_complex_csv(format_complex_csv(z));
    CHECK(back == z);
  }
}

TEST_CASE("parse_config_json") {
  const auto c = parse_config_json(R"({"nodes": [[0, 0], [0.5, -0.5]], "multiplicities": [2, 1]})");
  CHECK(c.total_multiplicity() == 3);
  CHECK(c.node(1) == Complex{0.5, -0.5});
}

TEST_CASE("parse_config_json names the offending field") {
  auto message = [](std::string_view text) {
    try {
      parse_config_json(text);
    } catch (const Error& e) {
      return std::string(e.what());
    }
    return std::string("no error");
  };
  CHECK(message("{").find("malformed JSON") != std::string::npos);
  CHECK(message(R"({"multiplicities": [1]})").find("nodes") == 0);
  CHECK(message(R"({"nodes": [[0, 0]]})").find("multiplicities") == 0);
  CHECK(message(R"({"nodes": [[0, 0], [1]], "multiplicities": [1, 1]})").find("nodes[1]") == 0);
  CHECK(message(R"({"nodes": [[0, 0]], "multiplicities": [1.5]})").find("multiplicities[0]") == 0);
  CHECK(message(R"({"nodes": [[0, 0]], "multiplicities": [0]})").find("multiplicities[0]") !=
        std::string::npos);
  CHECK(message(R"({"nodes": [[0, 0]], "multiplicities": [1], "extra": 1})").find("extra") == 0);
}
