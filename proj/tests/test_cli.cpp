#include <doctest.h>

#include <json.hpp>

#include "resdiff/cli.hpp"
#include "resdiff/errors.hpp"

using namespace resdiff;
using resdiff::cli::run;

TEST_SUITE("cli") {
  TEST_CASE("parse_poly_arg") {
    CHECK(cli::parse_poly_arg("1,-3,0,4") == Polynomial({1, -3, 0, 4}));
    CHECK(cli::parse_poly_arg("1/2,-3/4") == Polynomial({Rational::parse("1/2"), Rational::parse("-3/4")}));
    CHECK(cli::parse_poly_arg(" 2 , 6/4 ") == Polynomial({2, Rational::parse("3/2")}));
    CHECK_THROWS_AS(cli::parse_poly_arg("0,1"), ParseError);
    CHECK_THROWS_AS(cli::parse_poly_arg("1,x"), ParseError);
    CHECK_THROWS_AS(cli::parse_poly_arg("1,2/0"), ParseError);
    CHECK_THROWS_AS(cli::parse_poly_arg(""), ParseError);
    try {
      cli::parse_poly_arg("1,3/x");
    } catch (const ParseError& e) {
      CHECK(e.token() == "3/x");
    }
  }

  TEST_CASE("parse_roots_arg") {
    CHECK(cli::parse_roots_arg("2:2,-1:1") == RootSpec{1, {{2, 2}, {-1, 1}}});
    CHECK(cli::parse_roots_arg("1:3,3:1") == RootSpec{1, {{1, 3}, {3, 1}}});
    CHECK(cli::parse_roots_arg("1/2:1@3") == RootSpec{3, {{Rational::parse("1/2"), 1}}});
    CHECK_THROWS_AS(cli::parse_roots_arg("2:0"), ParseError);
    CHECK_THROWS_AS(cli::parse_roots_arg("2"), ParseError);
    CHECK_THROWS_AS(cli::parse_roots_arg("2:1@0"), ParseError);
  }

  TEST_CASE("commands") {
    auto r = run({"resultant", "--f", "1,0,1", "--g", "1,0,-1"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "4\n");

    r = run({"partial", "--f", "1,-4,4", "--g", "1,0,-4", "--wrt", "b", "--indices", "2,2"});
    CHECK(r.exit_code == 0);
    CHECK(r.out == "2\n");

    r = run({"discriminant", "--roots-f", "1:1,2:1"});
    CHECK(r.out == "1\n");

    r = run({"analyze", "--f", "1,-3,0,4", "--format", "json"});
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["command"] == "analyze");
    CHECK(doc["result"]["s_max"] == 2);
    CHECK(doc["result"]["root"] == "2");
    CHECK(doc["certificate"]["certified"] == true);
    CHECK(doc["chain"].size() == 2);
    CHECK(r.out.find("\"s_max\": 2") != std::string::npos);
    CHECK(r.out.find("\"root\": \"2\"") != std::string::npos);
  }

  TEST_CASE("exit codes") {
    CHECK(run({"resultant", "--f", "0,1", "--g", "1,1"}).exit_code == 2);
    CHECK(run({"resultant", "--f", "1,1"}).exit_code == 2);
    CHECK(run({"resultant", "--f", "1,1", "--roots-f", "1:1", "--g", "1"}).exit_code == 2);
    CHECK(run({"bogus"}).exit_code == 2);
    CHECK(run({"partial", "--f", "1,1", "--g", "1,2", "--wrt", "c", "--indices", "0"}).exit_code == 2);
    CHECK(run({"check", "--f", "1,-3,3,-1", "--g", "1,-2,1"}).exit_code == 1);
    CHECK(run({"check", "--f", "1,-3,3,-1", "--g", "1,-2,1", "--s", "3", "--p", "2"}).exit_code == 0);
    CHECK(run({"check", "--roots-f", "1:2,2:2", "--s", "2"}).exit_code == 1);
    CHECK(run({"check", "--roots-f", "2:3,5:1", "--s", "3"}).exit_code == 0);
    CHECK(run({"analyze", "--roots-f", "1:2,2:2"}).exit_code == 1);
  }

  TEST_CASE("cross-check") {
    auto r = run({"cross-check", "--f", "1,-11,42,-68,40"});
    CHECK(r.exit_code == 0);
    r = run({"cross-check", "--f", "1,-3,0,4", "--g", "1,0,-4", "--wrt", "a", "--indices", "1,3", "--format", "json"});
    CHECK(r.exit_code == 0);
    const auto doc = nlohmann::json::parse(r.out);
    CHECK(doc["result"]["agree"] == true);
    CHECK(doc["result"]["partials"].size() == 3);
    CHECK(run({"cross-check", "--roots-f", "1:2,2:2"}).exit_code == 1);
  }

  TEST_CASE("json rationals round-trip and output is deterministic") {
    const std::vector<std::string> args{"analyze", "--f", "1/2,-7/3,35/18,-1/9,-2/9", "--format", "json"};
    const auto a = run(args);
    const auto b = run(args);
    CHECK(a.out == b.out);
    const auto doc = nlohmann::json::parse(a.out);
    for (const auto& v : doc["inputs"]["f"]) {
      const Rational x = Rational::parse(v.get<std::string>());
      CHECK(x.to_string() == v.get<std::string>());
    }
    for (const auto& pair : doc["chain"]) {
      const std::string v = pair[1].get<std::string>();
      CHECK(Rational::parse(v).to_string() == v);
    }
  }
}
