#include <cstdio>
#include <fstream>
#include <sstream>

#include "affyh/cli.hpp"
#include "affyh/errors.hpp"
#include "affyh/json_io.hpp"
#include "affyh/parser.hpp"
#include "doctest.h"

using namespace affyh;

namespace {

struct Run {
  int status;
  std::string out;
  Json json() const { return Json::parse(out); }
};

Run run(const std::vector<std::string>& args) {
  std::ostringstream out, err;
  const int status = run_cli(args, out, err);
  return {status, out.str()};
}

std::string temp_path(const std::string& name) { return "affyh_test_" + name + ".json"; }

}  // namespace

TEST_CASE("relations verb") {
  const Run y = run({"relations", "--presentation", "yokonuma", "-r", "2", "-n", "2"});
  CHECK(y.status == 0);
  const Json j = y.json();
  CHECK(j.at("presentation") == "yokonuma");
  CHECK(j.at("results").size() == 10);
  CHECK(run({"relations", "--presentation", "unknown", "-r", "2", "-n", "2"}).status == 2);
  CHECK(run({"relations", "-r", "2", "-n", "2"}).status == 2);
}

TEST_CASE("custom presentation from JSON") {
  const std::string path = temp_path("pres");
  {
    std::ofstream f(path);
    f << R"({"name": "probe", "scope": "yokonuma", "relations": [
      {"family": "square", "lhs": "g1 g1", "rhs": "1 + (q - q^-1) e1 g1"},
      {"family": "wrong", "lhs": "g1 g1", "rhs": "1"}]})";
  }
  const Run r = run({"relations", "--json-in", path, "-r", "2", "-n", "2"});
  CHECK(r.status == 1);
  const Json j = r.json();
  CHECK(j.at("results").at(0).at("pass") == true);
  CHECK(j.at("results").at(1).at("pass") == false);
  CHECK(j.at("results").at(1).contains("diff"));
  std::remove(path.c_str());
}

TEST_CASE("mul verb and Element round trip") {
  const Run m = run({"mul", "-r", "2", "-n", "2", "--lhs", "g1", "--rhs", "g1"});
  CHECK(m.status == 0);
  const Json j = m.json();
  CHECK(j.at("terms").size() == 3);
  const Element e = element_from_json(j);
  CHECK(to_json(e).dump() == j.dump());

  const Context c(2, 2);
  const Element direct = mul(generator_element(c, Generator::s(1)), generator_element(c, Generator::s(1)));
  CHECK(e == direct);

  // Feeding emitted JSON back in.
  const std::string path = temp_path("mul");
  {
    std::ofstream f(path);
    f << Json{{"lhs", j}, {"rhs", j}}.dump();
  }
  const Run again = run({"mul", "-r", "2", "-n", "2", "--json-in", path});
  CHECK(again.status == 0);
  CHECK(element_from_json(again.json()) == mul(direct, direct));
  std::remove(path.c_str());
}

TEST_CASE("emitted elements re-parse") {
  for (const char* src : {"X1 X1^-1", "Ts0 Trho hs1", "e1 g1^-1 - 3/2 q^-2 t1", "zeta Trho^-1 X2"}) {
    CAPTURE(src);
    const Run nf = run({"normal-form", "-r", "3", "-n", "3", "--expr", src});
    REQUIRE(nf.status == 0);
    const Element e = element_from_json(nf.json());
    CHECK(to_json(e).dump(2) + "\n" == nf.out);
    const Context c(3, 3);
    CHECK(e == evaluate(parse_expression(src, universal_scope(3, 3)), universal_assignment(c), c));
  }
  CHECK(element_from_json(run({"normal-form", "-r", "2", "-n", "2", "--expr", "X1 X1^-1"}).json()) == unit(Context(2, 2)));
}

TEST_CASE("scalar JSON round trip") {
  const Scalar s = Scalar::q_power(3, -2) * Scalar(CycRational::zeta_power(3, 1)) + Scalar(3, Rational(7, 5));
  CHECK(scalar_from_json(to_json(s), 3) == s);
  CHECK_THROWS_AS(scalar_from_json(Json::parse(R"({"terms": [{"qexp": 0, "cyc": ["x"]}]})"), 2), Error);
  CHECK_THROWS_AS(element_from_json(Json::parse(R"({"r": 2})")), Error);
}

TEST_CASE("vandermonde verb") {
  const Run v = run({"vandermonde", "--r", "2"});
  CHECK(v.status == 0);
  const Json j = v.json();
  CHECK(j.at("Delta") == "2");
  CHECK(j.at("F").at(0) == Json::array({"1", "-1"}));
  CHECK(run({"vandermonde", "-r", "7"}).status == 2);
}

TEST_CASE("iso-check verb") {
  CHECK(run({"iso-check", "--pair", "Phi-Psi", "-r", "2", "-n", "2"}).status == 0);
  CHECK(run({"iso-check", "--pair", "phi-psi", "-r", "3", "-n", "2"}).status == 0);
  CHECK(run({"iso-check", "--pair", "other", "-r", "2", "-n", "2"}).status == 2);
}

TEST_CASE("decompose verb") {
  const Run d = run({"decompose", "-r", "2", "-n", "2", "--images"});
  CHECK(d.status == 0);
  const Json j = d.json();
  CHECK(j.at("compositions") == 3);
  CHECK(j.at("blocks").at(1).at("mu") == Json::array({1, 1}));
  CHECK(j.at("blocks").at(1).at("m") == 2);
  CHECK(j.at("blocks").at(1).at("chars") == Json::parse("[[1,2],[2,1]]"));
  CHECK(j.at("pass") == true);
  CHECK_FALSE(run({"decompose", "-r", "2", "-n", "3"}).json().at("blocks").at(0).contains("images"));
}

TEST_CASE("basis verb") {
  const Run b = run({"basis", "-r", "2", "-n", "3", "--length-bound", "0", "--rho-bound", "0"});
  CHECK(b.status == 0);
  CHECK(b.json().at("count") == 8);
  CHECK(run({"basis", "-r", "2", "-n", "2", "--length-bound", "7"}).status == 2);
  CHECK(run({"basis", "-r", "2", "-n", "5"}).status == 2);
  CHECK(run({"basis", "-r", "2", "-n", "1"}).status == 2);
}

TEST_CASE("usage errors and json-out") {
  CHECK(run({}).status == 2);
  CHECK(run({"frobnicate"}).status == 2);
  CHECK(run({"mul", "-r", "x"}).status == 2);
  const Run bad = run({"normal-form", "-r", "2", "-n", "2", "--expr", "g1 ) g1"});
  CHECK(bad.status == 2);
  CHECK(bad.json().at("error").at("kind") == "ParseError");
  CHECK(run({"normal-form", "-r", "2", "-n", "2", "--presentation", "yokonuma", "--expr", "Ts1"}).json().at("error").at("kind") ==
        "UnknownSymbol");

  const std::string path = temp_path("out");
  const Run w = run({"vandermonde", "--r", "3", "--json-out", path});
  CHECK(w.status == 0);
  CHECK(w.out.empty());
  std::ifstream f(path);
  std::stringstream text;
  text << f.rdbuf();
  CHECK(text.str() == run({"vandermonde", "--r", "3"}).out);
  std::remove(path.c_str());
}

TEST_CASE("deterministic output") {
  const std::vector<std::string> args{"decompose", "-r", "3", "-n", "2", "--images"};
  CHECK(run(args).out == run(args).out);
}
