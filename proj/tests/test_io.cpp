#include "nlfield/io.hpp"
#include "nlfield/sampling.hpp"

#include "oracles.hpp"

using namespace nlf;
using nlf::io::json;

TEST_CASE("field and element round trips") {
  const auto K = NumberField::from_min_poly({Integer(1), Integer(-3), Integer(0), Integer(1)});
  const auto j = io::field_to_json(*K);
  CHECK(j.at("min_poly") == json::array({1, -3, 0, 1}));
  const auto back = io::field_from_json(j);
  CHECK(back->same_as(*K));
  Sampler s(1);
  for (int i = 0; i < 20; ++i) {
    const auto x = s.element(K);
    CHECK(io::element_from_json(K, io::element_to_json(x)) == NFElem(back, x.coords()));
  }
  CHECK_THROWS_CODE(io::field_from_json(json::object()), Errc::ParseError);
  CHECK_THROWS_CODE(io::field_from_json(json{{"min_poly", {"a", 1}}}), Errc::ParseError);
}

TEST_CASE("algebra elements round trip in each domain") {
  Sampler s(2);
  const auto K = NumberField::real_quadratic(2);
  for (int i = 0; i < 10; ++i) {
    const auto r = s.alg_elem<Rational>(K, 5);
    CHECK(std::get<AlgElem<Rational>>(io::algelem_from_json(io::algelem_to_json(r))) == r);
    const auto g = s.alg_elem<GaussRational>(K, 5);
    CHECK(std::get<AlgElem<GaussRational>>(io::algelem_from_json(io::algelem_to_json(g))) == g);
    const auto c = s.alg_elem<Complex64>(K, 5);
    CHECK(std::get<AlgElem<Complex64>>(io::algelem_from_json(io::algelem_to_json(c))) == c);
  }
}

TEST_CASE("algebra element domain inference") {
  const auto a = io::algelem_from_json(json::parse(R"({"terms": [["1/2", "3"], [2, "1", "0"]]})"));
  CHECK(std::holds_alternative<AlgElem<Rational>>(a));
  const auto b = io::algelem_from_json(json::parse(R"({"terms": [[1, "1", "2"]]})"));
  CHECK(std::holds_alternative<AlgElem<GaussRational>>(b));
  const auto c = io::algelem_from_json(json::parse(R"({"terms": [[1, "0.5"]]})"));
  CHECK(std::holds_alternative<AlgElem<Complex64>>(c));
  CHECK_THROWS_CODE(io::algelem_from_json(json::parse(R"({"terms": [[1]]})")), Errc::ParseError);
  CHECK_THROWS_CODE(io::algelem_from_json(json::parse(R"({"domain": "p-adic", "terms": []})")), Errc::ParseError);
  CHECK_THROWS_CODE(io::algelem_from_json(json::parse(R"({"terms": [["x", "1"]]})")), Errc::ParseError);
}

TEST_CASE("series CSV") {
  Sampler s(3);
  const auto r = s.series<Rational>(30);
  CHECK(std::get<ArithSeries<Rational>>(io::series_from_csv(io::series_to_csv(r))) == r);
  const auto g = s.series<GaussRational>(30);
  const auto gback = io::series_from_csv(io::series_to_csv(g));
  REQUIRE(std::holds_alternative<ArithSeries<GaussRational>>(gback));
  CHECK(std::get<ArithSeries<GaussRational>>(gback) == g);
  const auto sparse = std::get<ArithSeries<Rational>>(io::series_from_csv("# comment\nn,value\n1,1\n4,-1/2\n"));
  CHECK(sparse.N() == 4);
  CHECK(sparse[2] == 0);
  CHECK(sparse[4] == Rational(-1, 2));
  CHECK(std::holds_alternative<ArithSeries<Complex64>>(io::series_from_csv("1,0.25\n")));
  CHECK_THROWS_CODE(io::series_from_csv(""), Errc::ParseError);
  CHECK_THROWS_CODE(io::series_from_csv("0,1\n"), Errc::ParseError);
  CHECK_THROWS_CODE(io::series_from_csv("1,2,3,4\n"), Errc::ParseError);
  CHECK_THROWS_CODE(io::series_from_csv("1,abc\n"), Errc::ParseError);
}

TEST_CASE("characters and representations") {
  for (u64 N : {1, 4, 5, 8, 12}) {
    for (const auto& chi : char_enumerate(N)) CHECK(io::character_from_json(io::character_to_json(chi)) == chi);
  }
  const auto rho = direct_sum(GaloisRep({char_enumerate(4)[1]}), GaloisRep({char_enumerate(5)[2]}));
  const auto back = io::rep_from_json(io::rep_to_json(rho));
  REQUIRE(back.dimension() == 2);
  CHECK(back.summands()[1] == rho.summands()[1]);
  const auto bad = json::parse(R"({"modulus": 5, "values": [[1,1,0],[2,4,1],[3,4,1],[4,2,1]]})");
  CHECK_THROWS_CODE(io::character_from_json(bad), Errc::DomainUnsupported);
  CHECK_THROWS_CODE(io::character_from_json(json{{"modulus", 0}, {"values", json::array()}}), Errc::ParseError);
  CHECK_THROWS_CODE(io::rep_from_json(json::object()), Errc::ParseError);
}

TEST_CASE("cusp form CSV") {
  const auto d = delta_expansion(40);
  CHECK(io::cusp_from_csv(io::cusp_to_csv(d), 12) == d);
  CHECK_THROWS_CODE(io::cusp_from_csv("1,1/2\n", 12), Errc::ParseError);
}
