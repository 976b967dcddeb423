#include "support.hpp"

#include <doctest.h>

using namespace ppv;
using ppv::test::R;

TEST_CASE("expression grammar") {
    auto ring = make_ring({"t"});
    CHECK(R("t/x", ring) == Rat::variable(ring, "t") / Rat::variable(ring, "x"));
    Rat x = Rat::variable(ring, "x"), t = Rat::variable(ring, "t");
    CHECK(R("-(x - t)^2/(x + 1)", ring) == -((x - t) * (x - t)) / (x + Rat(1)));
    CHECK(R("-x^2", ring) == -(x * x));
    CHECK(R("2^3^2", ring) == Rat(512));
    CHECK(R("x^-2", ring) == (x * x).inverse());
    CHECK(R("x^(-1)", ring) == x.inverse());
    CHECK(R("1 - 2 - 3", ring) == Rat(-4));
    CHECK(R("12/8/3", ring) == Rat(mpq_class(1, 2)));
    CHECK(R("2*-x", ring) == Rat(-2) * x);
    CHECK(R("3/4", ring) == Rat(mpq_class(3, 4)));
    auto ring2 = make_ring({"t1", "t2"});
    CHECK(parse_expr("t1*x + t2", std::vector<std::string>{"t1", "t2"}) ==
          Rat::variable(ring2, "t1") * Rat::variable(ring2, "x") + Rat::variable(ring2, "t2"));
}

TEST_CASE("parse errors carry positions") {
    auto ring = make_ring({"t"});
    auto pos_of = [&](const std::string& s) -> long {
        try {
            parse_expr(s, ring);
        } catch (const ParseError& e) {
            return static_cast<long>(e.position());
        }
        return -1;
    };
    CHECK(pos_of("x + s") == 4);
    CHECK(pos_of("x ^ t") == 4);
    CHECK(pos_of("1.5*x") == 1);
    CHECK(pos_of("x $ 2") == 2);
    CHECK(pos_of("(x + 1") == 6);
    CHECK(pos_of("x +") == 3);
    CHECK(pos_of("x/(t - t)") == 1);
    CHECK(pos_of("x^(1/2)") == 4);
}

TEST_CASE("system descriptions") {
    auto s = parse_system(R"({"params":["t"],"n":1,"matrices":{"x":[["t/x"]]}})");
    CHECK(s.n == 1);
    CHECK(s.var == "x");
    CHECK(s.matrices.at("x")[0][0] == "t/x");

    auto d = parse_system(R"({"params":["t1","t2"],"n":2,"matrices":{"x":[["t1","0"],["0","t2"]]}})");
    CHECK(d.params.size() == 2);
    CHECK(d.matrices.at("x")[1][1] == "t2");

    auto kind_of = [](const std::string& src) {
        try {
            parse_system(src);
        } catch (const SchemaError& e) {
            return e.kind();
        }
        return SchemaError::Kind::Json;
    };
    CHECK(kind_of(R"({"params":["t"],"n":2,"matrices":{"x":[["1","2","3"],["0","1"]]}})") ==
          SchemaError::Kind::DimensionMismatch);
    CHECK(kind_of(R"({"params":["t"],"n":1,"matrices":{"x":[["1"]],"x":[["2"]]}})") ==
          SchemaError::Kind::DuplicateDerivation);
    CHECK(kind_of(R"({"params":["t","t"],"n":1,"matrices":{"x":[["1"]]}})") == SchemaError::Kind::Schema);
    CHECK(kind_of(R"({"params":["t"],"n":1,"matrices":{"s":[["1"]]}})") == SchemaError::Kind::Schema);
    CHECK(kind_of(R"({"params":["t"],"n":1,"matrices":{"x":[["1/"]]}})") == SchemaError::Kind::Expression);
    CHECK(kind_of(R"({"params":["t"],"n":0,"matrices":{"x":[]}})") == SchemaError::Kind::Schema);
    CHECK_THROWS_AS(parse_system("{"), SchemaError);

    auto again = parse_system(to_json(d));
    CHECK(again.matrices == d.matrices);
    CHECK(again.params == d.params);
}
