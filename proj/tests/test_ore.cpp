#include "oracles.hpp"

#include "ppv/ore.hpp"

#include <doctest.h>

using namespace ppv;
using ppv::test::R;
using ppv::test::bordered_wronskian;

namespace {

struct Fixture {
    RingPtr ring = make_ring({"t"});
    OreOperator op(const std::string& s) const { return parse_operator(s, ring, 1); }
    Rat q(const std::string& s) const { return R(s, ring); }
};

} // namespace

TEST_CASE_FIXTURE(Fixture, "operator products") {
    CHECK((op("D") * op("t")).to_string() == "t*D + 1");
    CHECK(op("D") * op("t") == op("t*D + 1"));
    CHECK(op("D^2 + 3*D") * op("1") == op("D^2 + 3*D"));
    CHECK(op("D + 1") * op("D - 1") == op("D^2 - 1"));
    CHECK(op("D - 1") * op("D + 1") == op("D^2 - 1"));
    CHECK_FALSE(op("D") * op("t") == op("t") * op("D"));
    for (const char* g : {"1", "t", "t^2"}) {
        Rat y = q(g);
        CHECK((op("D") * op("t")).apply(y) == op("D").apply(op("t").apply(y)));
    }
    CHECK(op("D^2 - (1/t)*D").to_string() == "D^2 - 1/t*D");
    CHECK(op("(t + 1)*D").to_string() == "(t + 1)*D");
}

TEST_CASE_FIXTURE(Fixture, "right division") {
    auto d1 = right_divide(op("D^2"), op("D"));
    CHECK(d1.quotient == op("D"));
    CHECK(d1.remainder.is_zero());
    auto d2 = right_divide(op("D"), op("D^2"));
    CHECK(d2.quotient.is_zero());
    CHECK(d2.remainder == op("D"));
    auto d3 = right_divide(op("D^2"), op("D - 1/t"));
    CHECK(d3.quotient * op("D - 1/t") + d3.remainder == op("D^2"));
    CHECK(d3.remainder.is_zero());  // t lies in the kernel of D^2
    CHECK_THROWS_AS(right_divide(op("D"), op("0")), std::domain_error);
}

TEST_CASE_FIXTURE(Fixture, "gcrd and lclm") {
    CHECK(gcrd(op("D^2"), op("D")) == op("D"));
    CHECK(lclm(op("D"), op("D")) == op("D"));
    OreOperator l = lclm(op("D - 1/t"), op("D"));
    CHECK(l.order() == 2);
    CHECK(l.apply(q("t")).is_zero());
    CHECK(l.apply(q("1")).is_zero());
    CHECK(right_divides(op("D - 1/t"), l));
    CHECK(right_divides(op("D"), l));
    CHECK(l == bordered_wronskian(ring, {q("1"), q("t")}).monic());
    CHECK_THROWS(gcrd(op("0"), op("0")));
}

TEST_CASE_FIXTURE(Fixture, "apply") {
    CHECK(op("D").apply(q("t")) == q("1"));
    CHECK(op("D - 1/t").apply(q("t")).is_zero());
    CHECK(op("D^2").apply(q("t^2")) == q("2"));
}

TEST_CASE_FIXTURE(Fixture, "annihilators") {
    auto a = annihilator_of_span(ring, 1, {q("t")});
    CHECK(a.op == op("D - 1/t"));
    CHECK(annihilator_of_span(ring, 1, {q("1"), q("t")}).op == op("D^2"));
    auto p = annihilator_of_span(ring, 1, {q("t"), q("2*t")});
    CHECK(p.op == op("D - 1/t"));
    CHECK(p.basis.size() == 1);
    auto z = annihilator_of_span(ring, 1, {q("0"), q("0")});
    CHECK(z.all_zero);
    CHECK(z.op == op("1"));
    CHECK_THROWS(annihilator_of_span(ring, 1, {q("x")}));
}

TEST_CASE_FIXTURE(Fixture, "annihilators match bordered Wronskian determinants") {
    test::RatGen gen(ring, 23, 2, 3);
    for (int i = 0; i < 15; ++i) {
        std::vector<Rat> gens;
        for (int k = gen.uniform(1, 3); k > 0; --k) gens.push_back(gen.nonzero(false));
        if (gen.uniform(0, 2) == 0) gens.push_back(gens[0] * Rat(3) + Rat(2) * gens.back());
        auto a = annihilator_of_span(ring, 1, gens);
        CHECK(static_cast<std::size_t>(a.op.order()) == wronskian_rank(gens, 1));
        for (const auto& g : gens) CHECK(a.op.apply(g).is_zero());
        CHECK(a.op == bordered_wronskian(ring, a.basis).monic());
    }
}

TEST_CASE("operator ring laws on random samples") {
    auto ring = make_ring({"t"});
    test::RatGen gen(ring, 29, 1, 3);
    for (int i = 0; i < 25; ++i) {
        OreOperator a = random_op(gen, ring, 2), b = random_op(gen, ring, 2), c = random_op(gen, ring, 2);
        CHECK((a * b) * c == a * (b * c));
        CHECK(a * (b + c) == a * b + a * c);
        CHECK((a + b) * c == a * c + b * c);
        Rat y = gen.rat(false);
        CHECK((a * b).apply(y) == a.apply(b.apply(y)));
        if (!b.is_zero()) {
            auto [q, r] = right_divide(a * c + a, b);
            CHECK(q * b + r == a * c + a);
            CHECK(r.order() < b.order());
        }
    }
}

TEST_CASE("gcrd and lclm on random operators") {
    auto ring = make_ring({"t"});
    test::RatGen gen(ring, 31, 1, 2);
    for (int i = 0; i < 8; ++i) {
        OreOperator common = random_op(gen, ring, 1);
        OreOperator l = random_op(gen, ring, 1) * common, m = random_op(gen, ring, 1) * common;
        OreOperator g = gcrd(l, m);
        CHECK(right_divides(g, l));
        CHECK(right_divides(g, m));
        if (common.order() > 0) CHECK(right_divides(common.monic(), g));
        OreOperator c = lclm(l, m);
        CHECK(right_divides(l, c));
        CHECK(right_divides(m, c));
        CHECK(g.order() + c.order() == l.order() + m.order());
    }
}

TEST_CASE("operator parse errors") {
    auto ring = make_ring({"t"});
    CHECK_THROWS_AS(parse_operator("D^-1", ring, 1), ParseError);
    CHECK_THROWS_AS(parse_operator("x*D", ring, 1), ParseError);
    CHECK_THROWS_AS(parse_operator("D/t", ring, 1), ParseError);
    CHECK(parse_operator("D/2", ring, 1) == parse_operator("(1/2)*D", ring, 1));
}
