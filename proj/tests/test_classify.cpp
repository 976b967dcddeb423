#include "oracles.hpp"

#include "ppv/classify.hpp"

#include <doctest.h>

using namespace ppv;
using Kind = TrichotomyVerdict::Kind;

namespace {

RatMatrix M(const RingPtr& ring, const std::vector<std::vector<std::string>>& rows) { return from_strings(rows, ring); }

} // namespace

TEST_CASE("diagonal examples") {
    auto ring = make_ring({"t"});
    RatMatrix a = M(ring, {{"1/(2*x)", "0"}, {"0", "-1/(2*x)"}});
    auto v = classify_2x2(ring, a);
    REQUIRE(v.kind == Kind::ReducibleSolvable);
    CHECK(v.exponent == ppv::test::R("1/(2*x)", ring));
    CHECK(v.eigen_line[1].is_zero());
    CHECK(verify_verdict(ring, a, v));

    RatMatrix b = M(ring, {{"t", "0"}, {"0", "-t"}});
    auto w = classify_2x2(ring, b);
    REQUIRE(w.kind == Kind::CompletelyIntegrable);
    CHECK(w.witnesses[0].second == M(ring, {{"x", "0"}, {"0", "-x"}}));
    CHECK(verify_verdict(ring, b, w));
}

TEST_CASE("scaling-invariant second order systems complete") {
    // y'' = (t/x) y is solved by f(t x) with f'' = f/s, so the family is
    // isomonodromic; B = [[-1/t, x/t], [1, 0]] up to a scalar.
    auto ring = make_ring({"t"});
    RatMatrix a = M(ring, {{"0", "1"}, {"t/x", "0"}});
    auto v = classify_2x2(ring, a, {}, 3);
    REQUIRE(v.kind == Kind::CompletelyIntegrable);
    CHECK(v.witnesses[0].second == M(ring, {{"-1/t", "x/t"}, {"1", "0"}}));
    CHECK(verify_verdict(ring, a, v));
    CHECK(classify_2x2(ring, a, {}, 3).kind == v.kind);
}

TEST_CASE("a two-pole system has no eigen-line within the cap") {
    auto ring = make_ring({"t"});
    RatMatrix a = M(ring, {{"0", "1"}, {"t/(x*(x - 1))", "0"}});
    auto v = classify_2x2(ring, a, {}, 3);
    CHECK(v.kind == Kind::GenericSL2Candidate);
    CHECK(v.reasons.empty());
}

TEST_CASE("skipped searches give Unknown") {
    auto ring = make_ring({"t"});
    auto v = classify_2x2(ring, M(ring, {{"0", "1"}, {"x^2 + t", "0"}}));
    CHECK(v.kind == Kind::Unknown);
    CHECK_FALSE(v.reasons.empty());
    CHECK(interpret_verdict(v).find("degree >= 1") != std::string::npos);
    auto w = classify_2x2(ring, M(ring, {{"0", "1"}, {"t^2/x^2 + 1/x", "0"}}));
    CHECK(w.kind == Kind::Unknown);
    CHECK_THROWS_AS(classify_2x2(ring, M(ring, {{"1", "0"}, {"0", "0"}})), std::invalid_argument);
}

TEST_CASE("triangular systems have an eigen-line") {
    auto ring = make_ring({"t"});
    RatMatrix a = M(ring, {{"t/x", "1"}, {"0", "-t/x"}});
    auto v = classify_2x2(ring, a);
    CHECK(v.kind == Kind::ReducibleSolvable);
    CHECK(verify_verdict(ring, a, v));
}

TEST_CASE("verdicts survive constant gauge changes") {
    auto ring = make_ring({"t"});
    std::vector<RatMatrix> samples = {M(ring, {{"1/(2*x)", "0"}, {"0", "-1/(2*x)"}}),
                                      M(ring, {{"t", "0"}, {"0", "-t"}}),
                                      M(ring, {{"t/x", "1"}, {"0", "-t/x"}}),
                                      M(ring, {{"0", "1"}, {"t/x", "0"}})};
    test::RatGen gen(ring, 47);
    for (int i = 0; i < 8; ++i) {
        const RatMatrix& a = samples[static_cast<std::size_t>(i) % samples.size()];
        RatMatrix p = random_gauge(gen);
        RatMatrix b = p * a * inverse(p);
        auto va = classify_2x2(ring, a, {}, 3), vb = classify_2x2(ring, b, {}, 3);
        CHECK(va.kind == vb.kind);
        CHECK(verify_verdict(ring, b, vb));
    }
}

TEST_CASE("verdict text") {
    TrichotomyVerdict v;
    v.kind = Kind::CompletelyIntegrable;
    CHECK(interpret_verdict(v).find("SL2(C)") != std::string::npos);
    v.kind = Kind::ReducibleSolvable;
    CHECK(interpret_verdict(v).find("Borel") != std::string::npos);
    v.kind = Kind::Unknown;
    v.reasons = {"r1", "r2"};
    CHECK(interpret_verdict(v).find("r2") != std::string::npos);
}
