#include "support.hpp"

#include "ppv/monodromy.hpp"

#include <doctest.h>

#include <cmath>

using namespace ppv;
using MVerdict = MonodromyReport::Verdict;

namespace {

RatMatrix M(const RingPtr& ring, const std::vector<std::vector<std::string>>& rows) { return from_strings(rows, ring); }

double dist(const CMatrix& a, const CMatrix& b) { return (a - b).cwiseAbs().maxCoeff(); }

} // namespace

TEST_CASE("monodromy of a scalar simple pole") {
    auto ring = make_ring({"t"});
    auto a = M(ring, {{"t/x"}});
    auto m = integrate_transfer(ring, a, {mpq_class(1, 2)}, LoopSpec::circle(0.0, 1.0));
    CHECK(std::abs(m(0, 0) - cd(-1.0, 0.0)) < 1e-6);
    // exp(2 pi i t) oracle at other parameter values
    for (mpq_class t : {mpq_class(3, 10), mpq_class(7, 4), mpq_class(-2, 3)}) {
        auto w = integrate_transfer(ring, a, {t}, LoopSpec::circle(0.0, 1.0));
        cd expect = std::exp(cd(0.0, 2.0 * M_PI * t.get_d()));
        CHECK(std::abs(w(0, 0) - expect) < 1e-7);
    }
}

TEST_CASE("monodromy basic properties") {
    auto ring = make_ring({"t"});
    SUBCASE("zero matrix gives identity") {
        auto m = integrate_transfer(ring, zero_matrix(2), {mpq_class(1)}, LoopSpec::circle(0.0, 1.0));
        CHECK(dist(m, CMatrix::Identity(2, 2)) < 1e-12);
    }
    SUBCASE("loop not enclosing a pole") {
        auto a = M(ring, {{"t/x", "1"}, {"x", "1/(x-3)"}});
        auto m = integrate_transfer(ring, a, {mpq_class(1, 3)}, LoopSpec::circle(cd(5.0, 1.0), 0.5));
        CHECK(dist(m, CMatrix::Identity(2, 2)) < 1e-7);
    }
    SUBCASE("reversed orientation inverts") {
        auto a = M(ring, {{"t/x", "1"}, {"1/(x-1/2)", "-t/x"}});
        auto loop = LoopSpec::circle(0.0, 1.0);
        auto fwd = integrate_transfer(ring, a, {mpq_class(2, 5)}, loop);
        loop.orientation = -1;
        auto back = integrate_transfer(ring, a, {mpq_class(2, 5)}, loop);
        CHECK(dist(fwd * back, CMatrix::Identity(2, 2)) < 1e-6);
    }
    SUBCASE("refinement converges") {
        auto a = M(ring, {{"t/x", "1"}, {"x", "-t/x"}});
        auto m1 = integrate_transfer(ring, a, {mpq_class(1, 3)}, LoopSpec::circle(0.0, 1.0, 32), 1e-9);
        auto m2 = integrate_transfer(ring, a, {mpq_class(1, 3)}, LoopSpec::circle(0.0, 1.0, 64), 1e-9);
        CHECK(dist(m1, m2) < 1e-8 * (1.0 + m1.cwiseAbs().maxCoeff()));
    }
    SUBCASE("homotopic loops share conjugacy invariants") {
        auto a = M(ring, {{"t/x", "1"}, {"x", "-t/(x-1/4)"}});
        auto c1 = charpoly_coefficients(integrate_transfer(ring, a, {mpq_class(1, 3)}, LoopSpec::circle(0.0, 1.0)));
        auto c2 = charpoly_coefficients(integrate_transfer(ring, a, {mpq_class(1, 3)}, LoopSpec::circle(0.1, 0.6)));
        auto sq = LoopSpec::polyline({cd(1, -1), cd(1, 1), cd(-1, 1), cd(-1, -1)});
        auto c3 = charpoly_coefficients(integrate_transfer(ring, a, {mpq_class(1, 3)}, sq));
        for (std::size_t k = 0; k < c1.size(); ++k) {
            CHECK(std::abs(c1[k] - c2[k]) < 1e-6);
            CHECK(std::abs(c1[k] - c3[k]) < 1e-6);
        }
    }
}

TEST_CASE("charpoly coefficients") {
    CMatrix m(2, 2);
    m << 1.0, 2.0, 3.0, 4.0;
    auto c = charpoly_coefficients(m);
    CHECK(std::abs(c[0] - cd(-2.0)) < 1e-12);
    CHECK(std::abs(c[1] - cd(-5.0)) < 1e-12);
}

TEST_CASE("monodromy errors") {
    auto ring = make_ring({"t"});
    CHECK_THROWS_AS(integrate_transfer(ring, M(ring, {{"1/(x-1)"}}), {mpq_class(1)}, LoopSpec::circle(0.0, 1.0)),
                    PathTooClose);
    CHECK_THROWS_AS(integrate_transfer(ring, M(ring, {{"1/((t-1/2)*x)"}}), {mpq_class(1, 2)}, LoopSpec::circle(0.0, 1.0)),
                    EvalError);
    CHECK_THROWS_AS(integrate_transfer(ring, M(ring, {{"t"}}), {}, LoopSpec::circle(0.0, 1.0)), EvalError);
}

TEST_CASE("parameter scan") {
    auto ring = make_ring({"t"});
    auto loop = LoopSpec::circle(0.0, 1.0);
    auto varies = monodromy_scan(ring, M(ring, {{"t/x"}}), loop, default_grid(1));
    CHECK(varies.grid.size() == 3);
    CHECK(varies.verdict == MVerdict::VariesWithParameter);
    auto constant = monodromy_scan(ring, M(ring, {{"1/x"}}), loop, default_grid(1));
    CHECK(constant.verdict == MVerdict::ConsistentWithIsomonodromy);

    // a failing grid point is recorded, the rest still count
    auto partial = monodromy_scan(ring, M(ring, {{"1/((t-3/5)*x)"}}), loop, default_grid(1));
    CHECK(partial.grid[1].error.size() > 0);
    CHECK(!partial.grid[1].monodromy);
    CHECK(partial.grid[0].monodromy);

    CHECK(default_grid(2).size() == 9);
    CHECK(default_grid(2)[1] == ParamPoint{mpq_class(3, 10), mpq_class(3, 5)});
}

TEST_CASE("symbolic and numeric cross-check") {
    auto ring = make_ring({"t1", "t2"});
    auto loop = LoopSpec::circle(0.0, 1.0);
    auto cc = cross_check(ring, M(ring, {{"t1", "0"}, {"0", "t2"}}), {}, loop, default_grid(2));
    CHECK(cc.symbolic.kind == IsomonodromyVerdict::Kind::IsomonodromicWithinAnsatz);
    CHECK(cc.numeric.verdict == MVerdict::ConsistentWithIsomonodromy);
    CHECK(cc.agreement == CrossCheck::Agreement::Agree);

    auto r1 = make_ring({"t"});
    auto cc2 = cross_check(r1, M(r1, {{"t/x"}}), {}, loop, default_grid(1));
    CHECK(cc2.symbolic.kind == IsomonodromyVerdict::Kind::NotFoundWithinAnsatz);
    CHECK(cc2.agreement == CrossCheck::Agreement::Agree);
}
