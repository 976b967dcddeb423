#include "support.hpp"

#include "ppv/groups.hpp"

#include <doctest.h>

using namespace ppv;
using ppv::test::R;

namespace {

struct Fixture {
    RingPtr ring = make_ring({"t"});
    OreOperator op(const std::string& s) const { return parse_operator(s, ring, 1); }
    GaSubgroup ga(const std::string& s) const { return GaSubgroup::kernel(op(s)); }
    GmSubgroup gm(const std::string& s) const { return GmSubgroup::log_kernel(op(s)); }
};

} // namespace

TEST_CASE_FIXTURE(Fixture, "additive containment") {
    CHECK(ga_contains(ga("D^2"), ga("D")));
    CHECK_FALSE(ga_contains(ga("D"), ga("D^2")));
    CHECK(ga_contains(ga("D^2"), ga("D - 1/t")));
    CHECK(ga_contains(GaSubgroup::full(), ga("D^3")));
    CHECK_FALSE(ga_contains(ga("D^3"), GaSubgroup::full()));
    CHECK(ga_contains(ga("D"), ga("1")));
    CHECK(ga("t*D") == ga("D"));
    CHECK(ga("D - 1/t").render() == "Ga[L = D - 1/t]");
    CHECK(GaSubgroup::full().render() == "Full");
    auto other = parse_operator("D", make_ring({"t", "s"}), 2);
    CHECK_THROWS_AS(ga_contains(ga("D"), GaSubgroup::kernel(other)), MixedDerivations);
}

TEST_CASE_FIXTURE(Fixture, "multiplicative containment") {
    CHECK(gm_contains(GmSubgroup::finite_cyclic(6), GmSubgroup::finite_cyclic(3)));
    CHECK_FALSE(gm_contains(GmSubgroup::finite_cyclic(6), GmSubgroup::finite_cyclic(4)));
    CHECK(gm_contains(gm("1"), GmSubgroup::finite_cyclic(5)));
    CHECK_FALSE(gm_contains(GmSubgroup::finite_cyclic(5), gm("1")));
    CHECK(gm_contains(gm("D"), gm("1")));
    CHECK_FALSE(gm_contains(gm("1"), gm("D")));
    CHECK(gm_contains(GmSubgroup::full(), gm("D")));
    CHECK(gm("1").render() == "Gm(C)");
    CHECK(gm("D").render() == "Gm[L(∂a/a)=0, L = D]");
    CHECK(GmSubgroup::finite_cyclic(4).render() == "mu_n[n = 4]");
}

TEST_CASE_FIXTURE(Fixture, "intersections normalize to the smaller descriptor") {
    CHECK(gm_intersect(GmSubgroup::finite_cyclic(4), GmSubgroup::finite_cyclic(6)) == GmSubgroup::finite_cyclic(2));
    CHECK(gm_intersect(GmSubgroup::finite_cyclic(4), gm("D")) == GmSubgroup::finite_cyclic(4));
    CHECK(gm_intersect(gm("D^2"), gm("D - 1/t")) == gm("D - 1/t"));
    CHECK(ga_intersect(ga("D^2"), ga("D - 1")) == ga("1"));
}

TEST_CASE_FIXTURE(Fixture, "closures") {
    CHECK(zariski_closure(gm("D")).kind == ClosureTag::Kind::FullGm);
    CHECK(zariski_closure(gm("1")).kind == ClosureTag::Kind::FullGm);
    CHECK(zariski_closure(ga("1")).kind == ClosureTag::Kind::TrivialGroup);
    CHECK(zariski_closure(ga("D")).kind == ClosureTag::Kind::FullGa);
    CHECK(zariski_closure(GaSubgroup::full()).kind == ClosureTag::Kind::FullGa);
    CHECK(zariski_closure(GmSubgroup::finite_cyclic(7)) == ClosureTag{ClosureTag::Kind::FiniteCyclic, 7});
    CHECK(zariski_closure(GmSubgroup::finite_cyclic(1)).kind == ClosureTag::Kind::TrivialGroup);
}

TEST_CASE_FIXTURE(Fixture, "logarithmic derivative") {
    CHECK(log_derivative(R("t", ring), 1) == R("1/t", ring));
    CHECK(log_derivative(R("-7/3", ring), 1).is_zero());
    CHECK_THROWS_AS(log_derivative(R("0", ring), 1), std::domain_error);
    test::RatGen gen(ring, 37);
    for (int i = 0; i < 30; ++i) {
        Rat f = gen.nonzero(false), g = gen.nonzero(false);
        CHECK(log_derivative(f * g, 1) == log_derivative(f, 1) + log_derivative(g, 1));
        CHECK(log_derivative(f.inverse(), 1) == -log_derivative(f, 1));
    }
}

TEST_CASE_FIXTURE(Fixture, "fixed subgroup table") {
    auto rows = gm_del_subgroup_table(ring, 1, 3);
    REQUIRE(rows.size() == 3);
    CHECK(rows[0].fixed_field == "k((x^t)^n, log x)");
    CHECK(rows[1].fixed_field == "k(log x)");
    CHECK(rows[2].fixed_field == "k");
    CHECK(rows[1].group == gm("1"));
    CHECK(rows[2].group == gm("D"));
    CHECK(gm_contains(rows[1].group, rows[0].group));
    CHECK(gm_contains(rows[2].group, rows[1].group));
    CHECK(gm_contains(rows[2].group, rows[0].group));
}

TEST_CASE("containment is a partial order on random kernels") {
    auto ring = make_ring({"t"});
    test::RatGen gen(ring, 41, 1, 2);
    auto rand_op = [&](int ord) {
        std::vector<Rat> c;
        for (int k = 0; k < ord; ++k) c.push_back(gen.rat(false));
        c.emplace_back(1);
        return OreOperator(ring, 1, c);
    };
    for (int i = 0; i < 10; ++i) {
        OreOperator l1 = rand_op(1), l2 = rand_op(1) * l1, l3 = rand_op(1) * l2;
        GaSubgroup a = GaSubgroup::kernel(l1), b = GaSubgroup::kernel(l2), c = GaSubgroup::kernel(l3);
        CHECK(ga_contains(a, a));
        CHECK(ga_contains(b, a));
        CHECK(ga_contains(c, b));
        CHECK(ga_contains(c, a));
        CHECK_FALSE(ga_contains(a, b));
        CHECK(closure_contains(zariski_closure(c), zariski_closure(a)));
        GmSubgroup ma = GmSubgroup::log_kernel(l1), mc = GmSubgroup::log_kernel(l3);
        CHECK(gm_contains(mc, ma));
        CHECK(closure_contains(zariski_closure(mc), zariski_closure(ma)));
        long n = gen.uniform(1, 6), m = n * gen.uniform(1, 4);
        CHECK(gm_contains(GmSubgroup::finite_cyclic(m), GmSubgroup::finite_cyclic(n)));
        CHECK(closure_contains(zariski_closure(GmSubgroup::finite_cyclic(m)),
                               zariski_closure(GmSubgroup::finite_cyclic(n))));
        CHECK(closure_contains(zariski_closure(ma), zariski_closure(GmSubgroup::finite_cyclic(m))));
    }
}
