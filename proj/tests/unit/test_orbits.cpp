#include "doctest.h"
#include "hecke/bases.hpp"

#include <random>
#include <set>

using namespace hecke;

TEST_CASE("C2 parameters at (1,1)") {
    Engine eng("C2");
    const GradedContext& ctx = eng.full_context(parse_qvec("1,1"));
    auto orbits = parameter_set(ctx, eng.wdd());
    REQUIRE(orbits.size() == 3);
    CHECK(orbits[0].dim == 0);
    CHECK(orbits[1].dim == 2);
    CHECK(orbits[2].dim == 3);
    for (const auto& o : orbits) {
        CHECK(is_parameter(ctx, eng.chevalley(), o.s));
        CHECK(orbit_dim(ctx, o) == o.dim);
    }
    std::set<std::string> names;
    for (const auto& o : eng.family(ctx).orbits) names.insert(o.saturation);
    CHECK(names == std::set<std::string>{"(1^4)", "(21^2)", "(22)"});
}

TEST_CASE("regular character has one orbit per subset of simple roots") {
    for (const char* label : {"A2", "B2", "G2", "A3", "C3"}) {
        Engine eng(label);
        const GradedContext& ctx = eng.full_context(eng.roots().two_rho_check());
        CAPTURE(label);
        CHECK(parameter_set(ctx, eng.wdd()).size() == (size_t(1) << eng.roots().rank()));
    }
}

TEST_CASE("canonical s is constant on W(chi) orbits") {
    Engine eng("F4");
    const GradedContext& ctx = eng.full_context(parse_qvec("3,1,1,1"));
    const auto& stab = ctx.members(ctx.coset_of(0));
    std::mt19937 rng(7);
    for (const auto& o : parameter_set(ctx, eng.wdd())) {
        QVec c = canonical_s(ctx, o.s);
        for (int t = 0; t < 5; ++t) {
            const WeylElement& w = ctx.weyl()[stab[rng() % stab.size()]];
            CHECK(canonical_s(ctx, eng.roots().apply(w, o.s)) == c);
        }
    }
}

TEST_CASE("printed s values that are not parameters") {
    Engine eng("F4");
    const GradedContext& a = eng.full_context(parse_qvec("2,1,1,0"));
    CHECK_FALSE(is_parameter(a, eng.chevalley(), parse_qvec("1,-1,1,1")));
    CHECK(is_parameter(a, eng.chevalley(), parse_qvec("2,0,0,0")));
    const GradedContext& b = eng.full_context(parse_qvec("7,3,1,1"));
    CHECK_FALSE(is_parameter(b, eng.chevalley(), parse_qvec("9/2,1/2,-3/2,-7/2")));
    CHECK(is_parameter(b, eng.chevalley(), parse_qvec("9/2,1/2,7/2,-3/2")));
}

TEST_CASE("orbit names round trip through their diagrams") {
    for (const char* label : {"G2", "F4"}) {
        Engine eng(label);
        const auto& diagrams = eng.wdd().get(Subsystem::full(eng.roots()));
        std::set<std::string> names;
        for (const auto& d : diagrams) {
            std::string name = saturation_name(eng.roots(), d.h);
            CAPTURE(name);
            names.insert(name);
            CHECK(chi_from_name(eng.roots(), eng.wdd(), name) == d.h);
        }
        CHECK(names.size() == diagrams.size());
    }
    Engine g2("G2");
    CHECK(chi_from_name(g2.roots(), g2.wdd(), "E6").empty());
}

TEST_CASE("component group labels") {
    CHECK(component_group_label("0", 1) == "1");
    CHECK(component_group_label("(22)", 2) == "Z/2Z");
    Engine g2("G2");
    const Family& f = g2.family(g2.full_context(chi_from_name(g2.roots(), g2.wdd(), "G2(a1)")));
    CHECK(f.orbits[f.open].component_group == "S3");
}
