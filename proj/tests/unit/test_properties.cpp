#include "doctest.h"
#include "hecke/bases.hpp"
#include "../support/oracles.hpp"
#include "../support/properties.hpp"

#include <set>

using namespace hecke;

TEST_CASE("A1 pipeline matches the hand derivation") {
    auto bad = testing::a1_hand_pipeline_mismatches();
    for (const auto& m : bad) CAPTURE(m);
    CHECK(bad.empty());
}

TEST_CASE("weighted Dynkin diagrams match the partition oracle") {
    for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C2", "C3"}) {
        RootSystem rs = RootSystem::build(label);
        ChevalleyBasis cb(rs);
        Subsystem full = Subsystem::full(rs);
        // B2 and C2 are the same diagram; the first standard model wins.
        CHECK(testing::classical_type(full) == (std::string(label) == "C2" ? "B2" : std::string(label)));
        auto bad = testing::wdd_partition_mismatches(cb, full);
        CAPTURE(label);
        CHECK(bad.empty());
    }
    // B3 and C3 inside F4, with simple roots in a non-standard order.
    RootSystem f4 = RootSystem::build("F4");
    ChevalleyBasis cb(f4);
    Subsystem full = Subsystem::full(f4);
    std::set<std::string> types;
    for (auto which : std::vector<std::vector<int>>{{0, 1, 2}, {1, 2, 3}, {0, 1}, {2, 3}}) {
        Subsystem levi = full.standard_levi(which);
        types.insert(testing::classical_type(levi));
        CHECK(testing::wdd_partition_mismatches(cb, levi).empty());
    }
    CHECK(types == std::set<std::string>{"A2", "B3", "C3"});
    CHECK(testing::classical_type(Subsystem::full(RootSystem::build("G2"))).empty());
}

TEST_CASE("random subjects are reproducible middle elements") {
    auto a = testing::random_subjects(5, 12), b = testing::random_subjects(5, 12);
    REQUIRE(a.size() == 12);
    std::set<std::string> types;
    for (size_t i = 0; i < a.size(); ++i) {
        CHECK(a[i].chi == b[i].chi);
        types.insert(a[i].cartan);
        Engine eng(a[i].cartan);
        CHECK(eng.is_middle_element(a[i].chi));
    }
    CHECK(types.size() >= 3);
}

TEST_CASE("property suites on random small characters") {
    std::mt19937 rng(11);
    for (const auto& s : testing::random_subjects(3, 10)) {
        CAPTURE(s.origin);
        Engine eng(s.cartan);
        const GradedContext& ctx = eng.full_context(eng.dominant(s.chi));
        std::vector<std::vector<testing::Property>> groups{testing::lie_properties(eng.chevalley(), rng),
                                                           testing::context_properties(ctx, rng),
                                                           testing::family_properties(eng.family(ctx))};
        for (const auto& ps : groups)
            for (const auto& p : ps) {
                CAPTURE(p.name);
                CAPTURE(p.detail);
                CHECK(p.ok);
            }
    }
}

TEST_CASE("context properties on a Levi subsystem context") {
    Engine eng("F4");
    std::mt19937 rng(2);
    Subsystem levi = Subsystem::full(eng.roots()).standard_levi({1, 2, 3});
    const GradedContext& ctx = eng.context(levi.roots(), parse_qvec("3,1,1,1"));
    for (const auto& p : testing::context_properties(ctx, rng)) {
        CAPTURE(p.name);
        CAPTURE(p.detail);
        CHECK(p.ok);
    }
}
