#include "doctest.h"
#include "hecke/rootsys.hpp"

using namespace hecke;

namespace {
long factorial(int n) { return n <= 1 ? 1 : n * factorial(n - 1); }
}  // namespace

TEST_CASE("root counts and Weyl group orders") {
    struct Row {
        const char* label;
        int roots;
        size_t order;
    };
    for (Row r : {Row{"A1", 2, 2}, Row{"A2", 6, 6}, Row{"A3", 12, 24}, Row{"B2", 8, 8}, Row{"B3", 18, 48},
                  Row{"C3", 18, 48}, Row{"D4", 24, 192}, Row{"G2", 12, 12}, Row{"F4", 48, 1152},
                  Row{"A1xA1", 4, 4}}) {
        RootSystem rs = RootSystem::build(r.label);
        CHECK(rs.size() == r.roots);
        WeylGroup w(Subsystem::full(rs));
        CHECK(w.size() == r.order);
        Subsystem full = Subsystem::full(rs);
        CHECK(static_cast<int>(full.positive_roots().size()) == r.roots / 2);
        CHECK(w.length(w.longest()) == r.roots / 2);
        CHECK(full.cartan_type() == rs.label());
    }
    CHECK(WeylGroup(Subsystem::full(RootSystem::build("A4"))).size() == static_cast<size_t>(factorial(5)));
}

TEST_CASE("F4 simple roots pair to 2 with 2rho check") {
    RootSystem rs = RootSystem::build("F4");
    CHECK(qvec_str(rs.two_rho_check()) == "11,5,3,1");
    for (int a : rs.simple()) CHECK(rs.pair(a, rs.two_rho_check()) == 2);
}

TEST_CASE("Weyl elements act linearly and lengths agree") {
    RootSystem rs = RootSystem::build("G2");
    Subsystem full = Subsystem::full(rs);
    WeylGroup w(full);
    QVec x = parse_qvec("3,-1,-2");
    for (size_t i = 0; i < w.size(); ++i) {
        CHECK(full.length(w[i]) == w.length(i));
        for (int r = 0; r < rs.size(); ++r) CHECK(rs.apply(w[i], rs.root(r)) == rs.root(w[i](r)));
        QVec y = x;
        auto word = w.word(i);
        for (auto it = word.rbegin(); it != word.rend(); ++it) y = rs.reflect(full.simple()[*it], y);
        CHECK(rs.apply(w[i], x) == y);
    }
}

TEST_CASE("dominant representatives and coweights") {
    RootSystem rs = RootSystem::build("A2");
    Subsystem full = Subsystem::full(rs);
    auto [d, w] = full.to_dominant(parse_qvec("-2,0,2"));
    CHECK(qvec_str(d) == "2,0,-2");
    CHECK(rs.apply(w, parse_qvec("-2,0,2")) == d);
    CHECK(qvec_str(full.coweight({2, 2})) == "2,0,-2");
    Subsystem levi = full.standard_levi({0});
    CHECK(levi.cartan_type() == "A1");
    CHECK(full.centralizer(parse_qvec("1,1,0")).cartan_type() == "A1");
    CHECK(full.centralizer(parse_qvec("2,0,-2")).cartan_type() == "T");
}

TEST_CASE("Levi types in F4") {
    RootSystem rs = RootSystem::build("F4");
    Subsystem full = Subsystem::full(rs);
    CHECK(full.standard_levi({0, 1, 2}).cartan_type() == "B3");
    CHECK(full.standard_levi({1, 2, 3}).cartan_type() == "C3");
    CHECK(full.centralizer(parse_qvec("3,1,1,1")).cartan_type().size() > 0);
    CHECK(full.graded(parse_qvec("3,1,1,1"), 0).count() == 8);
}
