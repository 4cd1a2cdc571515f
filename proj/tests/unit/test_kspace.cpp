#include "doctest.h"
#include "hecke/kspace.hpp"

using namespace hecke;

namespace {

// Label w.chi for a word "s1s2" read as a composition s1 o s2.
QVec word_label(const RootSystem& rs, const std::string& word, const QVec& chi) {
    std::vector<int> idx;
    for (size_t k = 0; k < word.size(); ++k)
        if (word[k] == 's') idx.push_back(word[k + 1] - '1');
    QVec x = chi;
    for (auto it = idx.rbegin(); it != idx.rend(); ++it) x = rs.reflect(rs.simple()[*it], x);
    return x;
}

void check_table(const GradedContext& ctx, const RootSystem& rs, const QVec& chi, const std::vector<std::string>& words,
                 const std::vector<std::vector<std::string>>& table) {
    std::vector<long> idx;
    for (const auto& w : words) {
        idx.push_back(ctx.find(word_label(rs, w, chi)));
        REQUIRE(idx.back() >= 0);
    }
    for (size_t i = 0; i < words.size(); ++i)
        for (size_t j = 0; j < words.size(); ++j) {
            CAPTURE(words[i]);
            CAPTURE(words[j]);
            CHECK(ctx.gram_entry(idx[i], idx[j]).to_rf() == RF::parse(table[i][j]));
        }
}

}  // namespace

TEST_CASE("A2 regular form table") {
    RootSystem rs = RootSystem::build("A2");
    QVec chi = parse_qvec("2,0,-2");
    GradedContext ctx(rs, rs.all(), chi);
    CHECK(ctx.size() == 6);
    check_table(ctx, rs, chi, {"1", "s1s2s1", "s1s2", "s2s1", "s1", "s2"},
                {{"1", "v^2", "-v", "-v", "-v", "-v"},
                 {"v^2", "1", "-v", "-v", "-v", "-v"},
                 {"-v", "-v", "1", "v^2", "v^2", "1"},
                 {"-v", "-v", "v^2", "1", "1", "v^2"},
                 {"-v", "-v", "v^2", "1", "1", "v^2"},
                 {"-v", "-v", "1", "v^2", "v^2", "1"}});
    auto rad = ctx.radical();
    CHECK(rad.size() == 2);
    CHECK(ctx.irr_count() == 4);
    for (const auto& r : rad) {
        CHECK(ctx.in_radical(r));
        CHECK(ctx.in_radical(kv_bar(r)));
    }
    KVector a{{static_cast<int>(ctx.find(word_label(rs, "s1", chi))), RF(1)},
              {static_cast<int>(ctx.find(word_label(rs, "s2s1", chi))), RF(-1)}};
    CHECK(ctx.in_radical(a));
    CHECK(ctx.c() == 2);
}

TEST_CASE("C2 form at (1,1)") {
    RootSystem rs = RootSystem::build("C2");
    QVec chi = parse_qvec("1,1");
    GradedContext ctx(rs, rs.all(), chi);
    CHECK(ctx.size() == 4);
    CHECK(ctx.stabilizer_order() == 2);
    check_table(ctx, rs, chi, {"1", "s2", "s1s2", "s2s1s2"},
                {{"1+v^-2", "-v^-1-v", "1+v^2", "-v-v^3"},
                 {"-v^-1-v", "2", "-2v", "1+v^2"},
                 {"1+v^2", "-2v", "2", "-v^-1-v"},
                 {"-v-v^3", "1+v^2", "-v^-1-v", "1+v^-2"}});
    CHECK(ctx.radical().empty());
    CHECK(ctx.irr_count() == 4);
    KVector x{{0, RF(1)}};
    KVector sx = ctx.sigma(x);
    REQUIRE(sx.size() == 1);
    CHECK(qvec_str(ctx.label(sx.begin()->first)) == "-1,-1");
}

TEST_CASE("pairing agrees with the Gram matrix") {
    RootSystem rs = RootSystem::build("C2");
    GradedContext ctx(rs, rs.all(), parse_qvec("1,1"));
    KVector x{{0, RF::parse("v/(1+v^2)")}, {2, RF::parse("-v")}};
    KVector y{{1, RF::parse("1/(1-v)")}, {3, RF(2)}, {0, RF::parse("v^-1")}};
    RFMatrix g = ctx.gram_matrix();
    RF expect;
    for (const auto& [i, a] : x)
        for (const auto& [j, b] : y) expect += a * b * g(i, j);
    CHECK(ctx.pair(x, y) == expect);
    CHECK(ctx.pair(y, x) == expect);
    auto gy = ctx.gram_apply(y);
    for (size_t i = 0; i < 4; ++i) {
        RF e;
        for (const auto& [j, b] : y) e += g(i, j) * b;
        CHECK(gy[i] == e);
    }
}

TEST_CASE("torus and central characters") {
    RootSystem rs = RootSystem::build("A1");
    GradedContext torus(rs, RootSet(), parse_qvec("1,-1"));
    CHECK(torus.size() == 1);
    CHECK(torus.gram_entry(0, 0).to_rf() == RF(1));
    GradedContext zero(rs, rs.all(), parse_qvec("0,0"));
    CHECK(zero.size() == 1);
    CHECK(zero.central());
}

TEST_CASE("modular rank agrees with exact rank") {
    RootSystem rs = RootSystem::build("C3");
    GradedContext ctx(rs, rs.all(), parse_qvec("3,1,1"));
    CHECK(ctx.irr_count(1000) == ctx.irr_count(0));
    CHECK(ctx.irr_count() == 10);
}
