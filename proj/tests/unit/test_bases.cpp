#include "doctest.h"
#include "hecke/bases.hpp"
#include "../support/properties.hpp"

using namespace hecke;

namespace {

bool all_ok(const std::vector<testing::Property>& ps) {
    bool ok = true;
    for (const auto& p : ps) {
        CAPTURE(p.name);
        CAPTURE(p.detail);
        CHECK(p.ok);
        ok = ok && p.ok;
    }
    return ok;
}

bool any_failure(const std::vector<testing::Property>& ps, const std::string& name) {
    for (const auto& p : ps)
        if (!p.ok && p.name.rfind(name, 0) == 0) return true;
    return false;
}

}  // namespace

TEST_CASE("families are memoized per context") {
    Engine eng("C2");
    const GradedContext& ctx = eng.full_context(parse_qvec("1,1"));
    const Family& a = eng.family(ctx);
    const Family& b = eng.family(eng.full_context(parse_qvec("1,1")));
    CHECK(&a == &b);
    CHECK(a.size() == 4);
    CHECK(a.block == std::vector<int>({1, 1, 2}));
}

TEST_CASE("structural checks hold on small families") {
    for (auto [cartan, chi] : std::vector<std::pair<const char*, const char*>>{
             {"A2", "2rho"}, {"C2", "1,1"}, {"A3", "2,0,0,-2"}, {"C3", "3,1,1"}, {"G2", "0,-1,1"}, {"B3", "2rho"}}) {
        Engine eng(cartan);
        QVec x = std::string(chi) == "2rho" ? eng.roots().two_rho_check() : eng.dominant(parse_qvec(chi));
        CAPTURE(cartan);
        CAPTURE(chi);
        REQUIRE(eng.is_middle_element(x));
        const Family& f = eng.family(eng.full_context(x));
        for (const auto& c : family_checks(f)) {
            CAPTURE(c.name);
            CHECK(c.ok);
        }
        all_ok(testing::family_properties(f));
    }
}

TEST_CASE("property suite detects a corrupted multiplicity") {
    Engine eng("C3");
    const Family& f = eng.family(eng.full_context(parse_qvec("3,1,1")));
    REQUIRE(all_ok(testing::family_properties(f)));
    Family bad = f;
    size_t j = 3;
    REQUIRE(j < bad.minus.primed());
    bad.minus.coeff[j][0] += RationalFunction::v();
    CHECK(any_failure(testing::family_properties(bad), "mu_xi"));
    Family swapped = f;
    std::swap(swapped.plus.z[0].vec, swapped.plus.z[1].vec);
    CHECK(any_failure(testing::family_properties(swapped), ""));
}

TEST_CASE("KL conversion and IM on sp(4)") {
    Engine eng("C2");
    const Family& f = eng.family(eng.full_context(parse_qvec("1,1")));
    KLMatrix kl = kl_matrix(f);
    // The zero orbit to the open orbit with the sign character carries q.
    CHECK(poly_q_str(kl.p[0][3]) == "q");
    CHECK(kl.p[2][3].is_zero());
    auto im = im_involution(f);
    for (size_t i = 0; i < im.size(); ++i) CHECK(im[im[i]] == static_cast<int>(i));
    CHECK(im[2] == 0);
}

TEST_CASE("central base case normalization") {
    Engine eng("B2");
    const GradedContext& ctx = eng.full_context(QVec(2, mpq_class(0)));
    RationalFunction lambda = central_normalization(ctx);
    // v^4 / (1 + v^2)^2 (1 + v^4)
    RationalFunction one = 1, v2 = RationalFunction::monomial(1, 2), v4 = RationalFunction::monomial(1, 4);
    CHECK(lambda == v4 / ((one + v2) * (one + v2) * (one + v4)));
    CHECK(lambda.bar() == lambda);
    const Family& f = eng.family(ctx);
    REQUIRE(f.size() == 1);
    CHECK(ctx.pair(f.minus.z[0].vec, f.minus.z[0].vec) == lambda * lambda * ctx.gram_entry(0, 0).to_rf());
}
