#include "doctest.h"
#include "hecke/fixtures.hpp"

#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <random>

using namespace hecke;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

struct TempDir {
    fs::path path;
    TempDir() {
        std::random_device rd;
        path = fs::temp_directory_path() / ("hecke_fixtures_" + std::to_string(rd()));
        fs::create_directories(path);
    }
    ~TempDir() { fs::remove_all(path); }
};

json fixture(const std::string& id) {
    for (auto& fx : load_fixtures(default_fixture_dir()))
        if (fx["id"] == id) return fx;
    FAIL("missing fixture " << id);
    return {};
}

void write(const fs::path& p, const json& j) { std::ofstream(p) << j.dump(1); }

}  // namespace

TEST_CASE("corpus loads sorted by id") {
    auto all = load_fixtures(default_fixture_dir());
    CHECK(all.size() == 29);
    for (size_t i = 1; i < all.size(); ++i) CHECK(all[i - 1]["id"].get<std::string>() < all[i]["id"].get<std::string>());
}

TEST_CASE("missing, empty and corrupt corpora are errors") {
    TempDir t;
    CHECK_THROWS_AS(load_fixtures((t.path / "absent").string()), std::runtime_error);
    CHECK_THROWS_AS(load_fixtures(t.path.string()), std::runtime_error);
    std::ofstream(t.path / "bad.json") << "{ not json";
    CHECK_THROWS_AS(load_fixtures(t.path.string()), std::runtime_error);
    fs::remove(t.path / "bad.json");
    write(t.path / "no_kind.json", json{{"id", "x"}});
    CHECK_THROWS_AS(load_fixtures(t.path.string()), std::runtime_error);
}

TEST_CASE("HECKE_FIXTURES overrides the corpus path") {
    TempDir t;
    write(t.path / "sp4.json", fixture("sp4"));
    setenv("HECKE_FIXTURES", t.path.string().c_str(), 1);
    auto all = load_fixtures(default_fixture_dir());
    unsetenv("HECKE_FIXTURES");
    REQUIRE(all.size() == 1);
    CHECK(all[0]["id"] == "sp4");
}

TEST_CASE("a perturbed KL cell is the only reported mismatch") {
    TempDir t;
    json fx = fixture("sp4");
    REQUIRE(run_fixture(fx).ok());
    fx["kl"][0][3] = "q^2";
    write(t.path / "sp4.json", fx);
    FixtureResult r = run_fixture(load_fixtures(t.path.string())[0]);
    REQUIRE(r.mismatches.size() == 1);
    CHECK(r.mismatches[0].cell.rfind("kl[0][3", 0) == 0);
    CHECK(r.mismatches[0].expected == "q^2");
    CHECK(r.mismatches[0].actual == "q");
}

TEST_CASE("a perturbed basis row and N cell are each reported") {
    json fx = fixture("gl4");
    fx["z_minus"][1][0][0] = "2";
    FixtureResult r = run_fixture(fx);
    REQUIRE(r.mismatches.size() == 1);
    CHECK(r.mismatches[0].cell == "Z-[2a]");

    json g = fixture("gl4");
    g["N"][0][1] = "-v^3";
    r = run_fixture(g);
    REQUIRE(r.mismatches.size() == 1);
    CHECK(r.mismatches[0].cell == "N[0][2a]");
}

TEST_CASE("printed errata are honored only when declared") {
    json fx = fixture("sp6");
    CHECK(run_fixture(fx).ok());
    CHECK(run_fixture(fx).notes.size() == 2);
    fx.erase("errata");
    FixtureResult r = run_fixture(fx);
    CHECK(r.mismatches.size() == 2);
    CHECK(r.notes.empty());

    json g = fixture("sp4");
    g["errata"] = json::array({"kl[0][2]"});
    r = run_fixture(g);
    REQUIRE(r.mismatches.size() == 1);
    CHECK(r.mismatches[0].cell == "errata kl[0][2]");
}

TEST_CASE("an invalid orbit parameter is reported") {
    json fx = fixture("f4_3_1_1_1");
    REQUIRE(run_fixture(fx).ok());
    fx["orbits"][1]["s"] = "1,1,1,1";
    FixtureResult r = run_fixture(fx);
    CHECK_FALSE(r.ok());
    CHECK(r.mismatches[0].cell.find(".s") != std::string::npos);
}

TEST_CASE("unknown kinds and non-middle characters are errors, not mismatches") {
    json fx = fixture("sp4");
    fx["kind"] = "table";
    CHECK(run_fixture(fx).error.find("unknown fixture kind") != std::string::npos);
    json g = fixture("g2_0");
    g["chi"] = "2,-1,-1";
    CHECK(run_fixture(g).error == "chi is not a middle element");
}

TEST_CASE("chi and coset resolution") {
    Engine g2("G2");
    CHECK(resolve_chi(g2, "0") == QVec(3, mpq_class(0)));
    CHECK(resolve_chi(g2, "2rho") == g2.roots().two_rho_check());
    CHECK(resolve_chi(g2, "G2") == g2.roots().two_rho_check());
    CHECK_THROWS_AS(resolve_chi(g2, "E8"), std::invalid_argument);
    Engine c2("C2");
    QVec chi = resolve_chi(c2, "-1,1");
    CHECK(chi == parse_qvec("1,1"));
    const GradedContext& ctx = c2.full_context(chi);
    CHECK(resolve_coset(ctx, "1") == ctx.find(chi));
    CHECK(resolve_coset(ctx, "w0") == ctx.find(parse_qvec("-1,-1")));
    CHECK(resolve_coset(ctx, "s9") == -1);
}
