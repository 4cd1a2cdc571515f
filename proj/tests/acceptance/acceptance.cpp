// One PASS/FAIL line per acceptance criterion. Exit status 1 if any fails.

#include "hecke/fixtures.hpp"
#include "../support/oracles.hpp"
#include "../support/properties.hpp"

#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <set>
#include <sstream>

using namespace hecke;
using Clock = std::chrono::steady_clock;

namespace {

struct Outcome {
    bool ok = true;
    std::string detail;
};

class Corpus {
public:
    Corpus() {
        for (auto& fx : load_fixtures(default_fixture_dir())) by_id_[fx["id"].get<std::string>()] = fx;
    }
    const std::map<std::string, nlohmann::json>& all() const { return by_id_; }

    // Runs the listed fixtures once each; results are cached.
    const FixtureResult& run(const std::string& id) {
        auto hit = results_.find(id);
        if (hit != results_.end()) return hit->second;
        FixtureResult r;
        auto it = by_id_.find(id);
        if (it == by_id_.end()) {
            r.id = id;
            r.error = "fixture missing from the corpus";
        } else {
            r = run_fixture(it->second);
        }
        return results_.emplace(id, std::move(r)).first->second;
    }

    Outcome run_all(const std::vector<std::string>& ids, double* seconds = nullptr) {
        Outcome o;
        size_t cells = 0;
        double total = 0;
        std::ostringstream bad;
        for (const auto& id : ids) {
            const FixtureResult& r = run(id);
            cells += r.cells;
            total += r.seconds;
            if (!r.ok()) {
                o.ok = false;
                bad << ' ' << id;
                if (!r.error.empty()) bad << " [" << r.error << "]";
                for (size_t k = 0; k < r.mismatches.size() && k < 3; ++k)
                    bad << " [" << r.mismatches[k].cell << ": expected " << r.mismatches[k].expected << ", got "
                        << r.mismatches[k].actual << "]";
            }
        }
        std::ostringstream d;
        d << ids.size() << " fixtures, " << cells << " cells";
        if (!o.ok) d << ", failing:" << bad.str();
        o.detail = d.str();
        if (seconds) *seconds = total;
        return o;
    }

private:
    std::map<std::string, nlohmann::json> by_id_;
    std::map<std::string, FixtureResult> results_;
};

std::string secs(double s) {
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.2f s", s);
    return buf;
}

Engine& engine(const std::string& cartan) {
    static std::map<std::string, std::unique_ptr<Engine>> engines;
    auto& e = engines[cartan];
    if (!e) e = std::make_unique<Engine>(cartan);
    return *e;
}

Outcome criterion1(Corpus& c) {
    double t = 0;
    Outcome o = c.run_all({"form_a2", "form_c2"}, &t);
    Engine& a2 = engine("A2");
    size_t ra = a2.full_context(a2.roots().two_rho_check()).radical().size();
    Engine& c2 = engine("C2");
    size_t rc = c2.full_context(parse_qvec("1,1")).radical().size();
    if (ra != 2 || rc != 0) o.ok = false;
    if (t >= 1.0) o.ok = false;
    o.detail += "; radical dims " + std::to_string(ra) + " and " + std::to_string(rc) + "; " + secs(t);
    return o;
}

Outcome criterion2(Corpus& c) {
    Outcome o = c.run_all({"regular_A3", "regular_B3", "regular_C3", "regular_G2", "regular_F4"});
    double f4 = c.run("regular_F4").seconds;
    if (f4 >= 120) o.ok = false;
    o.detail += "; F4 " + secs(f4);
    return o;
}

Outcome criterion5(Corpus& c) {
    Outcome o = c.run_all({"sp6"});
    if (!c.all().at("sp6").value("z_plus_w0", false)) {
        o.ok = false;
        o.detail += "; fixture does not request the Z_+ = Z_- w0 check";
    }
    return o;
}

Outcome criterion6(Corpus& c) {
    Outcome o = c.run_all({"g2_0", "g2_A1", "g2_tA1", "g2_a1", "regular_G2"});
    Engine& g2 = engine("G2");
    const Family& f = g2.family(g2.full_context(resolve_chi(g2, "G2(a1)")));
    int open_block = f.block[f.open];
    if (f.size() != 5 || open_block != 2) o.ok = false;
    o.detail += "; G2(a1): " + std::to_string(f.size()) + " elements, open block " + std::to_string(open_block);
    return o;
}

Outcome criterion7(Corpus& c) {
    std::vector<std::string> ids;
    for (const auto& [id, fx] : c.all())
        if (id.rfind("f4_", 0) == 0) ids.push_back(id);
    ids.push_back("regular_F4");
    double total = 0;
    Outcome o = c.run_all(ids, &total);
    Engine& f4 = engine("F4");
    std::set<QVec, QVecLess> seen, expected;
    for (const auto& id : ids) seen.insert(resolve_chi(f4, c.all().at(id)["chi"].get<std::string>()));
    for (const auto& d : f4.wdd().get(Subsystem::full(f4.roots()))) expected.insert(d.h);
    if (seen != expected) {
        o.ok = false;
        o.detail += "; the fixtures do not cover the 16 diagrams";
    }
    std::ostringstream sizes;
    for (auto [id, n] : std::vector<std::pair<std::string, size_t>>{
             {"f4_3_1_1_1", 19}, {"f4_7_3_1_1", 20}, {"f4_5_3_1_1", 18}}) {
        size_t got = c.all().at(id)["elements"].size();
        const Family& f = f4.family(f4.full_context(resolve_chi(f4, c.all().at(id)["chi"].get<std::string>())));
        if (got != n || f.size() != n) o.ok = false;
        sizes << ' ' << id << '=' << f.size();
    }
    double t3111 = c.run("f4_3_1_1_1").seconds;
    if (t3111 >= 600 || total >= 1800) o.ok = false;
    o.detail += "; " + std::to_string(seen.size()) + " characters; sizes" + sizes.str() + "; (3,1,1,1) " + secs(t3111) +
                ", total " + secs(total);
    return o;
}

Outcome criterion8(Corpus& c) {
    std::vector<testing::Subject> subjects;
    std::set<std::pair<std::string, std::string>> seen;
    for (const auto& [id, fx] : c.all()) {
        std::string cartan = fx["cartan"].get<std::string>();
        QVec chi = resolve_chi(engine(cartan), fx.value("chi", std::string("2rho")));
        if (seen.insert({cartan, qvec_str(chi)}).second) subjects.push_back({cartan, chi, "fixture " + id});
    }
    const unsigned seed = 20261014;
    for (auto& s : testing::random_subjects(seed, 24)) subjects.push_back(s);

    Outcome o;
    std::mt19937 rng(seed);
    std::set<std::string> lie_done;
    size_t checks = 0, families = 0;
    std::ostringstream bad;
    auto absorb = [&](const std::vector<testing::Property>& ps, const std::string& who) {
        for (const auto& p : ps) {
            ++checks;
            if (!p.ok) {
                o.ok = false;
                bad << " [" << who << ": " << p.name << (p.detail.empty() ? "" : " " + p.detail) << "]";
            }
        }
    };
    for (const auto& s : subjects) {
        try {
            Engine& eng = engine(s.cartan);
            if (lie_done.insert(s.cartan).second) absorb(testing::lie_properties(eng.chevalley(), rng), s.cartan);
            QVec chi = eng.dominant(s.chi);
            if (!eng.is_middle_element(s.chi)) {
                o.ok = false;
                bad << " [" << s.origin << ": not recognized as a middle element]";
                continue;
            }
            const GradedContext& ctx = eng.full_context(chi);
            absorb(testing::context_properties(ctx, rng), s.origin);
            absorb(testing::family_properties(eng.family(ctx)), s.origin);
            ++families;
        } catch (const std::exception& e) {
            o.ok = false;
            bad << " [" << s.origin << ": " << e.what() << "]";
        }
    }
    o.detail = std::to_string(subjects.size()) + " characters (" + std::to_string(families) + " families), " +
               std::to_string(checks) + " property groups, seed " + std::to_string(seed);
    if (!o.ok) o.detail += "; failing:" + bad.str();
    return o;
}

Outcome criterion9() {
    Outcome o;
    std::ostringstream bad;
    for (const auto& m : testing::a1_hand_pipeline_mismatches()) {
        o.ok = false;
        bad << " [A1: " << m << "]";
    }
    size_t subsystems = 0;
    for (const char* label : {"A1", "A2", "A3", "B2", "B3", "C2", "C3", "G2", "F4"}) {
        Engine& eng = engine(label);
        Subsystem full = Subsystem::full(eng.roots());
        int r = full.rank();
        for (int mask = 1; mask < (1 << r); ++mask) {
            std::vector<int> which;
            for (int i = 0; i < r; ++i)
                if (mask & (1 << i)) which.push_back(i);
            Subsystem levi = full.standard_levi(which);
            if (levi.rank() > 3 || testing::classical_type(levi).empty()) continue;
            ++subsystems;
            for (const auto& m : testing::wdd_partition_mismatches(eng.chevalley(), levi)) {
                o.ok = false;
                bad << " [" << label << " Levi " << mask << ": " << m << "]";
            }
        }
    }
    o.detail = "A1 hand pipeline at 2rho and 0; partition oracle on " + std::to_string(subsystems) + " subsystems";
    if (!o.ok) o.detail += "; failing:" + bad.str();
    return o;
}

}  // namespace

int main() {
    int failed = 0;
    std::unique_ptr<Corpus> corpus;
    try {
        corpus = std::make_unique<Corpus>();
    } catch (const std::exception& e) {
        std::cout << "corpus: " << e.what() << "\n";
    }
    auto report = [&](int n, const std::string& title, const std::function<Outcome()>& f) {
        auto t0 = Clock::now();
        Outcome o;
        try {
            if (!corpus && n <= 8) throw std::runtime_error("no fixture corpus");
            o = f();
        } catch (const std::exception& e) {
            o.ok = false;
            o.detail = e.what();
        }
        double s = std::chrono::duration<double>(Clock::now() - t0).count();
        if (!o.ok) ++failed;
        std::cout << (o.ok ? "PASS" : "FAIL") << " criterion " << n << ": " << title << " (" << o.detail << "; wall "
                  << secs(s) << ")" << std::endl;
    };
    report(1, "bilinear form tables A2 and C2", [&] { return criterion1(*corpus); });
    report(2, "regular case closed form", [&] { return criterion2(*corpus); });
    report(3, "gl(4) at (2,0,0,-2)", [&] { return corpus->run_all({"gl4"}); });
    report(4, "sp(4) at (1,1)", [&] { return corpus->run_all({"sp4"}); });
    report(5, "sp(6) at (3,1,1)", [&] { return criterion5(*corpus); });
    report(6, "G2, all five characters", [&] { return criterion6(*corpus); });
    report(7, "F4, all sixteen characters", [&] { return criterion7(*corpus); });
    report(8, "property suites", [&] { return criterion8(*corpus); });
    report(9, "oracles", [] { return criterion9(); });
    return failed == 0 ? 0 : 1;
}
