#include "hecke/bases.hpp"
#include "hecke/fixtures.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <chrono>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>

using namespace hecke;
using nlohmann::json;

namespace {

struct Job {
    std::string command, cartan, chi = "2rho", e = "one", format = "text", path;
    unsigned long seed = 1;
    double budget = 0;
};

// Exit codes: 1 failed check or mismatch, 2 bad input, 3 chi not a middle element.
struct Failure : std::runtime_error {
    int code;
    Failure(int c, const std::string& m) : std::runtime_error(m), code(c) {}
};

std::string csv_cell(const std::string& s) {
    if (s.find_first_of(",\"") == std::string::npos) return s;
    std::string out = "\"";
    for (char c : s) out += c == '"' ? std::string("\"\"") : std::string(1, c);
    return out + "\"";
}

void print_table(std::ostream& os, const std::string& format, const std::vector<std::string>& head,
                 const std::vector<std::vector<std::string>>& rows) {
    if (format == "csv") {
        auto line = [&](const std::vector<std::string>& r) {
            for (size_t i = 0; i < r.size(); ++i) os << (i ? "," : "") << csv_cell(r[i]);
            os << "\n";
        };
        line(head);
        for (const auto& r : rows) line(r);
        return;
    }
    std::vector<size_t> w(head.size(), 0);
    for (size_t i = 0; i < head.size(); ++i) w[i] = head[i].size();
    for (const auto& r : rows)
        for (size_t i = 0; i < r.size(); ++i) w[i] = std::max(w[i], r[i].size());
    auto line = [&](const std::vector<std::string>& r) {
        for (size_t i = 0; i < r.size(); ++i) {
            os << (i ? "  " : "") << std::left << std::setw(static_cast<int>(w[i])) << r[i];
        }
        os << "\n";
    };
    line(head);
    for (const auto& r : rows) line(r);
}

std::string kv_string(const GradedContext& ctx, const KVector& x) {
    if (x.empty()) return "0";
    std::string s;
    for (const auto& [c, f] : x) {
        std::string coef = f.to_string();
        bool neg = !coef.empty() && coef[0] == '-' && coef.find_first_of("+-", 1) == std::string::npos;
        if (!s.empty()) s += neg ? " - " : " + ";
        else if (neg) s += "-";
        std::string mag = neg ? coef.substr(1) : coef;
        if (mag != "1") s += mag.find_first_of("+-/") == std::string::npos ? mag : "(" + mag + ")";
        s += coset_label_str(ctx, static_cast<size_t>(c));
    }
    return s;
}

QVec chi_or_fail(Engine& eng, const Job& job) {
    QVec chi;
    try {
        chi = resolve_chi(eng, job.chi);
    } catch (const std::exception& e) {
        throw Failure(2, e.what());
    }
    if (eng.is_middle_element(chi)) return chi;
    const RootSystem& rs = eng.roots();
    std::string witness;
    for (int k = 0; k < rs.rank(); ++k) {
        mpq_class p = rs.pair(rs.simple()[k], chi);
        if (p != 0 && p != 1 && p != 2) {
            witness = "<alpha_" + std::to_string(k + 1) + ", chi> = " + p.get_str() + " is not in {0,1,2}";
            break;
        }
    }
    if (witness.empty()) {
        Subsystem full = Subsystem::full(rs);
        size_t g0 = graded_piece(full, chi, 0).size() + static_cast<size_t>(rs.rank());
        size_t g2 = graded_piece(full, chi, 2).size();
        witness = "no e in g_2 (dim " + std::to_string(g2) + ") completes a Lie triple with middle element chi; " +
                  "ad(e): g_0 (dim " + std::to_string(g0) + ") -> g_2 is never onto for the sampled e";
    }
    throw Failure(3, "chi = (" + qvec_str(chi) + ") is not a middle element of " + rs.label() + ": " + witness);
}

int cmd_wdd(Engine& eng, const Job& job) {
    const RootSystem& rs = eng.roots();
    const auto& list = eng.wdd().get(Subsystem::full(rs));
    json arr = json::array();
    std::vector<std::vector<std::string>> rows;
    for (const auto& d : list) {
        std::string lab;
        for (int x : d.labels) lab += std::to_string(x);
        std::string name = saturation_name(rs, d.h);
        arr.push_back({{"diagram", lab}, {"h", qvec_str(d.h)}, {"orbit", name}});
        rows.push_back({lab, qvec_str(d.h), name});
    }
    if (job.format == "json")
        std::cout << json{{"cartan", rs.label()}, {"diagrams", arr}}.dump(1) << "\n";
    else
        print_table(std::cout, job.format, {"diagram", "h", "orbit"}, rows);
    return 0;
}

int cmd_form(Engine& eng, const Job& job) {
    QVec chi = chi_or_fail(eng, job);
    const GradedContext& ctx = eng.full_context(chi);
    EMode mode = job.e == "lusztig" ? EMode::Lusztig : EMode::One;
    RF e = ctx.e_factor(mode);
    size_t n = ctx.size();
    std::vector<std::string> labels;
    for (size_t i = 0; i < n; ++i) labels.push_back(ctx.word(i));
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < n; ++i) {
        std::vector<std::string> r{labels[i]};
        for (size_t j = 0; j < n; ++j) r.push_back((e * ctx.gram_entry(i, j).to_rf()).to_string());
        rows.push_back(r);
    }
    if (job.format == "json") {
        json cos = json::array(), tab = json::array();
        for (size_t i = 0; i < n; ++i) cos.push_back({{"word", labels[i]}, {"label", coset_label_str(ctx, i)}});
        for (const auto& r : rows) tab.push_back(std::vector<std::string>(r.begin() + 1, r.end()));
        std::cout << json{{"cartan", eng.roots().label()}, {"chi", qvec_str(ctx.chi())}, {"e", job.e},
                          {"cosets", cos}, {"form", tab}, {"radical_dim", n - ctx.irr_count()}}
                         .dump(1)
                  << "\n";
        return 0;
    }
    std::vector<std::string> head{""};
    head.insert(head.end(), labels.begin(), labels.end());
    print_table(std::cout, job.format, head, rows);
    if (job.format == "text") std::cout << "radical dimension " << n - ctx.irr_count() << "\n";
    return 0;
}

json orbit_json(const OrbitParam& o) {
    return {{"label", o.label},          {"dim", o.dim},
            {"s", qvec_str(o.s)},        {"levi", o.levi_type},
            {"saturation", o.saturation}, {"components", o.component_group}};
}

int cmd_orbits(Engine& eng, const Job& job) {
    QVec chi = chi_or_fail(eng, job);
    const Family& f = eng.family(eng.full_context(chi));
    if (job.format == "json") {
        json arr = json::array();
        for (const auto& o : f.orbits) arr.push_back(orbit_json(o));
        std::cout << json{{"cartan", eng.roots().label()}, {"chi", qvec_str(chi)}, {"orbits", arr}}.dump(1) << "\n";
        return 0;
    }
    std::vector<std::vector<std::string>> rows;
    for (size_t k = 0; k < f.orbits.size(); ++k) {
        const auto& o = f.orbits[k];
        rows.push_back({o.label, std::to_string(o.dim), "(" + qvec_str(o.s) + ")", o.levi_type, o.saturation,
                        o.component_group, std::to_string(f.block[k])});
    }
    print_table(std::cout, job.format, {"orbit", "dim", "s", "levi", "saturation", "components", "local systems"},
                rows);
    return 0;
}

struct Computed {
    const Family* f;
    std::vector<std::vector<RationalFunction>> n;
    KLMatrix kl;
    std::vector<int> im;
};

Computed compute(Engine& eng, const Job& job, bool want_kl) {
    QVec chi = chi_or_fail(eng, job);
    Computed c;
    c.f = &eng.family(eng.full_context(chi));
    for (const auto& ch : family_checks(*c.f))
        if (!ch.ok) throw Failure(1, "check failed: " + ch.name + " " + ch.detail);
    if (want_kl) {
        c.n = multiplicity_matrix(*c.f);
        c.kl = kl_matrix(*c.f);
        c.im = im_involution(*c.f);
    }
    return c;
}

json parameters_json(const Family& f) {
    json arr = json::array();
    for (size_t i = 0; i < f.size(); ++i) {
        const OrbitParam& o = f.orbits[f.minus.z[i].orbit];
        arr.push_back({{"label", f.element_label(i)},
                       {"orbit", o.label},
                       {"local", f.minus.z[i].local},
                       {"dim", o.dim},
                       {"s", qvec_str(o.s)}});
    }
    return arr;
}

json bases_json(const Family& f) {
    json arr = json::array();
    for (size_t i = 0; i < f.size(); ++i)
        arr.push_back({{"label", f.element_label(i)},
                       {"Z-", kv_string(*f.ctx, f.minus.z[i].vec)},
                       {"U-", kv_string(*f.ctx, f.minus.u[i].vec)},
                       {"Z+", kv_string(*f.ctx, f.plus.z[i].vec)},
                       {"U+", kv_string(*f.ctx, f.plus.u[i].vec)}});
    return arr;
}

json matrices_json(const Computed& c) {
    const Family& f = *c.f;
    json nj = json::array(), pj = json::array(), im = json::object();
    for (size_t i = 0; i < f.size(); ++i) {
        json nr = json::array(), pr = json::array();
        for (size_t j = 0; j < f.size(); ++j) {
            nr.push_back(c.n[i][j].to_string());
            pr.push_back(poly_q_str(c.kl.p[i][j]));
        }
        nj.push_back(nr);
        pj.push_back(pr);
        if (c.im[i] >= 0) im[f.element_label(i)] = f.element_label(c.im[i]);
    }
    return {{"N", nj}, {"P", pj}, {"epsilon", c.kl.epsilon}, {"IM", im}};
}

std::vector<std::string> element_labels(const Family& f) {
    std::vector<std::string> out;
    for (size_t i = 0; i < f.size(); ++i) out.push_back(f.element_label(i));
    return out;
}

void print_matrix(const Family& f, const std::string& format, const std::vector<std::vector<std::string>>& cells) {
    std::vector<std::string> head{""};
    auto labels = element_labels(f);
    head.insert(head.end(), labels.begin(), labels.end());
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < f.size(); ++i) {
        std::vector<std::string> r{labels[i]};
        r.insert(r.end(), cells[i].begin(), cells[i].end());
        rows.push_back(r);
    }
    print_table(std::cout, format, head, rows);
}

// Closure diagram read off the polynomials: an edge O' -> O when some P entry
// between their local systems is nonzero and dim O' < dim O, transitively reduced.
void print_dot(const Computed& c) {
    const Family& f = *c.f;
    size_t m = f.orbits.size();
    std::vector<std::vector<bool>> reach(m, std::vector<bool>(m, false));
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < f.size(); ++j) {
            int a = f.minus.z[i].orbit, b = f.minus.z[j].orbit;
            if (!c.kl.p[i][j].is_zero() && f.orbits[a].dim < f.orbits[b].dim) reach[a][b] = true;
        }
    for (size_t k = 0; k < m; ++k)
        for (size_t i = 0; i < m; ++i)
            for (size_t j = 0; j < m; ++j)
                if (reach[i][k] && reach[k][j]) reach[i][j] = true;
    std::cout << "digraph closure {\n  label=\"heuristic closure diagram (from nonzero polynomials)\";\n";
    for (const auto& o : f.orbits) std::cout << "  \"" << o.label << "\";\n";
    for (size_t i = 0; i < m; ++i)
        for (size_t j = 0; j < m; ++j) {
            if (!reach[i][j]) continue;
            bool direct = true;
            for (size_t k = 0; k < m && direct; ++k)
                if (reach[i][k] && reach[k][j]) direct = false;
            if (direct) std::cout << "  \"" << f.orbits[i].label << "\" -> \"" << f.orbits[j].label << "\";\n";
        }
    std::cout << "}\n";
}

int cmd_bases(Engine& eng, const Job& job) {
    Computed c = compute(eng, job, false);
    const Family& f = *c.f;
    if (job.format == "json") {
        std::cout << json{{"parameters", parameters_json(f)}, {"bases", bases_json(f)}}.dump(1) << "\n";
        return 0;
    }
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < f.size(); ++i)
        rows.push_back({f.element_label(i), kv_string(*f.ctx, f.minus.z[i].vec), kv_string(*f.ctx, f.minus.u[i].vec),
                        kv_string(*f.ctx, f.plus.z[i].vec), kv_string(*f.ctx, f.plus.u[i].vec)});
    print_table(std::cout, job.format, {"element", "Z-", "U-", "Z+", "U+"}, rows);
    return 0;
}

int cmd_kl(Engine& eng, const Job& job, bool all) {
    Computed c = compute(eng, job, true);
    const Family& f = *c.f;
    if (job.format == "dot") {
        print_dot(c);
        return 0;
    }
    if (job.format == "json") {
        json out{{"cartan", eng.roots().label()}, {"chi", qvec_str(f.ctx->chi())}, {"parameters", parameters_json(f)}};
        out.update(matrices_json(c));
        if (all) {
            json orbs = json::array();
            for (const auto& o : f.orbits) orbs.push_back(orbit_json(o));
            out["orbits"] = orbs;
            out["bases"] = bases_json(f);
        }
        std::cout << out.dump(1) << "\n";
        return 0;
    }
    std::vector<std::vector<std::string>> p(f.size()), n(f.size());
    for (size_t i = 0; i < f.size(); ++i)
        for (size_t j = 0; j < f.size(); ++j) {
            p[i].push_back(poly_q_str(c.kl.p[i][j]));
            n[i].push_back(c.n[i][j].to_string());
        }
    if (all) {
        cmd_orbits(eng, job);
        std::cout << "\n";
        cmd_bases(eng, job);
        std::cout << "\nchange of basis Z- -> U-\n";
        print_matrix(f, job.format, n);
        std::cout << "\n";
    }
    print_matrix(f, job.format, p);
    if (job.format == "text") {
        std::cout << "epsilon";
        for (int e : c.kl.epsilon) std::cout << " " << (e > 0 ? "+" : "-");
        std::cout << "\n";
    }
    if (all) {
        std::cout << "\n";
        for (size_t i = 0; i < f.size(); ++i)
            if (c.im[i] >= 0) std::cout << "IM(" << f.element_label(i) << ") = " << f.element_label(c.im[i]) << "\n";
    }
    return 0;
}

int cmd_im(Engine& eng, const Job& job) {
    Computed c = compute(eng, job, true);
    const Family& f = *c.f;
    if (job.format == "json") {
        std::cout << matrices_json(c)["IM"].dump(1) << "\n";
        return 0;
    }
    std::vector<std::vector<std::string>> rows;
    for (size_t i = 0; i < f.size(); ++i)
        if (c.im[i] >= 0) rows.push_back({f.element_label(i), f.element_label(c.im[i])});
    print_table(std::cout, job.format, {"element", "IM"}, rows);
    return 0;
}

int cmd_fixtures(const Job& job) {
    std::string dir = job.path.empty() ? default_fixture_dir() : job.path;
    std::vector<json> corpus;
    try {
        corpus = load_fixtures(dir);
    } catch (const std::exception& e) {
        throw Failure(2, e.what());
    }
    size_t bad = 0, cells = 0, miss = 0;
    json report = json::array();
    for (const auto& fx : corpus) {
        FixtureResult r = run_fixture(fx);
        cells += r.cells;
        miss += r.mismatches.size();
        if (!r.ok()) ++bad;
        if (job.format == "json") {
            json m = json::array();
            for (const auto& c : r.mismatches) m.push_back({{"cell", c.cell}, {"expected", c.expected}, {"actual", c.actual}});
            report.push_back({{"id", r.id}, {"cells", r.cells}, {"mismatches", m}, {"notes", r.notes}, {"error", r.error}});
            continue;
        }
        std::cout << (r.ok() ? "ok   " : "FAIL ") << r.id << "  cells=" << r.cells
                  << " mismatches=" << r.mismatches.size() << "\n";
        if (!r.error.empty()) std::cout << "     error: " << r.error << "\n";
        for (const auto& note : r.notes) std::cout << "     note: " << note << "\n";
        for (const auto& c : r.mismatches)
            std::cout << "     " << c.cell << ": expected " << c.expected << ", got " << c.actual << "\n";
    }
    if (job.format == "json")
        std::cout << report.dump(1) << "\n";
    else
        std::cout << corpus.size() << " fixtures, " << cells << " cells, " << miss << " mismatches, " << bad
                  << " failing\n";
    return bad ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Multiplicity matrices, polynomials and the IM involution for graded Hecke algebras"};
    app.require_subcommand(1);
    Job job;
    auto add_common = [&](CLI::App* sub, bool needs_chi) {
        sub->add_option("cartan", job.cartan, "Cartan type, e.g. F4, C3, A1xA1")->required();
        if (needs_chi) {
            sub->add_option("--chi", job.chi, "central character: vector, 2rho, 0, or an orbit name such as F4(a3)");
            sub->add_option("--e", job.e, "normalization of the form")->check(CLI::IsMember({"lusztig", "one"}));
        }
        sub->add_option("--format", job.format, "output format")->check(CLI::IsMember({"text", "json", "csv", "dot"}));
        sub->add_option("--seed", job.seed, "seed of the randomized middle-element test");
        sub->add_option("--time-budget", job.budget, "fail if the run exceeds this many seconds");
    };
    const std::pair<const char*, const char*> commands[] = {
        {"wdd", "weighted Dynkin diagrams of the full system"},
        {"orbits", "orbit parameters at chi"},
        {"form", "Gram matrix of K(chi) and its radical"},
        {"bases", "Z and U bases of both signs with the change of basis"},
        {"kl", "polynomial matrix P and signs"},
        {"im", "Iwahori-Matsumoto involution"},
        {"all", "everything above for one character"}};
    for (auto [name, help] : commands) {
        auto* sub = app.add_subcommand(name, help);
        add_common(sub, std::string(name) != "wdd");
        sub->callback([&job, name] { job.command = name; });
    }
    auto* fx = app.add_subcommand("fixtures", "run the bundled fixture corpus");
    fx->add_option("path", job.path, "corpus directory (default: $HECKE_FIXTURES or the bundled corpus)");
    fx->add_option("--format", job.format)->check(CLI::IsMember({"text", "json"}));
    fx->callback([&job] { job.command = "fixtures"; });
    CLI11_PARSE(app, argc, argv);

    auto t0 = std::chrono::steady_clock::now();
    int rc = 0;
    try {
        if (job.command == "fixtures") {
            rc = cmd_fixtures(job);
        } else {
            std::unique_ptr<Engine> eng;
            try {
                eng = std::make_unique<Engine>(job.cartan, MiddleElementOptions{job.seed, 5});
            } catch (const std::exception& e) {
                throw Failure(2, e.what());
            }
            if (job.command == "wdd")
                rc = cmd_wdd(*eng, job);
            else if (job.command == "orbits")
                rc = cmd_orbits(*eng, job);
            else if (job.command == "form")
                rc = cmd_form(*eng, job);
            else if (job.command == "bases")
                rc = cmd_bases(*eng, job);
            else if (job.command == "kl")
                rc = cmd_kl(*eng, job, false);
            else if (job.command == "all")
                rc = cmd_kl(*eng, job, true);
            else if (job.command == "im")
                rc = cmd_im(*eng, job);
        }
    } catch (const Failure& f) {
        std::cerr << "error: " << f.what() << "\n";
        return f.code;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 1;
    }
    double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (job.budget > 0 && secs > job.budget) {
        std::cerr << "error: time budget of " << job.budget << " s exceeded (" << secs << " s)\n";
        return 1;
    }
    return rc;
}
