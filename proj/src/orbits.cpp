#include "hecke/orbits.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace hecke {

namespace {

std::string key_of(const RootSet& s) { return s.to_string(); }

struct NamedChi {
    const char* chi;
    const char* name;
};

const NamedChi kF4Names[] = {
    {"0,0,0,0", "0"},           {"1,0,0,0", "A1"},           {"1,1,0,0", "~A1"},
    {"3/2,1/2,1/2,1/2", "A1+~A1"}, {"2,0,0,0", "A2"},        {"2,2,0,0", "~A2"},
    {"2,1,1,0", "A2+~A1"},      {"3,1,0,0", "B2"},           {"5/2,3/2,1/2,1/2", "~A2+A1"},
    {"3,1,1,0", "C3(a1)"},      {"3,1,1,1", "F4(a3)"},       {"5,1,1,1", "B3"},
    {"5,3,1,0", "C3"},          {"5,3,1,1", "F4(a2)"},       {"7,3,1,1", "F4(a1)"},
    {"11,5,3,1", "F4"},
};

struct NamedDiagram {
    int a1, a2;
    const char* name;
};

const NamedDiagram kG2Names[] = {{0, 0, "0"}, {0, 1, "A1"}, {1, 0, "~A1"}, {0, 2, "G2(a1)"}, {2, 2, "G2"}};

std::string partition_name(std::vector<mpq_class> eig) {
    std::sort(eig.begin(), eig.end());
    std::vector<int> parts;
    while (!eig.empty()) {
        mpq_class m = eig.back();
        if (m.get_den() != 1 || m < 0) return "";
        long k = m.get_num().get_si();
        for (long j = -k; j <= k; j += 2) {
            auto it = std::find(eig.begin(), eig.end(), mpq_class(j));
            if (it == eig.end()) return "";
            eig.erase(it);
        }
        parts.push_back(static_cast<int>(k + 1));
    }
    std::sort(parts.rbegin(), parts.rend());
    size_t ones = static_cast<size_t>(std::count(parts.begin(), parts.end(), 1));
    parts.resize(parts.size() - ones);
    bool wide = !parts.empty() && parts.front() >= 10;
    std::string s = "(";
    for (size_t i = 0; i < parts.size(); ++i) {
        if (wide && i) s += ",";
        s += std::to_string(parts[i]);
    }
    if (ones > 0) {
        if (wide) s += ",";
        s += ones == 1 ? "1" : "1^" + std::to_string(ones);
    }
    return s + ")";
}

}  // namespace

const std::vector<WeightedDiagram>& WddCache::get(const Subsystem& sub) {
    std::string k = key_of(sub.roots());
    auto it = cache_.find(k);
    if (it != cache_.end()) return it->second;
    return cache_.emplace(k, wdd_enumerate(cb_, sub, opt_)).first->second;
}

bool is_parameter(const GradedContext& ctx, const ChevalleyBasis& cb, const QVec& s) {
    Subsystem m = ctx.subsystem().centralizer(ctx.chi() - s);
    if (project_to_span(m, s) != s) return false;
    QVec h = m.to_dominant(s).first;
    const RootSystem& rs = ctx.ambient();
    for (int a : m.simple()) {
        mpq_class p = rs.pair(a, h);
        if (p != 0 && p != 1 && p != 2) return false;
    }
    return middle_element_test(cb, m, h).has_value();
}

QVec canonical_s(const GradedContext& ctx, const QVec& s) {
    Subsystem stab = ctx.subsystem().centralizer(ctx.chi());
    return stab.to_dominant(s).first;
}

int orbit_dim(const GradedContext& ctx, const OrbitParam& o) {
    const RootSystem& rs = ctx.ambient();
    int d = static_cast<int>(ctx.r0().size());
    for (int a : ctx.subsystem().root_list()) {
        if (!o.levi[a] && !o.u_plus[a]) continue;
        mpq_class p = rs.pair(a, ctx.chi());
        if (p == 2) ++d;
        if (p == 0) --d;
    }
    return d;
}

OrbitParam make_orbit(const GradedContext& ctx, const QVec& s) {
    const RootSystem& rs = ctx.ambient();
    OrbitParam o;
    o.s = s;
    QVec d = s - ctx.chi();
    for (int a : ctx.subsystem().root_list()) {
        mpq_class p = rs.pair(a, d);
        if (p == 0)
            o.levi.set(a);
        else if (p > 0)
            o.u_plus.set(a);
        else
            o.u_minus.set(a);
    }
    o.dim = orbit_dim(ctx, o);
    o.levi_type = Subsystem(rs, o.levi).cartan_type();
    return o;
}

std::vector<OrbitParam> parameter_set(const GradedContext& ctx, WddCache& wdd) {
    const RootSystem& rs = ctx.ambient();
    const Subsystem& sub = ctx.subsystem();
    const WeylGroup& W = ctx.weyl();
    std::vector<mpq_class> chi_pair(rs.size());
    for (int a = 0; a < rs.size(); ++a) chi_pair[a] = rs.pair(a, ctx.chi());
    Subsystem stab = sub.centralizer(ctx.chi());
    std::set<QVec, QVecLess> found;
    int r = sub.rank();
    for (unsigned mask = 0; mask < (1u << r); ++mask) {
        std::vector<int> which;
        for (int k = 0; k < r; ++k)
            if (mask & (1u << k)) which.push_back(k);
        Subsystem m = sub.standard_levi(which);
        for (const auto& diag : wdd.get(m)) {
            std::vector<int> supp;
            for (int a : m.root_list())
                if (rs.pair(a, diag.h) == 2) supp.push_back(a);
            for (size_t k = 0; k < W.size(); ++k) {
                bool ok = true;
                for (int a : supp)
                    if (chi_pair[W[k](a)] != 2) {
                        ok = false;
                        break;
                    }
                if (!ok) continue;
                found.insert(stab.to_dominant(rs.apply(W[k], diag.h)).first);
            }
        }
    }
    std::vector<OrbitParam> out;
    for (const auto& s : found) out.push_back(make_orbit(ctx, s));
    std::stable_sort(out.begin(), out.end(), [](const OrbitParam& a, const OrbitParam& b) { return a.dim < b.dim; });
    for (size_t i = 0; i < out.size(); ++i) {
        size_t lo = i, hi = i;
        while (lo > 0 && out[lo - 1].dim == out[i].dim) --lo;
        while (hi + 1 < out.size() && out[hi + 1].dim == out[i].dim) ++hi;
        out[i].label = std::to_string(out[i].dim);
        if (hi > lo) out[i].label += static_cast<char>('a' + (i - lo));
    }
    return out;
}

std::string saturation_name(const RootSystem& rs, const QVec& s) {
    Subsystem full = Subsystem::full(rs);
    QVec dom = full.to_dominant(s).first;
    if (rs.factors().size() != 1) return "";
    const CartanFactor& f = rs.factors()[0];
    if (f.type == 'F') {
        for (const auto& n : kF4Names)
            if (parse_qvec(n.chi) == dom) return n.name;
        return "";
    }
    if (f.type == 'G') {
        mpq_class a1 = rs.pair(rs.simple()[0], dom), a2 = rs.pair(rs.simple()[1], dom);
        for (const auto& n : kG2Names)
            if (a1 == n.a1 && a2 == n.a2) return n.name;
        return "";
    }
    std::vector<mpq_class> eig;
    for (const auto& x : dom) {
        eig.push_back(x);
        if (f.type != 'A') eig.push_back(-x);
    }
    if (f.type == 'B') eig.push_back(0);
    return partition_name(eig);
}

QVec chi_from_name(const RootSystem& rs, WddCache& wdd, const std::string& name) {
    for (const auto& d : wdd.get(Subsystem::full(rs)))
        if (saturation_name(rs, d.h) == name) return d.h;
    return {};
}

std::string component_group_label(const std::string& saturation, size_t local_systems) {
    if (saturation == "G2(a1)") return "S3";
    if (saturation == "F4(a3)") return "S4";
    if (local_systems <= 1) return "1";
    if (local_systems == 2) return "Z/2Z";
    return "";
}

}  // namespace hecke
