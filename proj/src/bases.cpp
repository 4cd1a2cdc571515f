#include "hecke/bases.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace hecke {

namespace {

KVector combination(const std::vector<BasisElement>& elems, const std::vector<RationalFunction>& c) {
    KVector r;
    for (size_t k = 0; k < c.size() && k < elems.size(); ++k)
        if (!c[k].is_zero()) r = kv_add(r, kv_scale(c[k], elems[k].vec));
    return r;
}

// Positive-degree part of a Laurent polynomial.
RationalFunction positive_part(const RationalFunction& r) {
    if (r.is_zero()) return r;
    if (!r.is_laurent()) throw std::logic_error("bar-invariant solve: right side is not a Laurent polynomial");
    std::vector<mpz_class> c;
    for (int k = 1; k <= r.high_degree(); ++k) c.push_back(r.laurent_coeff(k));
    return RationalFunction::laurent(c, 1);
}

}  // namespace

std::string Family::element_label(size_t i) const {
    const BasisElement& e = minus.z[i];
    std::string s = orbits[e.orbit].label;
    int b = block[e.orbit];
    if (b == 2) return s + (e.local == 0 ? "t" : "s");
    if (b > 2) return s + "_" + std::to_string(e.local + 1);
    return s;
}

Engine::Engine(const std::string& cartan, MiddleElementOptions opt) : rs_(RootSystem::build(cartan)) {
    cb_ = std::make_unique<ChevalleyBasis>(rs_);
    wdd_ = std::make_unique<WddCache>(*cb_, opt);
}

const GradedContext& Engine::context(const RootSet& roots, const QVec& chi) {
    QVec proj = project_to_span(Subsystem(rs_, roots), chi);
    std::string key = roots.to_string() + "|" + qvec_str(proj);
    auto it = contexts_.find(key);
    if (it != contexts_.end()) return *it->second;
    auto ctx = std::make_unique<GradedContext>(rs_, roots, proj);
    const GradedContext& ref = *ctx;
    contexts_.emplace(key, std::move(ctx));
    return ref;
}

const Family& Engine::family(const GradedContext& ctx) {
    auto it = families_.find(&ctx);
    if (it != families_.end()) return *it->second;
    auto f = std::make_unique<Family>(build(ctx));
    for (size_t k = 0; k < f->orbits.size(); ++k) {
        OrbitParam& o = f->orbits[k];
        o.saturation = saturation_name(rs_, o.s);
        o.component_group = component_group_label(o.saturation, static_cast<size_t>(f->block[k]));
    }
    const Family& ref = *f;
    families_.emplace(&ctx, std::move(f));
    return ref;
}

QVec Engine::dominant(const QVec& chi) const { return Subsystem::full(rs_).to_dominant(chi).first; }

bool Engine::is_middle_element(const QVec& chi) {
    QVec dom = dominant(chi);
    Subsystem full = Subsystem::full(rs_);
    for (int a : full.simple()) {
        mpq_class p = rs_.pair(a, dom);
        if (p != 0 && p != 1 && p != 2) return false;
    }
    QVec proj = project_to_span(full, dom);
    return middle_element_test(*cb_, full, proj).has_value();
}

RationalFunction central_normalization(const GradedContext& ctx) {
    const WeylGroup& w = ctx.weyl();
    std::vector<long> c;
    for (size_t k = 0; k < w.size(); ++k) {
        size_t d = 2 * static_cast<size_t>(w.length(k));
        if (c.size() <= d) c.resize(d + 1, 0);
        ++c[d];
    }
    int n = static_cast<int>(ctx.subsystem().positive_roots().size());
    return RationalFunction::monomial(1, n) / RationalFunction::laurent(c, 0);
}

Family Engine::build(const GradedContext& ctx) {
    Family f;
    f.ctx = &ctx;
    if (ctx.central()) {
        f.orbits.push_back(make_orbit(ctx, QVec(rs_.dim(), mpq_class(0))));
        f.orbits[0].label = "0";
        f.open = 0;
        f.block = {1};
        BasisElement e{0, 0, KVector{{0, central_normalization(ctx)}}};
        for (SignedFamily* s : {&f.plus, &f.minus}) {
            s->z = {e};
            s->u = {e};
            s->coeff = {{RationalFunction(1)}};
        }
        return f;
    }
    f.orbits = parameter_set(ctx, *wdd_);
    f.open = -1;
    for (size_t i = 0; i < f.orbits.size(); ++i)
        if (f.orbits[i].levi == ctx.subsystem().roots()) f.open = static_cast<int>(i);
    if (f.open != static_cast<int>(f.orbits.size()) - 1)
        throw std::logic_error("open orbit missing or not of maximal dimension");
    f.block.assign(f.orbits.size(), 0);

    // Induced elements Z'.
    for (int sign : {1, -1}) {
        SignedFamily& side = sign > 0 ? f.plus : f.minus;
        for (size_t i = 0; i + 1 < f.orbits.size(); ++i) {
            const OrbitParam& o = f.orbits[i];
            const GradedContext& lctx = context(o.levi, ctx.chi());
            const Family& lf = family(lctx);
            QVec d = sign > 0 ? o.s - ctx.chi() : ctx.chi() - o.s;
            const SignedFamily& ls = lf.side(sign);
            int local = 0;
            for (const auto& e : ls.z) {
                if (e.orbit != lf.open) continue;
                side.z.push_back(BasisElement{static_cast<int>(i), local++, induce(ctx, lctx, d, e.vec)});
            }
            f.block[i] = local;
        }
    }
    if (f.plus.z.size() != f.minus.z.size()) throw std::logic_error("induced families of different sizes");

    // Bar-invariant elements U'.
    for (SignedFamily* side : {&f.plus, &f.minus}) {
        size_t n = side->z.size();
        side->m = RFMatrix(n, n);
        RFMatrix b(n, n);
        for (size_t i = 0; i < n; ++i) {
            KVector bz = kv_bar(side->z[i].vec);
            for (size_t j = 0; j < n; ++j) {
                if (j >= i) side->m(i, j) = ctx.pair(side->z[i].vec, side->z[j].vec);
                b(i, j) = ctx.pair(bz, side->z[j].vec);
            }
            for (size_t j = 0; j < i; ++j) side->m(i, j) = side->m(j, i);
        }
        side->m_inv = side->m.inverse();
        side->a_prime = b * side->m_inv;
        const RFMatrix& a = side->a_prime;
        std::vector<size_t> by_dim(n);
        for (size_t k = 0; k < n; ++k) by_dim[k] = k;
        auto dim = [&](size_t k) { return f.orbits[side->z[k].orbit].dim; };
        std::stable_sort(by_dim.begin(), by_dim.end(), [&](size_t x, size_t y) { return dim(x) > dim(y); });
        side->coeff.assign(n, std::vector<RationalFunction>(n));
        for (size_t i = 0; i < n; ++i) {
            auto& c = side->coeff[i];
            c[i] = RationalFunction(1);
            std::vector<bool> known(n, false);
            known[i] = true;
            for (size_t j : by_dim) {
                if (j == i || dim(j) > dim(i)) continue;
                RationalFunction r;
                for (size_t k = 0; k < n; ++k)
                    if (known[k] && k != j && !c[k].is_zero() && !a(k, j).is_zero()) r += c[k].bar() * a(k, j);
                if (dim(j) == dim(i)) {
                    if (!r.is_zero()) throw std::logic_error("bar-invariant solve: nonzero term between incomparable elements");
                } else {
                    RationalFunction p = positive_part(r);
                    if (p - p.bar() != r) throw std::logic_error("bar-invariant solve: no split into c - bar(c)");
                    c[j] = p;
                }
                known[j] = true;
            }
            side->u.push_back(BasisElement{side->z[i].orbit, side->z[i].local, combination(side->z, c)});
        }
    }

    // Open-orbit blocks.
    size_t np = f.plus.z.size();
    std::vector<BasisElement> open_plus_z, open_plus_u, open_minus_z, open_minus_u;
    std::vector<std::vector<RationalFunction>> col_plus, col_minus;
    for (int sign : {1, -1}) {
        SignedFamily& side = sign > 0 ? f.plus : f.minus;
        const SignedFamily& other = sign > 0 ? f.minus : f.plus;
        auto& oz = sign > 0 ? open_plus_z : open_minus_z;
        auto& ou = sign > 0 ? open_plus_u : open_minus_u;
        auto& cols = sign > 0 ? col_plus : col_minus;
        for (size_t t = 0; t < other.u.size(); ++t) {
            const KVector& x = other.u[t].vec;
            std::vector<RationalFunction> rhs(np);
            for (size_t k = 0; k < np; ++k) rhs[k] = ctx.pair(x, side.z[k].vec);
            std::vector<RationalFunction> a = side.m_inv.apply(rhs);
            KVector perp = kv_sub(x, combination(side.z, a));
            if (ctx.in_radical(perp)) continue;
            int local = static_cast<int>(oz.size());
            oz.push_back(BasisElement{f.open, local, perp});
            ou.push_back(BasisElement{f.open, local, x});
            cols.push_back(a);
            side.selected.push_back(static_cast<int>(t));
        }
    }
    if (open_plus_z.size() != open_minus_z.size()) throw std::logic_error("open blocks of different sizes");
    size_t no = open_plus_z.size();
    f.block[f.open] = static_cast<int>(no);
    size_t n = np + no;
    for (int sign : {1, -1}) {
        SignedFamily& side = sign > 0 ? f.plus : f.minus;
        auto& oz = sign > 0 ? open_plus_z : open_minus_z;
        auto& ou = sign > 0 ? open_plus_u : open_minus_u;
        auto& cols = sign > 0 ? col_plus : col_minus;
        for (auto& c : side.coeff) c.resize(n);
        for (size_t k = 0; k < no; ++k) {
            side.z.push_back(oz[k]);
            side.u.push_back(ou[k]);
            std::vector<RationalFunction> c = cols[k];
            c.resize(n);
            c[np + k] = RationalFunction(1);
            side.coeff.push_back(std::move(c));
        }
    }
    return f;
}

std::vector<std::vector<RationalFunction>> multiplicity_matrix(const Family& f, int sign) {
    const SignedFamily& s = f.side(sign);
    size_t n = s.z.size();
    std::vector<std::vector<RationalFunction>> m(n, std::vector<RationalFunction>(n));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m[i][j] = s.coeff[j][i];
    return m;
}

KLMatrix kl_matrix(const Family& f) {
    auto nm = multiplicity_matrix(f, -1);
    size_t n = nm.size();
    KLMatrix out;
    out.p.assign(n, std::vector<Poly>(n));
    std::vector<std::vector<int>> rel(n, std::vector<int>(n, 0));
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            const RationalFunction& x = nm[i][j];
            if (x.is_zero()) continue;
            if (!x.is_polynomial()) throw std::logic_error("multiplicity entry is not a polynomial in v");
            RationalFunction g = x.shifted(f.element_dim(i) - f.element_dim(j));
            int hi = g.high_degree(), lo = g.low_degree();
            if (hi > 0) throw std::logic_error("KL conversion: positive power of v");
            int sign = 0;
            std::vector<mpz_class> q(static_cast<size_t>(-lo / 2) + 1);
            for (int k = lo; k <= hi; ++k) {
                mpz_class c = g.laurent_coeff(k);
                if (c == 0) continue;
                if (k % 2 != 0) throw std::logic_error("KL conversion: odd power of v");
                int sg = c > 0 ? 1 : -1;
                if (sign != 0 && sg != sign) throw std::logic_error("KL conversion: mixed signs in one entry");
                sign = sg;
                q[static_cast<size_t>(-k / 2)] = c * sg;
            }
            out.p[i][j] = Poly(q);
            rel[i][j] = rel[j][i] = sign;
        }
    out.epsilon.assign(n, 0);
    for (size_t s = 0; s < n; ++s) {
        if (out.epsilon[s] != 0) continue;
        out.epsilon[s] = 1;
        std::deque<size_t> todo{s};
        while (!todo.empty()) {
            size_t i = todo.front();
            todo.pop_front();
            for (size_t j = 0; j < n; ++j) {
                if (rel[i][j] == 0) continue;
                int want = out.epsilon[i] * rel[i][j];
                if (out.epsilon[j] == 0) {
                    out.epsilon[j] = want;
                    todo.push_back(j);
                } else if (out.epsilon[j] != want) {
                    throw std::logic_error("KL conversion: inconsistent signs");
                }
            }
        }
    }
    return out;
}

std::vector<int> im_involution(const Family& f) {
    const GradedContext& ctx = *f.ctx;
    size_t n = f.size();
    RFMatrix g(n, n);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i; j < n; ++j) g(i, j) = g(j, i) = ctx.pair(f.plus.u[i].vec, f.plus.u[j].vec);
    RFMatrix ginv = g.inverse();
    std::vector<int> out(n, -1);
    for (size_t i = 0; i < n; ++i) {
        std::vector<RationalFunction> rhs(n);
        for (size_t k = 0; k < n; ++k) rhs[k] = ctx.pair(f.minus.u[i].vec, f.plus.u[k].vec);
        auto b = ginv.apply(rhs);
        int hit = -1;
        for (size_t k = 0; k < n; ++k) {
            if (b[k].is_zero()) continue;
            if (hit >= 0) throw std::logic_error("IM: several candidates for " + f.element_label(i));
            hit = static_cast<int>(k);
        }
        if (hit < 0) throw std::logic_error("IM: no candidate for " + f.element_label(i));
        out[i] = hit;
    }
    return out;
}

std::vector<Check> family_checks(const Family& f) {
    std::vector<Check> out;
    const GradedContext& ctx = *f.ctx;
    size_t n = f.size();
    for (int sign : {1, -1}) {
        const SignedFamily& s = f.side(sign);
        std::string tag = sign > 0 ? "+" : "-";
        size_t np = s.primed();
        bool orth = true, tri = true, bio = true;
        for (size_t i = 0; i < np; ++i)
            for (size_t j = 0; j < np; ++j) {
                if (s.z[i].orbit != s.z[j].orbit && !s.m(i, j).is_zero()) orth = false;
                int di = f.orbits[s.z[i].orbit].dim, dj = f.orbits[s.z[j].orbit].dim;
                const RationalFunction& a = s.a_prime(i, j);
                if (i == j && !a.is_one()) tri = false;
                if (i != j && dj >= di && !a.is_zero()) tri = false;
            }
        if (np > 0) {
            RFMatrix bar_a(np, np);
            for (size_t i = 0; i < np; ++i)
                for (size_t j = 0; j < np; ++j) bar_a(i, j) = s.a_prime(i, j).bar();
            bio = bar_a * s.a_prime == RFMatrix::identity(np);
        }
        out.push_back({"orthogonality of induced blocks " + tag, orth, ""});
        out.push_back({"triangular a' with unit diagonal " + tag, tri, ""});
        out.push_back({"biorthogonality " + tag, bio, ""});
        bool unitri = true;
        for (size_t j = 0; j < n; ++j)
            for (size_t i = 0; i < n; ++i) {
                const RationalFunction& c = s.coeff[j][i];
                if (i == j) {
                    if (!c.is_one()) unitri = false;
                    continue;
                }
                if (c.is_zero()) continue;
                if (!c.is_polynomial()) unitri = false;
                int di = f.orbits[s.z[i].orbit].dim, dj = f.orbits[s.z[j].orbit].dim;
                if (di >= dj) unitri = false;
                if (c.num().coeff(0) != 0) unitri = false;
            }
        out.push_back({"unitriangular multiplicities over Z[v] " + tag, unitri, ""});
        RFMatrix g(n, n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = i; j < n; ++j) g(i, j) = g(j, i) = ctx.pair(s.z[i].vec, s.z[j].vec);
        out.push_back({"Z basis of K/Rad " + tag, g.rank() == n, ""});
        bool rad = true;
        for (const auto& e : s.u)
            if (ctx.in_radical(e.vec)) rad = false;
        out.push_back({"U elements outside Rad " + tag, rad, ""});
    }
    bool rem = !f.minus.selected.empty() && !f.plus.selected.empty();
    if (f.minus.primed() > 0) {
        rem = rem && f.plus.selected[0] == 0 && f.minus.selected[0] == 0 && f.minus.z[0].orbit == 0;
    }
    out.push_back({"trivial element opens the open block", rem || f.minus.primed() == 0, ""});
    return out;
}

std::string poly_q_str(const Poly& p) { return p.to_string("q"); }

}  // namespace hecke
