#include "hecke/kspace.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace hecke {

KVector kv_add(const KVector& a, const KVector& b) {
    KVector r = a;
    for (const auto& [k, c] : b) {
        auto it = r.find(k);
        if (it == r.end()) {
            r.emplace(k, c);
        } else {
            it->second += c;
            if (it->second.is_zero()) r.erase(it);
        }
    }
    return r;
}

KVector kv_sub(const KVector& a, const KVector& b) { return kv_add(a, kv_scale(RationalFunction(-1), b)); }

KVector kv_scale(const RationalFunction& k, const KVector& a) {
    KVector r;
    if (k.is_zero()) return r;
    for (const auto& [i, c] : a) r.emplace(i, k * c);
    return r;
}

KVector kv_bar(const KVector& a) {
    KVector r;
    for (const auto& [i, c] : a) r.emplace(i, c.bar());
    return r;
}

QVec project_to_span(const Subsystem& sub, const QVec& x) {
    const RootSystem& rs = sub.ambient();
    QVec out(rs.dim(), mpq_class(0));
    size_t r = sub.simple().size();
    if (r == 0) return out;
    QMatrix g(r, r);
    std::vector<mpq_class> b(r);
    for (size_t i = 0; i < r; ++i) {
        b[i] = rs.pair(sub.simple()[i], x);
        for (size_t j = 0; j < r; ++j) g(i, j) = dot(rs.root(sub.simple()[i]), rs.root(sub.simple()[j]));
    }
    auto c = g.solve(b);
    for (size_t i = 0; i < r; ++i)
        if ((*c)[i] != 0) out = out + (*c)[i] * rs.root(sub.simple()[i]);
    return out;
}

GradedContext::GradedContext(const RootSystem& rs, const RootSet& roots, const QVec& chi)
    : rs_(&rs), sub_(rs, roots), chi_(project_to_span(sub_, chi)) {
    weyl_ = std::make_unique<WeylGroup>(sub_);
    for (int a : sub_.root_list()) {
        mpq_class p = rs.pair(a, chi_);
        if (p == 2) r2_.push_back(a);
        if (p == 0) r0_.push_back(a);
    }
    const WeylGroup& w = *weyl_;
    m2_.resize(w.size());
    m0_.resize(w.size());
    std::vector<QVec> first_labels;
    std::vector<std::vector<size_t>> groups;
    std::map<QVec, size_t, QVecLess> tmp;
    for (size_t k = 0; k < w.size(); ++k) {
        for (int a : r2_)
            if (rs.positive(w[k](a))) m2_[k].set(a);
        for (int a : r0_)
            if (rs.positive(w[k](a))) m0_[k].set(a);
        QVec lab = rs.apply(w[k], chi_);
        auto it = tmp.find(lab);
        if (it == tmp.end()) {
            tmp.emplace(lab, groups.size());
            first_labels.push_back(lab);
            groups.push_back({k});
        } else {
            groups[it->second].push_back(k);
        }
    }
    std::vector<size_t> order(groups.size());
    for (size_t i = 0; i < order.size(); ++i) order[i] = i;
    std::sort(order.begin(), order.end(), [&](size_t a, size_t b) {
        int la = w.length(groups[a][0]), lb = w.length(groups[b][0]);
        if (la != lb) return la < lb;
        return lex_compare(first_labels[a], first_labels[b]) < 0;
    });
    coset_of_.resize(w.size());
    for (size_t i : order) {
        size_t idx = labels_.size();
        labels_.push_back(first_labels[i]);
        members_.push_back(groups[i]);
        index_.emplace(first_labels[i], idx);
        for (size_t k : groups[i]) coset_of_[k] = idx;
    }
    size_t n = labels_.size();
    int n0 = static_cast<int>(r0_.size());
    int span = n0 + static_cast<int>(r2_.size()) + 1;
    gram_.resize(n * n);
    std::vector<long> acc(span);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) {
            std::fill(acc.begin(), acc.end(), 0);
            size_t rj = rep(j);
            for (size_t k : members_[i]) {
                int t = tau(k, rj);
                acc[t + n0] += (t % 2 == 0) ? 1 : -1;
            }
            LaurentInt& e = gram_[i * n + j];
            int lo = 0, hi = span;
            while (lo < hi && acc[lo] == 0) ++lo;
            while (hi > lo && acc[hi - 1] == 0) --hi;
            e.low = lo - n0;
            e.c.assign(acc.begin() + lo, acc.begin() + hi);
        }
}

long GradedContext::find(const QVec& label) const {
    auto it = index_.find(label);
    return it == index_.end() ? -1 : static_cast<long>(it->second);
}

std::string GradedContext::word(size_t i) const {
    auto w = weyl_->word(rep(i));
    if (w.empty()) return "1";
    std::string s;
    for (int k : w) s += "s" + std::to_string(k + 1);
    return s;
}

int GradedContext::tau(size_t w1, size_t w2) const {
    return static_cast<int>((m2_[w1] ^ m2_[w2]).count()) - static_cast<int>((m0_[w1] ^ m0_[w2]).count());
}

RationalFunction GradedContext::e_factor(EMode mode) const {
    if (mode == EMode::One) return RationalFunction(1);
    RationalFunction base = RationalFunction(1) - RationalFunction::monomial(1, 2);
    return base.pow(-sub_.rank());
}

RFMatrix GradedContext::gram_matrix(EMode mode) const {
    size_t n = size();
    RFMatrix m(n, n);
    RationalFunction e = e_factor(mode);
    for (size_t i = 0; i < n; ++i)
        for (size_t j = 0; j < n; ++j) m(i, j) = e.is_one() ? gram_entry(i, j).to_rf() : e * gram_entry(i, j).to_rf();
    return m;
}

namespace {

// x = (1/D) sum_i p_i [i] with p_i in Z[v].
struct Cleared {
    Poly den = Poly(1);
    std::vector<std::pair<int, Poly>> terms;
};

Cleared clear_denominators(const KVector& x) {
    Cleared c;
    for (const auto& [i, f] : x) {
        if (f.den().is_one()) continue;
        Poly g = Poly::gcd(c.den, f.den());
        c.den = (c.den * f.den()).divexact(g);
    }
    for (const auto& [i, f] : x) c.terms.emplace_back(i, f.num() * c.den.divexact(f.den()));
    return c;
}

void add_product(std::vector<mpz_class>& acc, int acc_low, const LaurentInt& g, const Poly& p) {
    const auto& pc = p.coeffs();
    for (size_t a = 0; a < g.c.size(); ++a) {
        if (g.c[a] == 0) continue;
        int base = g.low + static_cast<int>(a) - acc_low;
        for (size_t b = 0; b < pc.size(); ++b)
            if (pc[b] != 0) {
                size_t k = static_cast<size_t>(base + static_cast<int>(b));
                if (k >= acc.size()) acc.resize(k + 1);
                if (g.c[a] > 0)
                    mpz_addmul_ui(acc[k].get_mpz_t(), pc[b].get_mpz_t(), static_cast<unsigned long>(g.c[a]));
                else
                    mpz_submul_ui(acc[k].get_mpz_t(), pc[b].get_mpz_t(), static_cast<unsigned long>(-g.c[a]));
            }
    }
}

bool all_zero(const std::vector<mpz_class>& v) {
    for (const auto& x : v)
        if (x != 0) return false;
    return true;
}

}  // namespace

std::vector<RationalFunction> GradedContext::gram_apply(const KVector& y) const {
    Cleared c = clear_denominators(y);
    int low = -static_cast<int>(r0_.size());
    std::vector<RationalFunction> out(size());
    RationalFunction d(c.den);
    for (size_t i = 0; i < size(); ++i) {
        std::vector<mpz_class> acc;
        for (const auto& [j, p] : c.terms) add_product(acc, low, gram_entry(i, j), p);
        if (all_zero(acc)) continue;
        out[i] = RationalFunction::laurent(acc, low) / d;
    }
    return out;
}

RationalFunction GradedContext::pair(const KVector& x, const KVector& y) const {
    if (x.empty() || y.empty()) return RationalFunction();
    Cleared cx = clear_denominators(x), cy = clear_denominators(y);
    int low = -static_cast<int>(r0_.size());
    std::vector<mpz_class> total;
    for (const auto& [i, q] : cx.terms) {
        std::vector<mpz_class> acc;
        for (const auto& [j, p] : cy.terms) add_product(acc, low, gram_entry(i, j), p);
        Poly a(std::vector<mpz_class>(acc.begin(), acc.end()));
        Poly prod = a * q;
        const auto& pc = prod.coeffs();
        if (total.size() < pc.size()) total.resize(pc.size());
        for (size_t k = 0; k < pc.size(); ++k) total[k] += pc[k];
    }
    RationalFunction num = RationalFunction::laurent(total, low);
    if (num.is_zero()) return num;
    return num / RationalFunction(cx.den * cy.den);
}

bool GradedContext::in_radical(const KVector& x) const {
    Cleared c = clear_denominators(x);
    int low = -static_cast<int>(r0_.size());
    for (size_t i = 0; i < size(); ++i) {
        std::vector<mpz_class> acc;
        for (const auto& [j, p] : c.terms) add_product(acc, low, gram_entry(i, j), p);
        if (!all_zero(acc)) return false;
    }
    return true;
}

std::vector<KVector> GradedContext::radical() const {
    std::vector<KVector> out;
    for (const auto& v : gram_matrix(EMode::One).kernel()) {
        KVector k;
        for (size_t i = 0; i < v.size(); ++i)
            if (!v[i].is_zero()) k.emplace(static_cast<int>(i), v[i]);
        out.push_back(std::move(k));
    }
    return out;
}

namespace {

using u64 = unsigned long long;

u64 mulmod(u64 a, u64 b, u64 p) { return static_cast<u64>((static_cast<unsigned __int128>(a) * b) % p); }

u64 powmod(u64 a, u64 e, u64 p) {
    u64 r = 1;
    a %= p;
    while (e) {
        if (e & 1) r = mulmod(r, a, p);
        a = mulmod(a, a, p);
        e >>= 1;
    }
    return r;
}

size_t rank_mod_p(std::vector<u64>& a, size_t n, u64 p) {
    size_t rank = 0;
    for (size_t col = 0; col < n && rank < n; ++col) {
        size_t piv = rank;
        while (piv < n && a[piv * n + col] == 0) ++piv;
        if (piv == n) continue;
        if (piv != rank)
            for (size_t j = 0; j < n; ++j) std::swap(a[piv * n + j], a[rank * n + j]);
        u64 inv = powmod(a[rank * n + col], p - 2, p);
        for (size_t i = rank + 1; i < n; ++i) {
            u64 f = a[i * n + col];
            if (f == 0) continue;
            f = mulmod(f, inv, p);
            for (size_t j = col; j < n; ++j)
                if (a[rank * n + j]) a[i * n + j] = (a[i * n + j] + p - mulmod(f, a[rank * n + j], p)) % p;
        }
        ++rank;
    }
    return rank;
}

}  // namespace

size_t GradedContext::irr_count(size_t exact_limit) const {
    size_t n = size();
    if (n <= exact_limit) return gram_matrix(EMode::One).rank();
    const u64 primes[] = {2305843009213693951ull, 4611686018427387847ull};
    std::mt19937_64 gen(12345);
    size_t best = 0;
    for (u64 p : primes) {
        u64 v0 = gen() % (p - 3) + 2;
        u64 vinv = powmod(v0, p - 2, p);
        std::vector<u64> a(n * n);
        for (size_t i = 0; i < n; ++i)
            for (size_t j = 0; j < n; ++j) {
                const LaurentInt& g = gram_entry(i, j);
                u64 s = 0;
                for (size_t k = 0; k < g.c.size(); ++k) {
                    if (g.c[k] == 0) continue;
                    int e = g.low + static_cast<int>(k);
                    u64 term = e >= 0 ? powmod(v0, e, p) : powmod(vinv, -e, p);
                    u64 c = g.c[k] >= 0 ? static_cast<u64>(g.c[k]) % p : p - static_cast<u64>(-g.c[k]) % p;
                    s = (s + mulmod(term, c, p)) % p;
                }
                a[i * n + j] = s;
            }
        best = std::max(best, rank_mod_p(a, n, p));
    }
    return best;
}

KVector GradedContext::sigma(const KVector& x) const {
    const WeylElement& w0 = (*weyl_)[weyl_->longest()];
    KVector r;
    for (const auto& [i, c] : x) {
        long j = find(rs_->apply(w0, labels_[i]));
        if (j < 0) throw std::logic_error("sigma: label outside the coset space");
        r.emplace(static_cast<int>(j), c);
    }
    return r;
}

KVector induce(const GradedContext& parent, const GradedContext& sub, const QVec& d, const KVector& x) {
    const RootSystem& rs = parent.ambient();
    WeylElement wp = parent.subsystem().to_dominant(d).second;
    KVector out;
    for (const auto& [j, c] : x) {
        WeylElement w = wp * sub.weyl()[sub.rep(j)];
        long idx = parent.find(rs.apply(w, parent.chi()));
        if (idx < 0) throw std::logic_error("induce: image outside the parent coset space");
        KVector term{{static_cast<int>(idx), c}};
        out = kv_add(out, term);
    }
    return out;
}

std::string coset_label_str(const GradedContext& ctx, size_t i) { return "[" + qvec_str(ctx.label(i)) + "]"; }

}  // namespace hecke
