#include "hecke/liealg.hpp"

#include "hecke/matrix.hpp"

#include <algorithm>
#include <random>
#include <stdexcept>

namespace hecke {

bool LieElement::is_zero() const {
    for (const auto& c : h)
        if (c != 0) return false;
    for (const auto& [r, c] : x)
        if (c != 0) return false;
    return true;
}

bool operator==(const LieElement& a, const LieElement& b) {
    LieElement d = a;
    for (size_t i = 0; i < d.h.size(); ++i) d.h[i] -= b.h[i];
    for (const auto& [r, c] : b.x) d.x[r] -= c;
    return d.is_zero();
}

ChevalleyBasis::ChevalleyBasis(const RootSystem& rs) : rs_(&rs) {
    int n = rs.size();
    n_.assign(static_cast<size_t>(n) * n, 0);
    done_.assign(static_cast<size_t>(n) * n, 0);
    for (int a = 0; a < n; ++a)
        for (int b = 0; b < n; ++b)
            if (rs.sum(a, b) >= 0) compute(a, b);
}

int ChevalleyBasis::string_p(int a, int b) const {
    int p = 0;
    int cur = b;
    while (true) {
        int next = rs_->sum(cur, rs_->negative_of(a));
        if (next < 0) return p;
        ++p;
        cur = next;
    }
}

int ChevalleyBasis::compute(int a, int b) {
    size_t key = static_cast<size_t>(a) * rs_->size() + b;
    if (done_[key]) return n_[key];
    const RootSystem& rs = *rs_;
    auto len = [&rs](int r) { return dot(rs.root(r), rs.root(r)); };
    int val = 0;
    bool pa = rs.positive(a), pb = rs.positive(b);
    if (pa && pb) {
        if (a > b) {
            val = -compute(b, a);
        } else {
            int xi = rs.sum(a, b);
            int alpha = -1;
            for (int r = 0; r < rs.size() && alpha < 0; ++r) {
                if (!rs.positive(r)) continue;
                int d = rs.sum(xi, rs.negative_of(r));
                if (d >= 0 && rs.positive(d)) alpha = r;
            }
            int beta = rs.sum(xi, rs.negative_of(alpha));
            if (a == alpha) {
                val = string_p(a, b) + 1;
            } else {
                int gamma = a, delta = b;
                mpq_class t = 0;
                int bg = rs.sum(beta, rs.negative_of(gamma));
                if (bg >= 0)
                    t += mpq_class(compute(beta, rs.negative_of(gamma)) * compute(alpha, rs.negative_of(delta))) /
                         len(bg);
                int ag = rs.sum(alpha, rs.negative_of(gamma));
                if (ag >= 0)
                    t += mpq_class(compute(rs.negative_of(gamma), alpha) * compute(beta, rs.negative_of(delta))) /
                         len(ag);
                mpq_class q = len(xi) / mpq_class(compute(alpha, beta)) * t;
                if (q.get_den() != 1) throw std::logic_error("non-integral structure constant");
                val = static_cast<int>(q.get_num().get_si());
            }
        }
    } else if (!pa && !pb) {
        val = -compute(rs.negative_of(a), rs.negative_of(b));
    } else if (pa) {
        int c = rs.sum(a, b);
        mpq_class q;
        if (rs.positive(c))
            q = -len(c) / len(a) * compute(rs.negative_of(b), c);
        else
            q = len(c) / len(b) * compute(rs.negative_of(c), a);
        if (q.get_den() != 1) throw std::logic_error("non-integral structure constant");
        val = static_cast<int>(q.get_num().get_si());
    } else {
        val = -compute(b, a);
    }
    n_[key] = val;
    done_[key] = 1;
    return val;
}

LieElement ChevalleyBasis::zero() const { return LieElement{QVec(rs_->dim(), mpq_class(0)), {}}; }

LieElement ChevalleyBasis::root_vector(int a, const mpq_class& c) const {
    LieElement e = zero();
    if (c != 0) e.x[a] = c;
    return e;
}

LieElement ChevalleyBasis::cartan(const QVec& h) const {
    LieElement e = zero();
    e.h = h;
    return e;
}

LieElement ChevalleyBasis::bracket(const LieElement& a, const LieElement& b) const {
    LieElement r = zero();
    auto add = [&r](int root, const mpq_class& c) {
        if (c == 0) return;
        mpq_class& slot = r.x[root];
        slot += c;
        if (slot == 0) r.x.erase(root);
    };
    for (const auto& [rb, cb] : b.x) add(rb, rs_->pair(rb, a.h) * cb);
    for (const auto& [ra, ca] : a.x) add(ra, -rs_->pair(ra, b.h) * ca);
    for (const auto& [ra, ca] : a.x)
        for (const auto& [rb, cb] : b.x) {
            if (rb == rs_->negative_of(ra)) {
                mpq_class k = ca * cb;
                const QVec& co = rs_->coroot(ra);
                for (int i = 0; i < rs_->dim(); ++i) r.h[i] += k * co[i];
            } else if (int s = rs_->sum(ra, rb); s >= 0) {
                add(s, ca * cb * N(ra, rb));
            }
        }
    return r;
}

long ChevalleyBasis::jacobi_failures() const {
    long bad = 0;
    int n = rs_->size();
    std::vector<LieElement> basis;
    for (int a = 0; a < n; ++a) basis.push_back(root_vector(a));
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b) {
            LieElement ab = bracket(basis[a], basis[b]);
            for (int c = b + 1; c < n; ++c) {
                LieElement s = bracket(basis[c], ab);
                LieElement t = bracket(basis[a], bracket(basis[b], basis[c]));
                LieElement u = bracket(basis[b], bracket(basis[c], basis[a]));
                for (int i = 0; i < rs_->dim(); ++i) s.h[i] += t.h[i] + u.h[i];
                for (const auto& [r, k] : t.x) s.x[r] += k;
                for (const auto& [r, k] : u.x) s.x[r] += k;
                if (!s.is_zero()) ++bad;
            }
        }
    return bad;
}

bool is_lie_triple(const ChevalleyBasis& cb, const LieTriple& t) {
    LieElement h = cb.cartan(t.h);
    LieElement e2 = t.e, f2 = t.f;
    for (auto& [r, c] : e2.x) c *= 2;
    for (auto& [r, c] : f2.x) c *= -2;
    return cb.bracket(h, t.e) == e2 && cb.bracket(h, t.f) == f2 && cb.bracket(t.e, t.f) == h;
}

namespace {

std::vector<long> small_primes(size_t n) {
    std::vector<long> p;
    for (long k = 2; p.size() < n; ++k) {
        bool prime = true;
        for (long d : p) {
            if (d * d > k) break;
            if (k % d == 0) {
                prime = false;
                break;
            }
        }
        if (prime) p.push_back(k);
    }
    return p;
}

std::optional<LieTriple> try_coefficients(const ChevalleyBasis& cb, const std::vector<int>& s2,
                                          const std::vector<int>& sm2, const QVec& h,
                                          const std::vector<mpq_class>& c) {
    const RootSystem& rs = cb.roots();
    int dim = rs.dim();
    std::map<int, int> row_of;
    for (int a : s2)
        for (int b : sm2) {
            int g = rs.sum(a, b);
            if (g >= 0 && !row_of.count(g)) row_of.emplace(g, 0);
        }
    int next = dim;
    for (auto& [g, row] : row_of) row = next++;
    QMatrix m(next, sm2.size());
    std::vector<mpq_class> rhs(next, mpq_class(0));
    for (int i = 0; i < dim; ++i) rhs[i] = h[i];
    for (size_t i = 0; i < s2.size(); ++i)
        for (size_t j = 0; j < sm2.size(); ++j) {
            int a = s2[i], b = sm2[j];
            if (b == rs.negative_of(a)) {
                const QVec& co = rs.coroot(a);
                for (int k = 0; k < dim; ++k)
                    if (co[k] != 0) m(k, j) += c[i] * co[k];
            } else if (int g = rs.sum(a, b); g >= 0) {
                m(row_of.at(g), j) += c[i] * cb.N(a, b);
            }
        }
    auto y = m.solve(rhs);
    if (!y) return std::nullopt;
    LieTriple t{cb.zero(), cb.zero(), h};
    for (size_t i = 0; i < s2.size(); ++i) t.e.x[s2[i]] = c[i];
    for (size_t j = 0; j < sm2.size(); ++j)
        if ((*y)[j] != 0) t.f.x[sm2[j]] = (*y)[j];
    return t;
}

}  // namespace

std::optional<LieTriple> middle_element_test(const ChevalleyBasis& cb, const Subsystem& sub, const QVec& h,
                                             const MiddleElementOptions& opt) {
    const RootSystem& rs = cb.roots();
    if (&sub.ambient() != &rs) throw std::invalid_argument("subsystem of a different root system");
    if (!sub.is_dominant(h)) throw std::invalid_argument("middle element test: h is not dominant");
    for (int a : sub.simple()) {
        mpq_class p = rs.pair(a, h);
        if (p != 0 && p != 1 && p != 2)
            throw std::invalid_argument("middle element test: simple value outside {0,1,2}");
    }
    if (is_zero(h)) return LieTriple{cb.zero(), cb.zero(), h};
    std::vector<int> s2, sm2;
    for (int r : sub.root_list()) {
        mpq_class p = rs.pair(r, h);
        if (p == 2) s2.push_back(r);
        if (p == -2) sm2.push_back(r);
    }
    if (s2.empty()) return std::nullopt;
    std::vector<mpq_class> c(s2.size(), mpq_class(1));
    if (auto t = try_coefficients(cb, s2, sm2, h, c)) return t;
    std::mt19937_64 gen(opt.seed);
    std::uniform_int_distribution<long> dist(1, 1000);
    for (int k = 0; k < opt.retries; ++k) {
        for (auto& x : c) x = mpq_class(dist(gen), dist(gen));
        if (auto t = try_coefficients(cb, s2, sm2, h, c)) return t;
    }
    std::vector<long> p = small_primes(s2.size());
    for (size_t i = 0; i < c.size(); ++i) c[i] = p[i];
    return try_coefficients(cb, s2, sm2, h, c);
}

std::vector<WeightedDiagram> wdd_enumerate(const ChevalleyBasis& cb, const Subsystem& sub,
                                           const MiddleElementOptions& opt) {
    const RootSystem& rs = cb.roots();
    int r = sub.rank();
    std::vector<std::pair<mpq_class, WeightedDiagram>> found;
    std::vector<int> labels(r, 0);
    while (true) {
        std::vector<mpq_class> vals(labels.begin(), labels.end());
        QVec h = sub.coweight(vals);
        if (middle_element_test(cb, sub, h, opt)) {
            mpq_class key = 0;
            for (int a : sub.positive_roots()) key += rs.pair(a, h);
            found.push_back({key, WeightedDiagram{labels, h}});
        }
        int k = 0;
        while (k < r && labels[k] == 2) labels[k++] = 0;
        if (k == r) break;
        ++labels[k];
    }
    std::sort(found.begin(), found.end(), [](const auto& a, const auto& b) {
        if (a.first != b.first) return a.first < b.first;
        return a.second.labels < b.second.labels;
    });
    std::vector<WeightedDiagram> out;
    for (auto& f : found) out.push_back(std::move(f.second));
    return out;
}

std::vector<QVec> central_directions(const RootSystem& rs, const LieTriple& t) {
    std::vector<int> supp;
    for (const auto& [r, c] : t.e.x)
        if (c != 0) supp.push_back(r);
    QMatrix m(supp.size(), rs.dim());
    for (size_t i = 0; i < supp.size(); ++i)
        for (int k = 0; k < rs.dim(); ++k) m(i, k) = rs.root(supp[i])[k];
    if (supp.empty()) {
        std::vector<QVec> id;
        for (int k = 0; k < rs.dim(); ++k) {
            QVec v(rs.dim(), mpq_class(0));
            v[k] = 1;
            id.push_back(v);
        }
        return id;
    }
    return m.kernel();
}

std::vector<int> graded_piece(const Subsystem& sub, const QVec& chi, long n) {
    std::vector<int> out;
    for (int r : sub.root_list())
        if (sub.ambient().pair(r, chi) == n) out.push_back(r);
    return out;
}

}  // namespace hecke
