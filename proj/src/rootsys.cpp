#include "hecke/rootsys.hpp"

#include "hecke/matrix.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

namespace hecke {

std::vector<CartanFactor> parse_cartan(const std::string& label) {
    std::vector<CartanFactor> out;
    size_t pos = 0;
    while (pos < label.size()) {
        size_t end = label.find_first_of("xX*", pos);
        if (end == std::string::npos) end = label.size();
        std::string tok = label.substr(pos, end - pos);
        if (tok.size() < 2) throw std::invalid_argument("bad Cartan label '" + label + "'");
        char t = static_cast<char>(std::toupper(static_cast<unsigned char>(tok[0])));
        int n = 0;
        try {
            n = std::stoi(tok.substr(1));
        } catch (...) {
            throw std::invalid_argument("bad Cartan label '" + label + "'");
        }
        bool ok = (t == 'A' && n >= 1) || (t == 'B' && n >= 2) || (t == 'C' && n >= 2) || (t == 'D' && n >= 3) ||
                  (t == 'G' && n == 2) || (t == 'F' && n == 4);
        if (!ok) throw std::invalid_argument("unsupported Cartan type '" + tok + "'");
        out.push_back({t, n});
        pos = end + 1;
    }
    if (out.empty()) throw std::invalid_argument("empty Cartan label");
    return out;
}

WeylElement operator*(const WeylElement& a, const WeylElement& b) {
    WeylElement c;
    c.perm.resize(b.perm.size());
    for (size_t r = 0; r < b.perm.size(); ++r) c.perm[r] = a.perm[b.perm[r]];
    return c;
}

size_t WeylElementHash::operator()(const WeylElement& w) const {
    size_t h = 1469598103934665603ull;
    for (auto x : w.perm) {
        h ^= x;
        h *= 1099511628211ull;
    }
    return h;
}

namespace {

QVec unit(int dim, int i, long k = 1) {
    QVec v(dim, mpq_class(0));
    v[i] = k;
    return v;
}

std::vector<QVec> factor_simple(const CartanFactor& f, int& dim) {
    std::vector<QVec> s;
    int n = f.rank;
    switch (f.type) {
        case 'A':
            dim = n + 1;
            for (int i = 0; i < n; ++i) s.push_back(unit(dim, i) - unit(dim, i + 1));
            break;
        case 'B':
        case 'C':
        case 'D':
            dim = n;
            for (int i = 0; i + 1 < n; ++i) s.push_back(unit(dim, i) - unit(dim, i + 1));
            if (f.type == 'B') s.push_back(unit(dim, n - 1));
            if (f.type == 'C') s.push_back(unit(dim, n - 1, 2));
            if (f.type == 'D') s.push_back(unit(dim, n - 2) + unit(dim, n - 1));
            break;
        case 'G':
            dim = 3;
            s.push_back(parse_qvec("1,-1,0"));
            s.push_back(parse_qvec("-2,1,1"));
            break;
        case 'F':
            dim = 4;
            s.push_back(parse_qvec("1,-1,-1,-1"));
            s.push_back(parse_qvec("0,0,0,2"));
            s.push_back(parse_qvec("0,0,1,-1"));
            s.push_back(parse_qvec("0,1,-1,0"));
            break;
        default:
            throw std::invalid_argument("unsupported Cartan type");
    }
    return s;
}

QVec reflect_vec(const QVec& a, const QVec& x) {
    mpq_class k = 2 * dot(a, x) / dot(a, a);
    if (k == 0) return x;
    return x - k * a;
}

}  // namespace

RootSystem RootSystem::build(const std::string& label) {
    std::vector<CartanFactor> factors = parse_cartan(label);
    std::vector<std::vector<QVec>> parts;
    std::vector<int> dims;
    int total = 0;
    for (const auto& f : factors) {
        int d = 0;
        parts.push_back(factor_simple(f, d));
        dims.push_back(d);
        total += d;
    }
    std::vector<QVec> simple;
    int off = 0;
    for (size_t k = 0; k < parts.size(); ++k) {
        for (const auto& v : parts[k]) {
            QVec w(total, mpq_class(0));
            for (int i = 0; i < dims[k]; ++i) w[off + i] = v[i];
            simple.push_back(w);
        }
        off += dims[k];
    }
    std::string canon;
    for (size_t k = 0; k < factors.size(); ++k) {
        if (k) canon += "x";
        canon += std::string(1, factors[k].type) + std::to_string(factors[k].rank);
    }
    return from_simple(canon, factors, simple);
}

RootSystem RootSystem::from_simple(std::string label, std::vector<CartanFactor> factors, std::vector<QVec> simple) {
    RootSystem rs;
    rs.label_ = std::move(label);
    rs.factors_ = std::move(factors);
    rs.dim_ = simple.empty() ? 0 : static_cast<int>(simple[0].size());
    size_t r = simple.size();

    // Closure of the simple roots under the simple reflections.
    std::vector<QVec> roots = simple;
    std::map<QVec, int, QVecLess> seen;
    for (size_t i = 0; i < roots.size(); ++i) seen[roots[i]] = static_cast<int>(i);
    for (size_t i = 0; i < roots.size(); ++i) {
        for (size_t j = 0; j < r; ++j) {
            QVec x = reflect_vec(simple[j], roots[i]);
            if (!seen.count(x)) {
                seen[x] = static_cast<int>(roots.size());
                roots.push_back(x);
                if (roots.size() > static_cast<size_t>(kMaxRoots))
                    throw std::invalid_argument("root system too large");
            }
        }
    }

    QMatrix gram(r, r);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) gram(i, j) = dot(simple[i], simple[j]);
    QMatrix ginv = gram.inverse();
    rs.proj_.assign(r, QVec(rs.dim_, mpq_class(0)));
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j)
            if (ginv(i, j) != 0) rs.proj_[i] = rs.proj_[i] + ginv(i, j) * simple[j];

    // Positive roots sorted by height, then lexicographically descending.
    std::vector<std::pair<int, QVec>> keyed;
    for (const auto& x : roots) {
        mpq_class h = 0;
        bool allpos = true, allneg = true;
        for (size_t i = 0; i < r; ++i) {
            mpq_class c = dot(rs.proj_[i], x);
            if (c.get_den() != 1) throw std::logic_error("non-integral root coordinates");
            if (c < 0) allpos = false;
            if (c > 0) allneg = false;
            h += c;
        }
        if (!allpos && !allneg) throw std::logic_error("simple roots do not form a base");
        keyed.push_back({static_cast<int>(h.get_num().get_si()), x});
    }
    std::sort(keyed.begin(), keyed.end(), [](const auto& a, const auto& b) {
        bool pa = a.first > 0, pb = b.first > 0;
        if (pa != pb) return pa;
        int ha = std::abs(a.first), hb = std::abs(b.first);
        if (ha != hb) return ha < hb;
        return lex_compare(a.second, b.second) > 0;
    });
    for (auto& [h, x] : keyed) {
        rs.index_[x] = static_cast<int>(rs.roots_.size());
        rs.roots_.push_back(x);
        rs.height_.push_back(h);
        rs.positive_.push_back(h > 0);
        rs.coroots_.push_back(mpq_class(2) / dot(x, x) * x);
    }
    int n = rs.size();
    for (const auto& s : simple) rs.simple_.push_back(rs.index_.at(s));
    rs.neg_.resize(n);
    rs.sum_.assign(static_cast<size_t>(n) * n, -1);
    rs.refl_.assign(static_cast<size_t>(n) * n, -1);
    for (int i = 0; i < n; ++i) {
        QVec m(rs.dim_);
        for (int k = 0; k < rs.dim_; ++k) m[k] = -rs.roots_[i][k];
        rs.neg_[i] = rs.index_.at(m);
        for (int j = 0; j < n; ++j) {
            rs.sum_[i * n + j] = rs.find(rs.roots_[i] + rs.roots_[j]);
            rs.refl_[i * n + j] = rs.index_.at(reflect_vec(rs.roots_[i], rs.roots_[j]));
        }
    }
    return rs;
}

int RootSystem::find(const QVec& v) const {
    auto it = index_.find(v);
    return it == index_.end() ? -1 : it->second;
}

QVec RootSystem::reflect(int i, const QVec& x) const {
    mpq_class k = dot(roots_[i], x);
    if (k == 0) return x;
    return x - k * coroots_[i];
}

WeylElement RootSystem::identity() const {
    WeylElement w;
    w.perm.resize(size());
    for (int i = 0; i < size(); ++i) w.perm[i] = static_cast<uint16_t>(i);
    return w;
}

WeylElement RootSystem::reflection(int i) const {
    WeylElement w;
    w.perm.resize(size());
    for (int j = 0; j < size(); ++j) w.perm[j] = static_cast<uint16_t>(reflect_root(i, j));
    return w;
}

QVec RootSystem::apply(const WeylElement& w, const QVec& x) const {
    QVec y = x;
    for (size_t i = 0; i < simple_.size(); ++i) {
        mpq_class c = dot(proj_[i], x);
        if (c == 0) continue;
        const QVec& a = roots_[simple_[i]];
        const QVec& b = roots_[w.perm[simple_[i]]];
        for (int k = 0; k < dim_; ++k) y[k] += c * (b[k] - a[k]);
    }
    return y;
}

QVec RootSystem::two_rho_check() const {
    QVec s(dim_, mpq_class(0));
    for (int i = 0; i < size(); ++i)
        if (positive_[i]) s = s + coroots_[i];
    return s;
}

RootSet RootSystem::all() const {
    RootSet s;
    for (int i = 0; i < size(); ++i) s.set(i);
    return s;
}

Subsystem::Subsystem(const RootSystem& rs, const RootSet& roots) : rs_(&rs), set_(roots) {
    for (int i = 0; i < rs.size(); ++i) {
        if (!set_[i]) continue;
        if (!set_[rs.negative_of(i)]) throw std::invalid_argument("root subsystem not closed under negation");
        list_.push_back(i);
        if (rs.positive(i)) pos_.push_back(i);
    }
    for (int a : pos_) {
        bool decomposable = false;
        for (int b : pos_) {
            int d = rs.sum(a, rs.negative_of(b));
            if (d >= 0 && set_[d] && rs.positive(d)) {
                decomposable = true;
                break;
            }
        }
        if (!decomposable) simple_.push_back(a);
    }
    // Ambient simple roots keep their ambient order and come first.
    auto key = [&rs](int a) {
        const auto& s = rs.simple();
        auto it = std::find(s.begin(), s.end(), a);
        return it == s.end() ? static_cast<long>(s.size()) + a : static_cast<long>(it - s.begin());
    };
    std::sort(simple_.begin(), simple_.end(), [&](int a, int b) { return key(a) < key(b); });
}

Subsystem Subsystem::standard_levi(const std::vector<int>& which) const {
    RootSet s;
    std::vector<int> gens, todo;
    for (int k : which) gens.push_back(simple_[k]);
    for (int g : gens) {
        if (!s[g]) {
            s.set(g);
            todo.push_back(g);
        }
    }
    while (!todo.empty()) {
        int x = todo.back();
        todo.pop_back();
        for (int g : gens) {
            int y = rs_->reflect_root(g, x);
            if (!s[y]) {
                s.set(y);
                todo.push_back(y);
            }
        }
    }
    return Subsystem(*rs_, s);
}

RootSet Subsystem::graded(const QVec& x, const mpq_class& n) const {
    RootSet s;
    for (int r : list_)
        if (rs_->pair(r, x) == n) s.set(r);
    return s;
}

Subsystem Subsystem::centralizer(const QVec& x) const { return Subsystem(*rs_, graded(x, 0)); }

bool Subsystem::is_dominant(const QVec& x) const {
    for (int a : simple_)
        if (rs_->pair(a, x) < 0) return false;
    return true;
}

std::pair<QVec, WeylElement> Subsystem::to_dominant(const QVec& x) const {
    QVec y = x;
    WeylElement w = rs_->identity();
    while (true) {
        int hit = -1;
        for (int a : simple_)
            if (rs_->pair(a, y) < 0) {
                hit = a;
                break;
            }
        if (hit < 0) break;
        y = rs_->reflect(hit, y);
        w = rs_->reflection(hit) * w;
    }
    return {y, w};
}

QVec Subsystem::coweight(const std::vector<mpq_class>& values) const {
    size_t r = simple_.size();
    if (values.size() != r) throw std::invalid_argument("coweight: wrong number of values");
    QVec h(rs_->dim(), mpq_class(0));
    if (r == 0) return h;
    QMatrix cm(r, r);
    for (size_t i = 0; i < r; ++i)
        for (size_t j = 0; j < r; ++j) cm(i, j) = rs_->pair(simple_[i], rs_->coroot(simple_[j]));
    auto x = cm.solve(values);
    if (!x) throw std::logic_error("singular Cartan matrix");
    for (size_t j = 0; j < r; ++j)
        if ((*x)[j] != 0) h = h + (*x)[j] * rs_->coroot(simple_[j]);
    return h;
}

int Subsystem::length(const WeylElement& w) const {
    int l = 0;
    for (int a : pos_)
        if (!rs_->positive(w.perm[a])) ++l;
    return l;
}

std::vector<std::vector<int>> Subsystem::components() const {
    size_t r = simple_.size();
    std::vector<int> comp(r, -1);
    std::vector<std::vector<int>> out;
    for (size_t i = 0; i < r; ++i) {
        if (comp[i] >= 0) continue;
        std::vector<int> c{static_cast<int>(i)};
        comp[i] = static_cast<int>(out.size());
        for (size_t k = 0; k < c.size(); ++k)
            for (size_t j = 0; j < r; ++j)
                if (comp[j] < 0 && dot(rs_->root(simple_[c[k]]), rs_->root(simple_[j])) != 0) {
                    comp[j] = comp[i];
                    c.push_back(static_cast<int>(j));
                }
        std::sort(c.begin(), c.end());
        out.push_back(c);
    }
    return out;
}

std::string Subsystem::cartan_type() const {
    if (simple_.empty()) return "T";
    std::vector<std::string> names;
    for (const auto& c : components()) {
        int r = static_cast<int>(c.size());
        Subsystem sub = standard_levi(c);
        int n = static_cast<int>(sub.list_.size());
        mpq_class maxlen = 0;
        for (int k : c) maxlen = std::max(maxlen, dot(rs_->root(simple_[k]), rs_->root(simple_[k])));
        int nlong = 0;
        for (int k : c)
            if (dot(rs_->root(simple_[k]), rs_->root(simple_[k])) == maxlen) ++nlong;
        std::string t;
        if (nlong == r) {
            if (n == r * (r + 1))
                t = "A" + std::to_string(r);
            else if (n == 2 * r * (r - 1))
                t = "D" + std::to_string(r);
            else
                t = "E" + std::to_string(r);
        } else if (r == 2 && n == 12) {
            t = "G2";
        } else if (r == 4 && n == 48) {
            t = "F4";
        } else if (r == 2 || nlong == r - 1) {
            t = "B" + std::to_string(r);
        } else {
            t = "C" + std::to_string(r);
        }
        names.push_back(t);
    }
    std::string s;
    for (size_t i = 0; i < names.size(); ++i) s += (i ? "x" : "") + names[i];
    return s;
}

WeylGroup::WeylGroup(const Subsystem& sub, size_t max_size) : sub_(sub) {
    const RootSystem& rs = sub.ambient();
    std::vector<WeylElement> gens;
    for (int a : sub.simple()) gens.push_back(rs.reflection(a));
    WeylElement e = rs.identity();
    elems_.push_back(e);
    len_.push_back(0);
    parent_.push_back(-1);
    gen_.push_back(-1);
    idx_[e] = 0;
    for (size_t i = 0; i < elems_.size(); ++i) {
        for (size_t g = 0; g < gens.size(); ++g) {
            WeylElement w = elems_[i] * gens[g];
            if (idx_.count(w)) continue;
            if (elems_.size() >= max_size) throw std::length_error("Weyl group exceeds the size bound");
            idx_[w] = elems_.size();
            elems_.push_back(std::move(w));
            len_.push_back(len_[i] + 1);
            parent_.push_back(static_cast<int>(i));
            gen_.push_back(static_cast<int>(g));
        }
    }
}

std::vector<int> WeylGroup::word(size_t i) const {
    std::vector<int> w;
    for (long k = static_cast<long>(i); parent_[k] >= 0; k = parent_[k]) w.push_back(gen_[k]);
    std::reverse(w.begin(), w.end());
    return w;
}

long WeylGroup::index(const WeylElement& w) const {
    auto it = idx_.find(w);
    return it == idx_.end() ? -1 : static_cast<long>(it->second);
}

size_t WeylGroup::longest() const { return elems_.size() - 1; }

}  // namespace hecke
