#include "hecke/poly.hpp"

#include <algorithm>
#include <stdexcept>

namespace hecke {

Poly::Poly(long c) {
    if (c != 0) c_.push_back(mpz_class(c));
}

Poly::Poly(const mpz_class& c) {
    if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const mpz_class& c, int deg) {
    Poly p;
    if (c == 0) return p;
    p.c_.assign(deg + 1, mpz_class(0));
    p.c_[deg] = c;
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

mpz_class Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

int Poly::valuation() const {
    for (size_t i = 0; i < c_.size(); ++i)
        if (c_[i] != 0) return static_cast<int>(i);
    return -1;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
    trim();
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    Poly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (size_t j = 0; j < b.c_.size(); ++j) {
            if (b.c_[j] == 0) continue;
            mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
        }
    }
    r.trim();
    return r;
}

Poly& Poly::operator*=(const Poly& o) {
    *this = *this * o;
    return *this;
}

Poly& Poly::operator*=(const mpz_class& k) {
    if (k == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= k;
    return *this;
}

Poly Poly::operator-() const {
    Poly r = *this;
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly Poly::shifted(int k) const {
    if (is_zero() || k == 0) return *this;
    Poly r;
    if (k > 0) {
        r.c_.assign(k, mpz_class(0));
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
        return r;
    }
    int drop = -k;
    if (valuation() < drop) throw std::domain_error("Poly::shifted: negative power");
    r.c_.assign(c_.begin() + drop, c_.end());
    return r;
}

Poly Poly::reversed() const {
    Poly r = *this;
    std::reverse(r.c_.begin(), r.c_.end());
    r.trim();
    return r;
}

Poly Poly::substitute_square() const {
    Poly r;
    if (is_zero()) return r;
    r.c_.assign(2 * c_.size() - 1, mpz_class(0));
    for (size_t i = 0; i < c_.size(); ++i) r.c_[2 * i] = c_[i];
    return r;
}

Poly Poly::substitute_neg() const {
    Poly r = *this;
    for (size_t i = 1; i < r.c_.size(); i += 2) r.c_[i] = -r.c_[i];
    return r;
}

mpz_class Poly::content() const {
    mpz_class g = 0;
    for (const auto& x : c_) {
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly Poly::divexact(const mpz_class& k) const {
    Poly r = *this;
    for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), k.get_mpz_t());
    return r;
}

Poly Poly::primitive_part() const {
    if (is_zero()) return *this;
    mpz_class g = content();
    if (lead() < 0) g = -g;
    if (g == 1) return *this;
    return divexact(g);
}

Poly Poly::divexact(const Poly& b) const {
    if (b.is_zero()) throw std::domain_error("Poly::divexact: division by zero");
    if (is_zero()) return Poly();
    if (b.degree() == 0) {
        Poly r = *this;
        for (auto& x : r.c_) {
            if (!mpz_divisible_p(x.get_mpz_t(), b.c_[0].get_mpz_t()))
                throw std::domain_error("Poly::divexact: not divisible");
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), b.c_[0].get_mpz_t());
        }
        return r;
    }
    int da = degree(), db = b.degree();
    if (da < db) throw std::domain_error("Poly::divexact: not divisible");
    std::vector<mpz_class> rem = c_;
    std::vector<mpz_class> q(da - db + 1, mpz_class(0));
    const mpz_class& lb = b.lead();
    for (int k = da - db; k >= 0; --k) {
        mpz_class& top = rem[k + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
            throw std::domain_error("Poly::divexact: not divisible");
        mpz_divexact(q[k].get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (int j = 0; j <= db; ++j)
            mpz_submul(rem[k + j].get_mpz_t(), q[k].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    for (int j = 0; j < db; ++j)
        if (rem[j] != 0) throw std::domain_error("Poly::divexact: not divisible");
    return Poly(std::move(q));
}

Poly Poly::pseudo_rem(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("Poly::pseudo_rem: zero divisor");
    std::vector<mpz_class> r = a.c_;
    int db = b.degree();
    const mpz_class& lb = b.lead();
    int dr = static_cast<int>(r.size()) - 1;
    while (dr >= db) {
        mpz_class t = r[dr];
        for (auto& x : r) x *= lb;
        for (int j = 0; j <= db; ++j) r[dr - db + j] -= t * b.c_[j];
        while (!r.empty() && r.back() == 0) r.pop_back();
        dr = static_cast<int>(r.size()) - 1;
    }
    return Poly(std::move(r));
}

Poly Poly::gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return b.primitive_part();
    if (b.is_zero()) return a.primitive_part();
    int va = a.valuation(), vb = b.valuation();
    int vg = std::min(va, vb);
    Poly x = a.shifted(-va).primitive_part();
    Poly y = b.shifted(-vb).primitive_part();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (!y.is_zero()) {
        if (y.degree() == 0) {
            x = Poly(1);
            break;
        }
        Poly r = pseudo_rem(x, y);
        x = std::move(y);
        y = r.primitive_part();
    }
    return x.primitive_part().shifted(vg);
}

mpz_class Poly::eval(const mpz_class& x) const {
    mpz_class r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + c_[i];
    return r;
}

mpq_class Poly::eval(const mpq_class& x) const {
    mpq_class r = 0;
    for (size_t i = c_.size(); i-- > 0;) r = r * x + mpq_class(c_[i]);
    return r;
}

std::string Poly::to_string(const std::string& var) const {
    if (is_zero()) return "0";
    std::string s;
    for (size_t i = 0; i < c_.size(); ++i) {
        if (c_[i] == 0) continue;
        mpz_class a = abs(c_[i]);
        bool neg = c_[i] < 0;
        if (s.empty()) {
            if (neg) s += "-";
        } else {
            s += neg ? "-" : "+";
        }
        if (i == 0) {
            s += a.get_str();
            continue;
        }
        if (a != 1) s += a.get_str();
        s += var;
        if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
}

}  // namespace hecke
