#include "hecke/rational_function.hpp"

#include <cctype>
#include <stdexcept>

namespace hecke {

RationalFunction::RationalFunction(const mpq_class& c)
    : num_(mpz_class(c.get_num())), den_(mpz_class(c.get_den())) {}

RationalFunction::RationalFunction(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
    if (den_.is_zero()) throw std::invalid_argument("rational function with zero denominator");
    normalize();
}

RationalFunction RationalFunction::monomial(const mpz_class& c, int k) {
    if (k >= 0) return RationalFunction(Poly::monomial(c, k));
    RationalFunction r;
    r.num_ = Poly(c);
    r.den_ = Poly::monomial(1, -k);
    if (c == 0) r.den_ = Poly(1);
    return r;
}

RationalFunction RationalFunction::laurent(const std::vector<long>& coeffs, int low) {
    size_t first = 0, last = coeffs.size();
    while (first < last && coeffs[first] == 0) ++first;
    while (last > first && coeffs[last - 1] == 0) --last;
    RationalFunction r;
    if (first == last) return r;
    std::vector<mpz_class> c;
    for (size_t k = first; k < last; ++k) c.emplace_back(coeffs[k]);
    int lo = low + static_cast<int>(first);
    r.num_ = Poly(std::move(c));
    if (lo >= 0)
        r.num_ = r.num_.shifted(lo);
    else
        r.den_ = Poly::monomial(1, -lo);
    return r;
}

RationalFunction RationalFunction::laurent(const std::vector<mpz_class>& coeffs, int low) {
    size_t first = 0, last = coeffs.size();
    while (first < last && coeffs[first] == 0) ++first;
    while (last > first && coeffs[last - 1] == 0) --last;
    RationalFunction r;
    if (first == last) return r;
    int lo = low + static_cast<int>(first);
    r.num_ = Poly(std::vector<mpz_class>(coeffs.begin() + first, coeffs.begin() + last));
    if (lo >= 0)
        r.num_ = r.num_.shifted(lo);
    else
        r.den_ = Poly::monomial(1, -lo);
    return r;
}

void RationalFunction::normalize() {
    if (num_.is_zero()) {
        den_ = Poly(1);
        return;
    }
    if (!den_.is_constant()) {
        Poly g = Poly::gcd(num_, den_);
        if (!g.is_constant()) {
            num_ = num_.divexact(g);
            den_ = den_.divexact(g);
        }
    }
    mpz_class cn = num_.content(), cd = den_.content();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (den_.lead() < 0) g = -g;
    if (g != 1) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
}

bool RationalFunction::is_laurent() const {
    const auto& d = den_.coeffs();
    return d.back() == 1 && den_.valuation() == den_.degree();
}

int RationalFunction::low_degree() const {
    if (!is_laurent()) throw std::domain_error("not a Laurent polynomial");
    return num_.valuation() - den_.degree();
}

int RationalFunction::high_degree() const {
    if (!is_laurent()) throw std::domain_error("not a Laurent polynomial");
    return num_.degree() - den_.degree();
}

mpz_class RationalFunction::laurent_coeff(int k) const {
    if (!is_laurent()) throw std::domain_error("not a Laurent polynomial");
    return num_.coeff(k + den_.degree());
}

RationalFunction& RationalFunction::operator+=(const RationalFunction& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (num_.is_zero()) {
            den_ = Poly(1);
            return *this;
        }
        if (!den_.is_one()) normalize();
        return *this;
    }
    if (den_.is_constant() && o.den_.is_constant()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        normalize();
        return *this;
    }
    Poly g = Poly::gcd(den_, o.den_);
    if (g.is_constant()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
    } else {
        Poly d1 = den_.divexact(g), d2 = o.den_.divexact(g);
        num_ = num_ * d2 + o.num_ * d1;
        den_ = den_ * d2;
    }
    normalize();
    return *this;
}

RationalFunction& RationalFunction::operator-=(const RationalFunction& o) { return *this += -o; }

RationalFunction& RationalFunction::operator*=(const RationalFunction& o) {
    if (is_zero()) return *this;
    if (o.is_zero()) return *this = RationalFunction();
    if (den_.is_one() && o.den_.is_one()) {
        num_ *= o.num_;
        return *this;
    }
    Poly a = num_, b = den_, c = o.num_, d = o.den_;
    if (!d.is_constant() && !a.is_constant()) {
        Poly g = Poly::gcd(a, d);
        if (!g.is_constant()) {
            a = a.divexact(g);
            d = d.divexact(g);
        }
    }
    if (!b.is_constant() && !c.is_constant()) {
        Poly g = Poly::gcd(c, b);
        if (!g.is_constant()) {
            c = c.divexact(g);
            b = b.divexact(g);
        }
    }
    num_ = a * c;
    den_ = b * d;
    mpz_class cn = num_.content(), cd = den_.content();
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), cn.get_mpz_t(), cd.get_mpz_t());
    if (den_.lead() < 0) g = -g;
    if (g != 1) {
        num_ = num_.divexact(g);
        den_ = den_.divexact(g);
    }
    return *this;
}

RationalFunction& RationalFunction::operator/=(const RationalFunction& o) {
    if (o.is_zero()) throw std::domain_error("division by zero in Q(v)");
    RationalFunction inv;
    inv.num_ = o.den_;
    inv.den_ = o.num_;
    if (inv.den_.lead() < 0) {
        inv.num_ = -inv.num_;
        inv.den_ = -inv.den_;
    }
    return *this *= inv;
}

RationalFunction RationalFunction::operator-() const {
    RationalFunction r = *this;
    r.num_ = -r.num_;
    return r;
}

RationalFunction RationalFunction::pow(int k) const {
    if (k < 0) return RationalFunction(1) / pow(-k);
    RationalFunction r(1), b = *this;
    while (k > 0) {
        if (k & 1) r *= b;
        k >>= 1;
        if (k) b *= b;
    }
    return r;
}

RationalFunction RationalFunction::bar() const {
    if (is_zero()) return *this;
    int dn = num_.degree(), dd = den_.degree();
    Poly n = num_.reversed(), d = den_.reversed();
    if (dd >= dn)
        n = n.shifted(dd - dn);
    else
        d = d.shifted(dn - dd);
    RationalFunction r;
    r.num_ = std::move(n);
    r.den_ = std::move(d);
    if (r.den_.lead() < 0) {
        r.num_ = -r.num_;
        r.den_ = -r.den_;
    }
    return r;
}

RationalFunction RationalFunction::shifted(int k) const {
    if (k == 0 || is_zero()) return *this;
    return *this * monomial(1, k);
}

mpq_class RationalFunction::eval(const mpq_class& x) const {
    mpq_class d = den_.eval(x);
    if (d == 0) throw std::domain_error("evaluation at a pole");
    return num_.eval(x) / d;
}

std::string RationalFunction::to_string(const std::string& var) const {
    if (den_.is_one()) return num_.to_string(var);
    auto terms = [](const Poly& p) {
        int n = 0;
        for (const auto& c : p.coeffs())
            if (c != 0) ++n;
        return n;
    };
    std::string n = num_.to_string(var), d = den_.to_string(var);
    if (terms(num_) > 1) n = "(" + n + ")";
    bool dsimple = terms(den_) == 1 && (den_.lead() == 1 || den_.degree() == 0);
    if (!dsimple) d = "(" + d + ")";
    return n + "/" + d;
}

namespace {

class Parser {
public:
    Parser(const std::string& s, const std::string& var) : s_(s), var_(var) {}

    RationalFunction run() {
        RationalFunction r = expr();
        skip();
        if (pos_ != s_.size()) fail("trailing input");
        return r;
    }

private:
    [[noreturn]] void fail(const std::string& what) const {
        throw std::invalid_argument("cannot parse rational function '" + s_ + "': " + what);
    }
    void skip() {
        while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    }
    bool peek(char c) {
        skip();
        return pos_ < s_.size() && s_[pos_] == c;
    }
    RationalFunction expr() {
        RationalFunction r;
        bool first = true;
        while (true) {
            skip();
            int sign = 1;
            if (peek('+') || peek('-')) {
                sign = s_[pos_] == '-' ? -1 : 1;
                ++pos_;
            } else if (!first) {
                break;
            }
            RationalFunction t = term();
            if (sign < 0) t = -t;
            r += t;
            first = false;
            skip();
            if (!(peek('+') || peek('-'))) break;
        }
        return r;
    }
    RationalFunction term() {
        RationalFunction r = power();
        while (true) {
            if (peek('*')) {
                ++pos_;
                r *= power();
            } else if (peek('/')) {
                ++pos_;
                r /= power();
            } else if (starts_factor()) {
                r *= power();
            } else {
                break;
            }
        }
        return r;
    }
    bool starts_factor() {
        skip();
        if (pos_ >= s_.size()) return false;
        return s_[pos_] == '(' || s_.compare(pos_, var_.size(), var_) == 0;
    }
    RationalFunction power() {
        RationalFunction b = atom();
        if (peek('^')) {
            ++pos_;
            skip();
            bool brace = peek('{');
            if (brace) ++pos_;
            skip();
            bool neg = false;
            if (pos_ < s_.size() && (s_[pos_] == '-' || s_[pos_] == '+')) {
                neg = s_[pos_] == '-';
                ++pos_;
            }
            long e = integer();
            if (brace) {
                if (!peek('}')) fail("expected '}'");
                ++pos_;
            }
            b = b.pow(neg ? -static_cast<int>(e) : static_cast<int>(e));
        }
        return b;
    }
    long integer() {
        skip();
        size_t st = pos_;
        while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
        if (st == pos_) fail("expected integer");
        return std::stol(s_.substr(st, pos_ - st));
    }
    RationalFunction atom() {
        skip();
        if (pos_ >= s_.size()) fail("unexpected end");
        if (s_[pos_] == '(') {
            ++pos_;
            RationalFunction r = expr();
            if (!peek(')')) fail("expected ')'");
            ++pos_;
            return r;
        }
        if (s_.compare(pos_, var_.size(), var_) == 0) {
            pos_ += var_.size();
            return RationalFunction::v();
        }
        if (std::isdigit(static_cast<unsigned char>(s_[pos_]))) {
            size_t st = pos_;
            while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
            return RationalFunction(mpz_class(s_.substr(st, pos_ - st)));
        }
        fail(std::string("unexpected character '") + s_[pos_] + "'");
    }

    const std::string& s_;
    const std::string& var_;
    size_t pos_ = 0;
};

}  // namespace

RationalFunction RationalFunction::parse(const std::string& s, const std::string& var) {
    return Parser(s, var).run();
}

}  // namespace hecke
