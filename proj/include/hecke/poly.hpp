#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hecke {

// Dense univariate polynomial over Z, coefficients stored from degree 0 up.
// The zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    Poly(long c);
    Poly(const mpz_class& c);
    explicit Poly(std::vector<mpz_class> coeffs);

    static Poly monomial(const mpz_class& c, int deg);
    static Poly var() { return monomial(1, 1); }

    int degree() const { return static_cast<int>(c_.size()) - 1; }
    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    bool is_constant() const { return c_.size() <= 1; }
    const mpz_class& lead() const { return c_.back(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(int k) const;
    // Lowest degree with a nonzero coefficient; -1 for zero.
    int valuation() const;

    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const Poly& o);
    Poly& operator*=(const mpz_class& k);
    Poly operator-() const;

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Multiply by v^k (k >= 0) or divide by v^-k when the result stays polynomial.
    Poly shifted(int k) const;
    // p(1/v) * v^deg(p).
    Poly reversed() const;
    // Coefficients of p(v^2) or p(-v).
    Poly substitute_square() const;
    Poly substitute_neg() const;

    mpz_class content() const;
    Poly primitive_part() const;
    Poly divexact(const mpz_class& k) const;
    // Exact division; throws if b does not divide *this in Z[v].
    Poly divexact(const Poly& b) const;
    // Pseudo-remainder of a by b (b nonzero).
    static Poly pseudo_rem(const Poly& a, const Poly& b);
    // Primitive gcd with positive leading coefficient.
    static Poly gcd(const Poly& a, const Poly& b);

    mpz_class eval(const mpz_class& x) const;
    mpq_class eval(const mpq_class& x) const;

    std::string to_string(const std::string& var = "v") const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

}  // namespace hecke
