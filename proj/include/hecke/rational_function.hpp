#pragma once

#include "hecke/poly.hpp"

#include <string>

namespace hecke {

// Element of Q(v), kept in lowest terms: numerator and denominator in Z[v],
// coprime, with joint integer content 1 and positive leading denominator
// coefficient. Zero is 0/1.
class RationalFunction {
public:
    RationalFunction() : den_(1) {}
    RationalFunction(long c) : num_(c), den_(1) {}
    RationalFunction(const mpz_class& c) : num_(c), den_(1) {}
    RationalFunction(const mpq_class& c);
    RationalFunction(Poly p) : num_(std::move(p)), den_(1) {}
    // Normalizes; throws std::invalid_argument on a zero denominator.
    RationalFunction(Poly num, Poly den);

    // (c) v^k, allowing negative k.
    static RationalFunction monomial(const mpz_class& c, int k);
    static RationalFunction v() { return monomial(1, 1); }
    // sum_k coeffs[k] v^(low+k), built without a gcd.
    static RationalFunction laurent(const std::vector<long>& coeffs, int low);
    static RationalFunction laurent(const std::vector<mpz_class>& coeffs, int low);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }

    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    // True when the denominator is 1.
    bool is_polynomial() const { return den_.is_one(); }
    // True when the denominator is a power of v.
    bool is_laurent() const;
    // Lowest and highest exponents of a Laurent polynomial.
    int low_degree() const;
    int high_degree() const;
    // Coefficient of v^k of a Laurent polynomial.
    mpz_class laurent_coeff(int k) const;

    RationalFunction& operator+=(const RationalFunction& o);
    RationalFunction& operator-=(const RationalFunction& o);
    RationalFunction& operator*=(const RationalFunction& o);
    RationalFunction& operator/=(const RationalFunction& o);
    RationalFunction operator-() const;

    friend RationalFunction operator+(RationalFunction a, const RationalFunction& b) { return a += b; }
    friend RationalFunction operator-(RationalFunction a, const RationalFunction& b) { return a -= b; }
    friend RationalFunction operator*(RationalFunction a, const RationalFunction& b) { return a *= b; }
    friend RationalFunction operator/(RationalFunction a, const RationalFunction& b) { return a /= b; }
    friend bool operator==(const RationalFunction& a, const RationalFunction& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }
    friend bool operator!=(const RationalFunction& a, const RationalFunction& b) { return !(a == b); }

    RationalFunction pow(int k) const;
    // The substitution v -> 1/v.
    RationalFunction bar() const;
    // Multiply by v^k.
    RationalFunction shifted(int k) const;

    mpq_class eval(const mpq_class& x) const;

    // Canonical form, e.g. "v/(1+v^2)", "-1+v^2", "(-1+v^2)/v^2".
    std::string to_string(const std::string& var = "v") const;
    // Accepts the canonical grammar and more generally + - * / ^ with
    // parentheses, integer literals and the variable; negative exponents allowed.
    static RationalFunction parse(const std::string& s, const std::string& var = "v");

private:
    void normalize();
    Poly num_, den_;
};

using RF = RationalFunction;

inline bool is_zero(const RationalFunction& f) { return f.is_zero(); }
inline bool is_zero(const mpq_class& q) { return q == 0; }

}  // namespace hecke
