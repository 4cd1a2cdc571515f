#include "hecke/qvec.hpp"

#include <sstream>
#include <stdexcept>

namespace hecke {

mpq_class dot(const QVec& a, const QVec& b) {
    mpq_class s = 0;
    for (size_t i = 0; i < a.size(); ++i)
        if (a[i] != 0 && b[i] != 0) s += a[i] * b[i];
    return s;
}

QVec operator+(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

QVec operator-(const QVec& a, const QVec& b) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

QVec operator*(const mpq_class& k, const QVec& a) {
    QVec r(a.size());
    for (size_t i = 0; i < a.size(); ++i) r[i] = k * a[i];
    return r;
}

bool is_zero(const QVec& a) {
    for (const auto& x : a)
        if (x != 0) return false;
    return true;
}

int lex_compare(const QVec& a, const QVec& b) {
    for (size_t i = 0; i < a.size() && i < b.size(); ++i) {
        int c = cmp(a[i], b[i]);
        if (c != 0) return c < 0 ? -1 : 1;
    }
    if (a.size() != b.size()) return a.size() < b.size() ? -1 : 1;
    return 0;
}

QVec parse_qvec(const std::string& text) {
    std::string s;
    for (char c : text)
        if (c != ' ' && c != '(' && c != ')' && c != '[' && c != ']') s += c;
    QVec v;
    std::stringstream ss(s);
    std::string tok;
    while (std::getline(ss, tok, ',')) {
        if (tok.empty()) throw std::invalid_argument("empty coordinate in '" + text + "'");
        if (tok[0] == '+') tok = tok.substr(1);
        mpq_class q;
        if (q.set_str(tok, 10) != 0) throw std::invalid_argument("bad rational '" + tok + "'");
        q.canonicalize();
        v.push_back(q);
    }
    if (v.empty()) throw std::invalid_argument("empty vector '" + text + "'");
    return v;
}

std::string qvec_str(const QVec& v) {
    std::string s;
    for (size_t i = 0; i < v.size(); ++i) {
        if (i) s += ",";
        s += v[i].get_str();
    }
    return s;
}

}  // namespace hecke
