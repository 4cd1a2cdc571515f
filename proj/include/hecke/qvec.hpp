#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace hecke {

using QVec = std::vector<mpq_class>;

mpq_class dot(const QVec& a, const QVec& b);
QVec operator+(const QVec& a, const QVec& b);
QVec operator-(const QVec& a, const QVec& b);
QVec operator*(const mpq_class& k, const QVec& a);
bool is_zero(const QVec& a);
// Lexicographic comparison; vectors of equal length.
int lex_compare(const QVec& a, const QVec& b);

// "3,1,1,1" or "5/2,3/2,1/2,1/2"; surrounding parentheses are tolerated.
QVec parse_qvec(const std::string& s);
// Comma-separated, e.g. "5/2,1/2,-1/2".
std::string qvec_str(const QVec& v);

struct QVecLess {
    bool operator()(const QVec& a, const QVec& b) const { return lex_compare(a, b) < 0; }
};

}  // namespace hecke
