#pragma once

#include "hecke/kspace.hpp"
#include "hecke/liealg.hpp"
#include "hecke/orbits.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hecke {

struct BasisElement {
    int orbit = 0;  // index into Family::orbits
    int local = 0;  // ordinal within the orbit block
    KVector vec;
};

// One sign of the family: Z and U aligned index by index, grouped by orbit in
// orbit order, open block last. coeff[j] holds the coefficients of U_j in the
// Z basis (modulo the radical).
struct SignedFamily {
    std::vector<BasisElement> z, u;
    std::vector<std::vector<RationalFunction>> coeff;
    // Gram matrix of the induced elements (primed part) and its inverse.
    RFMatrix m, m_inv;
    // a'-coefficients: row i expresses the projection of bar(Z'_i) on span Z'.
    RFMatrix a_prime;
    // Indices into the other sign's primed list selected for the open block.
    std::vector<int> selected;
    size_t primed() const { return m.rows(); }
};

struct Family {
    const GradedContext* ctx = nullptr;
    std::vector<OrbitParam> orbits;
    int open = 0;
    SignedFamily plus, minus;
    // Number of local systems per orbit.
    std::vector<int> block;

    size_t size() const { return minus.z.size(); }
    const SignedFamily& side(int sign) const { return sign > 0 ? plus : minus; }
    // "5t", "12_3", "4a".
    std::string element_label(size_t i) const;
    int element_dim(size_t i) const { return orbits[minus.z[i].orbit].dim; }
};

struct KLMatrix {
    // p[i][j] coefficient lists in q, low degree first.
    std::vector<std::vector<Poly>> p;
    std::vector<int> epsilon;
};

struct Check {
    std::string name;
    bool ok;
    std::string detail;
};

// Owns a root system, its Chevalley basis and the memo tables of the recursion.
class Engine {
public:
    explicit Engine(const std::string& cartan, MiddleElementOptions opt = {});

    const RootSystem& roots() const { return rs_; }
    const ChevalleyBasis& chevalley() const { return *cb_; }
    WddCache& wdd() { return *wdd_; }

    // Context of a subsystem with the character restricted to it.
    const GradedContext& context(const RootSet& roots, const QVec& chi);
    const GradedContext& full_context(const QVec& chi) { return context(rs_.all(), chi); }
    const Family& family(const GradedContext& ctx);

    // Checks every chi in the full system passes the middle-element test.
    bool is_middle_element(const QVec& chi);
    // Dominant representative of chi.
    QVec dominant(const QVec& chi) const;

    size_t contexts_built() const { return contexts_.size(); }

private:
    Family build(const GradedContext& ctx);
    RootSystem rs_;
    std::unique_ptr<ChevalleyBasis> cb_;
    std::unique_ptr<WddCache> wdd_;
    std::map<std::string, std::unique_ptr<GradedContext>> contexts_;
    std::map<const GradedContext*, std::unique_ptr<Family>> families_;
};

// Normalization of the zero-orbit element of a central context:
// v^N / sum_{w in W} v^(2 l(w)), N = number of positive roots.
RationalFunction central_normalization(const GradedContext& ctx);

// Minus-side multiplicity matrix: n[i][j] = coefficient of Z_-(i) in U_-(j).
std::vector<std::vector<RationalFunction>> multiplicity_matrix(const Family& f, int sign = -1);

// Conversion eps_i eps_j N[i][j] = v^(dim_j - dim_i) P_ij(v^-2). Throws on
// an entry that does not convert or on inconsistent signs.
KLMatrix kl_matrix(const Family& f);

// IM pairing: minus index -> plus index.
std::vector<int> im_involution(const Family& f);

// Structural checks of a family (orthogonality across orbits, invertibility,
// biorthogonality, triangularity, Gram of the final bases).
std::vector<Check> family_checks(const Family& f);

std::string poly_q_str(const Poly& p);

}  // namespace hecke
