#pragma once

#include "hecke/matrix.hpp"
#include "hecke/rootsys.hpp"

#include <map>
#include <memory>
#include <string>
#include <vector>

namespace hecke {

enum class EMode { Lusztig, One };

// Element of K(chi): coset index -> nonzero coefficient.
using KVector = std::map<int, RationalFunction>;

KVector kv_add(const KVector& a, const KVector& b);
KVector kv_sub(const KVector& a, const KVector& b);
KVector kv_scale(const RationalFunction& k, const KVector& a);
// Applies bar to every coefficient.
KVector kv_bar(const KVector& a);

// Small Laurent polynomial with machine-integer coefficients:
// sum_k c[k] v^(low+k).
struct LaurentInt {
    int low = 0;
    std::vector<long> c;
    RationalFunction to_rf() const { return RationalFunction::laurent(c, low); }
};

// K(chi) for a root subsystem R of the ambient system and the character chi
// restricted to R (stored as its orthogonal projection onto the span of R).
class GradedContext {
public:
    GradedContext(const RootSystem& rs, const RootSet& roots, const QVec& chi);

    const RootSystem& ambient() const { return *rs_; }
    const Subsystem& subsystem() const { return sub_; }
    const QVec& chi() const { return chi_; }
    const WeylGroup& weyl() const { return *weyl_; }

    size_t size() const { return labels_.size(); }
    const QVec& label(size_t i) const { return labels_[i]; }
    // Minimal-length representative (index into weyl()).
    size_t rep(size_t i) const { return members_[i][0]; }
    const std::vector<size_t>& members(size_t i) const { return members_[i]; }
    size_t coset_of(size_t elem) const { return coset_of_[elem]; }
    long find(const QVec& label) const;
    size_t stabilizer_order() const { return members_.empty() ? 0 : members_[0].size(); }
    // Reduced word of the representative, e.g. "s1s2"; "1" for the identity.
    std::string word(size_t i) const;

    const std::vector<int>& r2() const { return r2_; }
    const std::vector<int>& r0() const { return r0_; }
    // c = #r_2 - #r_0.
    int c() const { return static_cast<int>(r2_.size()) - static_cast<int>(r0_.size()); }
    bool central() const { return r2_.empty() && r0_.size() == sub_.root_list().size(); }

    // tau on group elements (indices into weyl()).
    int tau(size_t w1, size_t w2) const;
    const RootSet& r2_mask(size_t w) const { return m2_[w]; }
    const RootSet& r0_mask(size_t w) const { return m0_[w]; }

    // Gram entry with e_chi = 1.
    const LaurentInt& gram_entry(size_t i, size_t j) const { return gram_[i * size() + j]; }
    RationalFunction e_factor(EMode mode) const;
    RFMatrix gram_matrix(EMode mode = EMode::One) const;

    // Bilinear form with e_chi = 1.
    RationalFunction pair(const KVector& x, const KVector& y) const;
    // Gram * y, one entry per coset.
    std::vector<RationalFunction> gram_apply(const KVector& y) const;
    bool in_radical(const KVector& x) const;
    // Exact kernel of the Gram matrix over Q(v).
    std::vector<KVector> radical() const;
    // dim K/Rad. Exact elimination over Q(v) up to exact_limit cosets; beyond
    // that, the rank of integer specializations modulo large primes.
    size_t irr_count(size_t exact_limit = 64) const;

    KVector sigma(const KVector& x) const;
    size_t longest_element() const { return weyl_->longest(); }

private:
    const RootSystem* rs_;
    Subsystem sub_;
    QVec chi_;
    std::unique_ptr<WeylGroup> weyl_;
    std::vector<QVec> labels_;
    std::vector<std::vector<size_t>> members_;
    std::vector<size_t> coset_of_;
    std::map<QVec, size_t, QVecLess> index_;
    std::vector<int> r2_, r0_;
    std::vector<RootSet> m2_, m0_;
    std::vector<LaurentInt> gram_;
};

// Orthogonal projection of x onto the span of the roots of sub.
QVec project_to_span(const Subsystem& sub, const QVec& x);

// Induction from the K-space of a Levi context to the parent context along the
// parabolic whose nilradical is {alpha : <alpha,d> > 0}. The element w_p making
// d dominant in the parent Weyl group carries the sub coset of u to the parent
// coset of w_p u.
KVector induce(const GradedContext& parent, const GradedContext& sub, const QVec& d, const KVector& x);

// Evaluation of a coset basis vector; "[3,1,1]".
std::string coset_label_str(const GradedContext& ctx, size_t i);

}  // namespace hecke
