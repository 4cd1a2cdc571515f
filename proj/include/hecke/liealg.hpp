#pragma once

#include "hecke/rootsys.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

namespace hecke {

// Element of the Lie algebra: a Cartan part in ambient coordinates plus
// root-vector coefficients indexed by ambient root.
struct LieElement {
    QVec h;
    std::map<int, mpq_class> x;

    bool is_zero() const;
    friend bool operator==(const LieElement& a, const LieElement& b);
};

// Chevalley basis {X_alpha} with [X_a, X_-a] = coroot(a), [H, X_a] = <a,H> X_a
// and [X_a, X_b] = N(a,b) X_{a+b}. Signs come from extraspecial pairs, with
// positive roots ordered by their index in the ambient system.
class ChevalleyBasis {
public:
    explicit ChevalleyBasis(const RootSystem& rs);

    const RootSystem& roots() const { return *rs_; }
    // 0 when a+b is not a root.
    int N(int a, int b) const { return n_[a * rs_->size() + b]; }
    // max{k : root(b) - k root(a) is a root}.
    int string_p(int a, int b) const;

    LieElement zero() const;
    LieElement root_vector(int a, const mpq_class& c = 1) const;
    LieElement cartan(const QVec& h) const;
    LieElement bracket(const LieElement& a, const LieElement& b) const;

    // Exhaustive Jacobi identity on root-vector triples; returns the number of
    // failing triples.
    long jacobi_failures() const;

private:
    int compute(int a, int b);
    const RootSystem* rs_;
    std::vector<int> n_;
    std::vector<int8_t> done_;
};

struct LieTriple {
    LieElement e, f;
    QVec h;
};

struct MiddleElementOptions {
    unsigned long seed = 1;
    int retries = 5;
};

// Decides whether h (in the coroot span of sub) is the middle element of a
// Lie triple whose e is generic in the h-degree-2 part of sub.
std::optional<LieTriple> middle_element_test(const ChevalleyBasis& cb, const Subsystem& sub, const QVec& h,
                                             const MiddleElementOptions& opt = {});

// Verifies [h,e]=2e, [h,f]=-2f, [e,f]=h exactly.
bool is_lie_triple(const ChevalleyBasis& cb, const LieTriple& t);

struct WeightedDiagram {
    std::vector<int> labels;  // values on the simple roots of the subsystem
    QVec h;
};

// All weighted Dynkin diagrams of sub (h = 0 included), ordered by
// sum over positive roots of <alpha,h>, then by labels.
std::vector<WeightedDiagram> wdd_enumerate(const ChevalleyBasis& cb, const Subsystem& sub,
                                           const MiddleElementOptions& opt = {});

// Basis of {nu : <alpha,nu> = 0 for alpha in supp(e)} in ambient coordinates.
std::vector<QVec> central_directions(const RootSystem& rs, const LieTriple& t);

// Roots of sub with <alpha,chi> = n.
std::vector<int> graded_piece(const Subsystem& sub, const QVec& chi, long n);

}  // namespace hecke
