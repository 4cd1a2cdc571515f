#pragma once

#include "hecke/qvec.hpp"

#include <bitset>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <unordered_map>
#include <vector>

namespace hecke {

constexpr int kMaxRoots = 256;
using RootSet = std::bitset<kMaxRoots>;

struct CartanFactor {
    char type;  // 'A', 'B', 'C', 'D', 'G', 'F'
    int rank;
};

// "F4", "A2", "C3", "A1xA1".
std::vector<CartanFactor> parse_cartan(const std::string& label);

// Weyl group element as a permutation of the roots of the ambient system.
struct WeylElement {
    std::vector<uint16_t> perm;
    uint16_t operator()(int root) const { return perm[root]; }
    friend bool operator==(const WeylElement& a, const WeylElement& b) { return a.perm == b.perm; }
    // (a*b)(r) = a(b(r)).
    friend WeylElement operator*(const WeylElement& a, const WeylElement& b);
};

struct WeylElementHash {
    size_t operator()(const WeylElement& w) const;
};

class RootSystem {
public:
    static RootSystem build(const std::string& label);
    static RootSystem from_simple(std::string label, std::vector<CartanFactor> factors, std::vector<QVec> simple);

    const std::string& label() const { return label_; }
    const std::vector<CartanFactor>& factors() const { return factors_; }
    int dim() const { return dim_; }
    int rank() const { return static_cast<int>(simple_.size()); }
    int size() const { return static_cast<int>(roots_.size()); }
    const QVec& root(int i) const { return roots_[i]; }
    const QVec& coroot(int i) const { return coroots_[i]; }
    bool positive(int i) const { return positive_[i]; }
    int height(int i) const { return height_[i]; }
    int negative_of(int i) const { return neg_[i]; }
    // Index of a root vector, or -1.
    int find(const QVec& v) const;
    const std::vector<int>& simple() const { return simple_; }
    // Index of root(i)+root(j), or -1.
    int sum(int i, int j) const { return sum_[i * size() + j]; }
    // Index of s_{root(i)}(root(j)).
    int reflect_root(int i, int j) const { return refl_[i * size() + j]; }

    mpq_class pair(int i, const QVec& x) const { return dot(roots_[i], x); }
    QVec reflect(int i, const QVec& x) const;
    WeylElement identity() const;
    WeylElement reflection(int i) const;
    // w applied to an ambient vector.
    QVec apply(const WeylElement& w, const QVec& x) const;
    // Sum of positive coroots.
    QVec two_rho_check() const;
    RootSet all() const;

private:
    std::string label_;
    std::vector<CartanFactor> factors_;
    int dim_ = 0;
    std::vector<QVec> roots_, coroots_;
    std::vector<bool> positive_;
    std::vector<int> height_, neg_, simple_, sum_, refl_;
    std::map<QVec, int, QVecLess> index_;
    // x = sum_i coef_i simple_i + (orthogonal part); proj_ maps x to coef.
    std::vector<QVec> proj_;
};

// A closed root subsystem of an ambient system, with positive roots inherited
// from the ambient positive system.
class Subsystem {
public:
    Subsystem(const RootSystem& rs, const RootSet& roots);
    static Subsystem full(const RootSystem& rs) { return Subsystem(rs, rs.all()); }

    const RootSystem& ambient() const { return *rs_; }
    const RootSet& roots() const { return set_; }
    const std::vector<int>& root_list() const { return list_; }
    const std::vector<int>& positive_roots() const { return pos_; }
    const std::vector<int>& simple() const { return simple_; }
    int rank() const { return static_cast<int>(simple_.size()); }
    bool contains(int r) const { return set_[r]; }
    bool empty() const { return list_.empty(); }

    // Subsystem generated by the given simple roots (indices into simple()).
    Subsystem standard_levi(const std::vector<int>& which) const;
    // Roots of this subsystem with <alpha, x> = n.
    RootSet graded(const QVec& x, const mpq_class& n) const;
    // Roots alpha with <alpha, x> = 0, as a subsystem.
    Subsystem centralizer(const QVec& x) const;

    bool is_dominant(const QVec& x) const;
    // w with w.x dominant: repeatedly reflect in the lowest-index simple root
    // with negative pairing.
    std::pair<QVec, WeylElement> to_dominant(const QVec& x) const;
    // Unique h in the span of the simple coroots with <alpha_i,h> = values[i].
    QVec coweight(const std::vector<mpq_class>& values) const;
    // Number of positive roots of this subsystem sent to negative roots.
    int length(const WeylElement& w) const;
    // "B3", "A1xA1", "T" for the empty system.
    std::string cartan_type() const;
    // Components as lists of simple roots (indices into simple()).
    std::vector<std::vector<int>> components() const;

private:
    const RootSystem* rs_;
    RootSet set_;
    std::vector<int> list_, pos_, simple_;
};

// Full enumeration of the Weyl group of a subsystem, breadth first by length.
class WeylGroup {
public:
    explicit WeylGroup(const Subsystem& sub, size_t max_size = 200000);

    size_t size() const { return elems_.size(); }
    const WeylElement& operator[](size_t i) const { return elems_[i]; }
    const std::vector<WeylElement>& elements() const { return elems_; }
    int length(size_t i) const { return len_[i]; }
    // Reduced word (indices into the subsystem simple roots), leftmost first.
    std::vector<int> word(size_t i) const;
    long index(const WeylElement& w) const;
    size_t longest() const;
    const Subsystem& subsystem() const { return sub_; }

private:
    Subsystem sub_;
    std::vector<WeylElement> elems_;
    std::vector<int> len_, parent_, gen_;
    std::unordered_map<WeylElement, size_t, WeylElementHash> idx_;
};

}  // namespace hecke
