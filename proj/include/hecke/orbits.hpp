#pragma once

#include "hecke/kspace.hpp"
#include "hecke/liealg.hpp"

#include <map>
#include <string>
#include <vector>

namespace hecke {

struct OrbitParam {
    QVec s;
    RootSet levi, u_plus, u_minus;
    int dim = 0;
    std::string label;
    std::string levi_type;
    // Display metadata.
    std::string saturation;
    std::string component_group;
};

// Weighted Dynkin diagrams per subsystem, memoized on the root set.
class WddCache {
public:
    WddCache(const ChevalleyBasis& cb, MiddleElementOptions opt = {}) : cb_(cb), opt_(opt) {}
    const std::vector<WeightedDiagram>& get(const Subsystem& sub);
    const ChevalleyBasis& basis() const { return cb_; }

private:
    const ChevalleyBasis& cb_;
    MiddleElementOptions opt_;
    std::map<std::string, std::vector<WeightedDiagram>> cache_;
};

// Builds the orbit record of s in the context: Levi, nilradicals and dimension.
OrbitParam make_orbit(const GradedContext& ctx, const QVec& s);

// dim = #{alpha in p : <alpha,chi>=2} - #{alpha in p : <alpha,chi>=0} + #r_0,
// with p = Levi + u_plus.
int orbit_dim(const GradedContext& ctx, const OrbitParam& o);

// All orbits of the context, sorted by dimension then by s, with the
// representative s dominant for W(chi). Labels are dimension plus a letter
// when several orbits share a dimension.
std::vector<OrbitParam> parameter_set(const GradedContext& ctx, WddCache& wdd);

// True when s is the middle element of a Lie triple of the Levi subalgebra
// centralizing chi - s, with e generic in its degree-2 part.
bool is_parameter(const GradedContext& ctx, const ChevalleyBasis& cb, const QVec& s);

// Canonical representative of s modulo W(chi).
QVec canonical_s(const GradedContext& ctx, const QVec& s);

// Name of the nilpotent orbit whose middle element is W-conjugate to s:
// Bala-Carter labels for G2 and F4, partitions for classical types.
std::string saturation_name(const RootSystem& rs, const QVec& s);

// Dominant middle element for a named orbit ("F4(a3)", "G2(a1)", "~A1"), or
// an empty vector when the name is unknown.
QVec chi_from_name(const RootSystem& rs, WddCache& wdd, const std::string& name);

// Component-group label from the saturation and the number of local systems
// in the orbit block.
std::string component_group_label(const std::string& saturation, size_t local_systems);

}  // namespace hecke
