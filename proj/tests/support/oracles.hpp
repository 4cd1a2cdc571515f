#pragma once

#include "hecke/liealg.hpp"

#include <string>
#include <vector>

namespace hecke::testing {

// Weighted Dynkin diagrams of an irreducible classical subsystem of rank <= 3,
// derived from partitions through the eigenvalues of h on the natural
// representation, and compared with wdd_enumerate. The type is found by
// matching the Cartan matrix against the standard A, B and C models, so the
// library's own type detection is not used. Returns one line per discrepancy;
// a subsystem that matches no classical type yields a single complaint.
std::vector<std::string> wdd_partition_mismatches(const ChevalleyBasis& cb, const Subsystem& sub);

// Classical type of the subsystem by Cartan matrix ("A3", "B2", ...), or "".
std::string classical_type(const Subsystem& sub);

// Props 2.3 and 2.4 carried out by hand for A1 at chi = 2rho and at chi = 0,
// compared with the library bases, multiplicities, KL matrix and IM.
std::vector<std::string> a1_hand_pipeline_mismatches();

}  // namespace hecke::testing
