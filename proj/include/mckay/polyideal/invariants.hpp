#pragma once

#include <string>
#include <vector>

#include "mckay/groups/group.hpp"
#include "mckay/polyideal/poly.hpp"

namespace mckay {

// Degree up to which generators of the invariant ring are searched: 2D
// binary groups C~n: 2n, D~n: 2n+2, T~: 12, O~: 18, I~: 30; the 3D quotients
// C_n: max(n, 2), D_n: n+1, T: 6, O: 9, I: 15.
int default_degree_bound(const GroupSpec& spec, bool binary);

// Minimal homogeneous generators of the invariant ring up to degree_bound.
// Each degree's invariants are the common fixed space of the group
// generators; those outside the subalgebra generated so far become new
// generators (monic, taken from the reduced echelon basis). When expected >= 0
// and the count differs, a message is stored in *warning.
std::vector<Poly> invariant_generators(const MatrixGroup& g, int degree_bound, int expected = -1,
                                       std::string* warning = nullptr);

}  // namespace mckay
