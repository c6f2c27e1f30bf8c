#pragma once

#include "mgfil/monomial_ideal.hpp"

namespace mgfil {

// Does p lie in the Newton polyhedron of the ideal, i.e. is it a componentwise
// upper bound for a convex combination of generator exponents?  Decided by
// exact rational feasibility after cheap exact filters.
bool in_newton_polyhedron(const MultiIndex& p, const MonomialIdeal& a);

// Integral closure: all lattice points of the Newton polyhedron, returned by
// their minimal generators.  Rejects the zero ideal.
MonomialIdeal integral_closure(const MonomialIdeal& a);

}  // namespace mgfil
