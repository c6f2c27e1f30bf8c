#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <vector>

namespace mgfil::lp {

using Rat = boost::multiprecision::cpp_rational;

struct Result {
  bool unbounded = false;
  Rat value = 0;
};

// maximize c.x subject to A x <= b, x >= 0, with b >= 0 componentwise so the
// all-slack basis is feasible.  Exact rational pivoting, Bland's rule.
Result maximize(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                const std::vector<Rat>& c);

}  // namespace mgfil::lp
