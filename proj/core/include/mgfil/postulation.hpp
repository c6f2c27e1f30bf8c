#pragma once

#include <optional>

#include "mgfil/hilbert.hpp"
#include "mgfil/upward_set.hpp"

namespace mgfil {

// Degrees n whose entire upward cone satisfies P(n) = H(n).  Scanned on
// [lo, box] (lo defaults to the origin; negative corners probe the boundary
// convention); the tail is heuristic, vouched for by the fit margin.
UpwardClosedSet postulation_set(const Filtration& f, const HilbertPolynomial& p,
                                const MultiIndex& box, std::int64_t margin, int threads = 1);
UpwardClosedSet postulation_set(const Filtration& f, const HilbertPolynomial& p,
                                const MultiIndex& lo, const MultiIndex& box, std::int64_t margin,
                                int threads = 1);

// Largest n in [0, box] with P(n) != H(n) for a single grading (s = 1).
// Empty value means no disagreement at or above zero.
struct PostulationNumber {
  std::optional<std::int64_t> value;
  bool box_edge_disagrees = false;  // warning: the scan box is too small
};

PostulationNumber postulation_number(const Filtration& f, const HilbertPolynomial& p,
                                     std::int64_t box);

}  // namespace mgfil
