#pragma once

#include <functional>
#include <variant>

#include "mgfil/filtration.hpp"

namespace mgfil {

// Tail vouched for by a fit-verification margin rather than a proof.
struct HeuristicTail {
  std::int64_t margin = 0;
};

using Certification = std::variant<StabilizationCertificate, HeuristicTail>;

// Upward closed subset of Z^s described by its minimal elements.  Membership
// beyond the scanned box follows from the certification: either stabilization
// propagates the defining property upward, or the tail is heuristic.
struct UpwardClosedSet {
  int arity = 0;
  std::vector<MultiIndex> minimal_elements;  // canonical-order antichain
  Box scanned;                               // region the defining property was evaluated on
  Certification certification;

  bool member(const MultiIndex& n) const;
  bool empty() const { return minimal_elements.empty(); }
  bool certified() const { return std::holds_alternative<StabilizationCertificate>(certification); }
};

// The set { n in region : property holds at every region point >= n }, with
// membership outside the region granted along the upward cones of the minimal
// elements.  The property is evaluated once per region point.
UpwardClosedSet upward_set_from_property(const Box& region,
                                         const std::function<bool(const MultiIndex&)>& property,
                                         Certification certification, int threads = 1);

}  // namespace mgfil
