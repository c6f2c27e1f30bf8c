#pragma once

#include "mgfil/postulation.hpp"
#include "mgfil/reductions.hpp"

namespace mgfil {

enum class Verdict { Bijective, ForwardFails, BackwardFails, BothFail };

const char* verdict_name(Verdict v);

// Comparison of the reduction-vector set against the postulation set shifted
// by (d-1)e.  Forward violations are reduction vectors r >= shift whose
// pullback r - shift fails to postulate; backward violations are postulating
// n whose push n + shift is not a reduction vector.
struct CorrespondenceReport {
  MultiIndex shift;
  UpwardClosedSet postulation;
  UpwardClosedSet reductions;
  std::vector<MultiIndex> forward_violations;
  std::vector<MultiIndex> backward_violations;
  Verdict verdict = Verdict::Bijective;
  bool proxy_ph_equal_on_box = false;
  MultiIndex box;
};

CorrespondenceReport verify_correspondence(const Filtration& f,
                                           const CompleteReductionCandidate& c,
                                           const HilbertPolynomial& p, const MultiIndex& box,
                                           std::int64_t margin, int threads = 1);

// P(n) = H(n) at every point of [0, box]; the footprint of a vanishing-free
// situation where postulation starts at the origin.
bool verify_cm_vanishing_proxy(const Filtration& f, const HilbertPolynomial& p,
                               const MultiIndex& box, int threads = 1);

}  // namespace mgfil
