#include "mgfil/verify.hpp"

#include <atomic>

#include "mgfil/parallel.hpp"

namespace mgfil {

const char* verdict_name(Verdict v) {
  switch (v) {
    case Verdict::Bijective: return "bijective";
    case Verdict::ForwardFails: return "forward_fails";
    case Verdict::BackwardFails: return "backward_fails";
    case Verdict::BothFail: return "both_fail";
  }
  return "unknown";
}

CorrespondenceReport verify_correspondence(const Filtration& f,
                                           const CompleteReductionCandidate& c,
                                           const HilbertPolynomial& p, const MultiIndex& box,
                                           std::int64_t margin, int threads) {
  const int s = f.s();
  if (box.arity() != s) throw ArityError("box arity differs from grading arity");
  const std::int64_t d = f.dim();

  CorrespondenceReport report;
  report.box = box;
  report.shift = MultiIndex::ones(s).scaled(d - 1);
  report.reductions = reduction_vector_set(f, c, box, threads);
  report.postulation = postulation_set(f, p, box, margin, threads);
  report.proxy_ph_equal_on_box = verify_cm_vanishing_proxy(f, p, box, threads);

  const Box region = Box::at_origin(box);
  for (std::int64_t k = 0; k < region.count(); ++k) {
    const MultiIndex r = region.at(k);
    if (!report.reductions.member(r)) continue;
    const MultiIndex back = r - report.shift;
    if (!back.all_nonnegative()) continue;
    if (!report.postulation.member(back)) report.forward_violations.push_back(r);
  }
  for (std::int64_t k = 0; k < region.count(); ++k) {
    const MultiIndex n = region.at(k);
    if (!report.postulation.member(n)) continue;
    if (!report.reductions.member(n + report.shift)) report.backward_violations.push_back(n);
  }

  const bool fwd = !report.forward_violations.empty();
  const bool bwd = !report.backward_violations.empty();
  report.verdict = fwd ? (bwd ? Verdict::BothFail : Verdict::ForwardFails)
                       : (bwd ? Verdict::BackwardFails : Verdict::Bijective);
  return report;
}

bool verify_cm_vanishing_proxy(const Filtration& f, const HilbertPolynomial& p,
                               const MultiIndex& box, int threads) {
  if (box.arity() != f.s()) throw ArityError("box arity differs from grading arity");
  const Box region = Box::at_origin(box);
  std::atomic<bool> all_equal{true};
  parallel_for(region.count(), threads, [&](std::int64_t k) {
    if (!all_equal.load(std::memory_order_relaxed)) return;
    const MultiIndex n = region.at(k);
    if (p(n) != colength(f(n))) all_equal.store(false, std::memory_order_relaxed);
  });
  return all_equal.load();
}

}  // namespace mgfil
