#include "mgfil/postulation.hpp"

namespace mgfil {

UpwardClosedSet postulation_set(const Filtration& f, const HilbertPolynomial& p,
                                const MultiIndex& box, std::int64_t margin, int threads) {
  return postulation_set(f, p, MultiIndex::zero(f.s()), box, margin, threads);
}

UpwardClosedSet postulation_set(const Filtration& f, const HilbertPolynomial& p,
                                const MultiIndex& lo, const MultiIndex& box, std::int64_t margin,
                                int threads) {
  if (p.arity() != f.s()) throw ArityError("polynomial arity differs from grading arity");
  const Box region(lo, box);
  auto agrees = [&](const MultiIndex& n) { return p(n) == colength(f(n)); };
  return upward_set_from_property(region, agrees, HeuristicTail{margin}, threads);
}

PostulationNumber postulation_number(const Filtration& f, const HilbertPolynomial& p,
                                     std::int64_t box) {
  if (f.s() != 1) throw ArityError("postulation number needs a single grading");
  if (box < 0) throw DomainError("negative scan bound");
  PostulationNumber out;
  for (std::int64_t n = box; n >= 0; --n) {
    const MultiIndex idx({n});
    if (p(idx) != colength(f(idx))) {
      out.value = n;
      break;
    }
  }
  out.box_edge_disagrees = out.value.has_value() && *out.value == box;
  return out;
}

}  // namespace mgfil
