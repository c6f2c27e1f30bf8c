#include "mgfil/newton.hpp"

#include <algorithm>
#include <vector>

#include "mgfil/simplex.hpp"

namespace mgfil {

namespace {

// Feasibility of { sum l_k g_k <= p, sum l_k = 1, l >= 0 }.  Equivalent to
// max { sum l_k : sum l_k g_k <= p, l >= 0 } >= 1: any solution with excess
// mass scales down onto the simplex because p >= 0.
bool newton_lp(const MultiIndex& p, const std::vector<Monomial>& gens) {
  const int d = p.arity();
  const std::size_t k = gens.size();
  std::vector<std::vector<lp::Rat>> A(static_cast<std::size_t>(d),
                                      std::vector<lp::Rat>(k));
  std::vector<lp::Rat> b(static_cast<std::size_t>(d));
  std::vector<lp::Rat> c(k, 1);
  for (int i = 0; i < d; ++i) {
    for (std::size_t j = 0; j < k; ++j) A[static_cast<std::size_t>(i)][j] = gens[j][i];
    b[static_cast<std::size_t>(i)] = p[i];
  }
  const lp::Result r = lp::maximize(A, b, c);
  return r.unbounded || r.value >= 1;
}

}  // namespace

bool in_newton_polyhedron(const MultiIndex& p, const MonomialIdeal& a) {
  if (p.arity() != a.dim()) throw ArityError("point arity differs from ideal dimension");
  if (a.is_zero()) return false;
  if (!p.all_nonnegative()) return false;
  if (a.contains(Monomial(p))) return true;  // covers the unit ideal

  // Exact necessary conditions from the weight vectors e and e_i.
  std::int64_t min_total = -1;
  MultiIndex min_axis = a.generators()[0].exponents();
  for (const Monomial& g : a.generators()) {
    const std::int64_t t = g.degree();
    if (min_total < 0 || t < min_total) min_total = t;
    min_axis = MultiIndex::cmin(min_axis, g.exponents());
  }
  if (p.grade() < min_total) return false;
  for (int i = 0; i < p.arity(); ++i)
    if (p[i] < min_axis[i]) return false;

  return newton_lp(p, a.generators());
}

MonomialIdeal integral_closure(const MonomialIdeal& a) {
  if (a.is_zero()) throw DomainError("integral closure of the zero ideal");
  if (a.is_unit()) return a;

  // Minimal generators of the closure are bounded by the componentwise
  // maximum of the generator exponents: past it, p - e_i stays in the
  // polyhedron, so p is not minimal.
  MultiIndex corner = a.generators()[0].exponents();
  for (const Monomial& g : a.generators())
    corner = MultiIndex::cmax(corner, g.exponents());

  const Box box = Box::at_origin(corner);
  std::vector<std::uint8_t> member(static_cast<std::size_t>(box.count()), 0);
  for (std::int64_t k = 0; k < box.count(); ++k)
    member[static_cast<std::size_t>(k)] = in_newton_polyhedron(box.at(k), a) ? 1 : 0;

  const int d = a.dim();
  std::vector<std::int64_t> strides(static_cast<std::size_t>(d), 1);
  for (int i = d - 2; i >= 0; --i)
    strides[static_cast<std::size_t>(i)] =
        strides[static_cast<std::size_t>(i + 1)] * (corner[i + 1] + 1);

  std::vector<Monomial> gens;
  for (std::int64_t k = 0; k < box.count(); ++k) {
    if (!member[static_cast<std::size_t>(k)]) continue;
    const MultiIndex p = box.at(k);
    bool minimal = true;
    for (int i = 0; i < d && minimal; ++i)
      if (p[i] > 0 && member[static_cast<std::size_t>(k - strides[static_cast<std::size_t>(i)])])
        minimal = false;
    if (minimal) gens.emplace_back(p);
  }
  return MonomialIdeal::from_generators(a.dim(), std::move(gens));
}

}  // namespace mgfil
