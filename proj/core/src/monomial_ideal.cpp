#include "mgfil/monomial_ideal.hpp"

#include <algorithm>
#include <cstddef>

namespace mgfil {

namespace {

// Flat membership grid of an ideal over the origin box with the given
// inclusive corner.  grid[p] is set iff p lies in the staircase region.
// Shared by colength, large products, and antichain extraction.
struct StaircaseGrid {
  Box box;
  std::vector<std::uint8_t> mark;

  explicit StaircaseGrid(const MultiIndex& corner)
      : box(Box::at_origin(corner)), mark(check_size(box), 0) {}

  static std::size_t check_size(const Box& b) {
    const std::int64_t n = b.count();
    if (n > (std::int64_t{1} << 28))
      throw OverflowError("staircase box of " + std::to_string(n) + " points is too large");
    return static_cast<std::size_t>(n);
  }

  void set(const MultiIndex& p) { mark[static_cast<std::size_t>(box.index_of(p))] = 1; }

  // Upward closure: propagate marks along each axis in increasing coordinate.
  void close_upward() {
    const int d = box.arity();
    const std::int64_t total = box.count();
    for (int a = 0; a < d; ++a) {
      const std::int64_t side = box.hi()[a] + 1;
      std::int64_t stride = 1;
      for (int i = d - 1; i > a; --i) stride *= box.hi()[i] + 1;
      for (std::int64_t k = 0; k < total; ++k) {
        if ((k / stride) % side == 0) continue;
        mark[static_cast<std::size_t>(k)] =
            static_cast<std::uint8_t>(mark[static_cast<std::size_t>(k)] |
                                      mark[static_cast<std::size_t>(k - stride)]);
      }
    }
  }

  std::int64_t count_unmarked() const {
    std::int64_t c = 0;
    for (std::uint8_t v : mark) c += v == 0;
    return c;
  }

  // Marked points none of whose immediate predecessors is marked.
  std::vector<Monomial> antichain() const {
    const int d = box.arity();
    std::vector<std::int64_t> strides(static_cast<std::size_t>(d), 1);
    for (int a = d - 2; a >= 0; --a)
      strides[static_cast<std::size_t>(a)] =
          strides[static_cast<std::size_t>(a + 1)] * (box.hi()[a + 1] + 1);
    std::vector<Monomial> out;
    const std::int64_t total = box.count();
    for (std::int64_t k = 0; k < total; ++k) {
      if (!mark[static_cast<std::size_t>(k)]) continue;
      const MultiIndex p = box.at(k);
      bool minimal = true;
      for (int a = 0; a < d && minimal; ++a)
        if (p[a] > 0 && mark[static_cast<std::size_t>(k - strides[static_cast<std::size_t>(a)])])
          minimal = false;
      if (minimal) out.emplace_back(p);
    }
    return out;
  }
};

}  // namespace

Monomial::Monomial(MultiIndex exponents) : e_(std::move(exponents)) {
  if (!e_.all_nonnegative()) throw DomainError("monomial exponents must be nonnegative");
}

void require_same_dim(const MonomialIdeal& a, const MonomialIdeal& b) {
  if (a.dim() != b.dim())
    throw ArityError("ideal dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                     std::to_string(b.dim()));
}

MonomialIdeal MonomialIdeal::unit(int dim) {
  return from_generators(dim, {Monomial(MultiIndex::zero(dim))});
}

MonomialIdeal MonomialIdeal::from_generators(int dim, std::vector<Monomial> gens) {
  MonomialIdeal a(dim);
  for (const Monomial& g : gens)
    if (g.dim() != dim) throw ArityError("generator arity differs from ideal dimension");
  a.gens_ = minimalize(std::move(gens));
  return a;
}

MonomialIdeal MonomialIdeal::maximal_power(int dim, std::int64_t k) {
  if (k < 0) throw DomainError("negative power of the maximal ideal");
  if (dim == 0) return k == 0 ? unit(0) : zero(0);
  if (k == 0) return unit(dim);
  // All exponent vectors of total degree k, by the usual composition walk.
  std::vector<Monomial> gens;
  MultiIndex e = MultiIndex::zero(dim);
  e[0] = k;
  while (true) {
    gens.emplace_back(e);
    int i = dim - 2;
    while (i >= 0 && e[i] == 0) --i;
    if (i < 0) break;
    const std::int64_t tail = e[dim - 1];
    e[i] -= 1;
    e[dim - 1] = 0;
    e[i + 1] = tail + 1;
    // i+1 == dim-1 overwrites the zero just written, which is intended.
  }
  return from_generators(dim, std::move(gens));
}

bool MonomialIdeal::contains(const Monomial& m) const {
  if (m.dim() != dim_) throw ArityError("monomial arity differs from ideal dimension");
  return std::any_of(gens_.begin(), gens_.end(),
                     [&](const Monomial& g) { return g.divides(m); });
}

bool MonomialIdeal::contains(const MonomialIdeal& other) const {
  require_same_dim(*this, other);
  return std::all_of(other.gens_.begin(), other.gens_.end(),
                     [&](const Monomial& g) { return contains(g); });
}

bool MonomialIdeal::is_m_primary() const {
  for (int i = 0; i < dim_; ++i) {
    bool found = false;
    for (const Monomial& g : gens_) {
      bool pure = true;
      for (int j = 0; j < dim_ && pure; ++j)
        if (j != i && g[j] != 0) pure = false;
      if (pure) {
        found = true;
        break;
      }
    }
    if (!found) return false;
  }
  return !gens_.empty();
}

MultiIndex MonomialIdeal::pure_power_box() const {
  if (!is_m_primary())
    throw NotMPrimaryError("ideal has no pure power in some variable; colength is infinite");
  MultiIndex n = MultiIndex::zero(dim_);
  for (int i = 0; i < dim_; ++i) {
    std::int64_t best = -1;
    for (const Monomial& g : gens_) {
      bool pure = true;
      for (int j = 0; j < dim_ && pure; ++j)
        if (j != i && g[j] != 0) pure = false;
      if (pure && (best < 0 || g[i] < best)) best = g[i];
    }
    n[i] = best;
  }
  return n;
}

std::vector<Monomial> minimalize(std::vector<Monomial> gens) {
  std::sort(gens.begin(), gens.end(),
            [](const Monomial& a, const Monomial& b) { return canonical_before(a, b); });
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Monomial> kept;
  kept.reserve(gens.size());
  for (const Monomial& g : gens) {
    bool dominated = false;
    for (const Monomial& k : kept) {
      if (k.degree() >= g.degree()) break;  // canonical order is graded
      if (k.divides(g)) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(g);
  }
  return kept;
}

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_dim(a, b);
  std::vector<Monomial> gens = a.generators();
  gens.insert(gens.end(), b.generators().begin(), b.generators().end());
  return MonomialIdeal::from_generators(a.dim(), std::move(gens));
}

namespace {

MonomialIdeal product_pairwise(const MonomialIdeal& a, const MonomialIdeal& b) {
  std::vector<Monomial> gens;
  gens.reserve(a.generator_count() * b.generator_count());
  for (const Monomial& x : a.generators())
    for (const Monomial& y : b.generators()) gens.push_back(x * y);
  return MonomialIdeal::from_generators(a.dim(), std::move(gens));
}

// Staircase sweep for m-primary factors: mark pairwise sums in the box of the
// product's pure powers, close upward, read off the antichain.
MonomialIdeal product_grid(const MonomialIdeal& a, const MonomialIdeal& b) {
  const MultiIndex corner = a.pure_power_box() + b.pure_power_box();
  StaircaseGrid grid(corner);
  for (const Monomial& x : a.generators())
    for (const Monomial& y : b.generators()) grid.set(x.exponents() + y.exponents());
  grid.close_upward();
  MonomialIdeal r(a.dim());
  return MonomialIdeal::from_generators(a.dim(), grid.antichain());
}

}  // namespace

MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_dim(a, b);
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.dim());
  if (a.is_unit()) return b;
  if (b.is_unit()) return a;
  const std::size_t pairs = a.generator_count() * b.generator_count();
  if (pairs > 4096 && a.is_m_primary() && b.is_m_primary()) {
    std::int64_t volume = 1;
    const MultiIndex corner = a.pure_power_box() + b.pure_power_box();
    for (int i = 0; i < corner.arity(); ++i) volume = checked_mul(volume, corner[i] + 1);
    if (volume < static_cast<std::int64_t>(pairs) * 16) return product_grid(a, b);
  }
  return product_pairwise(a, b);
}

MonomialIdeal ideal_power(const MonomialIdeal& a, std::int64_t k) {
  if (k < 0) throw DomainError("negative ideal power");
  if (k == 0) return MonomialIdeal::unit(a.dim());
  MonomialIdeal base = a, acc = MonomialIdeal::unit(a.dim());
  // Binary powering; each multiply reminimalizes, keeping intermediates small.
  while (k > 0) {
    if (k & 1) acc = ideal_product(acc, base);
    k >>= 1;
    if (k > 0) base = ideal_product(base, base);
  }
  return acc;
}

MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_dim(a, b);
  if (a.is_zero() || b.is_zero()) return MonomialIdeal::zero(a.dim());
  std::vector<Monomial> gens;
  gens.reserve(a.generator_count() * b.generator_count());
  for (const Monomial& x : a.generators())
    for (const Monomial& y : b.generators()) gens.push_back(Monomial::lcm(x, y));
  return MonomialIdeal::from_generators(a.dim(), std::move(gens));
}

namespace {

MonomialIdeal colon_by_monomial(const MonomialIdeal& a, const Monomial& b) {
  std::vector<Monomial> gens;
  gens.reserve(a.generator_count());
  for (const Monomial& g : a.generators())
    gens.emplace_back((g.exponents() - b.exponents()).plus_part());
  return MonomialIdeal::from_generators(a.dim(), std::move(gens));
}

}  // namespace

MonomialIdeal ideal_colon(const MonomialIdeal& a, const MonomialIdeal& b) {
  require_same_dim(a, b);
  if (b.is_zero()) throw DomainError("colon by the zero ideal");
  if (a.is_zero()) return a;
  MonomialIdeal acc = colon_by_monomial(a, b.generators()[0]);
  for (std::size_t i = 1; i < b.generator_count(); ++i)
    acc = ideal_intersect(acc, colon_by_monomial(a, b.generators()[i]));
  return acc;
}

MonomialIdeal monomial_times_ideal(const Monomial& m, const MonomialIdeal& a) {
  std::vector<Monomial> gens;
  gens.reserve(a.generator_count());
  for (const Monomial& g : a.generators()) gens.push_back(m * g);
  return MonomialIdeal::from_generators(a.dim(), std::move(gens));
}

std::int64_t colength(const MonomialIdeal& a) {
  const MultiIndex pure = a.pure_power_box();  // throws when not m-primary
  if (a.dim() == 0) return 0;
  MultiIndex corner = pure;
  bool empty = false;
  for (int i = 0; i < corner.arity(); ++i) {
    corner[i] -= 1;  // staircase complement lives in [0, N_i - 1]
    if (corner[i] < 0) empty = true;
  }
  if (empty) return 0;  // some pure power is 1 or 0: quotient spanned by nothing
  StaircaseGrid grid(corner);
  for (const Monomial& g : a.generators())
    if (grid.box.contains(g.exponents())) grid.set(g.exponents());
  grid.close_upward();
  return grid.count_unmarked();
}

}  // namespace mgfil
