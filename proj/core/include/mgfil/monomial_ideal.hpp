#pragma once

#include <cstdint>
#include <vector>

#include "mgfil/multi_index.hpp"

namespace mgfil {

// Monomial in d variables, stored as its exponent vector (componentwise >= 0).
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(MultiIndex exponents);

  int dim() const { return e_.arity(); }
  const MultiIndex& exponents() const { return e_; }
  std::int64_t operator[](int i) const { return e_[i]; }
  std::int64_t degree() const { return e_.grade(); }
  bool is_one() const { return e_.is_zero(); }

  bool divides(const Monomial& o) const { return e_.leq(o.exponents()); }
  Monomial operator*(const Monomial& o) const { return Monomial(e_ + o.exponents()); }
  static Monomial lcm(const Monomial& a, const Monomial& b) {
    return Monomial(MultiIndex::cmax(a.exponents(), b.exponents()));
  }

  friend bool operator==(const Monomial& a, const Monomial& b) { return a.e_ == b.e_; }
  friend bool operator!=(const Monomial& a, const Monomial& b) { return !(a == b); }

 private:
  MultiIndex e_;
};

inline bool canonical_before(const Monomial& a, const Monomial& b) {
  return canonical_before(a.exponents(), b.exponents());
}

// Monomial ideal in k[X_1..X_d], represented by its minimal generators in
// canonical order.  The empty generator list is the zero ideal; the single
// generator 1 is the unit ideal.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(int dim) : dim_(dim) {}

  static MonomialIdeal zero(int dim) { return MonomialIdeal(dim); }
  static MonomialIdeal unit(int dim);
  static MonomialIdeal from_generators(int dim, std::vector<Monomial> gens);
  // (X_1,...,X_d)^k for k >= 0.
  static MonomialIdeal maximal_power(int dim, std::int64_t k);

  int dim() const { return dim_; }
  const std::vector<Monomial>& generators() const { return gens_; }
  std::size_t generator_count() const { return gens_.size(); }

  bool is_zero() const { return gens_.empty(); }
  bool is_unit() const { return gens_.size() == 1 && gens_[0].is_one(); }
  bool is_proper() const { return !is_unit(); }

  bool contains(const Monomial& m) const;
  bool contains(const MonomialIdeal& other) const;

  // Every variable has a generator that is a pure power of it.
  bool is_m_primary() const;
  // Per-axis minimal pure power exponents; requires m-primary.
  MultiIndex pure_power_box() const;

  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    return a.dim_ == b.dim_ && a.gens_ == b.gens_;
  }
  friend bool operator!=(const MonomialIdeal& a, const MonomialIdeal& b) { return !(a == b); }

 private:
  int dim_ = 0;
  std::vector<Monomial> gens_;
};

// Antichain of the divisibility order, sorted canonically.
std::vector<Monomial> minimalize(std::vector<Monomial> gens);

MonomialIdeal ideal_sum(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_product(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal ideal_power(const MonomialIdeal& a, std::int64_t k);
MonomialIdeal ideal_intersect(const MonomialIdeal& a, const MonomialIdeal& b);
// (a : b); rejects zero b.
MonomialIdeal ideal_colon(const MonomialIdeal& a, const MonomialIdeal& b);
MonomialIdeal monomial_times_ideal(const Monomial& m, const MonomialIdeal& a);

// Number of standard monomials, i.e. the length of the quotient by the ideal.
// Requires an m-primary ideal; counts by sweeping the finite staircase box.
std::int64_t colength(const MonomialIdeal& a);

void require_same_dim(const MonomialIdeal& a, const MonomialIdeal& b);

}  // namespace mgfil
