#pragma once

#include <map>
#include <memory>
#include <shared_mutex>
#include <vector>

#include "mgfil/monomial_ideal.hpp"

namespace mgfil {

enum class Family { Powers, ClosureOfPowers, UserTable };

// Explicit values on a finite origin box, with the Powers rule past it.
// No admissibility checks: deliberately violable, for probing the descent
// lemma on bad inputs.
struct UserTableData {
  MultiIndex region;  // inclusive corner
  std::map<MultiIndex, MonomialIdeal, LexLess> entries;
};

// Z^s-graded family n -> F(n) built from one m-primary proper ideal per axis.
// Powers: F(n) = prod I_i^{n_i}; ClosureOfPowers takes the integral closure of
// that product.  Negative coordinates clamp to zero, so F(n) = F(n+).
struct FiltrationSpec {
  std::vector<MonomialIdeal> ideals;
  Family family = Family::Powers;
  std::shared_ptr<const UserTableData> table;  // UserTable family only

  int s() const { return static_cast<int>(ideals.size()); }
  int dim() const { return ideals.empty() ? 0 : ideals[0].dim(); }
  void validate() const;
};

// Memoizing evaluator.  Thread-safe; results are keyed by n+ so repeated and
// clamped queries share work.  The cache is bounded by entry count, settable
// through the MGFIL_CACHE_SIZE environment variable.
class Filtration {
 public:
  explicit Filtration(FiltrationSpec spec);
  Filtration(FiltrationSpec spec, std::size_t cache_limit);

  const FiltrationSpec& spec() const { return spec_; }
  int s() const { return spec_.s(); }
  int dim() const { return spec_.dim(); }
  const MonomialIdeal& ideal(int i) const { return spec_.ideals[static_cast<std::size_t>(i)]; }

  MonomialIdeal operator()(const MultiIndex& n) const;

  static std::size_t cache_limit_from_env();

 private:
  MonomialIdeal axis_power(int axis, std::int64_t k) const;
  MonomialIdeal compute(const MultiIndex& key) const;

  FiltrationSpec spec_;
  std::size_t cache_limit_;
  mutable std::shared_mutex mu_;
  mutable std::map<MultiIndex, std::shared_ptr<const MonomialIdeal>, LexLess> cache_;
  mutable std::vector<std::map<std::int64_t, MonomialIdeal>> powers_;
};

struct StabilizationCertificate {
  MultiIndex bounds;        // per-axis thresholds r_i
  MultiIndex verified_box;  // inclusive scan corner
};

// Least per-axis r_i <= box_i such that F(n + e_i) = I_i F(n) at every box
// point with n_i >= r_i; fails if an equality still breaks at the box edge.
StabilizationCertificate stabilization_bounds(const Filtration& f, const MultiIndex& box);

}  // namespace mgfil
