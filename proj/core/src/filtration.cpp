#include "mgfil/filtration.hpp"

#include <cstdlib>
#include <mutex>

#include "mgfil/newton.hpp"

namespace mgfil {

void FiltrationSpec::validate() const {
  if (ideals.empty()) throw ValidationError("filtration needs at least one ideal");
  const int d = ideals[0].dim();
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    const MonomialIdeal& a = ideals[i];
    if (a.dim() != d) throw ValidationError("filtration ideals live in different rings");
    if (!a.is_proper())
      throw ValidationError("filtration ideal " + std::to_string(i + 1) + " is the unit ideal");
    if (!a.is_m_primary())
      throw ValidationError("filtration ideal " + std::to_string(i + 1) + " is not m-primary");
  }
  if (family == Family::UserTable) {
    if (!table) throw ValidationError("user-table family without a table");
    if (table->region.arity() != s())
      throw ValidationError("user-table region arity differs from grading arity");
    for (const auto& [n, a] : table->entries) {
      if (n.arity() != s()) throw ValidationError("user-table key arity differs from grading");
      if (a.dim() != d) throw ValidationError("user-table value lives in a different ring");
    }
  } else if (table) {
    throw ValidationError("table given for a non-table family");
  }
}

std::size_t Filtration::cache_limit_from_env() {
  if (const char* env = std::getenv("MGFIL_CACHE_SIZE")) {
    const long long v = std::atoll(env);
    if (v > 0) return static_cast<std::size_t>(v);
  }
  return 100000;
}

Filtration::Filtration(FiltrationSpec spec) : Filtration(std::move(spec), cache_limit_from_env()) {}

Filtration::Filtration(FiltrationSpec spec, std::size_t cache_limit)
    : spec_(std::move(spec)), cache_limit_(cache_limit) {
  spec_.validate();
  powers_.resize(static_cast<std::size_t>(spec_.s()));
}

MonomialIdeal Filtration::axis_power(int axis, std::int64_t k) const {
  const auto& slot = powers_[static_cast<std::size_t>(axis)];
  std::int64_t base_exp = 0;
  MonomialIdeal base = MonomialIdeal::unit(dim());
  {
    std::shared_lock lock(mu_);
    auto it = slot.find(k);
    if (it != slot.end()) return it->second;
    // Continue from the largest cached power below k.
    auto lo = slot.lower_bound(k);
    if (lo != slot.begin()) {
      --lo;
      base_exp = lo->first;
      base = lo->second;
    }
  }
  MonomialIdeal acc = std::move(base);
  const MonomialIdeal& gen = ideal(axis);
  for (std::int64_t e = base_exp; e < k; ++e) acc = ideal_product(acc, gen);
  {
    std::unique_lock lock(mu_);
    auto& mslot = powers_[static_cast<std::size_t>(axis)];
    if (mslot.size() >= cache_limit_) mslot.clear();
    mslot.emplace(k, acc);
  }
  return acc;
}

MonomialIdeal Filtration::compute(const MultiIndex& key) const {
  if (spec_.family == Family::UserTable && key.leq(spec_.table->region)) {
    auto it = spec_.table->entries.find(key);
    if (it != spec_.table->entries.end()) return it->second;
  }
  MonomialIdeal acc = axis_power(0, key[0]);
  for (int i = 1; i < s(); ++i) acc = ideal_product(acc, axis_power(i, key[i]));
  if (spec_.family == Family::ClosureOfPowers) acc = integral_closure(acc);
  return acc;
}

MonomialIdeal Filtration::operator()(const MultiIndex& n) const {
  if (n.arity() != s()) throw ArityError("degree arity differs from grading arity");
  const MultiIndex key = n.plus_part();
  {
    std::shared_lock lock(mu_);
    auto it = cache_.find(key);
    if (it != cache_.end()) return *it->second;
  }
  auto value = std::make_shared<const MonomialIdeal>(compute(key));
  {
    std::unique_lock lock(mu_);
    if (cache_.size() >= cache_limit_) cache_.clear();
    auto [it, inserted] = cache_.emplace(key, value);
    return *it->second;  // first writer wins
  }
}

StabilizationCertificate stabilization_bounds(const Filtration& f, const MultiIndex& box) {
  if (box.arity() != f.s()) throw ArityError("box arity differs from grading arity");
  for (int i = 0; i < box.arity(); ++i)
    if (box[i] < 2) throw ValidationError("stabilization scan needs a box of side at least 2");

  const int s = f.s();
  MultiIndex bounds = MultiIndex::zero(s);
  const Box region = Box::at_origin(box);
  for (int axis = 0; axis < s; ++axis) {
    const MultiIndex e_i = MultiIndex::unit(s, axis);
    std::int64_t r = 0;
    MultiIndex edge_witness = MultiIndex::zero(s);
    bool edge_violation = false;
    for (std::int64_t k = 0; k < region.count(); ++k) {
      const MultiIndex n = region.at(k);
      if (f(n + e_i) != ideal_product(f.ideal(axis), f(n))) {
        if (n[axis] + 1 > r) r = n[axis] + 1;
        if (n[axis] == box[axis]) {
          edge_violation = true;
          edge_witness = n;
        }
      }
    }
    if (edge_violation || r > box[axis])
      throw NoStabilizationError("no stabilization threshold for axis " +
                                     std::to_string(axis + 1) + " inside box " + box.str() +
                                     "; product rule still fails at " + edge_witness.str(),
                                 axis);
    bounds[axis] = r;
  }
  return {bounds, box};
}

}  // namespace mgfil
