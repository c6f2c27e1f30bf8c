#include "mgfil/upward_set.hpp"

#include <algorithm>

#include "mgfil/parallel.hpp"

namespace mgfil {

bool UpwardClosedSet::member(const MultiIndex& n) const {
  if (n.arity() != arity) throw ArityError("membership query arity mismatch");
  return std::any_of(minimal_elements.begin(), minimal_elements.end(),
                     [&](const MultiIndex& m) { return m.leq(n); });
}

UpwardClosedSet upward_set_from_property(const Box& region,
                                         const std::function<bool(const MultiIndex&)>& property,
                                         Certification certification, int threads) {
  const int s = region.arity();
  const std::int64_t total = region.count();
  std::vector<std::uint8_t> ok(static_cast<std::size_t>(total), 0);
  parallel_for(total, threads, [&](std::int64_t k) {
    ok[static_cast<std::size_t>(k)] = property(region.at(k)) ? 1 : 0;
  });

  // member(n) = ok(n) and member(n + e_i) for all axes; points beyond the
  // region count as members.  Descending flat order visits n + e_i first.
  std::vector<std::uint8_t> mem = ok;
  for (std::int64_t k = total - 1; k >= 0; --k) {
    if (!mem[static_cast<std::size_t>(k)]) continue;
    const MultiIndex n = region.at(k);
    for (int i = 0; i < s && mem[static_cast<std::size_t>(k)]; ++i) {
      MultiIndex up = n;
      up[i] += 1;
      if (region.contains(up) && !mem[static_cast<std::size_t>(region.index_of(up))])
        mem[static_cast<std::size_t>(k)] = 0;
    }
  }

  std::vector<MultiIndex> minimal;
  for (std::int64_t k = 0; k < total; ++k) {
    if (!mem[static_cast<std::size_t>(k)]) continue;
    const MultiIndex n = region.at(k);
    bool is_minimal = true;
    for (int i = 0; i < s && is_minimal; ++i) {
      MultiIndex down = n;
      down[i] -= 1;
      if (region.contains(down) && mem[static_cast<std::size_t>(region.index_of(down))])
        is_minimal = false;
    }
    if (is_minimal) minimal.push_back(n);
  }
  std::sort(minimal.begin(), minimal.end(), CanonicalBefore{});
  return UpwardClosedSet{s, std::move(minimal), region, std::move(certification)};
}

}  // namespace mgfil
