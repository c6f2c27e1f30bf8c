#pragma once

#include <cstdint>

namespace mgfil {

// C(m, k) for k >= 0 and any integer m, via the reflection
// C(m, k) = (-1)^k C(k - m - 1, k) when m < 0.  Overflow-checked.
std::int64_t binomial(std::int64_t m, std::int64_t k);

}  // namespace mgfil
