#include "mgfil/binomial.hpp"

#include "mgfil/errors.hpp"

namespace mgfil {

std::int64_t binomial(std::int64_t m, std::int64_t k) {
  if (k < 0) throw DomainError("binomial with negative lower index");
  if (k == 0) return 1;
  if (m < 0) {
    const std::int64_t reflected = binomial(checked_sub(checked_sub(k, m), 1), k);
    return (k % 2 == 0) ? reflected : -reflected;
  }
  if (m < k) return 0;
  std::int64_t r = 1;
  // r stays C(m - k + j, j) after step j, so every division is exact.
  for (std::int64_t j = 1; j <= k; ++j) r = checked_mul(r, m - k + j) / j;
  return r;
}

}  // namespace mgfil
