#include "mgfil/simplex.hpp"

#include <cstddef>

#include "mgfil/errors.hpp"

namespace mgfil::lp {

// Dense tableau with explicit slack columns.  Row 0 is the objective written
// as z - c.x = 0, so entry (0, j) holds the negated reduced cost of column j.
Result maximize(const std::vector<std::vector<Rat>>& A, const std::vector<Rat>& b,
                const std::vector<Rat>& c) {
  const std::size_t m = A.size();
  const std::size_t n = c.size();
  for (const auto& row : A)
    if (row.size() != n) throw ArityError("constraint row width differs from objective");
  if (b.size() != m) throw ArityError("right-hand side length differs from constraint count");
  for (const Rat& v : b)
    if (v < 0) throw DomainError("simplex start requires a nonnegative right-hand side");

  const std::size_t cols = n + m + 1;  // structurals, slacks, rhs
  std::vector<std::vector<Rat>> t(m + 1, std::vector<Rat>(cols, 0));
  for (std::size_t j = 0; j < n; ++j) t[0][j] = -c[j];
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < n; ++j) t[i + 1][j] = A[i][j];
    t[i + 1][n + i] = 1;
    t[i + 1][cols - 1] = b[i];
  }
  std::vector<std::size_t> basis(m);
  for (std::size_t i = 0; i < m; ++i) basis[i] = n + i;

  while (true) {
    // Bland: entering column is the lowest-index one with negative objective entry.
    std::size_t enter = cols;
    for (std::size_t j = 0; j + 1 < cols; ++j)
      if (t[0][j] < 0) {
        enter = j;
        break;
      }
    if (enter == cols) return {false, t[0][cols - 1]};

    // Ratio test; ties leave the lowest basis index (Bland again).
    std::size_t leave = 0;
    bool found = false;
    Rat best = 0;
    for (std::size_t i = 1; i <= m; ++i) {
      if (t[i][enter] <= 0) continue;
      Rat ratio = t[i][cols - 1] / t[i][enter];
      if (!found || ratio < best ||
          (ratio == best && basis[i - 1] < basis[leave - 1])) {
        best = ratio;
        leave = i;
        found = true;
      }
    }
    if (!found) return {true, 0};

    const Rat pivot = t[leave][enter];
    for (std::size_t j = 0; j < cols; ++j) t[leave][j] /= pivot;
    for (std::size_t i = 0; i <= m; ++i) {
      if (i == leave) continue;
      const Rat f = t[i][enter];
      if (f == 0) continue;
      for (std::size_t j = 0; j < cols; ++j) t[i][j] -= f * t[leave][j];
    }
    basis[leave - 1] = enter;
  }
}

}  // namespace mgfil::lp
