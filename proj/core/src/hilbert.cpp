#include "mgfil/hilbert.hpp"

#include <algorithm>
#include <limits>

#include "mgfil/binomial.hpp"
#include "mgfil/parallel.hpp"
#include "mgfil/simplex.hpp"

namespace mgfil {

std::int64_t HilbertTable::at(const MultiIndex& n) const {
  return values[static_cast<std::size_t>(box.index_of(n.plus_part()))];
}

HilbertTable hilbert_function(const Filtration& f, const MultiIndex& box, int threads) {
  if (!box.all_nonnegative()) throw DomainError("table box must be nonnegative");
  Box region = Box::at_origin(box);
  std::vector<std::int64_t> values(static_cast<std::size_t>(region.count()), 0);
  parallel_for(region.count(), threads, [&](std::int64_t k) {
    values[static_cast<std::size_t>(k)] = colength(f(region.at(k)));
  });
  return HilbertTable{std::move(region), std::move(values)};
}

HilbertPolynomial::HilbertPolynomial(int arity, std::int64_t total_degree,
                                     std::map<MultiIndex, std::int64_t, LexLess> coeffs)
    : arity_(arity), degree_(total_degree) {
  if (arity < 1) throw ArityError("polynomial needs at least one grading variable");
  if (total_degree < 0) throw DomainError("negative total degree");
  for (auto it = coeffs.begin(); it != coeffs.end();) {
    const auto& [alpha, c] = *it;
    if (alpha.arity() != arity) throw ArityError("coefficient index arity mismatch");
    if (!alpha.all_nonnegative() || alpha.grade() > degree_)
      throw DomainError("coefficient index outside the degree-" + std::to_string(degree_) +
                        " simplex");
    it = c == 0 ? coeffs.erase(it) : std::next(it);
  }
  coeffs_ = std::move(coeffs);
}

std::int64_t HilbertPolynomial::coefficient(const MultiIndex& alpha) const {
  auto it = coeffs_.find(alpha);
  return it == coeffs_.end() ? 0 : it->second;
}

std::int64_t HilbertPolynomial::operator()(const MultiIndex& n) const {
  if (n.arity() != arity_) throw ArityError("evaluation point arity mismatch");
  std::int64_t acc = 0;
  for (const auto& [alpha, e] : coeffs_) {
    std::int64_t term = e;
    for (int i = 0; i < arity_; ++i)
      term = checked_mul(term, binomial(checked_sub(checked_add(n[i], alpha[i]), 1), alpha[i]));
    if ((degree_ - alpha.grade()) % 2 != 0) term = -term;
    acc = checked_add(acc, term);
  }
  return acc;
}

namespace {

std::vector<MultiIndex> degree_simplex(int arity, std::int64_t degree) {
  std::vector<MultiIndex> out;
  MultiIndex a = MultiIndex::zero(arity);
  while (true) {
    out.push_back(a);
    int i = arity - 1;
    while (i >= 0) {
      a[i] += 1;
      if (a.grade() <= degree) break;
      a[i] = 0;
      --i;
    }
    if (i < 0) break;
  }
  std::sort(out.begin(), out.end(), CanonicalBefore{});
  return out;
}

using lp::Rat;

}  // namespace

HilbertPolynomial fit_signed_binomial(int arity, std::int64_t degree, const MultiIndex& offset,
                                      const std::function<std::int64_t(const MultiIndex&)>& fn) {
  if (offset.arity() != arity) throw ArityError("fit offset arity mismatch");
  const std::vector<MultiIndex> basis = degree_simplex(arity, degree);
  const std::size_t width = basis.size();
  const Box grid(offset, offset + MultiIndex::constant(arity, degree));

  // Incremental echelon form over the exact rationals.  Each grid equation is
  // reduced against the rows collected so far; a zero row with nonzero
  // right-hand side pins the first point where fn is not polynomial.
  std::vector<std::vector<Rat>> rows;      // echelon rows, augmented
  std::vector<std::size_t> pivot_of_row;   // pivot column per row
  rows.reserve(width);
  for (std::int64_t k = 0; k < grid.count(); ++k) {
    const MultiIndex n = grid.at(k);
    std::vector<Rat> eq(width + 1, 0);
    for (std::size_t j = 0; j < width; ++j) {
      std::int64_t v = 1;
      for (int i = 0; i < arity; ++i)
        v = checked_mul(v, binomial(checked_sub(checked_add(n[i], basis[j][i]), 1), basis[j][i]));
      if ((degree - basis[j].grade()) % 2 != 0) v = -v;
      eq[j] = v;
    }
    eq[width] = fn(n);

    for (std::size_t r = 0; r < rows.size(); ++r) {
      const Rat f = eq[pivot_of_row[r]];
      if (f == 0) continue;
      for (std::size_t j = 0; j <= width; ++j) eq[j] -= f * rows[r][j];
    }
    std::size_t pivot = width;
    for (std::size_t j = 0; j < width; ++j)
      if (eq[j] != 0) {
        pivot = j;
        break;
      }
    if (pivot == width) {
      if (eq[width] != 0)
        throw FitError("values at " + n.str() + " are inconsistent with a degree-" +
                           std::to_string(degree) + " polynomial on the grid from " +
                           offset.str(),
                       FitError::Kind::Mismatch);
      continue;
    }
    const Rat lead = eq[pivot];
    for (std::size_t j = 0; j <= width; ++j) eq[j] /= lead;
    rows.push_back(std::move(eq));
    pivot_of_row.push_back(pivot);
  }
  if (rows.size() != width)
    throw FitError("fit system is singular", FitError::Kind::Singular);

  // Back-substitute in decreasing pivot order.
  std::vector<std::size_t> order(rows.size());
  for (std::size_t r = 0; r < rows.size(); ++r) order[r] = r;
  std::sort(order.begin(), order.end(),
            [&](std::size_t a, std::size_t b) { return pivot_of_row[a] > pivot_of_row[b]; });
  std::vector<Rat> solution(width, 0);
  for (std::size_t r : order) {
    Rat v = rows[r][width];
    for (std::size_t j = pivot_of_row[r] + 1; j < width; ++j) v -= rows[r][j] * solution[j];
    solution[pivot_of_row[r]] = v;
  }

  std::map<MultiIndex, std::int64_t, LexLess> coeffs;
  for (std::size_t j = 0; j < width; ++j) {
    const Rat& v = solution[j];
    if (boost::multiprecision::denominator(v) != 1)
      throw FitError("coefficient at index " + basis[j].str() + " is not an integer (" +
                         v.str() + "); the grid from " + offset.str() +
                         " is not inside the polynomial range",
                     FitError::Kind::NonIntegral);
    const auto num = boost::multiprecision::numerator(v);
    if (num > std::numeric_limits<std::int64_t>::max() ||
        num < std::numeric_limits<std::int64_t>::min())
      throw OverflowError("fitted coefficient exceeds machine range");
    const std::int64_t c = static_cast<std::int64_t>(num);
    if (c != 0) coeffs.emplace(basis[j], c);
  }
  return HilbertPolynomial(arity, degree, std::move(coeffs));
}

HilbertPolynomial fit_polynomial(const Filtration& f, const MultiIndex& fit_offset,
                                 std::int64_t verify_margin) {
  if (verify_margin < 1) throw ValidationError("verify margin must be positive");
  if (!fit_offset.all_nonnegative()) throw ValidationError("fit offset must be nonnegative");
  const int s = f.s();
  const std::int64_t d = f.dim();
  auto H = [&](const MultiIndex& n) { return colength(f(n)); };
  HilbertPolynomial p = fit_signed_binomial(s, d, fit_offset, H);

  const MultiIndex shifted = fit_offset + MultiIndex::constant(s, verify_margin);
  const Box check(shifted, shifted + MultiIndex::constant(s, d));
  for (std::int64_t k = 0; k < check.count(); ++k) {
    const MultiIndex n = check.at(k);
    if (p(n) != H(n))
      throw FitError("fitted polynomial disagrees with the table at " + n.str() +
                         " on the verification grid",
                     FitError::Kind::Mismatch);
  }

  bool top = false;
  for (const auto& [alpha, c] : p.coefficients())
    if (alpha.grade() == d && c != 0) top = true;
  if (!top)
    throw FitError("fitted polynomial has total degree below " + std::to_string(d),
                   FitError::Kind::DegreeDeficient);
  return p;
}

std::map<MultiIndex, std::int64_t, LexLess> mixed_multiplicities(const HilbertPolynomial& p) {
  std::map<MultiIndex, std::int64_t, LexLess> out;
  std::vector<MultiIndex> top;
  for (const MultiIndex& alpha : degree_simplex(p.arity(), p.total_degree()))
    if (alpha.grade() == p.total_degree()) top.push_back(alpha);
  for (const MultiIndex& alpha : top) {
    const std::int64_t e = p.coefficient(alpha);
    if (e <= 0)
      throw PositivityError("normalized leading coefficient at " + alpha.str() +
                            " is " + std::to_string(e) + ", expected positive");
    out.emplace(alpha, e);
  }
  return out;
}

std::vector<std::string> grading_names(int arity) {
  if (arity == 1) return {"n"};
  if (arity == 2) return {"r", "s"};
  std::vector<std::string> names;
  for (int i = 0; i < arity; ++i) names.push_back("n" + std::to_string(i + 1));
  return names;
}

std::string polynomial_display(const HilbertPolynomial& p) {
  const std::vector<std::string> names = grading_names(p.arity());
  std::vector<std::pair<MultiIndex, std::int64_t>> terms(p.coefficients().begin(),
                                                         p.coefficients().end());
  // Total degree descending, then sharpest component first, then lex.
  auto max_comp = [](const MultiIndex& a) {
    std::int64_t m = 0;
    for (int i = 0; i < a.arity(); ++i) m = std::max(m, a[i]);
    return m;
  };
  std::sort(terms.begin(), terms.end(), [&](const auto& x, const auto& y) {
    const auto &a = x.first, &b = y.first;
    if (a.grade() != b.grade()) return a.grade() > b.grade();
    if (max_comp(a) != max_comp(b)) return max_comp(a) > max_comp(b);
    return lex_less(b, a);
  });

  std::string head = "P(";
  for (int i = 0; i < p.arity(); ++i) {
    if (i) head += ",";
    head += names[static_cast<std::size_t>(i)];
  }
  head += ")=";

  std::string body;
  for (const auto& [alpha, e] : terms) {
    std::int64_t c = e;
    if ((p.total_degree() - alpha.grade()) % 2 != 0) c = -c;
    std::string factors;
    for (int i = 0; i < p.arity(); ++i) {
      if (alpha[i] == 0) continue;
      if (alpha[i] == 1) {
        factors += names[static_cast<std::size_t>(i)];
      } else {
        factors += "C(" + names[static_cast<std::size_t>(i)] + "+" +
                   std::to_string(alpha[i] - 1) + "," + std::to_string(alpha[i]) + ")";
      }
    }
    std::string mag;
    const std::int64_t abs_c = c < 0 ? -c : c;
    if (abs_c != 1 || factors.empty()) mag = std::to_string(abs_c);
    if (body.empty()) {
      if (c < 0) body += "-";
    } else {
      body += c < 0 ? "-" : "+";
    }
    body += mag + factors;
  }
  if (body.empty()) body = "0";
  return head + body;
}

}  // namespace mgfil
