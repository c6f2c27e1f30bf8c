#pragma once

#include <functional>
#include <map>
#include <string>

#include "mgfil/filtration.hpp"

namespace mgfil {

// Dense table of colengths over an origin box, row-major with the last axis
// fastest.  Queries clamp through n+.
struct HilbertTable {
  Box box;
  std::vector<std::int64_t> values;

  std::int64_t at(const MultiIndex& n) const;
};

HilbertTable hilbert_function(const Filtration& f, const MultiIndex& box, int threads = 1);

// Integer polynomial in the signed binomial basis of total degree D:
//   P(n) = sum_{|a| <= D} (-1)^(D-|a|) e_a prod_i C(n_i + a_i - 1, a_i).
class HilbertPolynomial {
 public:
  HilbertPolynomial(int arity, std::int64_t total_degree,
                    std::map<MultiIndex, std::int64_t, LexLess> coeffs);

  int arity() const { return arity_; }
  std::int64_t total_degree() const { return degree_; }
  std::int64_t coefficient(const MultiIndex& alpha) const;
  const std::map<MultiIndex, std::int64_t, LexLess>& coefficients() const { return coeffs_; }

  std::int64_t operator()(const MultiIndex& n) const;

  friend bool operator==(const HilbertPolynomial& a, const HilbertPolynomial& b) {
    return a.arity_ == b.arity_ && a.degree_ == b.degree_ && a.coeffs_ == b.coeffs_;
  }
  friend bool operator!=(const HilbertPolynomial& a, const HilbertPolynomial& b) {
    return !(a == b);
  }

 private:
  int arity_;
  std::int64_t degree_;
  std::map<MultiIndex, std::int64_t, LexLess> coeffs_;  // zero coefficients dropped
};

// Exact interpolation of fn in the signed binomial basis of total degree D on
// the product grid offset + [0, D]^s.  The basis restricted to that grid is
// unisolvent, so the system determines the coefficients; the surplus grid
// equations are checked and the first failing point is reported.
HilbertPolynomial fit_signed_binomial(int arity, std::int64_t degree, const MultiIndex& offset,
                                      const std::function<std::int64_t(const MultiIndex&)>& fn);

// Fit of n -> colength(F(n)) at total degree d = ambient dimension, then an
// independent re-check on the grid shifted by verify_margin * e.  The fitted
// polynomial must have integer coefficients and exact total degree d.
HilbertPolynomial fit_polynomial(const Filtration& f, const MultiIndex& fit_offset,
                                 std::int64_t verify_margin);

// Top-degree coefficients e_a, |a| = D; all must be positive.
std::map<MultiIndex, std::int64_t, LexLess> mixed_multiplicities(const HilbertPolynomial& p);

// Grading variable names used in displayed polynomials: n / r,s / n1..ns.
std::vector<std::string> grading_names(int arity);

// Compact display, e.g. "P(r,s)=4C(r+1,2)+4C(s+1,2)+4rs-r-s".
std::string polynomial_display(const HilbertPolynomial& p);

}  // namespace mgfil
