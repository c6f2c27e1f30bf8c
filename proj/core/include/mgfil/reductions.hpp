#pragma once

#include "mgfil/upward_set.hpp"

namespace mgfil {

// s x d matrix of monomials, row i drawn from the i-th filtration ideal.  The
// derived tuple y_j multiplies column j through; (y_1..y_d) is tested as a
// complete reduction of the filtration.
class CompleteReductionCandidate {
 public:
  static CompleteReductionCandidate make(const Filtration& f,
                                         std::vector<std::vector<Monomial>> rows);

  int s() const { return static_cast<int>(rows_.size()); }
  int width() const { return static_cast<int>(rows_.empty() ? 0 : rows_[0].size()); }
  const std::vector<std::vector<Monomial>>& rows() const { return rows_; }
  const Monomial& entry(int i, int j) const {
    return rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
  }
  const std::vector<Monomial>& y() const { return y_; }

  // Reorder columns so the y-tuple is canonically sorted; search results are
  // reported this way.
  void sort_columns();

 private:
  std::vector<std::vector<Monomial>> rows_;
  std::vector<Monomial> y_;
};

// Does (y_1..y_d) F(n) = F(n + e) hold at n?
bool check_complete_reduction_at(const Filtration& f, const CompleteReductionCandidate& c,
                                 const MultiIndex& n);

// Degrees n with the equality at every point of the upward cone.  Scanning is
// boxed; the tail beyond the box is covered by the stabilization certificate,
// since F(m + e_i) = I_i F(m) lets the equality climb one step at a time.
UpwardClosedSet reduction_vector_set(const Filtration& f, const CompleteReductionCandidate& c,
                                     const MultiIndex& box, int threads = 1);
UpwardClosedSet reduction_vector_set(const Filtration& f, const CompleteReductionCandidate& c,
                                     const StabilizationCertificate& cert, int threads = 1);

// Joint reduction data of type q, |q| = d: q_i elements from the i-th ideal.
class JointReductionCandidate {
 public:
  static JointReductionCandidate make(const Filtration& f, MultiIndex type,
                                      std::vector<std::vector<Monomial>> rows);

  const MultiIndex& type() const { return type_; }
  const std::vector<std::vector<Monomial>>& rows() const { return rows_; }

 private:
  MultiIndex type_;
  std::vector<std::vector<Monomial>> rows_;
};

// Does sum_i sum_j a_ij F(n - e_i) = F(n) hold at n?  Degrees clamp, so
// boundary rows with q_i = 0 contribute nothing.
bool check_joint_reduction_at(const Filtration& f, const JointReductionCandidate& c,
                              const MultiIndex& n);

// Pointwise check of the descent equivalence on [0, box]:
//   F(n) = y F(n-e) + F(n+e)  iff  F(n) = y F(n-e).
// Any point where the two sides differ witnesses a non-admissible family.
struct DescentReport {
  MultiIndex box;
  std::vector<MultiIndex> violations;
  std::int64_t points_checked = 0;
};

DescentReport nakayama_descent_check(const Filtration& f, const std::vector<Monomial>& y,
                                     const MultiIndex& box, int threads = 1);

struct SearchOptions {
  std::int64_t degree_bound = 0;  // 0: no bound on deg y_j
  std::int64_t cap = 200000;      // matrices examined before giving up
  MultiIndex box;                 // empty: constant box of side 3
};

struct SearchResult {
  std::vector<CompleteReductionCandidate> found;  // nonempty reduction-vector set
  std::int64_t examined = 0;
  bool cap_hit = false;
};

// Enumerate generator-entry matrices in graded-lex order of their entry
// tuples, deduplicate by the derived y-tuple, and keep candidates whose
// reduction-vector set inside the box is nonempty.
SearchResult search_complete_reductions(const Filtration& f, const SearchOptions& options);

}  // namespace mgfil
