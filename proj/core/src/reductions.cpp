#include "mgfil/reductions.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "mgfil/parallel.hpp"

namespace mgfil {

namespace {

MonomialIdeal spread_ideal(int dim, const std::vector<Monomial>& y) {
  return MonomialIdeal::from_generators(dim, y);
}

}  // namespace

CompleteReductionCandidate CompleteReductionCandidate::make(
    const Filtration& f, std::vector<std::vector<Monomial>> rows) {
  if (static_cast<int>(rows.size()) != f.s())
    throw ValidationError("candidate needs one row per filtration ideal");
  const int d = f.dim();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (static_cast<int>(rows[i].size()) != d)
      throw ValidationError("candidate row " + std::to_string(i + 1) + " needs " +
                            std::to_string(d) + " entries");
    for (std::size_t j = 0; j < rows[i].size(); ++j)
      if (!f.ideal(static_cast<int>(i)).contains(rows[i][j]))
        throw MembershipError("candidate entry (" + std::to_string(i + 1) + "," +
                              std::to_string(j + 1) + ") lies outside ideal " +
                              std::to_string(i + 1));
  }
  CompleteReductionCandidate c;
  c.rows_ = std::move(rows);
  c.y_.reserve(static_cast<std::size_t>(d));
  for (int j = 0; j < d; ++j) {
    Monomial prod(MultiIndex::zero(d));
    for (int i = 0; i < f.s(); ++i) prod = prod * c.entry(i, j);
    c.y_.push_back(prod);
  }
  return c;
}

void CompleteReductionCandidate::sort_columns() {
  const int d = width();
  std::vector<int> order(static_cast<std::size_t>(d));
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(), [&](int a, int b) {
    if (y_[static_cast<std::size_t>(a)] != y_[static_cast<std::size_t>(b)])
      return canonical_before(y_[static_cast<std::size_t>(a)], y_[static_cast<std::size_t>(b)]);
    for (int i = 0; i < s(); ++i)
      if (entry(i, a) != entry(i, b)) return canonical_before(entry(i, a), entry(i, b));
    return false;
  });
  std::vector<std::vector<Monomial>> rows = rows_;
  std::vector<Monomial> y = y_;
  for (int j = 0; j < d; ++j) {
    y[static_cast<std::size_t>(j)] = y_[static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
    for (int i = 0; i < s(); ++i)
      rows[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)] =
          rows_[static_cast<std::size_t>(i)][static_cast<std::size_t>(order[static_cast<std::size_t>(j)])];
  }
  rows_ = std::move(rows);
  y_ = std::move(y);
}

bool check_complete_reduction_at(const Filtration& f, const CompleteReductionCandidate& c,
                                 const MultiIndex& n) {
  if (n.arity() != f.s()) throw ArityError("degree arity differs from grading arity");
  const MonomialIdeal y = spread_ideal(f.dim(), c.y());
  const MonomialIdeal lhs = ideal_product(y, f(n));
  return lhs == f(n + MultiIndex::ones(f.s()));
}

UpwardClosedSet reduction_vector_set(const Filtration& f, const CompleteReductionCandidate& c,
                                     const MultiIndex& box, int threads) {
  return reduction_vector_set(f, c, stabilization_bounds(f, box), threads);
}

UpwardClosedSet reduction_vector_set(const Filtration& f, const CompleteReductionCandidate& c,
                                     const StabilizationCertificate& cert, int threads) {
  const Box region = Box::at_origin(cert.verified_box);
  auto holds = [&](const MultiIndex& n) { return check_complete_reduction_at(f, c, n); };
  return upward_set_from_property(region, holds, cert, threads);
}

JointReductionCandidate JointReductionCandidate::make(const Filtration& f, MultiIndex type,
                                                      std::vector<std::vector<Monomial>> rows) {
  if (type.arity() != f.s()) throw ArityError("type arity differs from grading arity");
  if (!type.all_nonnegative() || type.grade() != f.dim())
    throw ValidationError("joint reduction type must be nonnegative with |q| = " +
                          std::to_string(f.dim()));
  if (static_cast<int>(rows.size()) != f.s())
    throw ValidationError("joint reduction needs one row per filtration ideal");
  for (int i = 0; i < f.s(); ++i) {
    const auto& row = rows[static_cast<std::size_t>(i)];
    if (static_cast<std::int64_t>(row.size()) != type[i])
      throw ValidationError("row " + std::to_string(i + 1) + " needs q_i = " +
                            std::to_string(type[i]) + " entries");
    for (const Monomial& a : row)
      if (!f.ideal(i).contains(a))
        throw MembershipError("joint reduction entry in row " + std::to_string(i + 1) +
                              " lies outside its ideal");
  }
  JointReductionCandidate c;
  c.type_ = std::move(type);
  c.rows_ = std::move(rows);
  return c;
}

bool check_joint_reduction_at(const Filtration& f, const JointReductionCandidate& c,
                              const MultiIndex& n) {
  if (n.arity() != f.s()) throw ArityError("degree arity differs from grading arity");
  MonomialIdeal acc = MonomialIdeal::zero(f.dim());
  for (int i = 0; i < f.s(); ++i) {
    if (c.rows()[static_cast<std::size_t>(i)].empty()) continue;
    const MonomialIdeal shifted = f(n - MultiIndex::unit(f.s(), i));
    for (const Monomial& a : c.rows()[static_cast<std::size_t>(i)])
      acc = ideal_sum(acc, monomial_times_ideal(a, shifted));
  }
  return acc == f(n);
}

DescentReport nakayama_descent_check(const Filtration& f, const std::vector<Monomial>& y,
                                     const MultiIndex& box, int threads) {
  if (box.arity() != f.s()) throw ArityError("box arity differs from grading arity");
  if (y.empty()) throw ValidationError("descent check needs at least one element");
  MonomialIdeal diagonal = f.ideal(0);
  for (int i = 1; i < f.s(); ++i) diagonal = ideal_product(diagonal, f.ideal(i));
  for (const Monomial& m : y)
    if (!diagonal.contains(m))
      throw MembershipError("descent element lies outside the product of the ideals");

  const MonomialIdeal yi = spread_ideal(f.dim(), y);
  const MultiIndex e = MultiIndex::ones(f.s());
  const Box region = Box::at_origin(box);
  std::vector<std::uint8_t> violated(static_cast<std::size_t>(region.count()), 0);
  parallel_for(region.count(), threads, [&](std::int64_t k) {
    const MultiIndex n = region.at(k);
    const MonomialIdeal here = f(n);
    const MonomialIdeal dropped = ideal_product(yi, f(n - e));
    const bool right = dropped == here;
    const bool left = ideal_sum(dropped, f(n + e)) == here;
    violated[static_cast<std::size_t>(k)] = left != right;
  });

  DescentReport report;
  report.box = box;
  report.points_checked = region.count();
  for (std::int64_t k = 0; k < region.count(); ++k)
    if (violated[static_cast<std::size_t>(k)]) report.violations.push_back(region.at(k));
  return report;
}

SearchResult search_complete_reductions(const Filtration& f, const SearchOptions& options) {
  const int s = f.s();
  const int d = f.dim();
  const MultiIndex box =
      options.box.arity() == s ? options.box : MultiIndex::constant(s, 3);
  const StabilizationCertificate cert = stabilization_bounds(f, box);

  // The set inside the box is nonempty exactly when the equality holds at the
  // top corner: any member's cone reaches the corner, and the corner's cone
  // inside the box is itself.
  const MultiIndex top = cert.verified_box;

  std::vector<std::size_t> counts;
  for (int i = 0; i < s; ++i)
    for (int j = 0; j < d; ++j) {
      (void)j;
      counts.push_back(f.ideal(i).generator_count());
    }
  const std::size_t positions = counts.size();

  SearchResult result;
  std::set<std::vector<std::int64_t>> seen;
  std::vector<std::size_t> pick(positions, 0);
  bool exhausted = false;
  while (!exhausted) {
    if (result.examined >= options.cap) {
      result.cap_hit = true;
      break;
    }
    ++result.examined;

    std::vector<std::vector<Monomial>> rows(static_cast<std::size_t>(s));
    for (int i = 0; i < s; ++i) {
      auto& row = rows[static_cast<std::size_t>(i)];
      row.reserve(static_cast<std::size_t>(d));
      for (int j = 0; j < d; ++j)
        row.push_back(
            f.ideal(i).generators()[pick[static_cast<std::size_t>(i * d + j)]]);
    }
    CompleteReductionCandidate c = CompleteReductionCandidate::make(f, std::move(rows));

    bool admissible = true;
    if (options.degree_bound > 0)
      for (const Monomial& yj : c.y())
        if (yj.degree() > options.degree_bound) admissible = false;

    if (admissible) {
      std::vector<std::int64_t> key;
      std::vector<Monomial> sorted = c.y();
      std::sort(sorted.begin(), sorted.end(),
                [](const Monomial& a, const Monomial& b) { return canonical_before(a, b); });
      for (const Monomial& m : sorted)
        key.insert(key.end(), m.exponents().components().begin(),
                   m.exponents().components().end());
      if (seen.insert(std::move(key)).second &&
          check_complete_reduction_at(f, c, top)) {
        c.sort_columns();
        result.found.push_back(std::move(c));
      }
    }

    // Odometer step, last position fastest; generators are canonically
    // ordered, so entry tuples advance in graded-lex order.
    std::size_t pos = positions;
    while (pos > 0) {
      --pos;
      if (++pick[pos] < counts[pos]) break;
      pick[pos] = 0;
      if (pos == 0) exhausted = true;
    }
  }
  return result;
}

}  // namespace mgfil
