#include <random>

#include "doctest.h"
#include "mgfil/binomial.hpp"
#include "mgfil/errors.hpp"
#include "mgfil/hilbert.hpp"
#include "mgfil/postulation.hpp"
#include "oracles.hpp"

using namespace mgfil;

namespace {

MultiIndex mi(std::initializer_list<std::int64_t> c) { return MultiIndex(std::vector<std::int64_t>(c)); }

MonomialIdeal ideal(int dim, std::initializer_list<std::initializer_list<std::int64_t>> gens) {
  std::vector<Monomial> v;
  for (auto g : gens) v.push_back(Monomial(MultiIndex(std::vector<std::int64_t>(g))));
  return MonomialIdeal::from_generators(dim, std::move(v));
}

Filtration example2() {
  FiltrationSpec spec;
  spec.ideals = {MonomialIdeal::maximal_power(2, 2), ideal(2, {{2, 0}, {0, 2}})};
  spec.family = Family::Powers;
  return Filtration(spec);
}

Filtration powers_of(MonomialIdeal a) {
  FiltrationSpec spec;
  spec.ideals = {std::move(a)};
  spec.family = Family::Powers;
  return Filtration(spec);
}

HilbertPolynomial poly(int arity, std::int64_t degree,
                       std::initializer_list<std::pair<std::initializer_list<std::int64_t>, std::int64_t>> cs) {
  std::map<MultiIndex, std::int64_t, LexLess> m;
  for (const auto& [a, e] : cs) m.emplace(MultiIndex(std::vector<std::int64_t>(a)), e);
  return HilbertPolynomial(arity, degree, std::move(m));
}

}  // namespace

TEST_CASE("hilbert function tables") {
  const auto f = example2();
  const auto table = hilbert_function(f, mi({4, 4}), 2);
  CHECK(table.at(mi({0, 0})) == 0);
  CHECK(table.at(mi({1, 0})) == 3);
  CHECK(table.at(mi({0, 1})) == 4);
  CHECK(table.at(mi({-2, 1})) == 4);  // clamps through n+

  const Box box(mi({0, 0}), mi({4, 4}));
  for (std::int64_t k = 0; k < box.count(); ++k) {
    const auto n = box.at(k);
    CHECK(table.at(n) == colength(f(n)));
  }

  const auto serial = hilbert_function(f, mi({4, 4}), 1);
  CHECK(serial.values == table.values);
}

TEST_CASE("polynomial type basics") {
  // P(n) = 4C(n+1,2) - 0n + 0 in one variable
  const auto p = poly(1, 2, {{{2}, 4}});
  CHECK(p.coefficient(mi({2})) == 4);
  CHECK(p.coefficient(mi({1})) == 0);
  CHECK(p(mi({0})) == 0);
  CHECK(p(mi({3})) == 24);
  CHECK(p(mi({-1})) == 0);
  CHECK(p(mi({-3})) == 4 * binomial(-2, 2));

  CHECK_THROWS_AS(poly(1, 1, {{{2}, 1}}), DomainError);
  CHECK_THROWS_AS(poly(2, 2, {{{1}, 1}}), ArityError);
  CHECK(poly(2, 2, {{{1, 1}, 3}}) == poly(2, 2, {{{1, 1}, 3}, {{0, 0}, 0}}));
}

TEST_CASE("signed binomial fit round trips") {
  std::mt19937_64 rng(59);
  std::uniform_int_distribution<std::int64_t> coeff(-9, 9);
  for (int t = 0; t < 25; ++t) {
    const int s = 1 + (t % 2);
    const std::int64_t d = 1 + (t % 3);
    std::map<MultiIndex, std::int64_t, LexLess> cs;
    const Box simplex(MultiIndex::zero(s), MultiIndex::constant(s, d));
    for (std::int64_t k = 0; k < simplex.count(); ++k) {
      const auto a = simplex.at(k);
      if (a.grade() <= d) cs.emplace(a, coeff(rng));
    }
    const HilbertPolynomial want(s, d, cs);
    const auto offset = MultiIndex::constant(s, (t % 4));
    const auto got = fit_signed_binomial(s, d, offset,
                                         [&](const MultiIndex& n) { return want(n); });
    CHECK(got == want);
  }
}

TEST_CASE("fit rejects non polynomial data") {
  CHECK_THROWS_AS(fit_signed_binomial(2, 2, mi({0, 0}),
                                      [](const MultiIndex& n) {
                                        return n[0] * n[0] * n[0] + n[1];
                                      }),
                  FitError);
}

TEST_CASE("fitted polynomials of bundled filtrations") {
  SUBCASE("maximal ideal in the plane") {
    const auto p = fit_polynomial(powers_of(MonomialIdeal::maximal_power(2, 1)), mi({3}), 3);
    CHECK(p.total_degree() == 2);
    CHECK(p.coefficients().size() == 1);
    CHECK(p.coefficient(mi({2})) == 1);
    for (std::int64_t n = 0; n <= 12; ++n) CHECK(p(mi({n})) == binomial(n + 1, 2));
  }

  SUBCASE("two variable square powers") {
    const auto p = fit_polynomial(powers_of(ideal(2, {{2, 0}, {0, 2}})), mi({3}), 3);
    CHECK(p.coefficients().size() == 1);
    CHECK(p.coefficient(mi({2})) == 4);
  }

  SUBCASE("pair of maximal ideals") {
    FiltrationSpec spec;
    spec.ideals = {MonomialIdeal::maximal_power(2, 1), MonomialIdeal::maximal_power(2, 1)};
    spec.family = Family::Powers;
    const auto p = fit_polynomial(Filtration(spec), mi({3, 3}), 3);
    CHECK(p.coefficient(mi({2, 0})) == 1);
    CHECK(p.coefficient(mi({1, 1})) == 1);
    CHECK(p.coefficient(mi({0, 2})) == 1);
    CHECK(p.coefficients().size() == 3);
  }

  SUBCASE("bundled two ideal example") {
    const auto p = fit_polynomial(example2(), mi({3, 3}), 4);
    CHECK(p.coefficient(mi({2, 0})) == 4);
    CHECK(p.coefficient(mi({1, 1})) == 4);
    CHECK(p.coefficient(mi({0, 2})) == 4);
    CHECK(p.coefficient(mi({1, 0})) == 1);
    CHECK(p.coefficient(mi({0, 1})) == 1);
    CHECK(p.coefficient(mi({0, 0})) == 0);
    CHECK(polynomial_display(p) == "P(r,s)=4C(r+1,2)+4C(s+1,2)+4rs-r-s");
    CHECK(p(mi({0, 1})) == 3);
    CHECK(p(mi({1, 0})) == 3);

    // same coefficients from a different stabilized grid
    const auto again = fit_polynomial(example2(), mi({5, 4}), 2);
    CHECK(again == p);
  }

  SUBCASE("offset inside the transient fails loudly") {
    CHECK_THROWS_AS(fit_polynomial(example2(), mi({0, 0}), 2), FitError);
  }
}

TEST_CASE("closed forms for single graded products") {
  const auto i2 = MonomialIdeal::maximal_power(2, 2);
  const auto j = ideal(2, {{2, 0}, {0, 2}});

  const auto pij = fit_polynomial(powers_of(ideal_product(i2, j)), mi({3}), 3);
  CHECK(pij.coefficient(mi({2})) == 16);
  CHECK(pij.coefficient(mi({1})) == 6);
  CHECK(pij.coefficient(mi({0})) == 0);

  const auto pi2j = fit_polynomial(powers_of(ideal_product(ideal_power(i2, 2), j)), mi({3}), 3);
  CHECK(pi2j.coefficient(mi({2})) == 36);
  CHECK(pi2j.coefficient(mi({1})) == 15);
  CHECK(pi2j.coefficient(mi({0})) == 0);

  for (std::int64_t n = 1; n <= 4; ++n) {
    CHECK(pij(mi({n})) == 16 * binomial(n + 1, 2) - 6 * n);
    CHECK(pi2j(mi({n})) == 36 * binomial(n + 1, 2) - 15 * n);
  }
}

TEST_CASE("mixed multiplicities") {
  const auto p = fit_polynomial(example2(), mi({3, 3}), 4);
  const auto mm = mixed_multiplicities(p);
  REQUIRE(mm.size() == 3);
  CHECK(mm.at(mi({2, 0})) == 4);
  CHECK(mm.at(mi({1, 1})) == 4);
  CHECK(mm.at(mi({0, 2})) == 4);

  const auto pm = fit_polynomial(powers_of(MonomialIdeal::maximal_power(2, 1)), mi({3}), 3);
  CHECK(mixed_multiplicities(pm) == std::map<MultiIndex, std::int64_t, LexLess>{{mi({2}), 1}});
  const auto pj = fit_polynomial(powers_of(ideal(2, {{2, 0}, {0, 2}})), mi({3}), 3);
  CHECK(mixed_multiplicities(pj).at(mi({2})) == 4);

  // a vanishing top coefficient is a fitting bug, not a math possibility
  CHECK_THROWS_AS(mixed_multiplicities(poly(2, 2, {{{2, 0}, 1}, {{0, 2}, 1}})), PositivityError);
  CHECK_THROWS_AS(mixed_multiplicities(poly(1, 2, {{{2}, -1}})), PositivityError);
}

TEST_CASE("classical coefficients for a single grading") {
  // Independent Cramer solve of H(n) = c0 C(n+1,2) - c1 n + c2 on n = 4,5,6.
  const auto f = powers_of(ideal(2, {{2, 0}, {0, 2}}));
  std::int64_t h[3];
  std::int64_t a[3][3];
  for (int r = 0; r < 3; ++r) {
    const std::int64_t n = 4 + r;
    h[r] = colength(f(mi({n})));
    a[r][0] = binomial(n + 1, 2);
    a[r][1] = -n;
    a[r][2] = 1;
  }
  auto det3 = [](std::int64_t m[3][3]) {
    return m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) -
           m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0]) +
           m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0]);
  };
  const std::int64_t den = det3(a);
  REQUIRE(den != 0);
  std::int64_t classical[3];
  for (int c = 0; c < 3; ++c) {
    std::int64_t acol[3][3];
    for (int r = 0; r < 3; ++r)
      for (int cc = 0; cc < 3; ++cc) acol[r][cc] = (cc == c) ? h[r] : a[r][cc];
    const std::int64_t num = det3(acol);
    REQUIRE(num % den == 0);
    classical[c] = num / den;
  }

  const auto p = fit_polynomial(f, mi({3}), 3);
  CHECK(classical[0] == p.coefficient(mi({2})));
  CHECK(classical[1] == p.coefficient(mi({1})));
  CHECK(classical[2] == p.coefficient(mi({0})));
}

TEST_CASE("difference polynomial drops one degree and keeps positive tops") {
  struct Case {
    Filtration f;
    MultiIndex offset;
  };
  FiltrationSpec mm2;
  mm2.ideals = {MonomialIdeal::maximal_power(2, 1), MonomialIdeal::maximal_power(2, 1)};
  mm2.family = Family::Powers;
  const Case cases[] = {{Filtration(mm2), mi({3, 3})}, {example2(), mi({3, 3})}};
  for (const auto& c : cases) {
    const auto p = fit_polynomial(c.f, c.offset, 3);
    const std::int64_t d = p.total_degree();
    const auto e = MultiIndex::ones(2);
    auto diff = [&](const MultiIndex& n) {
      return colength(c.f(n + e)) - colength(c.f(n));
    };
    // H(n+e) - H(n) matches P(n+e) - P(n) on the stabilized region
    const Box probe(c.offset, c.offset + mi({2, 2}));
    for (std::int64_t k = 0; k < probe.count(); ++k) {
      const auto n = probe.at(k);
      CHECK(diff(n) == p(n + e) - p(n));
    }
    const auto g = fit_signed_binomial(2, d - 1, c.offset, diff);
    for (const auto& [alpha, ga] : g.coefficients()) {
      if (alpha.grade() == d - 1) CHECK(ga > 0);
    }
    CHECK(g.coefficient(mi({1, 0})) > 0);
    CHECK(g.coefficient(mi({0, 1})) > 0);
  }
}

TEST_CASE("postulation sets of bundled examples") {
  SUBCASE("single maximal ideal") {
    const auto f = powers_of(MonomialIdeal::maximal_power(2, 1));
    const auto p = fit_polynomial(f, mi({3}), 3);
    const auto set = postulation_set(f, p, mi({8}), 3);
    REQUIRE(set.minimal_elements.size() == 1);
    CHECK(set.minimal_elements[0] == mi({0}));
    CHECK_FALSE(set.certified());
    CHECK(std::get<HeuristicTail>(set.certification).margin == 3);
  }

  SUBCASE("bundled two ideal example") {
    const auto f = example2();
    const auto p = fit_polynomial(f, mi({3, 3}), 4);
    const auto set = postulation_set(f, p, mi({6, 6}), 4);
    REQUIRE(set.minimal_elements.size() == 1);
    CHECK(set.minimal_elements[0] == mi({1, 0}));
    CHECK_FALSE(set.member(mi({0, 0})));
    CHECK_FALSE(set.member(mi({0, 5})));
    CHECK(set.member(mi({1, 0})));
    CHECK(set.member(mi({4, 2})));

    // extended scan across the boundary stays inside the first quadrant
    const auto wide = postulation_set(f, p, mi({-2, -2}), mi({6, 6}), 4);
    for (const auto& n : wide.minimal_elements) CHECK(n.all_nonnegative());
    CHECK(wide.member(mi({1, 0})));
    CHECK_FALSE(wide.member(mi({1, -1})));
  }
}

TEST_CASE("postulation numbers") {
  SUBCASE("never disagreeing families report none") {
    const auto f = powers_of(MonomialIdeal::maximal_power(2, 1));
    const auto p = fit_polynomial(f, mi({3}), 3);
    const auto pn = postulation_number(f, p, 8);
    CHECK_FALSE(pn.value.has_value());
    CHECK_FALSE(pn.box_edge_disagrees);

    const auto fj = powers_of(ideal(2, {{2, 0}, {0, 2}}));
    const auto pj = fit_polynomial(fj, mi({3}), 3);
    CHECK_FALSE(postulation_number(fj, pj, 8).value.has_value());
  }

  SUBCASE("a perturbed table pins the disagreement") {
    FiltrationSpec spec;
    spec.ideals = {MonomialIdeal::maximal_power(2, 1)};
    spec.family = Family::UserTable;
    auto table = std::make_shared<UserTableData>();
    table->region = mi({4});
    for (std::int64_t n = 1; n <= 4; ++n)
      table->entries.emplace(mi({n}), MonomialIdeal::maximal_power(2, n));
    table->entries.find(mi({2}))->second = MonomialIdeal::maximal_power(2, 3);
    spec.table = table;
    const Filtration f(spec);

    const auto p = fit_polynomial(f, mi({6}), 3);
    const auto pn = postulation_number(f, p, 8);
    REQUIRE(pn.value.has_value());
    CHECK(*pn.value == 2);
    CHECK_FALSE(pn.box_edge_disagrees);

    const auto tight = postulation_number(f, p, 2);
    REQUIRE(tight.value.has_value());
    CHECK(*tight.value == 2);
    CHECK(tight.box_edge_disagrees);
  }
}
