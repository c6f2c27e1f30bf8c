#include <random>
#include <thread>

#include "doctest.h"
#include "mgfil/errors.hpp"
#include "mgfil/filtration.hpp"
#include "mgfil/newton.hpp"
#include "oracles.hpp"

using namespace mgfil;

namespace {

MultiIndex mi(std::initializer_list<std::int64_t> c) { return MultiIndex(std::vector<std::int64_t>(c)); }

MonomialIdeal ideal(int dim, std::initializer_list<std::initializer_list<std::int64_t>> gens) {
  std::vector<Monomial> v;
  for (auto g : gens) v.push_back(Monomial(MultiIndex(std::vector<std::int64_t>(g))));
  return MonomialIdeal::from_generators(dim, std::move(v));
}

FiltrationSpec powers(std::vector<MonomialIdeal> ideals) {
  FiltrationSpec spec;
  spec.ideals = std::move(ideals);
  spec.family = Family::Powers;
  return spec;
}

FiltrationSpec closure_of_powers(std::vector<MonomialIdeal> ideals) {
  FiltrationSpec spec;
  spec.ideals = std::move(ideals);
  spec.family = Family::ClosureOfPowers;
  return spec;
}

}  // namespace

TEST_CASE("power family evaluation") {
  const Filtration f(powers({MonomialIdeal::maximal_power(3, 1), MonomialIdeal::maximal_power(3, 2)}));
  CHECK(f(mi({0, 0})).is_unit());
  CHECK(f(mi({2, 1})) == MonomialIdeal::maximal_power(3, 4));
  CHECK(f(mi({1, 2})) == MonomialIdeal::maximal_power(3, 5));
  // negative components clamp to zero
  CHECK(f(mi({-3, 2})) == f(mi({0, 2})));
  CHECK(f(mi({-1, -1})).is_unit());
  CHECK_THROWS_AS(f(mi({1, 1, 1})), ArityError);
}

TEST_CASE("power family matches explicit products") {
  std::mt19937_64 rng(47);
  for (int t = 0; t < 8; ++t) {
    const auto spec = oracle::random_powers_pair(rng, 2, 4, 2);
    const Filtration f(spec);
    const Box box(mi({0, 0}), mi({3, 3}));
    for (std::int64_t k = 0; k < box.count(); ++k) {
      const auto n = box.at(k);
      CHECK(f(n) == ideal_product(ideal_power(spec.ideals[0], n[0]),
                                  ideal_power(spec.ideals[1], n[1])));
    }
  }
}

TEST_CASE("closure family evaluation") {
  const Filtration f(closure_of_powers({ideal(2, {{2, 0}, {0, 2}})}));
  CHECK(f(mi({0})).is_unit());
  CHECK(f(mi({1})) == MonomialIdeal::maximal_power(2, 2));
  CHECK(f(mi({2})) == MonomialIdeal::maximal_power(2, 4));
  CHECK(f(mi({3})) == MonomialIdeal::maximal_power(2, 6));
}

TEST_CASE("filtration axioms on sampled points") {
  std::mt19937_64 rng(53);
  for (int variant = 0; variant < 2; ++variant) {
    for (int t = 0; t < 5; ++t) {
      auto spec = oracle::random_powers_pair(rng, 2, 3, 1);
      if (variant == 1) spec.family = Family::ClosureOfPowers;
      const Filtration f(spec);
      const Box box(mi({0, 0}), mi({2, 2}));
      for (std::int64_t a = 0; a < box.count(); ++a) {
        for (std::int64_t b = 0; b < box.count(); ++b) {
          const auto n = box.at(a);
          const auto m = box.at(b);
          if (n.leq(m)) CHECK(f(n).contains(f(m)));
          CHECK(f(n + m).contains(ideal_product(f(n), f(m))));
        }
      }
    }
  }
}

TEST_CASE("spec validation") {
  CHECK_THROWS_AS(Filtration(powers({})), ValidationError);
  CHECK_THROWS_AS(Filtration(powers({MonomialIdeal::unit(2)})), ValidationError);
  CHECK_THROWS_AS(Filtration(powers({ideal(2, {{1, 1}})})), ValidationError);
  CHECK_THROWS_AS(
      Filtration(powers({MonomialIdeal::maximal_power(2, 1), MonomialIdeal::maximal_power(3, 1)})),
      ValidationError);

  // table payloads only belong to the user-table family
  auto spec = powers({MonomialIdeal::maximal_power(2, 1)});
  spec.table = std::make_shared<UserTableData>();
  spec.table->region = mi({2});
  CHECK_THROWS_AS(Filtration(spec), ValidationError);
}

TEST_CASE("user table family overrides a region") {
  const auto i = ideal(2, {{2, 0}, {1, 1}, {0, 3}});
  FiltrationSpec spec;
  spec.ideals = {i};
  spec.family = Family::UserTable;
  auto table = std::make_shared<UserTableData>();
  table->region = mi({3});
  table->entries.emplace(mi({1}), i);
  table->entries.emplace(mi({2}), i);
  table->entries.emplace(mi({3}), i);
  spec.table = table;
  const Filtration f(spec);

  CHECK(f(mi({0})).is_unit());
  CHECK(f(mi({2})) == i);
  CHECK(f(mi({3})) == i);
  // beyond the table region the family falls back to powers
  CHECK(f(mi({4})) == ideal_power(i, 4));
  CHECK(f(mi({5})) == ideal_power(i, 5));
}

TEST_CASE("stabilization thresholds") {
  SUBCASE("power families stabilize immediately") {
    const Filtration f(
        powers({MonomialIdeal::maximal_power(2, 2), ideal(2, {{2, 0}, {0, 2}})}));
    const auto cert = stabilization_bounds(f, mi({4, 4}));
    CHECK(cert.bounds == mi({0, 0}));
    CHECK(cert.verified_box == mi({4, 4}));
  }

  SUBCASE("closure of a non-closed ideal needs one step") {
    // closure((X^2,Y^2)) = (X^2,XY,Y^2) != (X^2,Y^2)*R, so the product rule
    // fails at n=0 and nowhere after
    const Filtration f(closure_of_powers({ideal(2, {{2, 0}, {0, 2}})}));
    const auto cert = stabilization_bounds(f, mi({6}));
    CHECK(cert.bounds == mi({1}));
  }

  SUBCASE("closures of maximal ideal powers stabilize immediately") {
    const Filtration f(closure_of_powers(
        {MonomialIdeal::maximal_power(3, 1), MonomialIdeal::maximal_power(3, 2)}));
    const auto cert = stabilization_bounds(f, mi({5, 5}));
    CHECK(cert.bounds == mi({0, 0}));
  }

  SUBCASE("box preconditions") {
    const Filtration f(powers({MonomialIdeal::maximal_power(2, 1)}));
    CHECK_THROWS_AS(stabilization_bounds(f, mi({1})), ValidationError);
  }

  SUBCASE("violation at the box edge is an error") {
    const auto i = ideal(2, {{2, 0}, {1, 1}, {0, 3}});
    FiltrationSpec spec;
    spec.ideals = {i};
    spec.family = Family::UserTable;
    auto table = std::make_shared<UserTableData>();
    table->region = mi({3});
    table->entries.emplace(mi({1}), i);
    table->entries.emplace(mi({2}), i);
    table->entries.emplace(mi({3}), i);
    spec.table = table;
    const Filtration f(spec);
    // F(4) = i^4 while i*F(3) = i^2 keeps violating right at the edge
    CHECK_THROWS_AS(stabilization_bounds(f, mi({3})), NoStabilizationError);
    // a larger box leaves the transient behind
    const auto cert = stabilization_bounds(f, mi({5}));
    CHECK(cert.bounds == mi({4}));
  }
}

TEST_CASE("memo cache keeps values exact under eviction and races") {
  const auto spec = powers({MonomialIdeal::maximal_power(2, 1), ideal(2, {{2, 0}, {0, 2}})});
  const Filtration tiny(spec, 3);  // evicts constantly
  const Filtration roomy(spec);
  const Box box(mi({0, 0}), mi({4, 4}));
  for (std::int64_t k = 0; k < box.count(); ++k) {
    const auto n = box.at(k);
    CHECK(tiny(n) == roomy(n));
  }

  std::vector<std::thread> workers;
  std::vector<int> bad(4, 0);
  for (int w = 0; w < 4; ++w) {
    workers.emplace_back([&, w] {
      for (std::int64_t k = 0; k < box.count(); ++k) {
        const auto n = box.at(box.count() - 1 - k);
        if (tiny(n) != roomy(n)) bad[static_cast<std::size_t>(w)] = 1;
      }
    });
  }
  for (auto& t : workers) t.join();
  for (int w = 0; w < 4; ++w) CHECK(bad[static_cast<std::size_t>(w)] == 0);
}
