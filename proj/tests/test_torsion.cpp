#include <set>
#include <random>

#include "curves.hpp"
#include "doctest.h"
#include "rank0/torsion.hpp"

using namespace rank0;
using namespace testcurves;

TEST_CASE("torsion bound of the septic is 48") {
  auto C = odd_septic();
  TorsionConfig cfg;
  CHECK(torsion_bound(C, bound_primes(C, cfg)) == 48);
}

TEST_CASE("torsion bound is trivial for the trivial-torsion septic") {
  auto C = trivial_torsion();
  CHECK(torsion_bound(C, {3, 5, 7, 11, 17, 23, 31, 41, 43}) == 1);
  // enlarging the prime set never increases the bound
  BigInt small = torsion_bound(C, {3, 5});
  CHECK(small % torsion_bound(C, {3, 5, 7}) == 0);
}

TEST_CASE("invariant factors from element orders") {
  CHECK(invariant_factors({1}).empty());
  CHECK(invariant_factors({1, 2, 2, 2}) == std::vector<std::uint64_t>{2, 2});
  CHECK(invariant_factors({1, 2, 4, 4}) == std::vector<std::uint64_t>{4});
  // Z/2 x Z/6
  CHECK(invariant_factors({1, 2, 2, 2, 3, 3, 6, 6, 6, 6, 6, 6}) == std::vector<std::uint64_t>{2, 6});
}

TEST_CASE("two-torsion lift matches Newton root lifting") {
  auto C = odd_septic();
  const std::uint64_t p = 11;
  PrimeField F(p);
  // x + 1/2 divides f; over F_11, -1/2 = 5
  MumfordFp P{PolyModP(F, {F.from_rational(BigRational(1, 2)), 1}), PolyModP(F)};
  auto X = lift_torsion_point(C, P, 2, p, 30);
  REQUIRE(X.has_value());
  CHECK(X->digits >= 30);
  auto D = recognize_rational(*X);
  REQUIRE(D.has_value());
  CHECK(D->a == poly_from({BigRational(1, 2), 1}));
  CHECK(D->b.is_zero());
}

TEST_CASE("verify_torsion") {
  auto C = odd_septic();
  auto J = jacobian_over_Q(C);
  MumfordQ W{poly_from_ints({-1, 1}), PolyRat()};
  auto T = verify_torsion(J, W, 2);
  REQUIRE(T.has_value());
  CHECK(T->order == 2);
  MumfordQ bad{poly_from_ints({-2, 1}), PolyRat()};
  CHECK(!verify_torsion(J, bad, 2).has_value());
}

TEST_CASE("torsion subgroup of the septic") {
  auto G = torsion_subgroup(odd_septic());
  CHECK(G.bound == 48);
  CHECK(G.order() == 48);
  CHECK(G.complete);
  int two = 0;
  for (const auto& t : G.points)
    if (t.order == 2) ++two;
  CHECK(two == 7);
}

TEST_CASE("trivial torsion") {
  TorsionConfig cfg;
  cfg.primes = {3, 5, 7, 11, 17, 23, 31, 41, 43};
  auto G = torsion_subgroup(trivial_torsion(), cfg);
  CHECK(G.order() == 1);
  CHECK(G.complete);
  CHECK(G.invariant_factors.empty());
}

TEST_CASE("genus 2 quintic") {
  auto G = torsion_subgroup(genus2_quintic());
  MESSAGE("bound " << G.bound.get_str() << " order " << G.order());
  CHECK(G.complete);
}

TEST_CASE("gcd of group orders is weaker than the structure bound") {
  auto C = odd_septic();
  auto primes = bound_primes(C, TorsionConfig{});
  CHECK(torsion_bound_gcd(C, primes) == 96);
  // 2-Sylow of J(F_13) is (Z/4)^3 while the 2-part of 96 is 32
  auto part = sylow_partition(C, 13, l_polynomial(C, 13).at_one().get_ui(), 2);
  REQUIRE(part);
  CHECK(*part == std::vector<int>{2, 2, 2});
}

TEST_CASE("reduction of the septic torsion is injective and additive") {
  auto C = odd_septic();
  auto G = torsion_subgroup(C);
  REQUIRE(G.order() == 48);
  auto J = jacobian_over_Q(C);
  for (std::uint64_t p : {7, 11, 13}) {
    auto Jp = jacobian_mod_p(C, p);
    std::set<std::vector<std::uint64_t>> keys;
    for (const auto& t : G.points) keys.insert(mumford_key(reduce_mod_p(t.D, p)));
    CHECK(keys.size() == G.order());
    for (size_t i = 0; i < G.points.size(); i += 5)
      for (size_t j = 0; j < G.points.size(); j += 7) {
        auto sum = J.add(G.points[i].D, G.points[j].D);
        auto lhs = reduce_mod_p(sum, p);
        auto rhs = Jp.add(reduce_mod_p(G.points[i].D, p), reduce_mod_p(G.points[j].D, p));
        CHECK(mumford_key(lhs) == mumford_key(rhs));
      }
  }
}
