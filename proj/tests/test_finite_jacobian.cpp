#include <random>

#include "curves.hpp"
#include "doctest.h"
#include "rank0/finite_jacobian.hpp"

using namespace rank0;
using namespace testcurves;

namespace {

// Number of reduced Mumford pairs over F_p, by exhaustive search.
std::uint64_t brute_force_class_count(const CurveModel& C, std::uint64_t p) {
  PrimeField F(p);
  PolyModP f = reduce_mod_p(C.f, p);
  std::uint64_t count = 1;
  for (int d = 1; d <= C.genus; ++d) {
    std::uint64_t pd = 1;
    for (int i = 0; i < d; ++i) pd *= p;
    for (std::uint64_t ai = 0; ai < pd; ++ai) {
      std::vector<std::uint64_t> ac(d + 1);
      for (int i = 0, v = ai; i < d; ++i, v /= p) ac[i] = v % p;
      ac[d] = 1;
      PolyModP a(F, ac);
      for (std::uint64_t bi = 0; bi < pd; ++bi) {
        std::vector<std::uint64_t> bc(d);
        for (int i = 0, v = bi; i < d; ++i, v /= p) bc[i] = v % p;
        PolyModP b(F, bc);
        if (((b * b - f) % a).is_zero()) ++count;
      }
    }
  }
  return count;
}

CurveModel random_odd_curve(int g, std::mt19937_64& rng) {
  std::uniform_int_distribution<long> coef(-6, 6);
  while (true) {
    std::vector<long> c(2 * g + 2);
    for (auto& v : c) v = coef(rng);
    c.back() = 1 + (coef(rng) + 6) % 3;
    PolyRat f = poly_from_ints(c);
    if (is_squarefree(f)) return validate_curve(g, f.coeffs());
  }
}

std::uint64_t first_good_prime_from(const CurveModel& C, std::uint64_t start) {
  for (std::uint64_t p = start;; ++p)
    if (is_good_prime(C, p)) return p;
}

}  // namespace

TEST_CASE("point counts on the octic and its odd model") {
  CHECK(count_points(even_octic(), 7, 1) == 6);
  CHECK(count_points(odd_septic(), 7, 1) == 6);
  CHECK(count_points_naive(even_octic(), 7, 1) == 6);
}

TEST_CASE("formula and exhaustive counts agree") {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 8; ++t) {
    auto C = random_odd_curve(2 + t % 2, rng);
    for (std::uint64_t p : {3ul, 5ul, 7ul}) {
      if (!is_good_prime(C, p)) continue;
      for (int k = 1; k <= 2; ++k) CHECK(count_points(C, p, k) == count_points_naive(C, p, k));
    }
  }
  for (auto C : {genus2_sextic(), even_no_root_a()})
    for (std::uint64_t p : {5ul, 7ul, 11ul})
      if (is_good_prime(C, p)) CHECK(count_points(C, p, 2) == count_points_naive(C, p, 2));
  CHECK(count_points(genus2_quintic(), 5, 2) == count_points_naive(genus2_quintic(), 5, 2));
}

TEST_CASE("y^2 = x^5 + x over F_3") {
  auto C = make(2, {0, 1, 0, 0, 0, 1});
  // x = 0: y = 0; x = 1: f = 2, nonsquare; x = 2: f = 32 + 2 = 34 = 1 -> 2 points
  CHECK(count_points(C, 3, 1) == 1 + 1 + 0 + 2);
  CHECK(count_points(C, 3, 1) == count_points_naive(C, 3, 1));
}

TEST_CASE("L(1) equals the number of reduced divisor classes") {
  std::mt19937_64 rng(3);
  int checked = 0;
  for (int t = 0; t < 12; ++t) {
    auto C = random_odd_curve(2, rng);
    for (std::uint64_t p : {3ul, 5ul}) {
      if (!is_good_prime(C, p)) continue;
      auto L = l_polynomial(C, p);
      CHECK(L.at_one() == BigInt(static_cast<unsigned long>(brute_force_class_count(C, p))));
      ++checked;
    }
  }
  CHECK(checked >= 10);
  auto C3 = random_odd_curve(3, rng);
  auto p3 = first_good_prime_from(C3, 3);
  CHECK(l_polynomial(C3, p3).at_one() == BigInt(static_cast<unsigned long>(brute_force_class_count(C3, p3))));
}

TEST_CASE("functional equation and Weil bounds") {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 10; ++t) {
    auto C = random_odd_curve(2 + t % 2, rng);
    auto p = first_good_prime_from(C, 11 + t);
    auto L = l_polynomial(C, p);
    const int g = C.genus;
    BigInt pg = 1;
    for (int i = 0; i < g; ++i) pg *= static_cast<unsigned long>(p);
    CHECK(L.a[0] == 1);
    CHECK(L.a[2 * g] == pg);
    BigInt pk = 1;
    for (int i = g; i >= 0; --i, pk *= static_cast<unsigned long>(p)) CHECK(L.a[2 * g - i] == pk * L.a[i]);
    // |a_i| <= C(2g, i) p^(i/2)
    for (int i = 1; i <= g; ++i) {
      BigInt binom = 1;
      for (int j = 0; j < i; ++j) binom = binom * (2 * g - j) / (j + 1);
      BigInt lhs = L.a[i] * L.a[i];
      BigInt rhs = binom * binom;
      for (int j = 0; j < i; ++j) rhs *= static_cast<unsigned long>(p);
      CHECK(lhs <= rhs);
    }
  }
}

TEST_CASE("Cantor group laws over F_p") {
  std::mt19937_64 rng(17);
  for (int t = 0; t < 5; ++t) {
    auto C = random_odd_curve(2 + t % 2, rng);
    auto p = first_good_prime_from(C, 7 + 4 * t);
    auto J = jacobian_mod_p(C, p);
    auto n = static_cast<std::int64_t>(l_polynomial(C, p).at_one().get_si());
    for (int i = 0; i < 1000; ++i) {
      auto A = random_element(J, rng), B = random_element(J, rng), D = random_element(J, rng);
      REQUIRE(J.is_valid(A));
      CHECK(J.add(A, J.zero()) == A);
      CHECK(J.add(A, J.neg(A)).is_identity());
      CHECK(J.add(A, B) == J.add(B, A));
      CHECK(J.add(J.add(A, B), D) == J.add(A, J.add(B, D)));
      CHECK(J.is_valid(J.add(A, B)));
      if (i % 50 == 0) {
        CHECK(J.mul(A, std::int64_t{0}).is_identity());
        CHECK(J.mul(A, std::int64_t{2}) == J.add(A, A));
        CHECK(J.mul(A, n).is_identity());
        auto ord = element_order(J, A, static_cast<std::uint64_t>(n));
        CHECK(n % static_cast<std::int64_t>(ord) == 0);
        CHECK(J.mul(A, static_cast<std::int64_t>(ord)).is_identity());
      }
    }
  }
}

TEST_CASE("two-torsion from roots of f mod p") {
  auto C = odd_septic();
  auto J = jacobian_mod_p(C, 7);
  PrimeField F(7);
  MumfordFp D{PolyModP(F, {6, 1}), PolyModP(F)};  // x - 1
  REQUIRE(J.is_valid(D));
  auto n = l_polynomial(C, 7).at_one().get_ui();
  CHECK(element_order(J, D, n) == 2);
  CHECK(element_order(J, J.zero(), n) == 1);
}

TEST_CASE("square roots in F_p[x]/(u)") {
  std::mt19937_64 rng(23);
  for (std::uint64_t p : {3ul, 5ul, 13ul, 17ul})
    for (int d = 1; d <= 3; ++d) {
      PolyModP u = least_irreducible(p, d);
      PrimeField F(p);
      std::uniform_int_distribution<std::uint64_t> coin(0, p - 1);
      for (int t = 0; t < 20; ++t) {
        std::vector<std::uint64_t> c(d);
        for (auto& v : c) v = coin(rng);
        PolyModP x(F, c);
        PolyModP sq = (x * x) % u;
        auto r = sqrt_mod_irreducible(sq, u);
        REQUIRE(r.has_value());
        CHECK((*r * *r) % u == sq);
      }
    }
}

TEST_CASE("Sylow subgroups have the full q-part") {
  std::mt19937_64 rng(29);
  for (int t = 0; t < 6; ++t) {
    auto C = random_odd_curve(2 + t % 2, rng);
    auto p = first_good_prime_from(C, 5 + 2 * t);
    auto J = jacobian_mod_p(C, p);
    auto n = l_polynomial(C, p).at_one().get_ui();
    for (auto [q, e] : factor_small(n)) {
      std::uint64_t qe = 1;
      for (int i = 0; i < e; ++i) qe *= q;
      if (qe > 4000) continue;
      auto S = sylow_subgroup(J, n, q, rng);
      CHECK(S.elements.size() == qe);
      for (const auto& x : S.elements) CHECK(J.mul(x, static_cast<std::int64_t>(qe)).is_identity());
      if (q == 2) {
        // #J[2](F_p) = 2^(r - 1), r the number of irreducible factors of f mod p.
        PolyModP fp = reduce_mod_p(C.f, p).monic();
        // r via distinct-degree factorization: gcd(x^(p^d) - x, f) collects the
        // degree-d factors.
        int r = 0;
        PrimeField F(p);
        PolyModP x = PolyModP::monomial(F, 1, 1), h = x, rest = fp;
        for (int d = 1; rest.degree() > 0; ++d) {
          h = powmod(h, p, fp);
          PolyModP g = gcd(h - x, rest);
          r += g.degree() / d;
          rest = rest / g;
        }
        std::uint64_t tw = 0;
        for (const auto& x : S.elements)
          if (J.add(x, x).is_identity()) ++tw;
        CHECK(tw == (1ul << (r - 1)));
      }
    }
  }
}
