#include "doctest.h"
#include "rank0/exact_arith.hpp"

using namespace rank0;

namespace {

PolyRat P(std::vector<long> c) { return poly_from_ints(c); }

}  // namespace

TEST_CASE("gcd and xgcd over Q") {
  PolyRat a = P({-1, 0, 1}), b = P({-1, 1});
  CHECK(gcd(a, b) == b);
  auto r = xgcd(P({1, 0, 1}), P({0, 1}));
  CHECK(r.g.is_one());
  CHECK(r.s * P({1, 0, 1}) + r.t * P({0, 1}) == r.g);
}

TEST_CASE("rational roots") {
  // 4x^6 + 4x^5 - 7x^4 - 6x^3 + 7x^2 + 2x - 4 has roots -1, -1/2, 1? check by evaluation instead
  PolyRat f = P({-1, 1}) * P({1, 1}) * P({1, 2}) * P({1, 1, 1});
  auto roots = rational_roots(f);
  REQUIRE(roots.size() == 3);
  CHECK(roots[0] == -1);
  CHECK(roots[1] == BigRational(-1, 2));
  CHECK(roots[2] == 1);
  PolyRat g = P({-9, 0, 1}) * P({1, 0, 0, 0, 1, 0, 3});
  auto rg = rational_roots(g);
  REQUIRE(rg.size() == 2);
  CHECK(rg[0] == -3);
  CHECK(rg[1] == 3);
}

TEST_CASE("factorization over Q recovers planted factors") {
  PolyRat a = P({1, 1, 1}), b = P({-2, 0, 0, 1}), c = P({3, -1});
  auto fac = factor_over_Q(a * b * c.scale(5));
  REQUIRE(fac.factors.size() == 3);
  PolyRat prod = PolyRat::constant(RationalField{}, fac.content);
  for (const auto& h : fac.factors) prod *= h;
  CHECK(prod == a * b * c.scale(5));
  CHECK(fac.factors[0] == c.monic());
  // x^4 + 1 is irreducible over Q but splits modulo every prime.
  CHECK(factor_over_Q(P({1, 0, 0, 0, 1})).factors.size() == 1);
  // swinnerton-dyer style: (x^2-2)(x^2-3) splits only as two quadratics
  auto sd = factor_over_Q(P({-2, 0, 1}) * P({-3, 0, 1}));
  CHECK(sd.factors.size() == 2);
  auto rep = factor_over_Q(P({-1, 1}) * P({-1, 1}) * P({2, 0, 1}));
  CHECK(rep.factors.size() == 3);
}

TEST_CASE("square roots and squarefree parts") {
  CHECK(*sqrt_rational(BigRational(9, 4)) == BigRational(3, 2));
  CHECK(!sqrt_rational(BigRational(2)));
  auto s = squarefree_part(BigRational(-3, 4));
  CHECK(s.d == -3);
  CHECK(s.s == BigRational(1, 2));
  auto t = squarefree_part(BigRational(50, 3));
  CHECK(t.d == 6);
  CHECK(t.d * t.s * t.s == BigRational(50, 3));
}

TEST_CASE("quadratic field arithmetic") {
  QuadFieldElem phi{5, BigRational(1, 2), BigRational(1, 2)};
  CHECK(phi * phi == phi + QuadFieldElem::rational(1));
  CHECK(phi * inverse(phi) == QuadFieldElem::rational(1));
  QuadFieldElem target{5, BigRational(7, 2), BigRational(3, 2)};
  auto r = sqrt_quadfield(target);
  REQUIRE(r.has_value());
  CHECK((*r) * (*r) == target);
  CHECK(!sqrt_quadfield(QuadFieldElem{5, 0, 1}).has_value());
}

TEST_CASE("rational reconstruction") {
  PadicApprox a{3, 5, 122};
  auto q = rational_reconstruct(a);
  REQUIRE(q.has_value());
  CHECK(*q == BigRational(1, 2));
  // brute force: every small fraction is recovered
  BigInt m = 1;
  for (int i = 0; i < 8; ++i) m *= 7;
  for (long u = -20; u <= 20; ++u)
    for (long v = 1; v <= 20; ++v) {
      if (v % 7 == 0) continue;
      BigRational x = make_rational(u, v);
      BigInt vi;
      BigInt den = x.get_den();
      mpz_invert(vi.get_mpz_t(), den.get_mpz_t(), m.get_mpz_t());
      BigInt r = (BigInt(x.get_num()) * vi) % m;
      if (r < 0) r += m;
      auto back = rational_reconstruct({7, 8, r});
      REQUIRE(back.has_value());
      CHECK(*back == x);
    }
}

TEST_CASE("irreducible polynomials mod p") {
  PolyModP f = least_irreducible(3, 2);
  CHECK(is_irreducible_mod_p(f));
  CHECK(f.degree() == 2);
  // x^2 + 1 is the least monic irreducible quadratic over F_3
  CHECK(f == PolyModP(PrimeField(3), {1, 0, 1}));
  CHECK(is_irreducible_mod_p(least_irreducible(5, 3)));
}

TEST_CASE("discriminant") {
  CHECK(discriminant({BigInt(-2), BigInt(0), BigInt(1)}) == 8);
  CHECK(discriminant({BigInt(1), BigInt(0), BigInt(0), BigInt(1)}) == -27);
}
