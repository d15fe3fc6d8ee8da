#include <random>

#include "curves.hpp"
#include "doctest.h"

using namespace rank0;
using namespace testcurves;

TEST_CASE("validation") {
  CHECK(odd_septic().degree() == 7);
  CHECK(genus2_quintic().is_odd());
  CHECK_THROWS_AS(make(3, {0, 0, 0, 0, 0, 0, 0, 0, 1}), InvalidCurve);
  CHECK_THROWS_AS(make(4, {1, 0, 0, 0, 0, 0, 0, 0, 0, 1}), InvalidCurve);
  CHECK_THROWS_AS(make(2, {1, 0, 1}), InvalidCurve);
}

TEST_CASE("good primes exclude divisors of the discriminant") {
  auto C = trivial_torsion();
  auto S = good_primes(C, 9);
  CHECK(S == std::vector<std::uint64_t>{3, 5, 7, 11, 13, 17, 19, 23, 29});
  auto F = integer_cleared_coeffs(C.f);
  CHECK(discriminant(F) == BigInt("217123345243097"));  // 137 * 1584841936081
  for (std::uint64_t p : {3ul, 5ul, 7ul, 11ul, 17ul, 23ul, 31ul, 41ul, 43ul}) CHECK(is_good_prime(C, p));
  CHECK(!is_good_prime(C, 137));
  CHECK(!is_good_prime(C, 2));
  auto S2 = good_primes(even_no_root_a(), 4);
  CHECK(std::find(S2.begin(), S2.end(), 5ul) != S2.end());
  auto S3 = good_primes(even_octic(), 3);
  CHECK(std::find(S3.begin(), S3.end(), 7ul) != S3.end());
}

TEST_CASE("points at infinity and Weierstrass points") {
  CHECK(infinity_points(odd_septic()).size() == 1);
  CHECK(infinity_points(even_no_root_b()).empty());
  CHECK(infinity_points(even_no_root_a()).size() == 2);
  auto W = rational_weierstrass_points(odd_septic());
  REQUIRE(W.size() == 3);
  CHECK(W[0] == CurvePoint::rational(-1, 0));
  CHECK(W[1] == CurvePoint::rational(BigRational(-1, 2), 0));
  CHECK(W[2] == CurvePoint::rational(1, 0));
  CHECK(rational_weierstrass_points(trivial_torsion()).empty());
  CHECK(rational_weierstrass_points(genus2_sextic()).size() == 2);
}

TEST_CASE("odd model of the octic at 0") {
  auto [odd, T] = to_odd_model(even_octic(), 0);
  CHECK(odd == odd_septic());
  CHECK(*preferred_root(even_octic()) == 0);
  CHECK_THROWS(to_odd_model(odd_septic(), 0));
  CHECK_THROWS(to_odd_model(even_octic(), 3));

  CHECK(map_point_back(T, CurvePoint::rational(0, 1)).kind == PointKind::infinity_plus);
  CHECK(map_point_back(T, CurvePoint::rational(0, -1)).kind == PointKind::infinity_minus);
  CHECK(map_point_back(T, CurvePoint::at_infinity(PointKind::infinity_odd)) == CurvePoint::rational(0, 0));
  CHECK(map_point_back(T, CurvePoint::rational(1, 0)) == CurvePoint::rational(1, 0));
  CHECK(map_point_back(T, CurvePoint::rational(-1, 0)) == CurvePoint::rational(-1, 0));
  CHECK(map_point_back(T, CurvePoint::rational(BigRational(-1, 2), 0)) == CurvePoint::rational(-2, 0));

  QuadFieldElem x{5, BigRational(1, 2), BigRational(1, 2)}, y{5, BigRational(7, 2), BigRational(3, 2)};
  auto P = CurvePoint::affine(x, y);
  CHECK(on_curve(odd, P));
  auto Q = map_point_back(T, P);
  CHECK(on_curve(even_octic(), Q));
  CHECK(map_point_forward(T, Q) == P);
}

TEST_CASE("sextic transform prefers the nonnegative root") {
  auto C = genus2_sextic();
  REQUIRE(preferred_root(C).has_value());
  CHECK(*preferred_root(C) == 3);
  auto [odd, T] = to_odd_model(C, 3);
  CHECK(odd.degree() == 5);
  CHECK(is_squarefree(odd.f));
  // independent oracle: u^6 f(3 + 1/u) expanded coefficient by coefficient
  PolyRat expect;
  for (int i = 0; i <= 6; ++i) {
    BigRational fi = C.f.coeffs()[i];
    PolyRat t = PolyRat::constant(RationalField{}, fi);
    for (int k = 0; k < i; ++k) t *= poly_from_ints({1, 3});
    for (int k = i; k < 6; ++k) t *= poly_from_ints({0, 1});
    expect += t;
  }
  CHECK(odd.f == expect);
  CHECK(odd.f.leading() == C.f.derivative().eval(BigRational(3)));
  // every rational point with small x survives a round trip
  for (long xn = -12; xn <= 12; ++xn) {
    if (xn == 3) continue;
    BigRational fx = C.f.eval(BigRational(xn));
    auto y = sqrt_rational(fx);
    if (!y) continue;
    auto P = CurvePoint::rational(xn, *y);
    auto Q = map_point_forward(T, P);
    CHECK(on_curve(odd, Q));
    CHECK(map_point_back(T, Q) == P);
  }
}

TEST_CASE("random even models transform to squarefree odd models") {
  std::mt19937_64 rng(7);
  std::uniform_int_distribution<long> coef(-5, 5);
  int done = 0;
  while (done < 40) {
    int g = 2 + done % 2;
    std::vector<long> c(2 * g + 2);
    for (auto& v : c) v = coef(rng);
    if (c.back() == 0) c.back() = 1;
    long r = coef(rng) % 3;
    PolyRat f = poly_from_ints(c) * poly_from_ints({-r, 1});
    if (!is_squarefree(f)) continue;
    CurveModel C = validate_curve(g, f.coeffs());
    auto [odd, T] = to_odd_model(C, r);
    CHECK(odd.degree() == 2 * g + 1);
    CHECK(is_squarefree(odd.f));
    ++done;
  }
}

TEST_CASE("involution") {
  auto P = CurvePoint::rational(0, 1);
  CHECK(involution(P) == CurvePoint::rational(0, -1));
  CHECK(involution(CurvePoint::rational(1, 0)) == CurvePoint::rational(1, 0));
  CHECK(involution(CurvePoint::at_infinity(PointKind::infinity_plus)).kind == PointKind::infinity_minus);
  for (auto k : {PointKind::infinity_odd, PointKind::infinity_plus, PointKind::infinity_minus}) {
    auto I = CurvePoint::at_infinity(k);
    CHECK(involution(involution(I)) == I);
  }
  CHECK(involution(involution(P)) == P);
}
