#include <set>

#include "curves.hpp"
#include "doctest.h"
#include "rank0/finite_jacobian.hpp"
#include "rank0/points.hpp"

using namespace rank0;
using namespace testcurves;

namespace {

BigRational R(const char* s) { return parse_rational(s); }

std::vector<BigInt> ints(std::initializer_list<long> v) {
  std::vector<BigInt> out;
  for (long x : v) out.emplace_back(x);
  return out;
}

// (xu + xv sqrt d, yu + yv sqrt d)
CurvePoint qp(long d, const char* xu, const char* xv, const char* yu, const char* yv) {
  return CurvePoint::affine({d, R(xu), R(xv)}, {d, R(yu), R(yv)});
}

std::set<CurvePoint> as_set(const std::vector<CurvePoint>& v) { return {v.begin(), v.end()}; }

}  // namespace

TEST_CASE("classify genus 3 entries") {
  auto o = classify_g3(normalize({0, R("1/2"), 0, 0, 0, 0, 0, 1}));
  CHECK(o.kind == OutcomeKind::rational_pair);
  CHECK(o.x == QuadFieldElem::rational(0));

  o = classify_g3(ints({0, 1, -1, -1, 2, 1, 1, 10}));
  CHECK(o.kind == OutcomeKind::quadratic_pair);
  CHECK(o.field_disc == 5);
  CHECK(o.x == QuadFieldElem{5, R("1/2"), R("1/2")});

  o = classify_g3(normalize({0, R("1/2"), R("-1/2"), R("1/2"), 0, R("-1/2"), R("1/2"), 1}));
  CHECK(o.kind == OutcomeKind::quadratic_pair);
  CHECK(o.delta == R("-3"));  // on the primitive tuple; -3/4 before clearing denominators
  CHECK(o.field_disc == -3);
  CHECK(o.x == QuadFieldElem{-3, R("1/2"), R("1/2")});

  o = classify_g3(normalize({0, R("-1/12"), 0, 0, 0, 0, 0, 1}));
  CHECK(o.kind == OutcomeKind::rational_pair);
  CHECK(o.x == QuadFieldElem::rational(0));

  // case (a) and degree 1 entries carry no pair
  CHECK(classify_g3(normalize({R("-1/12"), 1, R("-2/3"), R("2/3"), R("-5/6"), R("-2/3"), 1, 0})).kind ==
        OutcomeKind::none);
  CHECK(classify_g3(ints({0, 0, 0, 0, 1, -1, 1, -8})).kind == OutcomeKind::none);
  // square discriminant: two rational abscissae
  o = classify_g3(ints({0, 1, 1, 0, 1, 0, 0, 2}));
  CHECK(o.kind == OutcomeKind::none);
  CHECK(o.split_roots == std::vector<BigRational>{-1, 0});
}

TEST_CASE("classify genus 2 entries") {
  auto o = classify_g2(ints({1, 3, -1, 2}));
  CHECK(o.kind == OutcomeKind::quadratic_pair);
  CHECK(o.delta == 13);
  CHECK(o.x == QuadFieldElem{13, R("3/2"), R("1/2")});
  o = classify_g2(ints({1, 1, 1, 2}));
  CHECK(o.kind == OutcomeKind::quadratic_pair);
  CHECK(o.x == QuadFieldElem{-3, R("1/2"), R("1/2")});
  o = classify_g2(ints({2, 0, 1, 4}));
  CHECK(o.kind == OutcomeKind::quadratic_pair);
  CHECK(o.x == QuadFieldElem{-2, 0, R("1/2")});
  o = classify_g2(ints({1, 2, 1, -6}));
  CHECK(o.kind == OutcomeKind::rational_pair);
  CHECK(o.x == QuadFieldElem::rational(1));
  CHECK(classify_g2(ints({0, 1, 1, 8})).kind == OutcomeKind::none);
  CHECK(classify_g2(ints({1, 1, 0, 10})).kind == OutcomeKind::none);
}

TEST_CASE("y coordinates") {
  auto C = odd_septic();
  CHECK(as_set(y_coordinates(C, QuadFieldElem::rational(0))) ==
        std::set<CurvePoint>{CurvePoint::rational(0, 1), CurvePoint::rational(0, -1)});
  CHECK(as_set(y_coordinates(C, {5, R("1/2"), R("1/2")})) ==
        std::set<CurvePoint>{qp(5, "1/2", "1/2", "7/2", "3/2"), qp(5, "1/2", "1/2", "-7/2", "-3/2")});
  // f(2) by Horner on the integer coefficients, then an integer square test
  BigInt v = 0;
  for (int i = 7; i >= 0; --i) v = v * 2 + C.f.coeff(i).get_num();
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), v.get_mpz_t());
  REQUIRE(r * r != v);
  CHECK(y_coordinates(C, QuadFieldElem::rational(2)).empty());
  auto W = y_coordinates(C, QuadFieldElem::rational(-1));
  CHECK(W.size() == 1);
}

TEST_CASE("quadratic Weierstrass points") {
  CHECK(as_set(quadratic_weierstrass(genus2_sextic())) ==
        std::set<CurvePoint>{qp(2, "0", "2", "0", "0"), qp(2, "0", "-2", "0", "0"), qp(5, "0", "1", "0", "0"),
                             qp(5, "0", "-1", "0", "0")});
  CHECK(quadratic_weierstrass(genus2_quintic()).empty());
  auto C = even_no_root_c();
  auto W = quadratic_weierstrass(C);
  for (const auto& P : W) CHECK(on_curve(C, P));
  // the quadratic factor is 2x^2 - 3x + 2
  CHECK(as_set(W) == std::set<CurvePoint>{qp(-7, "3/4", "1/4", "0", "0"), qp(-7, "3/4", "-1/4", "0", "0")});
  CHECK_FALSE(on_curve(C, qp(-7, "3/2", "1", "0", "0")));
}

TEST_CASE("septic odd and even models") {
  auto C = odd_septic();
  auto G = torsion_subgroup(C);
  auto TK = build_TK(G, C);
  auto rep = extract_points(C, TK, G.complete);
  CHECK(rep.consistent);
  CHECK(rep.complete);
  CHECK(as_set(rep.rational) ==
        std::set<CurvePoint>{CurvePoint::rational(0, 1), CurvePoint::rational(0, -1), CurvePoint::rational(-1, 0),
                             CurvePoint::rational(R("-1/2"), 0), CurvePoint::rational(1, 0),
                             CurvePoint::at_infinity(PointKind::infinity_odd)});
  std::set<CurvePoint> over5;
  for (const auto& P : rep.quadratic)
    if (P.field_disc == 5) over5.insert(P);
  CHECK(over5 == std::set<CurvePoint>{qp(5, "1/2", "-1/2", "7/2", "-3/2"), qp(5, "1/2", "-1/2", "-7/2", "3/2"),
                                      qp(5, "1/2", "1/2", "-7/2", "-3/2"), qp(5, "1/2", "1/2", "7/2", "3/2")});

  auto E = even_octic();
  auto r = preferred_root(E);
  REQUIRE(r);
  CHECK(*r == 0);
  auto [odd, T] = to_odd_model(E, *r);
  CHECK(odd.f == C.f);
  auto even_pts = assemble_rational_points(odd, TK, &T);
  CHECK(as_set(even_pts) == std::set<CurvePoint>{CurvePoint::rational(-2, 0), CurvePoint::rational(-1, 0),
                                                 CurvePoint::rational(0, 0), CurvePoint::rational(1, 0),
                                                 CurvePoint::at_infinity(PointKind::infinity_minus),
                                                 CurvePoint::at_infinity(PointKind::infinity_plus)});
  CHECK(even_pts.size() == count_points(E, 7, 1));
  for (const auto& P : even_pts) CHECK(on_curve(E, P));
}

TEST_CASE("genus 2 quintic point sets") {
  auto C = genus2_quintic();
  auto G = torsion_subgroup(C);
  auto rep = extract_points(C, build_TK(G, C), G.complete);
  CHECK(rep.consistent);
  // (1 : 2 : 1 : -6) has delta = 0 and f(1) = 9
  CHECK(as_set(rep.rational) == std::set<CurvePoint>{CurvePoint::at_infinity(PointKind::infinity_odd),
                                                     CurvePoint::rational(0, 1), CurvePoint::rational(0, -1),
                                                     CurvePoint::rational(1, 3), CurvePoint::rational(1, -3)});
  std::set<CurvePoint> L{
      qp(-2, "0", "1/2", "-1/2", "-1/2"),    qp(-2, "0", "-1/2", "1/2", "-1/2"),  qp(-2, "0", "1/2", "1/2", "1/2"),
      qp(-2, "0", "-1/2", "-1/2", "1/2"),    qp(-3, "-1/2", "-1/2", "-3", "-1"),  qp(-3, "-1/2", "-1/2", "3", "1"),
      qp(-3, "-1/2", "1/2", "3", "-1"),      qp(-3, "-1/2", "1/2", "-3", "1"),    qp(-3, "1/2", "-1/2", "2", "0"),
      qp(-3, "1/2", "-1/2", "-2", "0"),      qp(-3, "1/2", "1/2", "2", "0"),      qp(-3, "1/2", "1/2", "-2", "0"),
      qp(13, "3/2", "-1/2", "25", "-7"),     qp(13, "3/2", "-1/2", "-25", "7"),   qp(13, "3/2", "1/2", "25", "7"),
      qp(13, "3/2", "1/2", "-25", "-7")};
  for (const auto& P : L) REQUIRE(on_curve(C, P));
  CHECK(as_set(rep.quadratic) == L);
}

TEST_CASE("genus 2 sextic through the odd model at r = 3") {
  auto E = genus2_sextic();
  auto r = preferred_root(E);
  REQUIRE(r);
  CHECK(*r == 3);
  auto [C, T] = to_odd_model(E, *r);
  auto G = torsion_subgroup(C);
  auto rep = extract_points(C, build_TK(G, C), G.complete, &T);
  std::set<CurvePoint> L{qp(105, "1/4", "-1/4", "19/16", "1/16"), qp(105, "1/4", "-1/4", "-19/16", "-1/16"),
                         qp(105, "1/4", "1/4", "-19/16", "1/16"), qp(105, "1/4", "1/4", "19/16", "-1/16"),
                         qp(105, "-1/4", "-1/4", "-19/16", "1/16"), qp(105, "-1/4", "-1/4", "19/16", "-1/16"),
                         qp(105, "-1/4", "1/4", "19/16", "1/16"), qp(105, "-1/4", "1/4", "-19/16", "-1/16")};
  for (long d : {7, 11, 10, 6, 30}) {
    const char* xv = d == 30 ? "1/2" : "1";
    const char* nxv = d == 30 ? "-1/2" : "-1";
    std::vector<std::pair<const char*, const char*>> ys;
    if (d == 7) ys = {{"2", "0"}, {"-2", "0"}};
    if (d == 11) ys = {{"6", "0"}, {"-6", "0"}};
    if (d == 10 || d == 6) ys = {{"0", "1"}, {"0", "-1"}};
    if (d == 30) ys = {{"0", "1/4"}, {"0", "-1/4"}};
    for (const auto& [yu, yv] : ys) {
      L.insert(qp(d, "0", xv, yu, yv));
      L.insert(qp(d, "0", nxv, yu, yv));
    }
  }
  for (auto [d, xv] : {std::pair{2L, "2"}, {2L, "-2"}, {5L, "1"}, {5L, "-1"}}) L.insert(qp(d, "0", xv, "0", "0"));
  REQUIRE(L.size() == 32);
  for (const auto& P : L) REQUIRE(on_curve(E, P));
  CHECK(as_set(rep.quadratic) == L);
  for (const auto& P : rep.rational) CHECK(on_curve(E, P));
}

TEST_CASE("Kummer image of a conjugate pair gives back its entry") {
  for (auto C : {odd_septic(), genus2_quintic()}) {
    auto G = torsion_subgroup(C);
    auto TK = build_TK(G, C);
    for (const auto& e : TK.entries) {
      auto o = classify(C.genus, e.coords);
      if (o.kind != OutcomeKind::quadratic_pair) continue;
      for (const auto& P : y_coordinates(C, o.x)) CHECK(kappa(C, conjugate_pair_divisor(P)) == e.coords);
    }
  }
}

TEST_CASE("delta vanishes exactly on doubled points over F_p") {
  // Every pair {P1, P2} of affine points with P2 != -P1, as a Mumford pair.
  for (std::uint64_t p : {5, 7, 11}) {
    auto C = odd_septic();
    PrimeField K(p);
    auto f = reduce_mod_p(C.f, p);
    std::vector<std::pair<std::uint64_t, std::uint64_t>> pts;
    for (std::uint64_t x = 0; x < p; ++x)
      for (std::uint64_t y = 0; y < p; ++y)
        if (K.mul(y, y) == f.eval(x)) pts.emplace_back(x, y);
    int doubled = 0, pairs = 0;
    for (size_t i = 0; i < pts.size(); ++i)
      for (size_t j = i; j < pts.size(); ++j) {
        auto [x1, y1] = pts[i];
        auto [x2, y2] = pts[j];
        MumfordFp D;
        if (x1 != x2) {
          auto b1 = K.mul(K.sub(y1, y2), K.inv(K.sub(x1, x2)));
          D = {PolyModP(K, {K.mul(x1, x2), K.neg(K.add(x1, x2)), 1}), PolyModP(K, {K.sub(y1, K.mul(b1, x1)), b1})};
        } else if (i == j && y1 != 0) {
          // tangent line: b(x1) = y1, b'(x1) = f'(x1) / (2 y1)
          auto b1 = K.mul(f.derivative().eval(x1), K.inv(K.mul(2, y1)));
          D = {PolyModP(K, {K.mul(x1, x1), K.neg(K.add(x1, x1)), 1}), PolyModP(K, {K.sub(y1, K.mul(b1, x1)), b1})};
        } else {
          continue;  // P2 = -P1
        }
        REQUIRE(satisfies_mumford(f, D));
        auto s = kappa_g3(f, D);
        auto delta = K.sub(K.mul(s[2], s[2]), K.mul(4, K.mul(s[1], s[3])));
        CHECK((delta == 0) == (x1 == x2));
        if (x1 == x2) {
          ++doubled;
          CHECK(K.mul(K.neg(s[2]), K.inv(K.mul(2, s[1]))) == x1);
        }
        ++pairs;
      }
    CHECK(pairs > doubled);
  }
}
