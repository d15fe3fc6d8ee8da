#pragma once

// Curves with known answers used across the test suites.

#include "rank0/curve.hpp"

namespace testcurves {

using rank0::CurveModel;

inline CurveModel make(int g, std::vector<long> c) {
  std::vector<rank0::BigRational> q(c.begin(), c.end());
  return rank0::validate_curve(g, q);
}

// y^2 = x^8 + 4x^7 + 6x^6 + 4x^5 - 7x^4 - 16x^3 + 8x
inline CurveModel even_octic() { return make(3, {0, 8, 0, -16, -7, 4, 6, 4, 1}); }
// its odd model at x = 0: y^2 = 8x^7 - 16x^5 - 7x^4 + 4x^3 + 6x^2 + 4x + 1
inline CurveModel odd_septic() { return make(3, {1, 4, 6, 4, -7, -16, 0, 8}); }
// y^2 = x^7 - 47x^6 - 86x^5 + 49x^4 + 94x^3 - 90x^2 + 28x - 3
inline CurveModel trivial_torsion() { return make(3, {-3, 28, -90, 94, 49, -86, -47, 1}); }
// y^2 = (x^2 - x + 1)(x^6 + x^5 - 6x^4 - 3x^3 + 14x^2 - 7x + 1)
inline CurveModel even_no_root_a() {
  auto f = rank0::poly_from_ints({1, -1, 1}) * rank0::poly_from_ints({1, -7, 14, -3, -6, 1, 1});
  return rank0::validate_curve(3, f.coeffs());
}
// y^2 = 5x^8 - 22x^7 + 53x^6 - 74x^5 + 52x^4 + 2x^3 - 11x^2 + 2x + 1
inline CurveModel even_no_root_b() { return make(3, {1, 2, -11, 2, 52, -74, 53, -22, 5}); }
// y^2 = -4x^8 + 8x^7 - 3x^6 - 16x^5 + 26x^4 - 16x^3 - 3x^2 + 8x - 4
inline CurveModel even_no_root_c() { return make(3, {-4, 8, -3, -16, 26, -16, -3, 8, -4}); }
// y^2 = 8x^5 - 7x^4 + 6x^3 - x^2 + 2x + 1
inline CurveModel genus2_quintic() { return make(2, {1, 2, -1, 6, -7, 8}); }
// y^2 = x^6 - 22x^4 + 157x^2 - 360
inline CurveModel genus2_sextic() { return make(2, {-360, 0, 157, 0, -22, 0, 1}); }

}  // namespace testcurves
