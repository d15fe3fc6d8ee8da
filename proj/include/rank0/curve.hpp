#pragma once

// Hyperelliptic curve models y^2 = f(x) of genus 2 or 3, their special
// points, and the change of model that moves a rational Weierstrass point of
// an even-degree model to infinity.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "rank0/exact_arith.hpp"

namespace rank0 {

class InvalidCurve : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CurveModel {
  int genus = 0;
  PolyRat f;

  int degree() const { return f.degree(); }
  bool is_odd() const { return f.degree() == 2 * genus + 1; }
  const BigRational& coeff(int i) const;
  friend bool operator==(const CurveModel& a, const CurveModel& b) { return a.genus == b.genus && a.f == b.f; }
};

/// Validates genus in {2,3}, degree in {2g+1, 2g+2} and squarefree f.
/// Coefficients are f0, f1, ..., f_deg.
CurveModel validate_curve(int genus, const std::vector<BigRational>& coeffs);

/// First n odd primes p not dividing 2 * lc * disc of the integer-cleared f,
/// nor the common denominator of f.
std::vector<std::uint64_t> good_primes(const CurveModel& C, int n);
bool is_good_prime(const CurveModel& C, std::uint64_t p);

enum class PointKind { affine, infinity_odd, infinity_plus, infinity_minus };

std::string to_string(PointKind k);

/// A point over Q (field_disc = 0) or over Q(sqrt d).
struct CurvePoint {
  PointKind kind = PointKind::affine;
  QuadFieldElem x;
  QuadFieldElem y;
  BigInt field_disc = 0;

  static CurvePoint affine(QuadFieldElem x, QuadFieldElem y);
  static CurvePoint rational(const BigRational& x, const BigRational& y) {
    return affine(QuadFieldElem::rational(x), QuadFieldElem::rational(y));
  }
  static CurvePoint at_infinity(PointKind k) { return {k, {}, {}, 0}; }

  bool is_rational() const { return field_disc == 0; }
  bool is_weierstrass() const;

  friend bool operator==(const CurvePoint& a, const CurvePoint& b) {
    return a.kind == b.kind && a.field_disc == b.field_disc && a.x == b.x && a.y == b.y;
  }
  friend bool operator!=(const CurvePoint& a, const CurvePoint& b) { return !(a == b); }
};

/// Total order used for canonical reporting.
bool operator<(const CurvePoint& a, const CurvePoint& b);
std::string to_string(const CurvePoint& P);

bool on_curve(const CurveModel& C, const CurvePoint& P);

std::vector<CurvePoint> infinity_points(const CurveModel& C);
std::vector<CurvePoint> rational_weierstrass_points(const CurveModel& C);

/// x = r + 1/u, y = v / u^(g+1) from the odd model (u, v) to the even one.
struct ModelTransform {
  BigRational r;
  int genus = 0;
  CurveModel source;  // even model
  CurveModel target;  // odd model
};

/// Rational root used by default when moving a Weierstrass point to infinity:
/// smallest height, then nonnegative before negative, then smaller
/// denominator.
std::optional<BigRational> preferred_root(const CurveModel& C);

std::pair<CurveModel, ModelTransform> to_odd_model(const CurveModel& C, const BigRational& r);

CurvePoint map_point_back(const ModelTransform& T, const CurvePoint& P);
/// Inverse of map_point_back.
CurvePoint map_point_forward(const ModelTransform& T, const CurvePoint& P);

CurvePoint involution(const CurvePoint& P);

}  // namespace rank0
