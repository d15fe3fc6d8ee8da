#include "rank0/curve.hpp"

#include <algorithm>
#include <sstream>
#include <tuple>

namespace rank0 {

const BigRational& CurveModel::coeff(int i) const {
  static const BigRational zero = 0;
  if (i < 0 || i > f.degree()) return zero;
  return f.coeffs()[i];
}

CurveModel validate_curve(int genus, const std::vector<BigRational>& coeffs) {
  if (genus != 2 && genus != 3) throw InvalidCurve("unsupported genus " + std::to_string(genus));
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n != 2 * genus + 1 && n != 2 * genus + 2)
    throw InvalidCurve("genus " + std::to_string(genus) + " needs " + std::to_string(2 * genus + 2) + " or " +
                       std::to_string(2 * genus + 3) + " coefficients");
  if (coeffs.back() == 0) throw InvalidCurve("leading coefficient is zero");
  PolyRat f = poly_from(coeffs);
  if (!is_squarefree(f)) throw InvalidCurve("f is not squarefree");
  return {genus, f};
}

bool is_good_prime(const CurveModel& C, std::uint64_t p) {
  if (p <= 2) return false;
  for (std::uint64_t q = 2; q * q <= p; ++q)
    if (p % q == 0) return false;
  auto F = integer_cleared_coeffs(C.f);
  BigInt den = denominator_lcm(C.f);
  if (den % p == 0) return false;
  if (F.back() % p == 0) return false;
  return discriminant(F) % p != 0;
}

std::vector<std::uint64_t> good_primes(const CurveModel& C, int n) {
  auto F = integer_cleared_coeffs(C.f);
  const BigInt bad = discriminant(F) * F.back() * denominator_lcm(C.f);
  std::vector<std::uint64_t> out;
  for (std::uint64_t p = 3; static_cast<int>(out.size()) < n; p += 2) {
    bool prime = true;
    for (std::uint64_t q = 3; q * q <= p; q += 2)
      if (p % q == 0) prime = false;
    if (prime && bad % p != 0) out.push_back(p);
  }
  return out;
}

std::string to_string(PointKind k) {
  switch (k) {
    case PointKind::affine: return "affine";
    case PointKind::infinity_odd: return "infinity";
    case PointKind::infinity_plus: return "infinity_plus";
    case PointKind::infinity_minus: return "infinity_minus";
  }
  return "?";
}

CurvePoint CurvePoint::affine(QuadFieldElem x, QuadFieldElem y) {
  x = canonical(x);
  y = canonical(y);
  BigInt d = x.v != 0 ? x.d : y.d;
  if (x.v == 0 && y.v == 0) d = 0;
  if (d != 0) {
    x.d = d;
    y.d = d;
  }
  return {PointKind::affine, x, y, d};
}

bool CurvePoint::is_weierstrass() const {
  return kind == PointKind::infinity_odd || (kind == PointKind::affine && y.u == 0 && y.v == 0);
}

namespace {

auto key(const CurvePoint& P) {
  return std::make_tuple(static_cast<int>(P.kind), P.field_disc, P.x.u, P.x.v, P.y.u, P.y.v);
}

}  // namespace

bool operator<(const CurvePoint& a, const CurvePoint& b) {
  // Canonical ordering: kind, field, then coordinates.
  auto ka = key(a), kb = key(b);
  return ka < kb;
}

std::string to_string(const CurvePoint& P) {
  if (P.kind != PointKind::affine) return to_string(P.kind);
  return "(" + to_string(P.x) + ", " + to_string(P.y) + ")";
}

bool on_curve(const CurveModel& C, const CurvePoint& P) {
  switch (P.kind) {
    case PointKind::infinity_odd: return C.is_odd();
    case PointKind::infinity_plus:
    case PointKind::infinity_minus: return !C.is_odd() && sqrt_rational(C.f.leading()).has_value();
    case PointKind::affine: break;
  }
  return P.y * P.y == eval(C.f, P.x);
}

std::vector<CurvePoint> infinity_points(const CurveModel& C) {
  if (C.is_odd()) return {CurvePoint::at_infinity(PointKind::infinity_odd)};
  if (sqrt_rational(C.f.leading()))
    return {CurvePoint::at_infinity(PointKind::infinity_minus), CurvePoint::at_infinity(PointKind::infinity_plus)};
  return {};
}

std::vector<CurvePoint> rational_weierstrass_points(const CurveModel& C) {
  std::vector<CurvePoint> out;
  for (const auto& r : rational_roots(C.f)) out.push_back(CurvePoint::rational(r, 0));
  return out;
}

std::optional<BigRational> preferred_root(const CurveModel& C) {
  auto roots = rational_roots(C.f);
  if (roots.empty()) return std::nullopt;
  auto height = [](const BigRational& q) { return std::max(BigInt(abs(q.get_num())), BigInt(q.get_den())); };
  return *std::min_element(roots.begin(), roots.end(), [&](const BigRational& a, const BigRational& b) {
    auto ka = std::make_tuple(height(a), sgn(a) < 0, BigInt(a.get_den()));
    auto kb = std::make_tuple(height(b), sgn(b) < 0, BigInt(b.get_den()));
    return ka < kb;
  });
}

std::pair<CurveModel, ModelTransform> to_odd_model(const CurveModel& C, const BigRational& r) {
  const int g = C.genus;
  if (C.degree() != 2 * g + 2) throw std::invalid_argument("to_odd_model needs an even-degree model");
  if (C.f.eval(r) != 0) throw std::invalid_argument("transform point is not a root of f");
  // u^(2g+2) f(r + 1/u) = sum_i f_i (r u + 1)^i u^(2g+2-i)
  const PolyRat ru1 = poly_from({BigRational(1), r});
  PolyRat acc;
  for (int i = 0; i <= C.degree(); ++i) {
    PolyRat term = PolyRat::constant(RationalField{}, C.f.coeffs()[i]);
    for (int k = 0; k < i; ++k) term *= ru1;
    term *= PolyRat::monomial(RationalField{}, 1, 2 * g + 2 - i);
    acc += term;
  }
  if (acc.degree() != 2 * g + 1 || !is_squarefree(acc))
    throw std::logic_error("odd model is not squarefree of degree 2g+1");
  CurveModel odd{g, acc};
  return {odd, ModelTransform{r, g, C, odd}};
}

namespace {

QuadFieldElem qpow(const QuadFieldElem& a, int e) {
  QuadFieldElem r{a.d, 1, 0};
  for (int i = 0; i < e; ++i) r = r * a;
  return r;
}

}  // namespace

CurvePoint map_point_back(const ModelTransform& T, const CurvePoint& P) {
  switch (P.kind) {
    case PointKind::infinity_odd: return CurvePoint::rational(T.r, 0);
    case PointKind::infinity_plus:
    case PointKind::infinity_minus: throw std::invalid_argument("odd model has a single point at infinity");
    case PointKind::affine: break;
  }
  if (P.x.u == 0 && P.x.v == 0) {
    auto s = sqrt_rational(T.source.f.leading());
    if (!s || !P.y.is_rational()) throw std::logic_error("u = 0 point does not match the even model");
    return CurvePoint::at_infinity(P.y.u == *s ? PointKind::infinity_plus : PointKind::infinity_minus);
  }
  QuadFieldElem x = QuadFieldElem::rational(T.r) + inverse(P.x);
  QuadFieldElem y = P.y / qpow(P.x, T.genus + 1);
  return CurvePoint::affine(x, y);
}

CurvePoint map_point_forward(const ModelTransform& T, const CurvePoint& P) {
  switch (P.kind) {
    case PointKind::infinity_odd: throw std::invalid_argument("even model has no odd-type infinity");
    case PointKind::infinity_plus:
    case PointKind::infinity_minus: {
      auto s = sqrt_rational(T.source.f.leading());
      if (!s) throw std::logic_error("even model has no rational points at infinity");
      BigRational v = P.kind == PointKind::infinity_plus ? *s : BigRational(-*s);
      return CurvePoint::rational(0, v);
    }
    case PointKind::affine: break;
  }
  if (P.x == QuadFieldElem::rational(T.r)) return CurvePoint::at_infinity(PointKind::infinity_odd);
  QuadFieldElem u = inverse(P.x - QuadFieldElem::rational(T.r));
  return CurvePoint::affine(u, P.y * qpow(u, T.genus + 1));
}

CurvePoint involution(const CurvePoint& P) {
  switch (P.kind) {
    case PointKind::infinity_odd: return P;
    case PointKind::infinity_plus: return CurvePoint::at_infinity(PointKind::infinity_minus);
    case PointKind::infinity_minus: return CurvePoint::at_infinity(PointKind::infinity_plus);
    case PointKind::affine: break;
  }
  return CurvePoint::affine(P.x, -P.y);
}

}  // namespace rank0
