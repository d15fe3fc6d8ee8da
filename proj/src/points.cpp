#include "rank0/points.hpp"

#include <algorithm>
#include <set>

namespace rank0 {

std::string to_string(OutcomeKind k) {
  switch (k) {
    case OutcomeKind::rational_pair: return "rational_pair";
    case OutcomeKind::quadratic_pair: return "quadratic_pair";
    case OutcomeKind::none: break;
  }
  return "none";
}

namespace {

// Roots of A x^2 + B x + C with A != 0, classified by the discriminant.
ExtractionOutcome classify_quadratic(const BigRational& A, const BigRational& B, const BigRational& C) {
  ExtractionOutcome out;
  out.delta = B * B - 4 * A * C;
  if (out.delta == 0) {
    out.kind = OutcomeKind::rational_pair;
    out.x = QuadFieldElem::rational(-B / (2 * A));
    return out;
  }
  if (auto s = sqrt_rational(out.delta)) {
    out.split_roots = {(-B - *s) / (2 * A), (-B + *s) / (2 * A)};
    std::sort(out.split_roots.begin(), out.split_roots.end());
    return out;
  }
  if (C == 0) return out;
  const SquarefreeDecomp sq = squarefree_part(out.delta);
  BigRational v = sq.s / (2 * A);
  if (v < 0) v = -v;
  out.kind = OutcomeKind::quadratic_pair;
  out.field_disc = sq.d;
  out.x = QuadFieldElem{sq.d, -B / (2 * A), v};
  return out;
}

void add_unique(std::vector<CurvePoint>& pts, const CurvePoint& P) {
  if (std::find(pts.begin(), pts.end(), P) == pts.end()) pts.push_back(P);
}

std::vector<CurvePoint> pulled_back(std::vector<CurvePoint> pts, const ModelTransform* T) {
  if (T)
    for (auto& P : pts) P = map_point_back(*T, P);
  std::sort(pts.begin(), pts.end());
  pts.erase(std::unique(pts.begin(), pts.end()), pts.end());
  return pts;
}

}  // namespace

ExtractionOutcome classify_g3(const std::vector<BigInt>& R) {
  if (R.size() != 8) throw std::invalid_argument("genus-3 Kummer point needs 8 coordinates");
  if (R[0] != 0 || R[1] == 0) return {};
  return classify_quadratic(BigRational(R[1]), BigRational(R[2]), BigRational(R[3]));
}

ExtractionOutcome classify_g2(const std::vector<BigInt>& R) {
  if (R.size() != 4) throw std::invalid_argument("genus-2 Kummer point needs 4 coordinates");
  if (R[0] == 0) return {};
  // x1, x2 are the roots of s1 x^2 - s2 x + s3.
  return classify_quadratic(BigRational(R[0]), BigRational(-R[1]), BigRational(R[2]));
}

ExtractionOutcome classify(int genus, const std::vector<BigInt>& R) {
  if (genus == 3) return classify_g3(R);
  if (genus == 2) return classify_g2(R);
  throw std::invalid_argument("classification needs genus 2 or 3");
}

std::vector<CurvePoint> y_coordinates(const CurveModel& C, const QuadFieldElem& x) {
  QuadFieldElem fx = eval(C.f, x);
  fx.d = x.v != 0 ? x.d : BigInt(0);
  auto y = sqrt_quadfield(fx);
  if (!y) return {};
  std::vector<CurvePoint> out{CurvePoint::affine(x, *y)};
  add_unique(out, CurvePoint::affine(x, -*y));
  return out;
}

std::vector<CurvePoint> quadratic_weierstrass(const CurveModel& C) {
  std::vector<CurvePoint> out;
  for (const auto& h : factor_over_Q(C.f).factors) {
    if (h.degree() != 2) continue;
    const BigRational a = h.coeff(2), b = h.coeff(1), c = h.coeff(0);
    const SquarefreeDecomp sq = squarefree_part(b * b - 4 * a * c);
    const BigRational u = -b / (2 * a), v = sq.s / (2 * a);
    for (const BigRational& w : {v, BigRational(-v)}) out.push_back(CurvePoint::affine({sq.d, u, w}, {sq.d, 0, 0}));
  }
  std::sort(out.begin(), out.end());
  return out;
}

MumfordQ conjugate_pair_divisor(const CurvePoint& P) {
  if (P.kind != PointKind::affine || P.x.v == 0) throw std::invalid_argument("need a point with quadratic x");
  const RationalField Q;
  const QuadFieldElem xb = P.x.conj(), yb = P.y.conj();
  const QuadFieldElem e1 = P.x + xb, e2 = P.x * xb;
  const QuadFieldElem b1 = (P.y - yb) / (P.x - xb);
  const QuadFieldElem b0 = P.y - b1 * P.x;
  if (!b1.is_rational() || !b0.is_rational()) throw std::logic_error("conjugate pair gave an irrational line");
  return {PolyRat(Q, {e2.u, -e1.u, 1}), PolyRat(Q, {b0.u, b1.u})};
}

std::vector<CurvePoint> assemble_rational_points(const CurveModel& C, const TKSet& TK, const ModelTransform* T,
                                                 std::vector<std::string>* diagnostics, bool* consistent) {
  if (!C.is_odd()) throw std::invalid_argument("point extraction runs on an odd-degree model");
  std::vector<CurvePoint> pts = infinity_points(C);
  for (const auto& W : rational_weierstrass_points(C)) add_unique(pts, W);
  std::vector<BigRational> split;
  for (const auto& e : TK.entries) {
    const ExtractionOutcome o = classify(C.genus, e.coords);
    if (o.kind == OutcomeKind::rational_pair) {
      auto ys = y_coordinates(C, o.x);
      if (ys.empty() && diagnostics)
        diagnostics->push_back("entry " + kummer_string(e.coords) + " gives x = " + to_string(o.x.u) +
                               " with f(x) not a square");
      for (const auto& P : ys) add_unique(pts, P);
    }
    split.insert(split.end(), o.split_roots.begin(), o.split_roots.end());
  }
  // Rational points hidden in a split pair must also come from their own
  // {P, P} entry.
  for (const auto& x : split)
    for (const auto& P : y_coordinates(C, QuadFieldElem::rational(x))) {
      if (std::find(pts.begin(), pts.end(), P) != pts.end()) continue;
      if (diagnostics) diagnostics->push_back("rational point " + to_string(P) + " missing its own Kummer entry");
      if (consistent) *consistent = false;
      add_unique(pts, P);
    }
  for (const auto& P : pts)
    if (!on_curve(C, P)) throw std::logic_error("assembled point is not on the curve");
  return pulled_back(std::move(pts), T);
}

std::vector<CurvePoint> assemble_quadratic_points(const CurveModel& C, const TKSet& TK, const ModelTransform* T,
                                                  std::vector<std::string>* diagnostics) {
  if (!C.is_odd()) throw std::invalid_argument("point extraction runs on an odd-degree model");
  std::vector<CurvePoint> pts = quadratic_weierstrass(C);
  for (const auto& e : TK.entries) {
    const ExtractionOutcome o = classify(C.genus, e.coords);
    if (o.kind != OutcomeKind::quadratic_pair) continue;
    auto ys = y_coordinates(C, o.x);
    if (ys.empty()) {
      if (diagnostics)
        diagnostics->push_back("entry " + kummer_string(e.coords) + " has no y over Q(sqrt " + o.field_disc.get_str() +
                               ")");
      continue;
    }
    for (const auto& P : ys) {
      add_unique(pts, P);
      add_unique(pts, CurvePoint::affine(P.x.conj(), P.y.conj()));
    }
  }
  for (const auto& P : pts)
    if (P.is_rational() || P.x.v == 0 || !on_curve(C, P))
      throw std::logic_error("assembled quadratic point is not a genuine quadratic point on the curve");
  return pulled_back(std::move(pts), T);
}

PointSetReport extract_points(const CurveModel& C, const TKSet& TK, bool torsion_complete, const ModelTransform* T,
                              bool quadratic) {
  PointSetReport r;
  r.complete = torsion_complete;
  r.rational = assemble_rational_points(C, TK, T, &r.diagnostics, &r.consistent);
  if (quadratic) r.quadratic = assemble_quadratic_points(C, TK, T, &r.diagnostics);
  return r;
}

}  // namespace rank0
