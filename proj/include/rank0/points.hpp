#pragma once

// From Kummer images of torsion points to rational and isolated quadratic
// points: classification of TK entries, y-coordinates, Weierstrass points
// and assembly of the final point sets, optionally pulled back to an even
// model.

#include <optional>
#include <string>
#include <vector>

#include "rank0/curve.hpp"
#include "rank0/kummer.hpp"

namespace rank0 {

enum class OutcomeKind { none, rational_pair, quadratic_pair };

std::string to_string(OutcomeKind k);

struct ExtractionOutcome {
  OutcomeKind kind = OutcomeKind::none;
  QuadFieldElem x;                       // v > 0 for quadratic pairs
  BigInt field_disc = 0;                 // squarefree d, 0 when rational
  BigRational delta = 0;                 // discriminant of the quadratic in x
  std::vector<BigRational> split_roots;  // delta a nonzero square: its two rational roots
};

/// Genus 3: needs s1 = 0 and s2 != 0, delta = s3^2 - 4 s2 s4.
ExtractionOutcome classify_g3(const std::vector<BigInt>& R);
/// Genus 2: needs s1 != 0, delta = s2^2 - 4 s1 s3 (s1 scaled to 1).
ExtractionOutcome classify_g2(const std::vector<BigInt>& R);
ExtractionOutcome classify(int genus, const std::vector<BigInt>& R);

/// Points (x, y) and (x, -y) on C with y in the field of x; empty when f(x)
/// is not a square there.
std::vector<CurvePoint> y_coordinates(const CurveModel& C, const QuadFieldElem& x);

/// Points (r, 0) for the roots of the irreducible quadratic factors of f.
std::vector<CurvePoint> quadratic_weierstrass(const CurveModel& C);

/// The quadratic divisor {P, conj(P)} as a rational Mumford pair.
MumfordQ conjugate_pair_divisor(const CurvePoint& P);

struct PointSetReport {
  std::vector<CurvePoint> rational;   // sorted
  std::vector<CurvePoint> quadratic;  // sorted; Weierstrass ones flagged by is_weierstrass()
  bool complete = false;
  bool consistent = true;
  std::vector<std::string> diagnostics;
};

/// C(Q) from the odd model C and its TK; pulled back through T if given.
std::vector<CurvePoint> assemble_rational_points(const CurveModel& C, const TKSet& TK, const ModelTransform* T,
                                                 std::vector<std::string>* diagnostics = nullptr,
                                                 bool* consistent = nullptr);

/// Isolated quadratic points together with quadratic Weierstrass points.
std::vector<CurvePoint> assemble_quadratic_points(const CurveModel& C, const TKSet& TK, const ModelTransform* T,
                                                  std::vector<std::string>* diagnostics = nullptr);

PointSetReport extract_points(const CurveModel& C, const TKSet& TK, bool torsion_complete,
                              const ModelTransform* T = nullptr, bool quadratic = true);

}  // namespace rank0
