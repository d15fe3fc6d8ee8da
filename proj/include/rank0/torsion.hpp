#pragma once

// Rational torsion of the Jacobian of an odd-degree model: a bound from the
// groups J(F_p), Sylow subgroups over F_p lifted p-adically, recognized as
// rationals, verified exactly over Q and closed under addition.

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "rank0/curve.hpp"
#include "rank0/finite_jacobian.hpp"

namespace rank0 {

using MumfordQ = Mumford<RationalField>;
using JacobianQ = Jacobian<RationalField>;
using MumfordQp = Mumford<PadicField>;
using JacobianQp = Jacobian<PadicField>;

struct TorsionPoint {
  MumfordQ D;
  std::uint64_t order = 1;
};

struct TorsionGroup {
  std::vector<TorsionPoint> points;  // includes the identity, sorted canonically
  std::vector<std::uint64_t> invariant_factors;
  bool complete = false;
  BigInt bound = 0;
  std::vector<std::uint64_t> primes;
  std::vector<std::string> diagnostics;

  std::uint64_t order() const { return points.size(); }
};

struct TorsionConfig {
  int prime_count = 9;
  std::vector<std::uint64_t> primes;  // overrides prime_count when nonempty
  long precision_start = 30;
  long precision_max = 120;
  std::uint64_t max_counting_prime = 50;
  std::uint64_t seed = 1;
  std::uint64_t sylow_cap = 10000;
  int primes_per_q = 3;
  std::function<void()> checkpoint;  // called between expensive steps; may throw
};

JacobianQ jacobian_over_Q(const CurveModel& C);

std::string to_string(const MumfordQ& D);
std::string mumford_key(const MumfordQ& D);

/// gcd of #J(F_p) over the given primes.
BigInt torsion_bound_gcd(const CurveModel& C, const std::vector<std::uint64_t>& primes);

/// Exponents of the invariant factors of the q-Sylow subgroup of J(F_p),
/// largest first, or nullopt when it is too large to enumerate.
std::optional<std::vector<int>> sylow_partition(const CurveModel& C, std::uint64_t p, std::uint64_t group_order,
                                                std::uint64_t q, std::uint64_t seed = 1,
                                                std::uint64_t cap = 10000);

/// Bound on #J(Q)_tors: for each q dividing the gcd, the q-part allowed by
/// the componentwise minimum of the Sylow partitions over the primes.
BigInt torsion_bound(const CurveModel& C, const std::vector<std::uint64_t>& primes, std::uint64_t seed = 1,
                     std::uint64_t cap = 10000);

/// Default prime set: the first `prime_count` good primes no larger than
/// `max_counting_prime` (at least one prime is always returned).
std::vector<std::uint64_t> bound_primes(const CurveModel& C, const TorsionConfig& cfg);

/// Newton projection onto the Mumford variety b^2 = f (mod a), a monic of
/// fixed degree. Throws PrecisionError if the iteration does not settle.
MumfordQp project_to_mumford(const Poly<PadicField>& f, MumfordQp X);

/// A p-adic approximation whose coefficients are correct modulo p^digits.
struct PadicLift {
  MumfordQp X;
  long digits = 0;
};

/// The point of J(Q_p)[m] reducing to P, aiming for N correct digits. The
/// result carries the accuracy actually reached, which can fall short of N
/// near degenerate configurations. nullopt when the iteration leaves the
/// degree of P or collapses.
std::optional<PadicLift> lift_torsion_point(const CurveModel& C, const MumfordFp& P, std::uint64_t m,
                                            std::uint64_t p, long N);

/// Coefficientwise rational reconstruction modulo p^digits.
std::optional<MumfordQ> recognize_rational(const PadicLift& L);

/// Exact check of the Mumford identity, m*D = 0 and the exact order.
std::optional<TorsionPoint> verify_torsion(const JacobianQ& J, const MumfordQ& D, std::uint64_t m);

/// Invariant factors d1 | d2 | ... of a finite abelian group given the
/// orders of all of its elements.
std::vector<std::uint64_t> invariant_factors(const std::vector<std::uint64_t>& element_orders);

TorsionGroup torsion_subgroup(const CurveModel& C, const TorsionConfig& cfg = {});

}  // namespace rank0
