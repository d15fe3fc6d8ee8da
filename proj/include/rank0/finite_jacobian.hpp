#pragma once

// Jacobians of odd-degree models over F_p: point counting over F_{p^k},
// L-polynomials, group orders, random elements and Sylow subgroups.

#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "rank0/curve.hpp"
#include "rank0/mumford.hpp"

namespace rank0 {

using MumfordFp = Mumford<PrimeField>;
using JacobianFp = Jacobian<PrimeField>;

/// F_{p^k} on F_p[t]/(m) with m the least monic irreducible of degree k.
/// Elements are the integers sum c_i p^i, c_i the coefficients of t^i.
/// Multiplication and the square test go through discrete log tables.
class FiniteField {
 public:
  FiniteField(std::uint64_t p, int k);

  std::uint64_t characteristic() const { return p_; }
  int degree() const { return k_; }
  std::uint64_t size() const { return q_; }

  std::uint32_t from_prime(std::uint64_t v) const { return static_cast<std::uint32_t>(v % p_); }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const;
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const;
  /// Quadratic character: 0, 1 or -1.
  int chi(std::uint32_t a) const;

 private:
  std::uint64_t p_;
  int k_;
  std::uint64_t q_;
  std::vector<std::uint32_t> exp_;  // exp_[i] = g^i, doubled in length
  std::vector<std::uint32_t> log_;
};

/// #C(F_{p^k}) including points at infinity. Odd models have one point at
/// infinity; even models have two when lc(f) is a square in F_{p^k}.
std::uint64_t count_points(const CurveModel& C, std::uint64_t p, int k);

/// Same count by direct enumeration of all pairs (x, y), used as a check.
std::uint64_t count_points_naive(const CurveModel& C, std::uint64_t p, int k);

struct LPolynomial {
  std::uint64_t p = 0;
  int genus = 0;
  std::vector<BigInt> a;  // a[0] = 1, ..., a[2g] = p^g

  BigInt at_one() const;
};

LPolynomial l_polynomial(const CurveModel& C, std::uint64_t p);

JacobianFp jacobian_mod_p(const CurveModel& C, std::uint64_t p);
MumfordFp reduce_mod_p(const Mumford<RationalField>& D, std::uint64_t p);

/// Key for sets and maps of F_p Mumford pairs.
std::vector<std::uint64_t> mumford_key(const MumfordFp& D);

std::map<std::uint64_t, int> factor_small(std::uint64_t n);

std::uint64_t element_order(const JacobianFp& J, const MumfordFp& D, std::uint64_t group_order);

/// Square root in F_p[x]/(u) for u irreducible, by Tonelli-Shanks.
std::optional<PolyModP> sqrt_mod_irreducible(const PolyModP& c, const PolyModP& u);

/// A random prime divisor of degree d, i.e. (u, b) with u irreducible of
/// degree d, or nullopt when the drawn u does not split in the double cover.
std::optional<MumfordFp> random_prime_divisor(const JacobianFp& J, int d, std::mt19937_64& rng);
MumfordFp random_element(const JacobianFp& J, std::mt19937_64& rng);

struct SylowSubgroup {
  std::uint64_t q = 0;
  int valuation = 0;
  std::vector<MumfordFp> generators;
  std::vector<std::uint64_t> generator_orders;
  std::vector<MumfordFp> elements;  // empty when not enumerated
  bool enumerated = false;
};

class SylowError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// The q-Sylow subgroup of J(F_p) built from cofactor multiples of random
/// elements. Enumerates it when its order is at most `cap`.
SylowSubgroup sylow_subgroup(const JacobianFp& J, std::uint64_t group_order, std::uint64_t q, std::mt19937_64& rng,
                             std::uint64_t cap = 10000, int max_trials = 400);

}  // namespace rank0
