#pragma once

// Exact arithmetic layer: rational and mod-p polynomials, factorization over
// Q for small degree, quadratic fields, truncated p-adics and rational
// reconstruction.

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "rank0/field.hpp"
#include "rank0/poly.hpp"

namespace rank0 {

using PolyRat = Poly<RationalField>;
using PolyModP = Poly<PrimeField>;
using PolyQp = Poly<PadicField>;

PolyRat poly_from(const std::vector<BigRational>& coeffs);
PolyRat poly_from_ints(const std::vector<long>& coeffs);
std::string to_string(const BigRational& q);
std::string to_string(const PolyRat& f, const std::string& var = "x");

BigRational parse_rational(const std::string& s);

/// Content-free integer polynomial with positive leading coefficient,
/// proportional to f.
std::vector<BigInt> primitive_integer_coeffs(const PolyRat& f);
/// f scaled by the lcm of its coefficient denominators (sign kept).
std::vector<BigInt> integer_cleared_coeffs(const PolyRat& f);
BigInt denominator_lcm(const PolyRat& f);

PolyModP reduce_mod_p(const PolyRat& f, std::uint64_t p);

bool is_squarefree(const PolyRat& f);

/// Discriminant of an integer polynomial via a fraction-free Sylvester
/// determinant of (F, F').
BigInt discriminant(const std::vector<BigInt>& coeffs);

/// All rational roots, ascending.
std::vector<BigRational> rational_roots(const PolyRat& f);

struct Factorization {
  BigRational content;                 // f = content * prod(factors)
  std::vector<PolyRat> factors;        // monic irreducible, with multiplicity
};

/// Irreducible factorization over Q for deg f <= 8.
Factorization factor_over_Q(const PolyRat& f);

std::optional<BigRational> sqrt_rational(const BigRational& q);
std::optional<BigInt> sqrt_integer(const BigInt& n);

struct SquarefreeDecomp {
  BigInt d;          // squarefree, sign of the input
  BigRational s;     // positive, input = d * s^2
};
SquarefreeDecomp squarefree_part(const BigRational& q);

/// u + v*sqrt(d). d = 0 marks an element embedded from Q (then v = 0).
struct QuadFieldElem {
  BigInt d = 0;
  BigRational u = 0;
  BigRational v = 0;

  static QuadFieldElem rational(const BigRational& q) { return {0, q, 0}; }
  bool is_rational() const { return v == 0; }
  QuadFieldElem conj() const { return {d, u, -v}; }
  BigRational norm() const { return u * u - v * v * BigRational(d); }

  friend bool operator==(const QuadFieldElem& a, const QuadFieldElem& b) {
    if (a.v == 0 && b.v == 0) return a.u == b.u;
    return a.d == b.d && a.u == b.u && a.v == b.v;
  }
  friend bool operator!=(const QuadFieldElem& a, const QuadFieldElem& b) { return !(a == b); }
};

QuadFieldElem operator+(const QuadFieldElem& a, const QuadFieldElem& b);
QuadFieldElem operator-(const QuadFieldElem& a, const QuadFieldElem& b);
QuadFieldElem operator-(const QuadFieldElem& a);
QuadFieldElem operator*(const QuadFieldElem& a, const QuadFieldElem& b);
QuadFieldElem inverse(const QuadFieldElem& a);
QuadFieldElem operator/(const QuadFieldElem& a, const QuadFieldElem& b);
/// Canonical field discriminant: if v == 0 the element collapses to d = 0.
QuadFieldElem canonical(QuadFieldElem a);
/// Evaluate a rational polynomial at an element of Q(sqrt d).
QuadFieldElem eval(const PolyRat& f, const QuadFieldElem& x);
std::string to_string(const QuadFieldElem& e);

/// Square root inside Q(sqrt d) (or Q when e is rational and d = 0).
std::optional<QuadFieldElem> sqrt_quadfield(const QuadFieldElem& e);

/// Residue modulo p^N.
struct PadicApprox {
  BigInt p;
  long N = 1;
  BigInt value;

  BigInt modulus() const;
};

/// Smallest fraction u/v with |u|, v <= floor(sqrt(p^N / 2)), gcd(v, p) = 1
/// and u = value * v mod p^N.
std::optional<BigRational> rational_reconstruct(const PadicApprox& a);

/// Lexicographically least monic irreducible polynomial of degree k over F_p.
PolyModP least_irreducible(std::uint64_t p, int k);
bool is_irreducible_mod_p(const PolyModP& f);

}  // namespace rank0
