#pragma once

// Kummer coordinates of Jacobian points of degree at most 2 on odd-degree
// models: 8 coordinates in genus 3, 4 in genus 2. The formulas are generic
// over the coefficient field so that they can be compared after reduction.

#include <stdexcept>
#include <string>
#include <vector>

#include "rank0/torsion.hpp"

namespace rank0 {

class KummerOutOfScope : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// G(x1, x2) = 2 sum f_{2j} (x1x2)^j + (x1+x2) sum f_{2j+1} (x1x2)^j, written
/// in e1 = x1 + x2 and e2 = x1 x2. G(x, x) = 2 f(x).
template <class F>
typename F::Elem big_G(const Poly<F>& f, const typename F::Elem& e1, const typename F::Elem& e2) {
  const F& K = f.field();
  typename F::Elem even = K.zero(), odd = K.zero(), pw = K.one();
  for (int j = 0; 2 * j <= f.degree(); ++j) {
    even = K.add(even, K.mul(f.coeff(2 * j), pw));
    odd = K.add(odd, K.mul(f.coeff(2 * j + 1), pw));
    pw = K.mul(pw, e2);
  }
  return K.add(K.mul(K.from_int(2), even), K.mul(e1, odd));
}

namespace detail {

// Polynomials in e2 with e1 held fixed.
template <class F>
Poly<F> G_in_e2(const Poly<F>& f, const typename F::Elem& e1) {
  const F& K = f.field();
  std::vector<typename F::Elem> c;
  for (int j = 0; 2 * j <= f.degree(); ++j)
    c.push_back(K.add(K.mul(K.from_int(2), f.coeff(2 * j)), K.mul(e1, f.coeff(2 * j + 1))));
  return Poly<F>(K, std::move(c));
}

// f(x1) f(x2) via x1^i x2^j + x1^j x2^i = e2^i p_{j-i}, p_k the power sums.
template <class F>
Poly<F> ff_in_e2(const Poly<F>& f, const typename F::Elem& e1) {
  const F& K = f.field();
  const int n = f.degree();
  const Poly<F> E1 = Poly<F>::constant(K, e1), E2 = Poly<F>::monomial(K, K.one(), 1);
  std::vector<Poly<F>> p{Poly<F>::constant(K, K.from_int(2)), E1};
  for (int k = 2; k <= n; ++k) p.push_back(E1 * p[k - 1] - E2 * p[k - 2]);
  Poly<F> out(K);
  for (int i = 0; i <= n; ++i) {
    const Poly<F> e2i = Poly<F>::monomial(K, K.one(), i);
    out += e2i.scale(K.mul(f.coeff(i), f.coeff(i)));
    for (int j = i + 1; j <= n; ++j) out += (e2i * p[j - i]).scale(K.mul(f.coeff(i), f.coeff(j)));
  }
  return out;
}

// (G^2 - 4 f(x1) f(x2)) / (x1 - x2)^2 at the double point x1 = x2 = x.
template <class F>
typename F::Elem double_point_s0(const Poly<F>& f, const typename F::Elem& x) {
  const F& K = f.field();
  const auto e1 = K.mul(K.from_int(2), x);
  const Poly<F> G = G_in_e2(f, e1);
  const Poly<F> P = G * G - ff_in_e2(f, e1).scale(K.from_int(4));
  // P vanishes at e2 = x^2 and (x1-x2)^2 = -4 (e2 - x^2).
  return K.mul(P.derivative().eval(K.mul(x, x)), K.neg(K.inv(K.from_int(4))));
}

// e1, e2, y1 y2 of the two points under a quadratic Mumford pair.
template <class F>
void symmetric_data(const Mumford<F>& D, typename F::Elem& e1, typename F::Elem& e2, typename F::Elem& yy) {
  const F& K = D.a.field();
  e1 = K.neg(D.a.coeff(1));
  e2 = D.a.coeff(0);
  const auto b0 = D.b.coeff(0), b1 = D.b.coeff(1);
  yy = K.add(K.add(K.mul(K.mul(b1, b1), e2), K.mul(K.mul(b1, b0), e1)), K.mul(b0, b0));
}

// (2 y1 y2 - G) / (x1 - x2)^2, continued to x1 = x2.
template <class F>
typename F::Elem sigma8(const Poly<F>& f, const Mumford<F>& D) {
  const F& K = f.field();
  typename F::Elem e1, e2, yy;
  symmetric_data(D, e1, e2, yy);
  const auto disc = K.sub(K.mul(e1, e1), K.mul(K.from_int(4), e2));
  if (!K.is_zero(disc)) return K.mul(K.sub(K.mul(K.from_int(2), yy), big_G(f, e1, e2)), K.inv(disc));
  const auto x = K.mul(e1, K.inv(K.from_int(2)));
  const auto fx = f.eval(x);
  if (K.is_zero(fx)) throw std::domain_error("double point on a Weierstrass point is not reduced");
  return K.neg(K.mul(double_point_s0(f, x), K.inv(K.mul(K.from_int(4), fx))));
}

}  // namespace detail

/// Kummer coordinates (s1 : ... : s8) of a genus-3 point, not normalized.
template <class F>
std::vector<typename F::Elem> kappa_g3(const Poly<F>& f, const Mumford<F>& D) {
  const F& K = f.field();
  if (f.degree() != 7) throw std::invalid_argument("genus-3 Kummer map needs a degree 7 model");
  std::vector<typename F::Elem> s(8, K.zero());
  switch (D.degree()) {
    case 0:
      s[7] = K.one();
      return s;
    case 1: {
      const auto x = K.neg(D.a.coeff(0));
      s[4] = K.one();
      s[5] = K.neg(x);
      s[6] = K.mul(x, x);
      s[7] = K.neg(K.mul(f.coeff(7), K.mul(x, K.mul(x, x))));
      return s;
    }
    case 2: {
      typename F::Elem e1, e2, yy;
      detail::symmetric_data(D, e1, e2, yy);
      s[1] = K.one();
      s[2] = K.neg(e1);
      s[3] = e2;
      s[4] = K.sub(K.mul(e1, e1), e2);
      s[5] = K.neg(K.mul(e1, e2));
      s[6] = K.mul(e2, e2);
      s[7] = detail::sigma8(f, D);
      return s;
    }
    default:
      throw KummerOutOfScope("Kummer coordinates of degree 3 points are not computed");
  }
}

/// Kummer coordinates (s1 : s2 : s3 : b0) of a genus-2 point, not normalized.
template <class F>
std::vector<typename F::Elem> kappa_g2(const Poly<F>& f, const Mumford<F>& D) {
  const F& K = f.field();
  if (f.degree() != 5) throw std::invalid_argument("genus-2 Kummer map needs a degree 5 model");
  std::vector<typename F::Elem> s(4, K.zero());
  switch (D.degree()) {
    case 0:
      s[3] = K.one();
      return s;
    case 1: {
      const auto x = K.neg(D.a.coeff(0));
      s[1] = K.one();
      s[2] = x;
      s[3] = K.mul(f.coeff(5), K.mul(x, x));
      return s;
    }
    case 2: {
      typename F::Elem e1, e2, yy;
      detail::symmetric_data(D, e1, e2, yy);
      s[0] = K.one();
      s[1] = e1;
      s[2] = e2;
      s[3] = K.neg(detail::sigma8(f, D));
      return s;
    }
    default:
      throw KummerOutOfScope("Kummer coordinates of degree 3 points are not computed");
  }
}

/// Primitive integer representative with first nonzero entry positive.
std::vector<BigInt> normalize(const std::vector<BigRational>& v);

/// Normalized Kummer coordinates over Q for genus 2 or 3.
std::vector<BigInt> kappa(const CurveModel& C, const MumfordQ& D);

std::string kummer_string(const std::vector<BigInt>& v);

struct TKEntry {
  std::vector<BigInt> coords;
  int source_degree = 0;
  std::uint64_t order = 0;
};

struct TKSet {
  int genus = 0;
  std::vector<TKEntry> entries;  // sorted by coordinates
  int degree3_points = 0;        // nonzero torsion points left without coordinates
};

/// Images of the nonzero torsion points, one entry per projective point.
TKSet build_TK(const TorsionGroup& G, const CurveModel& C);

}  // namespace rank0
