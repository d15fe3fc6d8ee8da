#pragma once

// Mumford representation and Cantor's group law on the Jacobian of an
// odd-degree model y^2 = f(x), generic over the coefficient field.
// A pair (a, b) with a monic, deg b < deg a <= g and b^2 = f mod a stands for
// the class of D - deg(a)*inf, D the effective divisor cut out by y = b(x) on
// a(x) = 0.

#include <functional>
#include <stdexcept>
#include <string>

#include "rank0/poly.hpp"

namespace rank0 {

template <class F>
struct Mumford {
  Poly<F> a;
  Poly<F> b;

  static Mumford identity(const F& field) { return {Poly<F>::constant(field, field.one()), Poly<F>(field)}; }
  bool is_identity() const { return a.degree() == 0; }
  int degree() const { return a.degree(); }

  friend bool operator==(const Mumford& x, const Mumford& y) { return x.a == y.a && x.b == y.b; }
  friend bool operator!=(const Mumford& x, const Mumford& y) { return !(x == y); }
};

template <class F>
Mumford<F> negate(const Mumford<F>& D) {
  return {D.a, -D.b};
}

/// True iff a is monic, deg b < deg a and b^2 = f (mod a).
template <class F>
bool satisfies_mumford(const Poly<F>& f, const Mumford<F>& D) {
  if (D.a.is_zero()) return false;
  const F& fd = D.a.field();
  if (!fd.eq(D.a.leading(), fd.one())) return false;
  if (D.b.degree() >= D.a.degree()) return false;
  return ((D.b * D.b - f) % D.a).is_zero();
}

/// Jacobian of a genus-g odd-degree curve over the field of f.
template <class F>
class Jacobian {
 public:
  using Point = Mumford<F>;

  Jacobian(Poly<F> f, int genus) : f_(std::move(f)), g_(genus) {
    if (f_.degree() != 2 * g_ + 1) throw std::invalid_argument("Cantor arithmetic needs a model of degree 2g+1");
  }

  const Poly<F>& f() const { return f_; }
  int genus() const { return g_; }
  const F& field() const { return f_.field(); }
  Point zero() const { return Point::identity(field()); }

  Point add(const Point& D1, const Point& D2) const {
    const F& fd = field();
    if (D1.is_identity()) return D2;
    if (D2.is_identity()) return D1;
    // Composition.
    auto x1 = xgcd(D1.a, D2.a);  // d1 = e1*a1 + e2*a2
    Poly<F> bsum = D1.b + D2.b;
    Poly<F> d, s1, s2, s3;
    if (x1.g.is_one()) {
      d = x1.g;
      s1 = x1.s;
      s2 = x1.t;
      s3 = Poly<F>(fd);
    } else {
      auto x2 = xgcd(x1.g, bsum);  // d = c1*d1 + c2*(b1+b2)
      d = x2.g;
      s1 = x2.s * x1.s;
      s2 = x2.s * x1.t;
      s3 = x2.t;
    }
    Poly<F> a = (D1.a * D2.a) / (d * d);
    Poly<F> num = s1 * D1.a * D2.b + s2 * D2.a * D1.b + s3 * (D1.b * D2.b + f_);
    Poly<F> b = (num / d) % a;
    return reduce(std::move(a), std::move(b));
  }

  Point neg(const Point& D) const { return negate(D); }
  Point sub(const Point& D1, const Point& D2) const { return add(D1, negate(D2)); }
  Point dbl(const Point& D) const { return add(D, D); }

  /// Scalar multiple by double-and-add; negative n uses the inverse.
  template <class Int>
  Point mul(Point D, Int n) const {
    if (n < 0) {
      D = negate(D);
      n = -n;
    }
    Point acc = zero();
    while (n > 0) {
      if (n % 2 == 1) acc = add(acc, D);
      n /= 2;
      if (n > 0) D = dbl(D);
    }
    return acc;
  }

  bool is_valid(const Point& D) const { return satisfies_mumford(f_, D) && D.a.degree() <= g_; }

 private:
  Point reduce(Poly<F> a, Poly<F> b) const {
    while (a.degree() > g_) {
      Poly<F> a2 = (f_ - b * b) / a;
      Poly<F> b2 = (-b) % a2;
      a = std::move(a2);
      b = std::move(b2);
    }
    const F& fd = field();
    if (a.is_zero()) throw PrecisionError("Cantor reduction produced a zero polynomial");
    if (!fd.eq(a.leading(), fd.one())) a = a.monic();
    b = b % a;
    return {std::move(a), std::move(b)};
  }

  Poly<F> f_;
  int g_;
};

}  // namespace rank0
