#pragma once

// Dense univariate polynomials over a field context F (see field.hpp).
// Coefficients are stored lowest degree first and kept trimmed: the stored
// leading coefficient is nonzero as decided by F::is_zero.

#include <stdexcept>
#include <utility>
#include <vector>

#include "rank0/field.hpp"

namespace rank0 {

template <class F>
class Poly {
 public:
  using Field = F;
  using Elem = typename F::Elem;

  Poly() = default;
  explicit Poly(F field) : field_(std::move(field)) {}
  Poly(F field, std::vector<Elem> coeffs) : field_(std::move(field)), c_(std::move(coeffs)) { trim(); }

  static Poly constant(const F& field, Elem v) { return Poly(field, {std::move(v)}); }
  static Poly monomial(const F& field, Elem v, int deg) {
    std::vector<Elem> c(deg + 1, field.zero());
    c[deg] = std::move(v);
    return Poly(field, std::move(c));
  }
  /// x - r
  static Poly linear_root(const F& field, const Elem& r) { return Poly(field, {field.neg(r), field.one()}); }

  const F& field() const { return field_; }
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  bool is_one() const { return c_.size() == 1 && field_.eq(c_[0], field_.one()); }
  const std::vector<Elem>& coeffs() const { return c_; }
  Elem coeff(int i) const { return (i >= 0 && i < static_cast<int>(c_.size())) ? c_[i] : field_.zero(); }
  const Elem& leading() const {
    if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
    return c_.back();
  }

  Poly operator-() const {
    Poly r(field_);
    r.c_.reserve(c_.size());
    for (const auto& v : c_) r.c_.push_back(field_.neg(v));
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }

  friend Poly operator+(const Poly& a, const Poly& b) {
    const F& fd = a.field_;
    std::vector<Elem> c(std::max(a.c_.size(), b.c_.size()), fd.zero());
    for (size_t i = 0; i < c.size(); ++i) c[i] = fd.add(a.coeff(i), b.coeff(i));
    return Poly(fd, std::move(c));
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    const F& fd = a.field_;
    std::vector<Elem> c(std::max(a.c_.size(), b.c_.size()), fd.zero());
    for (size_t i = 0; i < c.size(); ++i) c[i] = fd.sub(a.coeff(i), b.coeff(i));
    return Poly(fd, std::move(c));
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    const F& fd = a.field_;
    if (a.is_zero() || b.is_zero()) return Poly(fd);
    std::vector<Elem> c(a.c_.size() + b.c_.size() - 1, fd.zero());
    for (size_t i = 0; i < a.c_.size(); ++i)
      for (size_t j = 0; j < b.c_.size(); ++j) c[i + j] = fd.add(c[i + j], fd.mul(a.c_[i], b.c_[j]));
    return Poly(fd, std::move(c));
  }
  Poly scale(const Elem& s) const {
    std::vector<Elem> c;
    c.reserve(c_.size());
    for (const auto& v : c_) c.push_back(field_.mul(v, s));
    return Poly(field_, std::move(c));
  }
  Poly monic() const {
    if (is_zero()) return *this;
    return scale(field_.inv(leading()));
  }
  Poly derivative() const {
    std::vector<Elem> c;
    for (size_t i = 1; i < c_.size(); ++i) c.push_back(field_.mul(field_.from_int(static_cast<long>(i)), c_[i]));
    return Poly(field_, std::move(c));
  }
  Elem eval(const Elem& x) const {
    Elem acc = field_.zero();
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = field_.add(field_.mul(acc, x), *it);
    return acc;
  }

  /// Quotient and remainder with deg(rem) < deg(divisor).
  friend std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    const F& fd = a.field_;
    if (a.degree() < b.degree()) return {Poly(fd), a};
    std::vector<Elem> r = a.c_;
    const int db = b.degree();
    std::vector<Elem> q(a.degree() - db + 1, fd.zero());
    const Elem linv = fd.inv(b.leading());
    for (int i = a.degree(); i >= db; --i) {
      if (fd.is_zero(r[i])) continue;
      Elem t = fd.mul(r[i], linv);
      for (int j = 0; j <= db; ++j) r[i - db + j] = fd.sub(r[i - db + j], fd.mul(t, b.c_[j]));
      q[i - db] = std::move(t);
    }
    r.resize(db);
    return {Poly(fd, std::move(q)), Poly(fd, std::move(r))};
  }
  friend Poly operator/(const Poly& a, const Poly& b) { return divmod(a, b).first; }
  friend Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

  friend bool operator==(const Poly& a, const Poly& b) {
    if (a.c_.size() != b.c_.size()) return false;
    for (size_t i = 0; i < a.c_.size(); ++i)
      if (!a.field_.eq(a.c_[i], b.c_[i])) return false;
    return true;
  }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

 private:
  void trim() {
    while (!c_.empty() && field_.is_zero(c_.back())) c_.pop_back();
  }

  F field_{};
  std::vector<Elem> c_;
};

/// Monic gcd (zero if both inputs are zero).
template <class F>
Poly<F> gcd(Poly<F> a, Poly<F> b) {
  while (!b.is_zero()) {
    Poly<F> r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

template <class F>
struct XgcdResult {
  Poly<F> g, s, t;  // g = s*a + t*b, g monic
};

template <class F>
XgcdResult<F> xgcd(const Poly<F>& a, const Poly<F>& b) {
  const F& fd = a.field();
  Poly<F> r0 = a, r1 = b;
  Poly<F> s0 = Poly<F>::constant(fd, fd.one()), s1(fd);
  Poly<F> t0(fd), t1 = Poly<F>::constant(fd, fd.one());
  while (!r1.is_zero()) {
    auto [q, r] = divmod(r0, r1);
    r0 = std::move(r1);
    r1 = std::move(r);
    Poly<F> s2 = s0 - q * s1;
    s0 = std::move(s1);
    s1 = std::move(s2);
    Poly<F> t2 = t0 - q * t1;
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  if (r0.is_zero()) return {r0, s0, t0};
  const auto linv = fd.inv(r0.leading());
  return {r0.scale(linv), s0.scale(linv), t0.scale(linv)};
}

/// base^e mod m.
template <class F, class Exp>
Poly<F> powmod(Poly<F> base, Exp e, const Poly<F>& m) {
  Poly<F> result = Poly<F>::constant(m.field(), m.field().one()) % m;
  base = base % m;
  while (e > 0) {
    if (e % 2 == 1) result = (result * base) % m;
    e /= 2;
    if (e > 0) base = (base * base) % m;
  }
  return result;
}

}  // namespace rank0
