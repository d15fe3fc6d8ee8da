#pragma once

// Coefficient fields for the polynomial and Jacobian templates.
//
// Each field is a small context object; elements are plain values and every
// operation goes through the context. Three fields are used:
//   RationalField  exact Q (GMP rationals)
//   PrimeField     F_p for word-size odd p
//   PadicField     Q_p at bounded relative precision, with precision tracking

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace rank0 {

using BigInt = mpz_class;
using BigRational = mpq_class;

/// Raised when a p-adic computation needs a division by a value that is zero
/// to the available precision.
class PrecisionError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline BigRational make_rational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw std::domain_error("zero denominator");
  BigRational q(num, den);
  q.canonicalize();
  return q;
}

struct RationalField {
  using Elem = BigRational;

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long v) const { return v; }
  Elem add(const Elem& a, const Elem& b) const { return a + b; }
  Elem sub(const Elem& a, const Elem& b) const { return a - b; }
  Elem mul(const Elem& a, const Elem& b) const { return a * b; }
  Elem neg(const Elem& a) const { return -a; }
  Elem inv(const Elem& a) const {
    if (a == 0) throw std::domain_error("division by zero");
    return 1 / a;
  }
  bool is_zero(const Elem& a) const { return sgn(a) == 0; }
  bool eq(const Elem& a, const Elem& b) const { return a == b; }
  bool operator==(const RationalField&) const { return true; }
};

/// F_p with p < 2^31, so products fit in 64 bits.
struct PrimeField {
  using Elem = std::uint64_t;

  std::uint64_t p = 3;

  PrimeField() = default;
  explicit PrimeField(std::uint64_t prime) : p(prime) {}

  Elem zero() const { return 0; }
  Elem one() const { return 1; }
  Elem from_int(long v) const {
    long r = v % static_cast<long>(p);
    return static_cast<Elem>(r < 0 ? r + static_cast<long>(p) : r);
  }
  Elem from_bigint(const BigInt& v) const {
    BigInt r = v % BigInt(static_cast<unsigned long>(p));
    if (r < 0) r += static_cast<unsigned long>(p);
    return r.get_ui();
  }
  Elem from_rational(const BigRational& q) const {
    Elem d = from_bigint(q.get_den());
    if (d == 0) throw std::domain_error("denominator divisible by p");
    return mul(from_bigint(q.get_num()), inv(d));
  }
  Elem add(Elem a, Elem b) const {
    Elem s = a + b;
    return s >= p ? s - p : s;
  }
  Elem sub(Elem a, Elem b) const { return a >= b ? a - b : a + p - b; }
  Elem mul(Elem a, Elem b) const { return (a * b) % p; }
  Elem neg(Elem a) const { return a == 0 ? 0 : p - a; }
  Elem pow(Elem a, std::uint64_t e) const {
    Elem r = 1;
    while (e) {
      if (e & 1) r = mul(r, a);
      a = mul(a, a);
      e >>= 1;
    }
    return r;
  }
  Elem inv(Elem a) const {
    if (a == 0) throw std::domain_error("division by zero in F_p");
    return pow(a, p - 2);
  }
  bool is_zero(Elem a) const { return a == 0; }
  bool eq(Elem a, Elem b) const { return a == b; }
  bool operator==(const PrimeField& o) const { return p == o.p; }
};

/// Element of Q_p stored as unit * p^val, known modulo p^abs.
/// A zero element has unit == 0 and carries only its absolute precision.
struct QpElem {
  BigInt unit;
  long val = 0;
  long abs = 0;

  bool is_zero() const { return unit == 0; }
  long relprec() const { return is_zero() ? 0 : abs - val; }
};

/// Q_p with relative precision capped at `prec` digits.
class PadicField {
 public:
  using Elem = QpElem;

  PadicField() : PadicField(BigInt(3), 20) {}
  PadicField(BigInt prime, long precision);

  const BigInt& prime() const { return ctx_->p; }
  long precision() const { return ctx_->prec; }
  const BigInt& pow(long e) const;

  Elem zero() const { return zero_at(ctx_->prec); }
  Elem zero_at(long abs) const { return QpElem{0, abs, abs}; }
  Elem one() const { return from_int(1); }
  Elem from_int(long v) const { return from_rational(BigRational(v)); }
  Elem from_rational(const BigRational& q) const;
  /// Integer known modulo p^abs.
  Elem from_residue(const BigInt& v, long abs) const;

  Elem add(const Elem& a, const Elem& b) const;
  Elem sub(const Elem& a, const Elem& b) const { return add(a, neg(b)); }
  Elem mul(const Elem& a, const Elem& b) const;
  Elem neg(const Elem& a) const;
  Elem inv(const Elem& a) const;
  bool is_zero(const Elem& a) const { return a.is_zero(); }
  bool eq(const Elem& a, const Elem& b) const { return sub(a, b).is_zero(); }
  bool operator==(const PadicField& o) const {
    return ctx_->p == o.ctx_->p && ctx_->prec == o.ctx_->prec;
  }

  /// Residue of an element of Z_p modulo p^n; throws when the element has
  /// negative valuation or is known to less than n digits.
  BigInt residue(const Elem& a, long n) const;

 private:
  struct Context {
    BigInt p;
    long prec;
    std::vector<BigInt> powers;  // p^0 .. p^(prec + 1)
  };
  Elem normalize(BigInt x, long val, long abs) const;

  std::shared_ptr<const Context> ctx_;
};

/// p-adic valuation of a nonzero integer.
long valuation(BigInt x, const BigInt& p);

}  // namespace rank0
