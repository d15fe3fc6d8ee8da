#include "rank0/field.hpp"

#include <algorithm>

namespace rank0 {

long valuation(BigInt x, const BigInt& p) {
  if (x == 0) throw std::domain_error("valuation of zero");
  long v = 0;
  while (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    ++v;
  }
  return v;
}

PadicField::PadicField(BigInt prime, long precision) {
  if (precision < 1) throw std::invalid_argument("p-adic precision must be positive");
  auto ctx = std::make_shared<Context>();
  ctx->p = std::move(prime);
  ctx->prec = precision;
  ctx->powers.reserve(precision + 2);
  BigInt acc = 1;
  for (long i = 0; i <= precision + 1; ++i) {
    ctx->powers.push_back(acc);
    acc *= ctx->p;
  }
  ctx_ = std::move(ctx);
}

const BigInt& PadicField::pow(long e) const {
  if (e < 0 || e >= static_cast<long>(ctx_->powers.size()))
    throw std::out_of_range("p-adic power outside cached range");
  return ctx_->powers[e];
}

PadicField::Elem PadicField::normalize(BigInt x, long val, long abs) const {
  const BigInt& p = ctx_->p;
  if (abs <= val) return zero_at(abs);
  x %= pow(abs - val);
  if (x < 0) x += pow(abs - val);
  if (x == 0) return zero_at(abs);
  while (mpz_divisible_p(x.get_mpz_t(), p.get_mpz_t())) {
    mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), p.get_mpz_t());
    ++val;
  }
  if (val >= abs) return zero_at(abs);
  return QpElem{std::move(x), val, abs};
}

PadicField::Elem PadicField::from_rational(const BigRational& q) const {
  if (q == 0) return zero_at(ctx_->prec);
  BigInt num = q.get_num(), den = q.get_den();
  long v = 0;
  long vn = valuation(num, ctx_->p), vd = valuation(den, ctx_->p);
  for (long i = 0; i < vn; ++i) num /= ctx_->p;
  for (long i = 0; i < vd; ++i) den /= ctx_->p;
  v = vn - vd;
  const BigInt& mod = pow(ctx_->prec);
  BigInt dinv;
  mpz_invert(dinv.get_mpz_t(), den.get_mpz_t(), mod.get_mpz_t());
  BigInt u = num * dinv;
  return normalize(std::move(u), v, v + ctx_->prec);
}

PadicField::Elem PadicField::from_residue(const BigInt& v, long abs) const {
  abs = std::min(abs, ctx_->prec);
  if (v % pow(abs) == 0) return zero_at(abs);
  return normalize(v, 0, abs);
}

PadicField::Elem PadicField::add(const Elem& a, const Elem& b) const {
  long abs = std::min(a.abs, b.abs);
  if (a.is_zero() && b.is_zero()) return zero_at(abs);
  long v;
  if (a.is_zero())
    v = b.val;
  else if (b.is_zero())
    v = a.val;
  else
    v = std::min(a.val, b.val);
  if (abs <= v) return zero_at(abs);
  // Never carry more than prec relative digits.
  abs = std::min(abs, v + ctx_->prec);
  BigInt x = 0;
  if (!a.is_zero() && a.val < abs) x += a.unit * pow(a.val - v);
  if (!b.is_zero() && b.val < abs) x += b.unit * pow(b.val - v);
  return normalize(std::move(x), v, abs);
}

PadicField::Elem PadicField::mul(const Elem& a, const Elem& b) const {
  if (a.is_zero() || b.is_zero()) {
    long ea = a.is_zero() ? a.abs : a.val;
    long eb = b.is_zero() ? b.abs : b.val;
    long abs = std::min(a.abs + eb, b.abs + ea);
    if (a.is_zero() && b.is_zero()) abs = a.abs + b.abs;
    return zero_at(abs);
  }
  long rel = std::min(a.relprec(), b.relprec());
  long val = a.val + b.val;
  return normalize(a.unit * b.unit, val, val + rel);
}

PadicField::Elem PadicField::neg(const Elem& a) const {
  if (a.is_zero()) return a;
  return QpElem{pow(a.relprec()) - a.unit, a.val, a.abs};
}

PadicField::Elem PadicField::inv(const Elem& a) const {
  if (a.is_zero()) throw PrecisionError("p-adic inversion of a value that is zero to working precision");
  long rel = a.relprec();
  BigInt u;
  mpz_invert(u.get_mpz_t(), a.unit.get_mpz_t(), pow(rel).get_mpz_t());
  return QpElem{std::move(u), -a.val, -a.val + rel};
}

BigInt PadicField::residue(const Elem& a, long n) const {
  if (a.abs < n) throw PrecisionError("p-adic value known to fewer digits than requested");
  if (a.is_zero()) return 0;
  if (a.val < 0) throw PrecisionError("p-adic value is not integral");
  if (a.val >= n) return 0;
  BigInt r = a.unit * pow(a.val);
  r %= pow(n);
  return r;
}

}  // namespace rank0
