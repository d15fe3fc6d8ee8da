// Factorization over Q for small degree: modular factorization at one good
// prime, Hensel lifting past the Mignotte bound, subset recombination.

#include <algorithm>
#include <random>

#include "rank0/exact_arith.hpp"

namespace rank0 {
namespace {

using IntPoly = std::vector<BigInt>;

BigInt mod_sym(BigInt a, const BigInt& m) {
  a %= m;
  if (a < 0) a += m;
  if (2 * a > m) a -= m;
  return a;
}

PolyModP to_modp(const IntPoly& f, const PrimeField& F) {
  std::vector<std::uint64_t> c;
  for (const auto& v : f) c.push_back(F.from_bigint(v));
  return PolyModP(F, std::move(c));
}

IntPoly from_modp(const PolyModP& f) {
  IntPoly out;
  for (auto v : f.coeffs()) out.emplace_back(static_cast<unsigned long>(v));
  return out;
}

IntPoly mul(const IntPoly& a, const IntPoly& b) {
  if (a.empty() || b.empty()) return {};
  IntPoly c(a.size() + b.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) c[i + j] += a[i] * b[j];
  return c;
}

IntPoly reduce(IntPoly a, const BigInt& m) {
  for (auto& v : a) {
    v %= m;
    if (v < 0) v += m;
  }
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

PolyRat to_rat(const IntPoly& f) { return poly_from(std::vector<BigRational>(f.begin(), f.end())); }

// Distinct-degree then equal-degree (Cantor-Zassenhaus) factorization of a
// monic squarefree polynomial over F_p, p odd.
std::vector<PolyModP> factor_mod_p(PolyModP f, std::mt19937_64& rng) {
  const PrimeField& F = f.field();
  const PolyModP x = PolyModP::monomial(F, F.one(), 1);
  std::vector<std::pair<PolyModP, int>> ddf;
  PolyModP h = x;
  for (int i = 1; 2 * i <= f.degree(); ++i) {
    h = powmod(h, F.p, f);
    PolyModP g = gcd(h - x, f);
    if (g.degree() > 0) {
      ddf.emplace_back(g, i);
      f = f / g;
      h = h % f;
    }
  }
  if (f.degree() > 0) ddf.emplace_back(f.monic(), f.degree());

  std::vector<PolyModP> out;
  std::uniform_int_distribution<std::uint64_t> coin(0, F.p - 1);
  for (auto& [g, d] : ddf) {
    std::vector<PolyModP> pending{g};
    while (!pending.empty()) {
      PolyModP u = pending.back();
      pending.pop_back();
      if (u.degree() == d) {
        out.push_back(u.monic());
        continue;
      }
      std::uint64_t e = 1;
      for (int i = 0; i < d; ++i) e *= F.p;
      e = (e - 1) / 2;
      while (true) {
        std::vector<std::uint64_t> rc(u.degree());
        for (auto& v : rc) v = coin(rng);
        PolyModP a(F, rc);
        if (a.degree() < 1) continue;
        PolyModP b = powmod(a, e, u) - PolyModP::constant(F, F.one());
        PolyModP g2 = gcd(b, u);
        if (g2.degree() > 0 && g2.degree() < u.degree()) {
          pending.push_back(g2);
          pending.push_back(u / g2);
          break;
        }
      }
    }
  }
  return out;
}

// Lift F = lc*g*h mod p to mod p^k with g monic, by linear Hensel steps.
IntPoly hensel_lift_factor(const IntPoly& f, const PolyModP& g_p, const PolyModP& h_p, std::uint64_t p, int k) {
  const PrimeField& F = g_p.field();
  auto x = xgcd(g_p, h_p);  // s*g + t*h = 1
  IntPoly g = from_modp(g_p), h = from_modp(h_p);
  BigInt pj = p;
  for (int j = 1; j < k; ++j) {
    IntPoly e = f;
    IntPoly gh = mul(g, h);
    e.resize(std::max(e.size(), gh.size()), 0);
    for (size_t i = 0; i < gh.size(); ++i) e[i] -= gh[i];
    for (auto& v : e) v /= pj;  // exact: f = g*h mod p^j
    PolyModP ep = to_modp(e, F);
    auto [q, r] = divmod(x.t * ep, g_p);
    PolyModP dh = x.s * ep + q * h_p;
    IntPoly dg = from_modp(r), dhi = from_modp(dh);
    g.resize(std::max(g.size(), dg.size()), 0);
    h.resize(std::max(h.size(), dhi.size()), 0);
    for (size_t i = 0; i < dg.size(); ++i) g[i] += pj * dg[i];
    for (size_t i = 0; i < dhi.size(); ++i) h[i] += pj * dhi[i];
    pj *= p;
  }
  return reduce(g, pj);
}

IntPoly primitive(IntPoly f) {
  BigInt c = 0;
  for (const auto& v : f) mpz_gcd(c.get_mpz_t(), c.get_mpz_t(), v.get_mpz_t());
  if (f.back() < 0) c = -c;
  for (auto& v : f) v /= c;
  return f;
}

// Factor a primitive squarefree integer polynomial of degree >= 1.
std::vector<IntPoly> zassenhaus(IntPoly f) {
  const int n = static_cast<int>(f.size()) - 1;
  if (n <= 1) return {f};
  BigInt disc = discriminant(f);
  std::uint64_t p = 3;
  for (;; p += 2) {
    bool prime = true;
    for (std::uint64_t q = 3; q * q <= p; q += 2)
      if (p % q == 0) prime = false;
    if (!prime) continue;
    if (f.back() % p == 0 || disc % p == 0) continue;
    break;
  }
  PrimeField F(p);
  std::mt19937_64 rng(0x5eed);
  PolyModP fp = to_modp(f, F);
  auto modular = factor_mod_p(fp.monic(), rng);
  if (modular.size() == 1) return {f};

  // Mignotte-type coefficient bound for any factor, times |lc|.
  BigInt norm2 = 0;
  for (const auto& v : f) norm2 += v * v;
  BigInt norm;
  mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
  norm += 1;
  BigInt bound = norm * abs(f.back());
  mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);
  int k = 1;
  BigInt pk = p;
  while (pk <= 2 * bound) {
    pk *= p;
    ++k;
  }

  std::vector<IntPoly> lifted;
  for (size_t i = 0; i < modular.size(); ++i) {
    PolyModP rest = PolyModP::constant(F, F.from_bigint(f.back()));
    for (size_t j = 0; j < modular.size(); ++j)
      if (j != i) rest = rest * modular[j];
    lifted.push_back(hensel_lift_factor(f, modular[i], rest, p, k));
  }

  std::vector<IntPoly> result;
  std::vector<size_t> remaining(lifted.size());
  for (size_t i = 0; i < remaining.size(); ++i) remaining[i] = i;
  for (size_t s = 1; 2 * s <= remaining.size();) {
    bool found = false;
    std::vector<bool> sel(remaining.size(), false);
    std::fill(sel.begin(), sel.begin() + s, true);
    do {
      IntPoly g{f.back()};
      for (size_t i = 0; i < remaining.size(); ++i)
        if (sel[i]) g = reduce(mul(g, lifted[remaining[i]]), pk);
      for (auto& v : g) v = mod_sym(v, pk);
      g = primitive(g);
      auto [q, r] = divmod(to_rat(f), to_rat(g));
      if (r.is_zero()) {
        bool integral = true;
        for (const auto& c : q.coeffs())
          if (c.get_den() != 1) integral = false;
        if (integral) {
          result.push_back(g);
          IntPoly qi;
          for (const auto& c : q.coeffs()) qi.push_back(c.get_num());
          f = primitive(qi);
          std::vector<size_t> keep;
          for (size_t i = 0; i < remaining.size(); ++i)
            if (!sel[i]) keep.push_back(remaining[i]);
          remaining = keep;
          found = true;
          break;
        }
      }
    } while (std::prev_permutation(sel.begin(), sel.end()));
    if (!found) ++s;
  }
  result.push_back(f);
  return result;
}

}  // namespace

Factorization factor_over_Q(const PolyRat& f) {
  if (f.is_zero()) throw std::domain_error("factor_over_Q of zero polynomial");
  if (f.degree() > 8) throw std::domain_error("factor_over_Q supports degree <= 8");
  Factorization out{f.leading(), {}};
  if (f.degree() == 0) return out;
  // Yun's squarefree decomposition over Q.
  PolyRat a = f.monic();
  PolyRat b = a.derivative();
  PolyRat c = gcd(a, b);
  PolyRat w = a / c;
  int mult = 1;
  std::vector<std::pair<PolyRat, int>> parts;
  PolyRat y = b / c;
  PolyRat z = y - w.derivative();
  while (w.degree() > 0) {
    PolyRat g = gcd(w, z);
    if (g.degree() > 0) parts.emplace_back(g, mult);
    w = w / g;
    y = z / g;
    z = y - w.derivative();
    ++mult;
  }
  for (const auto& [part, m] : parts) {
    IntPoly ip = primitive_integer_coeffs(part);
    for (const auto& fac : zassenhaus(ip)) {
      PolyRat monic = to_rat(fac).monic();
      for (int i = 0; i < m; ++i) out.factors.push_back(monic);
    }
  }
  std::sort(out.factors.begin(), out.factors.end(), [](const PolyRat& u, const PolyRat& v) {
    if (u.degree() != v.degree()) return u.degree() < v.degree();
    for (int i = u.degree(); i >= 0; --i)
      if (u.coeffs()[i] != v.coeffs()[i]) return u.coeffs()[i] < v.coeffs()[i];
    return false;
  });
  return out;
}

}  // namespace rank0
