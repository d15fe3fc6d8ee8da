#include "rank0/exact_arith.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace rank0 {

PolyRat poly_from(const std::vector<BigRational>& coeffs) { return PolyRat(RationalField{}, coeffs); }

PolyRat poly_from_ints(const std::vector<long>& coeffs) {
  std::vector<BigRational> c;
  c.reserve(coeffs.size());
  for (long v : coeffs) c.emplace_back(v);
  return poly_from(c);
}

std::string to_string(const BigRational& q) { return q.get_str(); }

std::string to_string(const PolyRat& f, const std::string& var) {
  if (f.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (int i = f.degree(); i >= 0; --i) {
    const BigRational& c = f.coeffs()[i];
    if (c == 0) continue;
    BigRational a = abs(c);
    if (!first) os << (sgn(c) < 0 ? " - " : " + ");
    else if (sgn(c) < 0) os << "-";
    first = false;
    if (a != 1 || i == 0) os << a.get_str() << (i > 0 ? "*" : "");
    if (i > 0) os << var;
    if (i > 1) os << "^" << i;
  }
  return os.str();
}

BigRational parse_rational(const std::string& s) {
  if (s.empty()) throw std::invalid_argument("empty rational");
  auto slash = s.find('/');
  auto parse_int = [](const std::string& t) {
    if (t.empty()) throw std::invalid_argument("malformed rational");
    size_t i = (t[0] == '-' || t[0] == '+') ? 1 : 0;
    if (i == t.size()) throw std::invalid_argument("malformed rational: " + t);
    for (size_t j = i; j < t.size(); ++j)
      if (t[j] < '0' || t[j] > '9') throw std::invalid_argument("malformed rational: " + t);
    return BigInt(t[0] == '+' ? t.substr(1) : t);
  };
  if (slash == std::string::npos) return BigRational(parse_int(s));
  BigInt num = parse_int(s.substr(0, slash));
  BigInt den = parse_int(s.substr(slash + 1));
  if (den == 0) throw std::invalid_argument("zero denominator in " + s);
  return make_rational(num, den);
}

BigInt denominator_lcm(const PolyRat& f) {
  BigInt l = 1;
  for (const auto& c : f.coeffs()) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), c.get_den_mpz_t());
  return l;
}

std::vector<BigInt> integer_cleared_coeffs(const PolyRat& f) {
  BigInt l = denominator_lcm(f);
  std::vector<BigInt> out;
  for (const auto& c : f.coeffs()) {
    BigRational s = c * l;
    out.push_back(s.get_num());
  }
  return out;
}

std::vector<BigInt> primitive_integer_coeffs(const PolyRat& f) {
  auto out = integer_cleared_coeffs(f);
  BigInt g = 0;
  for (const auto& c : out) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  if (g == 0) return out;
  if (out.back() < 0) g = -g;
  for (auto& c : out) c /= g;
  return out;
}

PolyModP reduce_mod_p(const PolyRat& f, std::uint64_t p) {
  PrimeField F(p);
  std::vector<std::uint64_t> c;
  for (const auto& q : f.coeffs()) c.push_back(F.from_rational(q));
  return PolyModP(F, std::move(c));
}

bool is_squarefree(const PolyRat& f) {
  if (f.is_zero()) throw std::domain_error("is_squarefree of zero polynomial");
  return gcd(f, f.derivative()).degree() == 0;
}

namespace {

// Fraction-free Gaussian elimination (Bareiss).
BigInt bareiss_det(std::vector<std::vector<BigInt>> m) {
  const size_t n = m.size();
  if (n == 0) return 1;
  BigInt sign = 1, prev = 1;
  for (size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k] == 0) {
      size_t piv = k + 1;
      while (piv < n && m[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(m[k], m[piv]);
      sign = -sign;
    }
    for (size_t i = k + 1; i < n; ++i)
      for (size_t j = k + 1; j < n; ++j) {
        BigInt t = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        mpz_divexact(m[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
    prev = m[k][k];
  }
  return sign * m[n - 1][n - 1];
}

}  // namespace

BigInt discriminant(const std::vector<BigInt>& coeffs) {
  const int n = static_cast<int>(coeffs.size()) - 1;
  if (n < 1) throw std::domain_error("discriminant needs degree >= 1");
  if (n == 1) return 1;
  std::vector<BigInt> d;
  for (int i = 1; i <= n; ++i) d.push_back(coeffs[i] * i);
  // Sylvester matrix of F (deg n) and F' (deg n-1); rows hold coefficients
  // from highest degree down.
  const int size = 2 * n - 1;
  std::vector<std::vector<BigInt>> m(size, std::vector<BigInt>(size, 0));
  for (int r = 0; r < n - 1; ++r)
    for (int i = 0; i <= n; ++i) m[r][r + i] = coeffs[n - i];
  for (int r = 0; r < n; ++r)
    for (int i = 0; i <= n - 1; ++i) m[n - 1 + r][r + i] = d[n - 1 - i];
  BigInt res = bareiss_det(std::move(m));
  BigInt disc = res / coeffs[n];
  if ((n * (n - 1) / 2) % 2 == 1) disc = -disc;
  return disc;
}

namespace {

std::vector<BigInt> positive_divisors(BigInt n) {
  n = abs(n);
  std::vector<std::pair<BigInt, int>> fac;
  for (BigInt q = 2; q * q <= n; ++q) {
    if (n % q == 0) {
      int e = 0;
      while (n % q == 0) {
        n /= q;
        ++e;
      }
      fac.emplace_back(q, e);
    }
  }
  if (n > 1) fac.emplace_back(n, 1);
  std::vector<BigInt> divs{1};
  for (const auto& [q, e] : fac) {
    const size_t cur = divs.size();
    BigInt pw = 1;
    for (int k = 1; k <= e; ++k) {
      pw *= q;
      for (size_t i = 0; i < cur; ++i) divs.push_back(divs[i] * pw);
    }
  }
  std::sort(divs.begin(), divs.end());
  return divs;
}

}  // namespace

std::vector<BigRational> rational_roots(const PolyRat& f) {
  if (f.is_zero()) throw std::domain_error("rational_roots of zero polynomial");
  std::vector<BigRational> roots;
  auto c = primitive_integer_coeffs(f);
  size_t shift = 0;
  while (shift < c.size() && c[shift] == 0) ++shift;
  if (shift > 0) roots.emplace_back(0);
  c.erase(c.begin(), c.begin() + shift);
  if (c.size() >= 2) {
    PolyRat g = poly_from(std::vector<BigRational>(c.begin(), c.end()));
    for (const auto& num : positive_divisors(c.front()))
      for (const auto& den : positive_divisors(c.back()))
        for (int s : {1, -1}) {
          BigRational r = make_rational(num * s, den);
          if (r.get_den() != den) continue;  // already covered by reduced form
          if (g.eval(r) == 0) roots.push_back(r);
        }
  }
  std::sort(roots.begin(), roots.end());
  roots.erase(std::unique(roots.begin(), roots.end()), roots.end());
  return roots;
}

std::optional<BigInt> sqrt_integer(const BigInt& n) {
  if (n < 0) return std::nullopt;
  if (!mpz_perfect_square_p(n.get_mpz_t())) return std::nullopt;
  BigInt r;
  mpz_sqrt(r.get_mpz_t(), n.get_mpz_t());
  return r;
}

std::optional<BigRational> sqrt_rational(const BigRational& q) {
  auto n = sqrt_integer(q.get_num());
  if (!n) return std::nullopt;
  auto d = sqrt_integer(q.get_den());
  if (!d) return std::nullopt;
  return make_rational(*n, *d);
}

SquarefreeDecomp squarefree_part(const BigRational& q) {
  if (q == 0) throw std::domain_error("squarefree_part of zero");
  BigInt n = abs(q.get_num()) * q.get_den();
  BigInt d = 1, s = 1;
  // Trial division up to the cube root; the cofactor is then 1, a prime,
  // a product of two distinct primes, or a prime square.
  for (BigInt p = 2; p * p * p <= n; ++p) {
    if (n % p != 0) continue;
    int e = 0;
    while (n % p == 0) {
      n /= p;
      ++e;
    }
    if (e % 2) d *= p;
    for (int i = 0; i < e / 2; ++i) s *= p;
  }
  if (auto r = sqrt_integer(n); r && n > 1)
    s *= *r;
  else
    d *= n;
  if (sgn(q) < 0) d = -d;
  return {d, make_rational(s, q.get_den())};
}

QuadFieldElem canonical(QuadFieldElem a) {
  if (a.v == 0) a.d = 0;
  return a;
}

namespace {

BigInt common_d(const QuadFieldElem& a, const QuadFieldElem& b) {
  if (a.v == 0) return b.v == 0 ? BigInt(0) : b.d;
  if (b.v == 0) return a.d;
  if (a.d != b.d) throw std::domain_error("mixing elements of different quadratic fields");
  return a.d;
}

}  // namespace

QuadFieldElem operator+(const QuadFieldElem& a, const QuadFieldElem& b) {
  return canonical({common_d(a, b), a.u + b.u, a.v + b.v});
}
QuadFieldElem operator-(const QuadFieldElem& a, const QuadFieldElem& b) {
  return canonical({common_d(a, b), a.u - b.u, a.v - b.v});
}
QuadFieldElem operator-(const QuadFieldElem& a) { return {a.d, -a.u, -a.v}; }
QuadFieldElem operator*(const QuadFieldElem& a, const QuadFieldElem& b) {
  BigInt d = common_d(a, b);
  return canonical({d, a.u * b.u + a.v * b.v * BigRational(d), a.u * b.v + a.v * b.u});
}
QuadFieldElem inverse(const QuadFieldElem& a) {
  BigRational n = a.norm();
  if (n == 0) throw std::domain_error("inverse of zero in quadratic field");
  return canonical({a.d, a.u / n, -a.v / n});
}
QuadFieldElem operator/(const QuadFieldElem& a, const QuadFieldElem& b) { return a * inverse(b); }

QuadFieldElem eval(const PolyRat& f, const QuadFieldElem& x) {
  QuadFieldElem acc{x.d, 0, 0};
  for (int i = f.degree(); i >= 0; --i) acc = acc * x + QuadFieldElem::rational(f.coeffs()[i]);
  return acc;
}

std::string to_string(const QuadFieldElem& e) {
  if (e.v == 0) return e.u.get_str();
  std::ostringstream os;
  if (e.u != 0) os << e.u.get_str() << (sgn(e.v) < 0 ? " - " : " + ");
  else if (sgn(e.v) < 0) os << "-";
  BigRational av = abs(e.v);
  if (av != 1) os << av.get_str() << "*";
  os << "sqrt(" << e.d.get_str() << ")";
  return os.str();
}

std::optional<QuadFieldElem> sqrt_quadfield(const QuadFieldElem& e) {
  if (e.v == 0) {
    if (auto r = sqrt_rational(e.u)) return QuadFieldElem{e.d, *r, 0};
    if (e.d == 0) return std::nullopt;
    // u = d * t^2 gives t*sqrt(d).
    if (auto t = sqrt_rational(e.u / BigRational(e.d))) return QuadFieldElem{e.d, 0, *t};
    return std::nullopt;
  }
  auto n = sqrt_rational(e.norm());
  if (!n) return std::nullopt;
  for (const BigRational& s2 : {BigRational((e.u + *n) / 2), BigRational((e.u - *n) / 2)}) {
    if (s2 == 0) continue;
    auto s = sqrt_rational(s2);
    if (!s) continue;
    QuadFieldElem r{e.d, *s, e.v / (2 * *s)};
    if (r * r == e) return r;
  }
  return std::nullopt;
}

BigInt PadicApprox::modulus() const {
  BigInt m;
  mpz_pow_ui(m.get_mpz_t(), p.get_mpz_t(), static_cast<unsigned long>(N));
  return m;
}

std::optional<BigRational> rational_reconstruct(const PadicApprox& a) {
  const BigInt m = a.modulus();
  BigInt bound;
  {
    BigInt half = m / 2;
    mpz_sqrt(bound.get_mpz_t(), half.get_mpz_t());
  }
  BigInt r0 = m, r1 = a.value % m;
  if (r1 < 0) r1 += m;
  BigInt t0 = 0, t1 = 1;
  while (r1 > bound) {
    BigInt q = r0 / r1;
    BigInt r2 = r0 - q * r1;
    BigInt t2 = t0 - q * t1;
    r0 = std::move(r1);
    r1 = std::move(r2);
    t0 = std::move(t1);
    t1 = std::move(t2);
  }
  BigInt u = r1, v = t1;
  if (v < 0) {
    u = -u;
    v = -v;
  }
  if (v == 0 || v > bound) return std::nullopt;
  BigInt g;
  mpz_gcd(g.get_mpz_t(), u.get_mpz_t(), v.get_mpz_t());
  if (g != 1) return std::nullopt;
  if (v % a.p == 0) return std::nullopt;
  return make_rational(u, v);
}

bool is_irreducible_mod_p(const PolyModP& f) {
  const int n = f.degree();
  if (n <= 0) return false;
  if (n == 1) return true;
  const PrimeField& F = f.field();
  const PolyModP x = PolyModP::monomial(F, F.one(), 1);
  const PolyModP g = f.monic();
  // x^(p^n) == x mod g, and gcd(x^(p^(n/r)) - x, g) = 1 for primes r | n.
  auto frob_power = [&](int k) {
    PolyModP y = x;
    for (int i = 0; i < k; ++i) y = powmod(y, F.p, g);
    return y;
  };
  if (frob_power(n) != x % g) return false;
  for (int r = 2; r <= n; ++r) {
    if (n % r) continue;
    bool prime = true;
    for (int s = 2; s * s <= r; ++s)
      if (r % s == 0) prime = false;
    if (!prime) continue;
    if (gcd(frob_power(n / r) - x, g).degree() != 0) return false;
  }
  return true;
}

PolyModP least_irreducible(std::uint64_t p, int k) {
  PrimeField F(p);
  std::uint64_t total = 1;
  for (int i = 0; i < k; ++i) total *= p;
  for (std::uint64_t idx = 0; idx < total; ++idx) {
    std::vector<std::uint64_t> c(k + 1);
    std::uint64_t t = idx;
    for (int i = 0; i < k; ++i) {
      c[i] = t % p;
      t /= p;
    }
    c[k] = 1;
    PolyModP cand(F, c);
    if (is_irreducible_mod_p(cand)) return cand;
  }
  throw std::logic_error("no irreducible polynomial found");
}

}  // namespace rank0
