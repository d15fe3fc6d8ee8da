#include "rank0/finite_jacobian.hpp"

#include <algorithm>

namespace rank0 {
namespace {

std::vector<std::uint64_t> digits(std::uint64_t a, std::uint64_t p, int k) {
  std::vector<std::uint64_t> d(k);
  for (int i = 0; i < k; ++i) {
    d[i] = a % p;
    a /= p;
  }
  return d;
}

std::uint64_t undigits(const std::vector<std::uint64_t>& d, std::uint64_t p) {
  std::uint64_t a = 0;
  for (int i = static_cast<int>(d.size()) - 1; i >= 0; --i) a = a * p + d[i];
  return a;
}

// Schoolbook product in F_p[t]/(m), m monic of degree k.
std::uint64_t slow_mul(std::uint64_t a, std::uint64_t b, const std::vector<std::uint64_t>& m, std::uint64_t p,
                       int k) {
  auto da = digits(a, p, k), db = digits(b, p, k);
  std::vector<std::uint64_t> c(2 * k, 0);
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < k; ++j) c[i + j] = (c[i + j] + da[i] * db[j]) % p;
  for (int i = 2 * k - 2; i >= k; --i) {
    std::uint64_t t = c[i];
    if (!t) continue;
    for (int j = 0; j < k; ++j) c[i - k + j] = (c[i - k + j] + (p - m[j]) * t) % p;
    c[i] = 0;
  }
  c.resize(k);
  return undigits(c, p);
}

}  // namespace

FiniteField::FiniteField(std::uint64_t p, int k) : p_(p), k_(k), q_(1) {
  for (int i = 0; i < k; ++i) q_ *= p;
  if (q_ > (1u << 24)) throw std::invalid_argument("finite field too large for table arithmetic");
  PolyModP mpoly = least_irreducible(p, k);
  std::vector<std::uint64_t> m(mpoly.coeffs().begin(), mpoly.coeffs().end());
  exp_.assign(2 * (q_ - 1), 0);
  log_.assign(q_, 0);
  for (std::uint64_t g = 2; g < q_ + 2; ++g) {
    std::uint64_t cand = q_ == 2 ? 1 : g % q_;
    std::uint64_t x = 1, n = 0;
    do {
      exp_[n++] = static_cast<std::uint32_t>(x);
      x = slow_mul(x, cand, m, p, k);
    } while (x != 1 && n < q_ - 1);
    if (x == 1 && n == q_ - 1) break;
  }
  for (std::uint64_t i = 0; i < q_ - 1; ++i) {
    exp_[i + q_ - 1] = exp_[i];
    log_[exp_[i]] = static_cast<std::uint32_t>(i);
  }
}

std::uint32_t FiniteField::add(std::uint32_t a, std::uint32_t b) const {
  if (k_ == 1) {
    std::uint64_t s = a + b;
    return static_cast<std::uint32_t>(s >= p_ ? s - p_ : s);
  }
  std::uint64_t r = 0, place = 1;
  for (int i = 0; i < k_; ++i) {
    std::uint64_t s = a % p_ + b % p_;
    if (s >= p_) s -= p_;
    r += s * place;
    place *= p_;
    a /= p_;
    b /= p_;
  }
  return static_cast<std::uint32_t>(r);
}

std::uint32_t FiniteField::mul(std::uint32_t a, std::uint32_t b) const {
  if (a == 0 || b == 0) return 0;
  return exp_[log_[a] + log_[b]];
}

int FiniteField::chi(std::uint32_t a) const {
  if (a == 0) return 0;
  return log_[a] % 2 == 0 ? 1 : -1;
}

namespace {

std::vector<std::uint32_t> coeffs_mod_p(const CurveModel& C, std::uint64_t p) {
  PrimeField F(p);
  std::vector<std::uint32_t> out;
  for (const auto& c : C.f.coeffs()) out.push_back(static_cast<std::uint32_t>(F.from_rational(c)));
  return out;
}

std::uint64_t infinity_count(const CurveModel& C, const FiniteField& K, const std::vector<std::uint32_t>& fc) {
  if (C.is_odd()) return 1;
  return K.chi(fc.back()) == 1 ? 2 : 0;
}

void check_prime(const CurveModel& C, std::uint64_t p) {
  if (!is_good_prime(C, p)) throw std::invalid_argument("bad prime " + std::to_string(p) + " for point counting");
}

}  // namespace

std::uint64_t count_points(const CurveModel& C, std::uint64_t p, int k) {
  check_prime(C, p);
  FiniteField K(p, k);
  auto fc = coeffs_mod_p(C, p);
  std::uint64_t n = infinity_count(C, K, fc);
  const int deg = static_cast<int>(fc.size()) - 1;
  for (std::uint64_t xi = 0; xi < K.size(); ++xi) {
    const auto x = static_cast<std::uint32_t>(xi);
    std::uint32_t acc = fc[deg];
    for (int i = deg - 1; i >= 0; --i) acc = K.add(K.mul(acc, x), fc[i]);
    n += static_cast<std::uint64_t>(1 + K.chi(acc));
  }
  return n;
}

std::uint64_t count_points_naive(const CurveModel& C, std::uint64_t p, int k) {
  check_prime(C, p);
  FiniteField K(p, k);
  auto fc = coeffs_mod_p(C, p);
  // Points at infinity: solutions of y^2 = lc on the chart at infinity.
  std::uint64_t n = 0;
  if (C.is_odd()) {
    n = 1;
  } else {
    for (std::uint64_t y = 0; y < K.size(); ++y)
      if (K.mul(y, y) == fc.back()) ++n;
  }
  for (std::uint64_t x = 0; x < K.size(); ++x) {
    std::uint32_t fx = 0, xp = 1;
    for (auto c : fc) {
      fx = K.add(fx, K.mul(c, xp));
      xp = K.mul(xp, x);
    }
    for (std::uint64_t y = 0; y < K.size(); ++y)
      if (K.mul(y, y) == fx) ++n;
  }
  return n;
}

BigInt LPolynomial::at_one() const {
  BigInt s = 0;
  for (const auto& c : a) s += c;
  return s;
}

LPolynomial l_polynomial(const CurveModel& C, std::uint64_t p) {
  const int g = C.genus;
  std::vector<BigInt> s(g + 1, 0), e(g + 1, 0);
  BigInt q = 1;
  for (int k = 1; k <= g; ++k) {
    q *= static_cast<unsigned long>(p);
    s[k] = q + 1 - BigInt(static_cast<unsigned long>(count_points(C, p, k)));
  }
  // Newton identities for the elementary symmetric functions of the
  // Frobenius eigenvalues.
  e[0] = 1;
  for (int k = 1; k <= g; ++k) {
    BigInt acc = 0;
    for (int i = 1; i <= k; ++i) acc += (i % 2 == 1 ? 1 : -1) * e[k - i] * s[i];
    if (acc % k != 0) throw std::logic_error("point counts are inconsistent with a Frobenius polynomial");
    e[k] = acc / k;
  }
  LPolynomial L{p, g, std::vector<BigInt>(2 * g + 1, 0)};
  for (int k = 0; k <= g; ++k) L.a[k] = (k % 2 == 0 ? 1 : -1) * e[k];
  BigInt pk = 1;
  for (int i = g; i >= 0; --i) {
    L.a[2 * g - i] = pk * L.a[i];
    pk *= static_cast<unsigned long>(p);
  }
  if (L.at_one() <= 0) throw std::logic_error("L(1) is not positive");
  return L;
}

JacobianFp jacobian_mod_p(const CurveModel& C, std::uint64_t p) {
  if (!C.is_odd()) throw std::invalid_argument("Jacobian arithmetic needs an odd-degree model");
  check_prime(C, p);
  return JacobianFp(reduce_mod_p(C.f, p), C.genus);
}

MumfordFp reduce_mod_p(const Mumford<RationalField>& D, std::uint64_t p) {
  return {reduce_mod_p(D.a, p), reduce_mod_p(D.b, p)};
}

std::vector<std::uint64_t> mumford_key(const MumfordFp& D) {
  std::vector<std::uint64_t> k(D.a.coeffs().begin(), D.a.coeffs().end());
  k.push_back(~std::uint64_t{0});
  k.insert(k.end(), D.b.coeffs().begin(), D.b.coeffs().end());
  return k;
}

std::map<std::uint64_t, int> factor_small(std::uint64_t n) {
  std::map<std::uint64_t, int> out;
  for (std::uint64_t r = 2; r * r <= n; ++r)
    while (n % r == 0) {
      ++out[r];
      n /= r;
    }
  if (n > 1) ++out[n];
  return out;
}

std::uint64_t element_order(const JacobianFp& J, const MumfordFp& D, std::uint64_t group_order) {
  std::uint64_t ord = group_order;
  for (auto [r, e] : factor_small(group_order)) {
    (void)e;
    while (ord % r == 0 && J.mul(D, static_cast<std::int64_t>(ord / r)).is_identity()) ord /= r;
  }
  return ord;
}

std::optional<PolyModP> sqrt_mod_irreducible(const PolyModP& c0, const PolyModP& u) {
  const PrimeField& F = u.field();
  const PolyModP one = PolyModP::constant(F, F.one());
  PolyModP c = c0 % u;
  if (c.is_zero()) return c;
  std::uint64_t q = 1;
  for (int i = 0; i < u.degree(); ++i) q *= F.p;
  if (powmod(c, (q - 1) / 2, u) != one) return std::nullopt;
  std::uint64_t t = q - 1;
  int s = 0;
  while (t % 2 == 0) {
    t /= 2;
    ++s;
  }
  PolyModP z(F);
  for (std::uint64_t idx = 2;; ++idx) {
    std::vector<std::uint64_t> zc;
    for (std::uint64_t v = idx; v; v /= F.p) zc.push_back(v % F.p);
    z = PolyModP(F, zc) % u;
    if (!z.is_zero() && powmod(z, (q - 1) / 2, u) != one) break;
  }
  int M = s;
  PolyModP cc = powmod(z, t, u);
  PolyModP T = powmod(c, t, u);
  PolyModP R = powmod(c, (t + 1) / 2, u);
  while (T != one) {
    int i = 0;
    PolyModP T2 = T;
    while (T2 != one) {
      T2 = (T2 * T2) % u;
      ++i;
    }
    PolyModP b = cc;
    for (int j = 0; j < M - i - 1; ++j) b = (b * b) % u;
    M = i;
    cc = (b * b) % u;
    T = (T * cc) % u;
    R = (R * b) % u;
  }
  return R;
}

std::optional<MumfordFp> random_prime_divisor(const JacobianFp& J, int d, std::mt19937_64& rng) {
  const PrimeField& F = J.field();
  std::uniform_int_distribution<std::uint64_t> coin(0, F.p - 1);
  std::vector<std::uint64_t> c(d + 1);
  for (int i = 0; i < d; ++i) c[i] = coin(rng);
  c[d] = 1;
  PolyModP u(F, c);
  if (d > 1 && !is_irreducible_mod_p(u)) return std::nullopt;
  auto b = sqrt_mod_irreducible(J.f() % u, u);
  if (!b) return std::nullopt;
  if (coin(rng) % 2) *b = -*b % u;
  return MumfordFp{u, *b % u};
}

MumfordFp random_element(const JacobianFp& J, std::mt19937_64& rng) {
  const int g = J.genus();
  std::uniform_int_distribution<int> deg(1, g);
  MumfordFp D = J.zero();
  for (int j = 0; j < g; ++j) {
    const int d = deg(rng);
    for (int attempt = 0; attempt < 10000; ++attempt) {
      if (auto P = random_prime_divisor(J, d, rng)) {
        D = J.add(D, *P);
        break;
      }
    }
  }
  return D;
}

SylowSubgroup sylow_subgroup(const JacobianFp& J, std::uint64_t group_order, std::uint64_t q, std::mt19937_64& rng,
                             std::uint64_t cap, int max_trials) {
  SylowSubgroup S;
  S.q = q;
  std::uint64_t qv = 1, cof = group_order;
  while (cof % q == 0) {
    cof /= q;
    qv *= q;
    ++S.valuation;
  }
  S.elements.push_back(J.zero());
  S.enumerated = true;
  if (S.valuation == 0) return S;
  if (qv > cap) throw SylowError("Sylow subgroup of order " + std::to_string(qv) + " exceeds the enumeration cap");

  std::set<std::vector<std::uint64_t>> seen{mumford_key(J.zero())};
  for (int trial = 0; trial < max_trials && S.elements.size() < qv; ++trial) {
    MumfordFp P = J.mul(random_element(J, rng), static_cast<std::int64_t>(cof));
    if (seen.count(mumford_key(P))) continue;
    // Smallest k with kP in the current subgroup H; then H + <P> is the
    // union of the cosets H + iP, 0 <= i < k.
    std::vector<MumfordFp> multiples{J.zero(), P};
    while (!seen.count(mumford_key(multiples.back()))) multiples.push_back(J.add(multiples.back(), P));
    multiples.pop_back();
    const std::vector<MumfordFp> base = S.elements;
    for (size_t i = 1; i < multiples.size(); ++i)
      for (const auto& h : base) {
        MumfordFp x = J.add(h, multiples[i]);
        if (seen.insert(mumford_key(x)).second) S.elements.push_back(x);
      }
    S.generators.push_back(P);
    S.generator_orders.push_back(element_order(J, P, qv));
  }
  if (S.elements.size() != qv)
    throw SylowError("could not generate the " + std::to_string(q) + "-Sylow subgroup from random elements");
  return S;
}

}  // namespace rank0
