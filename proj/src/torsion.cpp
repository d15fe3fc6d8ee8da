#include "rank0/torsion.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>

namespace rank0 {

JacobianQ jacobian_over_Q(const CurveModel& C) {
  if (!C.is_odd()) throw std::invalid_argument("torsion computation needs an odd-degree model");
  return JacobianQ(C.f, C.genus);
}

std::string to_string(const MumfordQ& D) { return "(" + to_string(D.a) + ", " + to_string(D.b) + ")"; }

std::string mumford_key(const MumfordQ& D) {
  std::string k;
  for (const auto& c : D.a.coeffs()) k += c.get_str() + ",";
  k += "|";
  for (const auto& c : D.b.coeffs()) k += c.get_str() + ",";
  return k;
}

BigInt torsion_bound_gcd(const CurveModel& C, const std::vector<std::uint64_t>& primes) {
  if (primes.empty()) throw std::invalid_argument("torsion bound needs at least one prime");
  BigInt g = 0;
  for (auto p : primes) {
    BigInt n = l_polynomial(C, p).at_one();
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
  }
  return g;
}

std::optional<std::vector<int>> sylow_partition(const CurveModel& C, std::uint64_t p, std::uint64_t group_order,
                                                std::uint64_t q, std::uint64_t seed, std::uint64_t cap) {
  const JacobianFp J = jacobian_mod_p(C, p);
  std::mt19937_64 rng(seed * 1000003u + p * 7919u + q);
  SylowSubgroup S;
  try {
    S = sylow_subgroup(J, group_order, q, rng, cap);
  } catch (const SylowError&) {
    return std::nullopt;
  }
  if (!S.enumerated) return std::nullopt;
  std::uint64_t qpart = 1;
  for (int i = 0; i < S.valuation; ++i) qpart *= q;
  std::vector<std::uint64_t> orders;
  for (const auto& X : S.elements) orders.push_back(element_order(J, X, qpart));
  std::vector<int> part;
  for (auto d : invariant_factors(orders)) {
    int e = 0;
    for (; d > 1; d /= q) ++e;
    if (e) part.push_back(e);
  }
  std::sort(part.rbegin(), part.rend());
  return part;
}

BigInt torsion_bound(const CurveModel& C, const std::vector<std::uint64_t>& primes, std::uint64_t seed,
                     std::uint64_t cap) {
  const BigInt g = torsion_bound_gcd(C, primes);
  if (g == 0 || !g.fits_ulong_p()) return g;
  std::map<std::uint64_t, std::uint64_t> orders;
  for (auto p : primes) orders[p] = l_polynomial(C, p).at_one().get_ui();
  BigInt bound = 1;
  for (auto [q, v] : factor_small(g.get_ui())) {
    // The q-part of the torsion embeds in each J(F_p)[q^oo], so its
    // partition is bounded by the componentwise minimum over p.
    std::optional<std::vector<int>> lo;
    for (auto p : primes) {
      if (p == q) continue;
      auto part = sylow_partition(C, p, orders[p], q, seed, cap);
      if (!part) continue;
      if (!lo) {
        lo = part;
        continue;
      }
      lo->resize(std::min(lo->size(), part->size()));
      for (size_t i = 0; i < lo->size(); ++i) (*lo)[i] = std::min((*lo)[i], (*part)[i]);
    }
    int e = v;
    if (lo) e = std::min(e, std::accumulate(lo->begin(), lo->end(), 0));
    for (int i = 0; i < e; ++i) bound *= static_cast<unsigned long>(q);
  }
  return bound;
}

std::vector<std::uint64_t> bound_primes(const CurveModel& C, const TorsionConfig& cfg) {
  if (!cfg.primes.empty()) {
    for (auto p : cfg.primes)
      if (!is_good_prime(C, p)) throw std::invalid_argument("prime " + std::to_string(p) + " is not good for this model");
    return cfg.primes;
  }
  std::vector<std::uint64_t> out;
  for (auto p : good_primes(C, cfg.prime_count))
    if (p <= cfg.max_counting_prime || out.empty()) out.push_back(p);
  return out;
}

namespace {

using QpElem_ = PadicField::Elem;

QpElem_ coeff(const Poly<PadicField>& f, int i) {
  if (i < 0 || i > f.degree()) return f.field().zero();
  return f.coeffs()[i];
}

Poly<PadicField> to_qp(const PadicField& K, const PolyRat& f) {
  std::vector<QpElem_> c;
  for (const auto& v : f.coeffs()) c.push_back(K.from_rational(v));
  return Poly<PadicField>(K, std::move(c));
}

Poly<PadicField> lift_residues(const PadicField& K, const PolyModP& f) {
  std::vector<QpElem_> c;
  for (auto v : f.coeffs()) c.push_back(K.from_rational(BigRational(static_cast<unsigned long>(v))));
  return Poly<PadicField>(K, std::move(c));
}

// Solve M x = r (rows x cols) by Gauss-Jordan elimination, pivoting on the
// entry of least valuation. Free variables are set to zero.
std::vector<QpElem_> solve_min_valuation(const PadicField& K, std::vector<std::vector<QpElem_>> M,
                                         std::vector<QpElem_> r) {
  const size_t rows = M.size(), cols = rows ? M[0].size() : 0;
  std::vector<int> pivot_col(rows, -1);
  std::vector<bool> used_col(cols, false);
  for (size_t step = 0; step < rows; ++step) {
    long best = 0;
    int bi = -1, bj = -1;
    for (size_t i = step; i < rows; ++i)
      for (size_t j = 0; j < cols; ++j) {
        if (used_col[j] || M[i][j].is_zero()) continue;
        if (bi < 0 || M[i][j].val < best) {
          best = M[i][j].val;
          bi = static_cast<int>(i);
          bj = static_cast<int>(j);
        }
      }
    if (bi < 0) break;
    std::swap(M[step], M[bi]);
    std::swap(r[step], r[bi]);
    used_col[bj] = true;
    pivot_col[step] = bj;
    const QpElem_ inv = K.inv(M[step][bj]);
    for (size_t i = 0; i < rows; ++i) {
      if (i == step || M[i][bj].is_zero()) continue;
      const QpElem_ factor = K.mul(M[i][bj], inv);
      for (size_t j = 0; j < cols; ++j) M[i][j] = K.sub(M[i][j], K.mul(factor, M[step][j]));
      r[i] = K.sub(r[i], K.mul(factor, r[step]));
    }
  }
  std::vector<QpElem_> x(cols, K.zero());
  for (size_t i = 0; i < rows; ++i)
    if (pivot_col[i] >= 0) x[pivot_col[i]] = K.mul(r[i], K.inv(M[i][pivot_col[i]]));
  return x;
}

bool all_zero(const Poly<PadicField>& f) {
  for (const auto& c : f.coeffs())
    if (!c.is_zero()) return false;
  return true;
}

long min_abs(const MumfordQp& X, int d) {
  long m = X.a.field().precision() * 4;
  for (int i = 0; i < d; ++i) m = std::min({m, coeff(X.a, i).abs, coeff(X.b, i).abs});
  return m;
}

}  // namespace

MumfordQp project_to_mumford(const Poly<PadicField>& f, MumfordQp X) {
  const PadicField& K = f.field();
  const int d = X.a.degree();
  if (d <= 0) return X;
  for (int it = 0; it < 40; ++it) {
    auto [q, r] = divmod(X.b * X.b - f, X.a);
    if (all_zero(r)) return X;
    std::vector<std::vector<QpElem_>> M(d, std::vector<QpElem_>(2 * d, K.zero()));
    for (int j = 0; j < d; ++j) {
      Poly<PadicField> xj = Poly<PadicField>::monomial(K, K.one(), j);
      Poly<PadicField> cb = (X.b * xj).scale(K.from_int(2)) % X.a;
      Poly<PadicField> ca = (-(q * xj)) % X.a;
      for (int i = 0; i < d; ++i) {
        M[i][j] = coeff(cb, i);
        M[i][d + j] = coeff(ca, i);
      }
    }
    std::vector<QpElem_> rhs(d);
    for (int i = 0; i < d; ++i) rhs[i] = K.neg(coeff(r, i));
    auto delta = solve_min_valuation(K, std::move(M), std::move(rhs));
    std::vector<QpElem_> ac(d + 1), bc(d);
    for (int i = 0; i < d; ++i) {
      ac[i] = K.add(coeff(X.a, i), delta[d + i]);
      bc[i] = K.add(coeff(X.b, i), delta[i]);
    }
    ac[d] = K.one();
    X = {Poly<PadicField>(K, std::move(ac)), Poly<PadicField>(K, std::move(bc))};
  }
  throw PrecisionError("Newton projection onto the Mumford variety did not settle");
}

std::optional<PadicLift> lift_torsion_point(const CurveModel& C, const MumfordFp& P, std::uint64_t m,
                                            std::uint64_t p, long N) {
  if (m % p == 0) throw std::invalid_argument("lifting needs p coprime to the order");
  // Cantor steps near a degenerate configuration (a Weierstrass point in the
  // support, repeated x-coordinates) cost about twice the current accuracy,
  // so the working precision is a multiple of the target.
  const PadicField K(BigInt(static_cast<unsigned long>(p)), 3 * N + 20);
  const Poly<PadicField> f = to_qp(K, C.f);
  if (m == 1) {
    if (!P.is_identity()) return std::nullopt;
    return PadicLift{MumfordQp::identity(K), K.precision()};
  }
  const int d = P.degree();
  if (d <= 0) return std::nullopt;
  // Iterates only need to be right to their current accuracy; digits lost
  // to cancellation are restored as exact padding before the next round.
  auto inflate = [&](const Poly<PadicField>& g) {
    std::vector<QpElem_> c;
    for (const auto& e : g.coeffs()) c.push_back(e.is_zero() ? K.zero() : QpElem_{e.unit, e.val, e.val + K.precision()});
    return Poly<PadicField>(K, std::move(c));
  };
  std::optional<PadicLift> best;
  try {
    const JacobianQp J(f, C.genus);
    MumfordQp X = project_to_mumford(f, {lift_residues(K, P.a), lift_residues(K, P.b)});
    const QpElem_ w = K.from_int(static_cast<long>(m - 1));
    const QpElem_ minv = K.inv(K.from_int(static_cast<long>(m)));
    int stalled = 0;
    for (int it = 0; it < 40 && stalled < 3; ++it) {
      MumfordQp Y = J.mul(X, static_cast<std::int64_t>(m - 1));
      if (Y.degree() != d) break;
      // Average X with the inverse of [m-1]X; the fixed point is the
      // m-torsion point and the error squares each round.
      std::vector<QpElem_> ac(d + 1), bc(d);
      for (int i = 0; i < d; ++i) {
        ac[i] = K.mul(K.add(K.mul(w, coeff(X.a, i)), coeff(Y.a, i)), minv);
        bc[i] = K.mul(K.sub(K.mul(w, coeff(X.b, i)), coeff(Y.b, i)), minv);
      }
      ac[d] = K.one();
      MumfordQp Z = project_to_mumford(f, {Poly<PadicField>(K, std::move(ac)), Poly<PadicField>(K, std::move(bc))});
      long agree = K.precision();
      for (int i = 0; i < d; ++i) {
        for (const auto& diff : {K.sub(coeff(Z.a, i), coeff(X.a, i)), K.sub(coeff(Z.b, i), coeff(X.b, i))})
          agree = std::min(agree, diff.is_zero() ? diff.abs : diff.val);
      }
      agree = std::min(agree, min_abs(Z, d));
      if (!best || agree > best->digits) {
        best = PadicLift{Z, agree};
        stalled = 0;
      } else {
        ++stalled;
      }
      if (best->digits >= N) break;
      X = {inflate(Z.a), inflate(Z.b)};
    }
  } catch (const PrecisionError&) {
  } catch (const std::domain_error&) {
  }
  if (best && best->digits < 2) return std::nullopt;
  return best;
}

std::optional<MumfordQ> recognize_rational(const PadicLift& L) {
  const MumfordQp& D = L.X;
  const long N = L.digits;
  const PadicField& K = D.a.field();
  const int d = D.a.degree();
  if (d <= 0) return MumfordQ::identity(RationalField{});
  auto rec = [&](const QpElem_& c) -> std::optional<BigRational> {
    try {
      return rational_reconstruct({K.prime(), N, K.residue(c, N)});
    } catch (const PrecisionError&) {
      return std::nullopt;
    }
  };
  std::vector<BigRational> ac(d + 1, 0), bc(d, 0);
  for (int i = 0; i < d; ++i) {
    auto x = rec(coeff(D.a, i));
    auto y = rec(coeff(D.b, i));
    if (!x || !y) return std::nullopt;
    ac[i] = *x;
    bc[i] = *y;
  }
  ac[d] = 1;
  return MumfordQ{poly_from(ac), poly_from(bc)};
}

std::optional<TorsionPoint> verify_torsion(const JacobianQ& J, const MumfordQ& D, std::uint64_t m) {
  if (!J.is_valid(D)) return std::nullopt;
  if (!J.mul(D, static_cast<std::int64_t>(m)).is_identity()) return std::nullopt;
  std::uint64_t ord = m;
  for (auto [r, e] : factor_small(m)) {
    (void)e;
    while (ord % r == 0 && J.mul(D, static_cast<std::int64_t>(ord / r)).is_identity()) ord /= r;
  }
  return TorsionPoint{D, ord};
}

std::vector<std::uint64_t> invariant_factors(const std::vector<std::uint64_t>& element_orders) {
  const std::uint64_t n = element_orders.size();
  std::vector<std::vector<int>> exps;  // per prime, exponents of its cyclic factors, descending
  std::vector<std::uint64_t> qs;
  for (auto [q, e] : factor_small(n)) {
    (void)e;
    // r[k] = number of cyclic factors of order >= q^k
    std::vector<int> r{0};
    std::uint64_t prev = 1;
    for (std::uint64_t qk = q;; qk *= q) {
      std::uint64_t cnt = 0;
      for (auto o : element_orders)
        if (qk % o == 0) ++cnt;
      if (cnt == prev) break;
      int rank = 0;
      for (std::uint64_t t = cnt / prev; t > 1; t /= q) ++rank;
      r.push_back(rank);
      prev = cnt;
    }
    std::vector<int> ex;
    for (size_t k = 1; k < r.size(); ++k) {
      const int next = k + 1 < r.size() ? r[k + 1] : 0;
      for (int i = 0; i < r[k] - next; ++i) ex.push_back(static_cast<int>(k));
    }
    std::sort(ex.rbegin(), ex.rend());
    qs.push_back(q);
    exps.push_back(ex);
  }
  size_t len = 0;
  for (const auto& e : exps) len = std::max(len, e.size());
  std::vector<std::uint64_t> out(len, 1);  // out[0] is the largest factor
  for (size_t i = 0; i < qs.size(); ++i)
    for (size_t j = 0; j < exps[i].size(); ++j)
      for (int k = 0; k < exps[i][j]; ++k) out[j] *= qs[i];
  std::reverse(out.begin(), out.end());
  return out;
}

namespace {

class GroupBuilder {
 public:
  explicit GroupBuilder(const JacobianQ& J) : J_(J) { insert(J.zero()); }

  bool contains(const MumfordQ& D) const { return index_.count(mumford_key(D)) > 0; }
  size_t size() const { return elems_.size(); }
  const std::vector<MumfordQ>& elements() const { return elems_; }

  void adjoin(const MumfordQ& P) {
    if (contains(P)) return;
    std::vector<MumfordQ> mult{J_.zero(), P};
    while (!contains(mult.back())) mult.push_back(J_.add(mult.back(), P));
    mult.pop_back();
    const std::vector<MumfordQ> base = elems_;
    for (size_t i = 1; i < mult.size(); ++i)
      for (const auto& h : base) insert(J_.add(h, mult[i]));
  }

  std::uint64_t q_part(std::uint64_t q) const {
    std::uint64_t n = elems_.size(), r = 1;
    while (n % q == 0) {
      n /= q;
      r *= q;
    }
    return r;
  }

 private:
  void insert(const MumfordQ& D) {
    if (index_.emplace(mumford_key(D), elems_.size()).second) elems_.push_back(D);
  }
  const JacobianQ& J_;
  std::vector<MumfordQ> elems_;
  std::map<std::string, size_t> index_;
};

std::set<std::vector<std::uint64_t>> reductions(const GroupBuilder& G, std::uint64_t p) {
  std::set<std::vector<std::uint64_t>> out;
  for (const auto& D : G.elements()) {
    try {
      out.insert(mumford_key(reduce_mod_p(D, p)));
    } catch (const std::domain_error&) {
    }
  }
  return out;
}

int valuation_small(std::uint64_t n, std::uint64_t q) {
  int v = 0;
  while (n && n % q == 0) {
    n /= q;
    ++v;
  }
  return v;
}

}  // namespace

TorsionGroup torsion_subgroup(const CurveModel& C, const TorsionConfig& cfg) {
  const JacobianQ J = jacobian_over_Q(C);
  TorsionGroup out;
  auto tick = [&] {
    if (cfg.checkpoint) cfg.checkpoint();
  };
  out.primes = bound_primes(C, cfg);
  std::map<std::uint64_t, std::uint64_t> group_orders;
  auto order_at = [&](std::uint64_t p) {
    auto it = group_orders.find(p);
    if (it != group_orders.end()) return it->second;
    tick();
    std::uint64_t n = l_polynomial(C, p).at_one().get_ui();
    group_orders[p] = n;
    return n;
  };
  for (auto p : out.primes) order_at(p);
  tick();
  const BigInt bound = torsion_bound(C, out.primes, cfg.seed, cfg.sylow_cap);
  out.bound = bound;
  if (BigInt gcd = torsion_bound_gcd(C, out.primes); gcd != bound)
    out.diagnostics.push_back("gcd of #J(F_p) is " + gcd.get_str() + "; group structure lowers the bound to " +
                              bound.get_str());
  const std::uint64_t B = bound.get_ui();

  GroupBuilder G(J);
  if (B % 2 == 0) {
    for (const auto& h : factor_over_Q(C.f).factors)
      if (h.degree() <= C.genus) G.adjoin(MumfordQ{h, PolyRat()});
  }

  // Candidate primes for Sylow work: the bound primes, then further good
  // primes up to a fixed ceiling.
  std::vector<std::uint64_t> pool = out.primes;
  const std::uint64_t ceiling = std::max<std::uint64_t>(cfg.max_counting_prime, 100);
  for (auto p : good_primes(C, 40))
    if (p <= ceiling && std::find(pool.begin(), pool.end(), p) == pool.end()) pool.push_back(p);

  std::vector<long> schedule;
  for (long N = cfg.precision_start; N < cfg.precision_max; N *= 2) schedule.push_back(N);
  schedule.push_back(cfg.precision_max);

  bool all_q_settled = true;
  for (auto [q, v] : factor_small(B)) {
    std::uint64_t target = 1;
    for (int i = 0; i < v; ++i) target *= q;
    if (G.q_part(q) == target) continue;
    bool settled = false;
    int exhaustive_passes = 0, primes_tried = 0;
    // Smallest q-Sylow subgroups first: fewer elements to lift.
    std::vector<std::uint64_t> by_size;
    for (auto p : pool)
      if (p != q) by_size.push_back(p);
    std::stable_sort(by_size.begin(), by_size.end(), [&](auto x, auto y) {
      return valuation_small(order_at(x), q) < valuation_small(order_at(y), q);
    });
    for (auto p : by_size) {
      if (settled || primes_tried >= cfg.primes_per_q) break;
      if (valuation_small(order_at(p), q) < v) continue;
      ++primes_tried;
      tick();
      const JacobianFp Jp = jacobian_mod_p(C, p);
      std::mt19937_64 rng(cfg.seed * 1000003u + p * 7919u + q);
      SylowSubgroup S;
      try {
        S = sylow_subgroup(Jp, order_at(p), q, rng, cfg.sylow_cap);
      } catch (const SylowError& e) {
        out.diagnostics.push_back("p=" + std::to_string(p) + ": " + e.what());
        continue;
      }
      std::vector<std::pair<std::uint64_t, MumfordFp>> todo;
      for (const auto& X : S.elements) todo.emplace_back(element_order(Jp, X, target), X);
      std::stable_sort(todo.begin(), todo.end(), [](const auto& x, const auto& y) { return x.first > y.first; });
      auto seen = reductions(G, p);
      int found = 0, failed = 0;
      for (const auto& [m, X] : todo) {
        if (seen.count(mumford_key(X))) continue;
        tick();
        bool ok = false;
        for (long N : schedule) {
          auto lifted = lift_torsion_point(C, X, m, p, N);
          if (!lifted) continue;
          auto cand = recognize_rational(*lifted);
          if (!cand) continue;
          if (auto T = verify_torsion(J, *cand, m); T && T->order == m) {
            G.adjoin(T->D);
            seen = reductions(G, p);
            ok = true;
            break;
          }
        }
        ok ? ++found : ++failed;
      }
      ++exhaustive_passes;
      if (G.q_part(q) == target) {
        settled = true;
      } else if (exhaustive_passes >= 2 && found == 0) {
        settled = true;
        out.diagnostics.push_back(std::to_string(q) + "-part " + std::to_string(G.q_part(q)) + " below bound part " +
                                  std::to_string(target) + "; unlifted elements failed at two primes");
      }
    }
    if (!settled) {
      all_q_settled = false;
      out.diagnostics.push_back("could not settle the " + std::to_string(q) + "-part");
    }
  }

  for (const auto& D : G.elements()) {
    auto T = verify_torsion(J, D, G.size());
    if (!T) throw std::logic_error("closure produced an element that fails exact verification");
    out.points.push_back(*T);
  }
  std::sort(out.points.begin(), out.points.end(), [](const TorsionPoint& x, const TorsionPoint& y) {
    if (x.order != y.order) return x.order < y.order;
    if (x.D.degree() != y.D.degree()) return x.D.degree() < y.D.degree();
    return mumford_key(x.D) < mumford_key(y.D);
  });
  std::vector<std::uint64_t> orders;
  for (const auto& t : out.points) orders.push_back(t.order);
  out.invariant_factors = invariant_factors(orders);
  out.complete = (BigInt(static_cast<unsigned long>(out.order())) == bound) || all_q_settled;
  return out;
}

}  // namespace rank0
