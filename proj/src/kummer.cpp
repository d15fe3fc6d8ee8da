#include "rank0/kummer.hpp"

#include <algorithm>
#include <map>

namespace rank0 {

std::vector<BigInt> normalize(const std::vector<BigRational>& v) {
  BigInt den = 1;
  for (const auto& q : v) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), q.get_den_mpz_t());
  std::vector<BigInt> out;
  BigInt content = 0;
  for (const auto& q : v) {
    BigInt n = q.get_num() * (den / q.get_den());
    mpz_gcd(content.get_mpz_t(), content.get_mpz_t(), n.get_mpz_t());
    out.push_back(n);
  }
  if (content == 0) throw std::invalid_argument("the zero tuple is not a projective point");
  int sign = 1;
  for (const auto& n : out)
    if (n != 0) {
      sign = sgn(n);
      break;
    }
  for (auto& n : out) n = sign * n / content;
  return out;
}

std::vector<BigInt> kappa(const CurveModel& C, const MumfordQ& D) {
  if (!C.is_odd()) throw std::invalid_argument("Kummer coordinates need an odd-degree model");
  if (C.genus == 3) return normalize(kappa_g3(C.f, D));
  if (C.genus == 2) return normalize(kappa_g2(C.f, D));
  throw std::invalid_argument("Kummer coordinates need genus 2 or 3");
}

std::string kummer_string(const std::vector<BigInt>& v) {
  std::string s = "(";
  for (size_t i = 0; i < v.size(); ++i) s += (i ? " : " : "") + v[i].get_str();
  return s + ")";
}

TKSet build_TK(const TorsionGroup& G, const CurveModel& C) {
  TKSet out;
  out.genus = C.genus;
  std::map<std::vector<BigInt>, TKEntry> seen;
  for (const auto& t : G.points) {
    if (t.D.is_identity()) continue;
    if (t.D.degree() > 2) {
      ++out.degree3_points;
      continue;
    }
    auto k = kappa(C, t.D);
    seen.emplace(k, TKEntry{k, t.D.degree(), t.order});
  }
  for (auto& [k, e] : seen) out.entries.push_back(std::move(e));
  return out;
}

}  // namespace rank0
