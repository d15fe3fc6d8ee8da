#include "rank0/pipeline.hpp"

#include <atomic>
#include <chrono>
#include <fstream>
#include <sstream>
#include <thread>

#include "json.hpp"

namespace rank0 {

using nlohmann::json;

void JobConfig::validate() const {
  if (prime_count < 1) throw std::invalid_argument("prime count must be positive");
  if (precision_start < 1 || precision_start > precision_max)
    throw std::invalid_argument("precision start must lie in [1, max]");
  if (jobs < 1) throw std::invalid_argument("parallelism must be at least 1");
  if (timeout_seconds < 0) throw std::invalid_argument("timeout must be nonnegative");
}

CurveInput parse_curve_line(const std::string& line) {
  CurveInput in;
  in.text = line;
  const auto first = line.find_first_not_of(" \t");
  if (first == std::string::npos) throw ParseError("empty curve line");
  try {
    if (line[first] == '{') {
      const json j = json::parse(line);
      in.genus = j.at("genus").get<int>();
      in.degree = j.at("degree").get<int>();
      for (const auto& c : j.at("coeffs"))
        in.coeffs.push_back(c.is_string() ? parse_rational(c.get<std::string>()) : BigRational(c.get<long>()));
      in.rank_zero = j.value("rank_zero", false);
    } else {
      std::istringstream is(line);
      std::vector<std::string> tok;
      for (std::string t; is >> t;) tok.push_back(t);
      if (tok.size() < 3) throw ParseError("expected: genus degree f0 ... f_degree");
      in.genus = std::stoi(tok[0]);
      in.degree = std::stoi(tok[1]);
      for (size_t i = 2; i < tok.size(); ++i) in.coeffs.push_back(parse_rational(tok[i]));
    }
  } catch (const ParseError&) {
    throw;
  } catch (const std::exception& e) {
    throw ParseError(std::string("malformed curve line: ") + e.what());
  }
  if (in.degree < 0 || static_cast<int>(in.coeffs.size()) != in.degree + 1)
    throw ParseError("degree " + std::to_string(in.degree) + " needs " + std::to_string(in.degree + 1) +
                     " coefficients, got " + std::to_string(in.coeffs.size()));
  return in;
}

std::string to_string(Status s) {
  switch (s) {
    case Status::ok: return "ok";
    case Status::unsupported_model: return "unsupported_model";
    case Status::inconclusive: return "inconclusive";
    case Status::timeout: return "timeout";
    case Status::invalid_input: return "invalid_input";
    case Status::internal_error: return "internal_error";
  }
  return "?";
}

Status status_from_string(const std::string& s) {
  for (auto st : {Status::ok, Status::unsupported_model, Status::inconclusive, Status::timeout, Status::invalid_input,
                  Status::internal_error})
    if (to_string(st) == s) return st;
  throw std::invalid_argument("unknown status " + s);
}

namespace {

class Timeout : public std::runtime_error {
 public:
  Timeout() : std::runtime_error("time limit exceeded") {}
};

using Clock = std::chrono::steady_clock;

double ms_since(Clock::time_point t) {
  return std::chrono::duration<double, std::milli>(Clock::now() - t).count();
}

}  // namespace

CurveResult run_curve(const CurveInput& input, const JobConfig& cfg) {
  cfg.validate();
  CurveResult r;
  r.input = input.text;
  r.genus = input.genus;
  r.degree = input.degree;
  const auto start = Clock::now();
  const auto deadline = start + std::chrono::duration_cast<Clock::duration>(
                                    std::chrono::duration<double>(cfg.timeout_seconds));
  auto check_time = [&] {
    if (cfg.timeout_seconds > 0 && Clock::now() > deadline) throw Timeout();
  };
  auto stage = [&](const char* name, auto&& body) {
    const auto t = Clock::now();
    body();
    r.timings_ms[name] = ms_since(t);
    check_time();
  };

  if (!cfg.assume_rank_zero && !input.rank_zero) {
    r.status = Status::invalid_input;
    r.message = "rank 0 of the Jacobian must be asserted";
    return r;
  }
  try {
    CurveModel C;
    std::optional<ModelTransform> T;
    try {
      C = validate_curve(input.genus, input.coeffs);
    } catch (const InvalidCurve& e) {
      r.status = Status::invalid_input;
      r.message = e.what();
      return r;
    }
    if (!C.is_odd()) {
      auto root = preferred_root(C);
      if (!root) {
        r.status = Status::unsupported_model;
        r.message = "even-degree model without a rational Weierstrass point";
        return r;
      }
      auto [odd, tr] = to_odd_model(C, *root);
      C = odd;
      T = tr;
      r.model = "odd_transform";
      r.transform_root = *root;
    }
    r.odd_model = C.f.coeffs();

    TorsionConfig tc;
    tc.prime_count = cfg.prime_count;
    tc.primes = cfg.primes;
    tc.precision_start = cfg.precision_start;
    tc.precision_max = cfg.precision_max;
    tc.max_counting_prime = cfg.max_counting_prime;
    tc.seed = cfg.seed;
    tc.checkpoint = check_time;
    TorsionGroup G;
    stage("torsion", [&] { G = torsion_subgroup(C, tc); });
    TKSet TK;
    stage("tk", [&] { TK = build_TK(G, C); });
    PointSetReport rep;
    stage("points", [&] { rep = extract_points(C, TK, G.complete, T ? &*T : nullptr, cfg.compute_quadratic); });

    r.torsion_bound = G.bound;
    r.torsion_order = G.order();
    r.invariant_factors = G.invariant_factors;
    r.complete = G.complete;
    if (cfg.compute_tk)
      for (const auto& e : TK.entries) r.tk.push_back(e.coords);
    r.rational_points = rep.rational;
    r.quadratic_points = rep.quadratic;
    r.diagnostics = G.diagnostics;
    r.diagnostics.insert(r.diagnostics.end(), rep.diagnostics.begin(), rep.diagnostics.end());
    if (G.complete && rep.consistent) {
      r.status = Status::ok;
    } else {
      r.status = Status::inconclusive;
      r.message = G.complete ? "point sets failed the cross-check" : "torsion subgroup may be incomplete";
    }
  } catch (const Timeout& e) {
    // keep the stage timings, drop everything computed
    CurveResult fresh;
    fresh.input = r.input;
    fresh.genus = r.genus;
    fresh.degree = r.degree;
    fresh.timings_ms = r.timings_ms;
    r = fresh;
    r.status = Status::timeout;
    r.message = e.what();
  } catch (const std::logic_error& e) {
    r.status = Status::internal_error;
    r.message = e.what();
    r.rational_points.clear();
    r.quadratic_points.clear();
  } catch (const std::exception& e) {
    r.status = Status::inconclusive;
    r.message = e.what();
  }
  r.timings_ms["total"] = ms_since(start);
  return r;
}

CurveResult run_curve_line(const std::string& line, const JobConfig& cfg) {
  CurveInput in;
  try {
    in = parse_curve_line(line);
  } catch (const ParseError& e) {
    CurveResult r;
    r.input = line;
    r.status = Status::invalid_input;
    r.message = e.what();
    return r;
  }
  return run_curve(in, cfg);
}

BatchSummary run_batch(const std::vector<std::string>& lines, const JobConfig& cfg) {
  cfg.validate();
  std::vector<std::string> work;
  for (const auto& l : lines) {
    const auto p = l.find_first_not_of(" \t\r");
    if (p == std::string::npos || l[p] == '#') continue;
    work.push_back(l.substr(0, l.find_last_not_of(" \t\r") + 1));
  }
  BatchSummary s;
  s.results.resize(work.size());
  std::atomic<size_t> next{0};
  auto worker = [&] {
    for (size_t i; (i = next++) < work.size();) s.results[i] = run_curve_line(work[i], cfg);
  };
  std::vector<std::thread> pool;
  const size_t n = std::min<size_t>(static_cast<size_t>(cfg.jobs), work.size());
  for (size_t i = 1; i < n; ++i) pool.emplace_back(worker);
  worker();
  for (auto& t : pool) t.join();

  for (const auto& r : s.results) {
    if (r.status != Status::ok) continue;
    ++s.rational_tally[r.rational_points.size()];
    ++s.quadratic_tally[r.quadratic_points.size()];
    if (r.rational_points.empty()) ++s.empty_rational;
  }
  return s;
}

BatchSummary run_batch_file(const std::string& path, const JobConfig& cfg) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::vector<std::string> lines;
  for (std::string l; std::getline(in, l);) lines.push_back(l);
  return run_batch(lines, cfg);
}

Format format_from_string(const std::string& s) {
  if (s == "json") return Format::json;
  if (s == "csv") return Format::csv;
  throw std::invalid_argument("unknown format " + s);
}

namespace {

json big_to_json(const BigInt& n) {
  if (n.fits_slong_p()) return n.get_si();
  return n.get_str();
}

BigInt big_from_json(const json& j) { return j.is_string() ? BigInt(j.get<std::string>()) : BigInt(j.get<long>()); }

json quad_to_json(const QuadFieldElem& e) { return {{"u", to_string(e.u)}, {"v", to_string(e.v)}}; }

json point_to_json(const CurvePoint& P) {
  if (P.is_rational()) {
    json j{{"kind", to_string(P.kind)}, {"x", nullptr}, {"y", nullptr}};
    if (P.kind == PointKind::affine) {
      j["x"] = to_string(P.x.u);
      j["y"] = to_string(P.y.u);
    }
    return j;
  }
  return {{"d", big_to_json(P.field_disc)},
          {"x", quad_to_json(P.x)},
          {"y", quad_to_json(P.y)},
          {"weierstrass", P.is_weierstrass()}};
}

CurvePoint point_from_json(const json& j) {
  if (j.contains("kind")) {
    const auto k = j.at("kind").get<std::string>();
    if (k == "affine")
      return CurvePoint::rational(parse_rational(j.at("x").get<std::string>()),
                                  parse_rational(j.at("y").get<std::string>()));
    for (auto pk : {PointKind::infinity_odd, PointKind::infinity_plus, PointKind::infinity_minus})
      if (to_string(pk) == k) return CurvePoint::at_infinity(pk);
    throw std::invalid_argument("unknown point kind " + k);
  }
  const BigInt d = big_from_json(j.at("d"));
  auto quad = [&](const json& e) {
    return QuadFieldElem{d, parse_rational(e.at("u").get<std::string>()), parse_rational(e.at("v").get<std::string>())};
  };
  return CurvePoint::affine(quad(j.at("x")), quad(j.at("y")));
}

json result_to_json(const CurveResult& r, bool include_timings) {
  json j;
  j["input"] = r.input;
  j["genus"] = r.genus;
  j["degree"] = r.degree;
  j["model"] = r.model;
  j["transform_root"] = r.transform_root ? json(to_string(*r.transform_root)) : json(nullptr);
  json odd = json::array();
  for (const auto& c : r.odd_model) odd.push_back(to_string(c));
  j["odd_model"] = odd;
  j["torsion_bound"] = big_to_json(r.torsion_bound);
  j["torsion_order"] = r.torsion_order;
  j["invariant_factors"] = r.invariant_factors;
  j["complete"] = r.complete;
  json tk = json::array();
  for (const auto& t : r.tk) {
    json row = json::array();
    for (const auto& c : t) row.push_back(big_to_json(c));
    tk.push_back(row);
  }
  j["tk"] = tk;
  json rat = json::array(), quad = json::array();
  for (const auto& P : r.rational_points) rat.push_back(point_to_json(P));
  for (const auto& P : r.quadratic_points) quad.push_back(point_to_json(P));
  j["rational_points"] = rat;
  j["quadratic_points"] = quad;
  j["status"] = to_string(r.status);
  j["message"] = r.message;
  j["diagnostics"] = r.diagnostics;
  if (include_timings) j["timings_ms"] = r.timings_ms;
  return j;
}

std::string csv_header() {
  return "index,status,genus,degree,model,transform_root,torsion_bound,torsion_order,complete,rational_points,"
         "quadratic_points\n";
}

std::string csv_row(size_t index, const CurveResult& r) {
  std::ostringstream os;
  os << index << ',' << to_string(r.status) << ',' << r.genus << ',' << r.degree << ',' << r.model << ','
     << (r.transform_root ? to_string(*r.transform_root) : "") << ',' << r.torsion_bound.get_str() << ','
     << r.torsion_order << ',' << (r.complete ? "true" : "false") << ',' << r.rational_points.size() << ','
     << r.quadratic_points.size() << '\n';
  return os.str();
}

}  // namespace

std::string emit_report(const CurveResult& r, Format fmt, bool include_timings) {
  if (fmt == Format::json) return result_to_json(r, include_timings).dump(2) + "\n";
  return csv_header() + csv_row(0, r);
}

std::string emit_report(const BatchSummary& s, Format fmt, bool include_timings) {
  if (fmt == Format::json) {
    json j;
    j["results"] = json::array();
    for (const auto& r : s.results) j["results"].push_back(result_to_json(r, include_timings));
    json rt = json::object(), qt = json::object();
    for (auto [k, v] : s.rational_tally) rt[std::to_string(k)] = v;
    for (auto [k, v] : s.quadratic_tally) qt[std::to_string(k)] = v;
    j["tally"] = {{"rational_points", rt}, {"quadratic_points", qt}, {"empty_rational", s.empty_rational}};
    return j.dump(2) + "\n";
  }
  std::string out = csv_header();
  for (size_t i = 0; i < s.results.size(); ++i) out += csv_row(i, s.results[i]);
  out += "\n";
  for (auto [k, v] : s.rational_tally) out += "rational_points=" + std::to_string(k) + ",count=" + std::to_string(v) + "\n";
  for (auto [k, v] : s.quadratic_tally)
    out += "quadratic_points=" + std::to_string(k) + ",count=" + std::to_string(v) + "\n";
  out += "empty_rational,count=" + std::to_string(s.empty_rational) + "\n";
  return out;
}

CurveResult parse_report(const std::string& text) {
  const json j = json::parse(text);
  CurveResult r;
  r.input = j.at("input").get<std::string>();
  r.genus = j.at("genus").get<int>();
  r.degree = j.at("degree").get<int>();
  r.model = j.at("model").get<std::string>();
  if (!j.at("transform_root").is_null()) r.transform_root = parse_rational(j.at("transform_root").get<std::string>());
  for (const auto& c : j.at("odd_model")) r.odd_model.push_back(parse_rational(c.get<std::string>()));
  r.torsion_bound = big_from_json(j.at("torsion_bound"));
  r.torsion_order = j.at("torsion_order").get<std::uint64_t>();
  r.invariant_factors = j.at("invariant_factors").get<std::vector<std::uint64_t>>();
  r.complete = j.at("complete").get<bool>();
  for (const auto& row : j.at("tk")) {
    std::vector<BigInt> t;
    for (const auto& c : row) t.push_back(big_from_json(c));
    r.tk.push_back(t);
  }
  for (const auto& p : j.at("rational_points")) r.rational_points.push_back(point_from_json(p));
  for (const auto& p : j.at("quadratic_points")) r.quadratic_points.push_back(point_from_json(p));
  r.status = status_from_string(j.at("status").get<std::string>());
  r.message = j.at("message").get<std::string>();
  r.diagnostics = j.at("diagnostics").get<std::vector<std::string>>();
  if (j.contains("timings_ms")) r.timings_ms = j.at("timings_ms").get<std::map<std::string, double>>();
  return r;
}

int exit_code(const std::vector<CurveResult>& results) {
  int code = 0;
  for (const auto& r : results) {
    int c = 0;
    switch (r.status) {
      case Status::ok: c = 0; break;
      case Status::unsupported_model: c = 2; break;
      case Status::inconclusive:
      case Status::timeout: c = 3; break;
      case Status::invalid_input: c = 4; break;
      case Status::internal_error: c = 5; break;
    }
    code = std::max(code, c);
  }
  return code;
}

}  // namespace rank0
