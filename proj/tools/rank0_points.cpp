// rank0-points: rational and isolated quadratic points on genus 2 and 3
// hyperelliptic curves whose Jacobian has rank 0.

#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "rank0/pipeline.hpp"

using namespace rank0;

namespace {

std::vector<std::uint64_t> parse_primes(const std::string& s) {
  std::vector<std::uint64_t> out;
  std::stringstream ss(s);
  for (std::string t; std::getline(ss, t, ',');)
    if (!t.empty()) out.push_back(std::stoull(t));
  return out;
}

void parse_precision(const std::string& s, JobConfig& cfg) {
  auto colon = s.find(':');
  if (colon == std::string::npos) {
    cfg.precision_start = cfg.precision_max = std::stol(s);
  } else {
    cfg.precision_start = std::stol(s.substr(0, colon));
    cfg.precision_max = std::stol(s.substr(colon + 1));
  }
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Rational and quadratic points on rank 0 hyperelliptic curves of genus 2 and 3"};
  app.require_subcommand(1);

  JobConfig cfg;
  std::string primes, precision, format = "json", curve, file;
  bool quadratic = false, tk = false, no_timings = false;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--primes", primes, "comma separated primes for the torsion bound");
    sub->add_option("--prime-count", cfg.prime_count, "number of good primes when --primes is absent");
    sub->add_option("--max-counting-prime", cfg.max_counting_prime, "largest prime used for counting");
    sub->add_option("--precision", precision, "p-adic precision start:max");
    sub->add_option("--seed", cfg.seed, "random seed");
    sub->add_option("--timeout", cfg.timeout_seconds, "seconds per curve, 0 for none");
    sub->add_option("--format", format, "json or csv")->check(CLI::IsMember({"json", "csv"}));
    sub->add_flag("--quadratic", quadratic, "also compute isolated quadratic points");
    sub->add_flag("--tk", tk, "include the Kummer images of torsion points");
    sub->add_flag("--assume-rank-zero", cfg.assume_rank_zero, "assert that the Jacobian has rank 0");
    sub->add_flag("--no-timings", no_timings, "omit timings so that reports are reproducible byte for byte");
  };

  auto* run = app.add_subcommand("run", "run a single curve");
  run->add_option("--curve", curve, "\"genus degree f0 f1 ... f_degree\"")->required();
  add_common(run);

  auto* batch = app.add_subcommand("batch", "run every curve of a file");
  batch->add_option("--file", file, "one curve per line, # starts a comment")->required();
  batch->add_option("--jobs", cfg.jobs, "worker threads")->check(CLI::PositiveNumber);
  add_common(batch);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int rc = app.exit(e);
    return rc == 0 ? 0 : 4;
  }

  try {
    if (!primes.empty()) cfg.primes = parse_primes(primes);
    if (!precision.empty()) parse_precision(precision, cfg);
    cfg.compute_quadratic = quadratic;
    cfg.compute_tk = tk;
    cfg.include_timings = !no_timings;
    cfg.validate();
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
  const Format fmt = format_from_string(format);

  try {
    if (*run) {
      CurveResult r = run_curve_line(curve, cfg);
      std::cout << emit_report(r, fmt, cfg.include_timings);
      if (!r.message.empty() && r.status != Status::ok) std::cerr << to_string(r.status) << ": " << r.message << "\n";
      return exit_code({r});
    }
    BatchSummary s = run_batch_file(file, cfg);
    std::cout << emit_report(s, fmt, cfg.include_timings);
    return exit_code(s.results);
  } catch (const std::logic_error& e) {
    std::cerr << "internal error: " << e.what() << "\n";
    return 5;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 4;
  }
}
