#pragma once

// End-to-end runs: parse a curve, move it to an odd model if needed, compute
// torsion, TK and point sets, and serialize the results. Batches run on a
// small worker pool and aggregate deterministically by input index.

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rank0/points.hpp"

namespace rank0 {

struct JobConfig {
  int prime_count = 9;
  std::vector<std::uint64_t> primes;
  long precision_start = 30;
  long precision_max = 120;
  std::uint64_t max_counting_prime = 50;
  std::uint64_t seed = 1;
  bool compute_tk = true;
  bool compute_quadratic = true;
  int jobs = 1;
  double timeout_seconds = 0;  // 0 disables the limit
  bool assume_rank_zero = false;
  bool include_timings = true;

  void validate() const;
};

class ParseError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct CurveInput {
  int genus = 0;
  int degree = 0;
  std::vector<BigRational> coeffs;  // f0 .. f_degree
  bool rank_zero = false;           // asserted by the input itself
  std::string text;
};

/// `genus degree f0 f1 ... f_degree`, or a JSON object with the fields
/// genus, degree, coeffs and optionally rank_zero.
CurveInput parse_curve_line(const std::string& line);

enum class Status { ok, unsupported_model, inconclusive, timeout, invalid_input, internal_error };

std::string to_string(Status s);
Status status_from_string(const std::string& s);

struct CurveResult {
  std::string input;
  int genus = 0;
  int degree = 0;
  std::string model = "original";              // or "odd_transform"
  std::optional<BigRational> transform_root;   // set for odd_transform
  std::vector<BigRational> odd_model;          // coefficients actually used
  BigInt torsion_bound = 0;
  std::uint64_t torsion_order = 0;
  std::vector<std::uint64_t> invariant_factors;
  bool complete = false;
  std::vector<std::vector<BigInt>> tk;
  std::vector<CurvePoint> rational_points;
  std::vector<CurvePoint> quadratic_points;
  Status status = Status::invalid_input;
  std::string message;
  std::vector<std::string> diagnostics;
  std::map<std::string, double> timings_ms;

  friend bool operator==(const CurveResult&, const CurveResult&) = default;
};

CurveResult run_curve(const CurveInput& input, const JobConfig& cfg);
/// Parses the line first; parse failures give status invalid_input.
CurveResult run_curve_line(const std::string& line, const JobConfig& cfg);

struct BatchSummary {
  std::vector<CurveResult> results;                    // in input order
  std::map<std::size_t, std::size_t> rational_tally;   // #C(Q) -> curves, ok results only
  std::map<std::size_t, std::size_t> quadratic_tally;  // #quadratic points -> curves
  std::size_t empty_rational = 0;
};

/// Runs every non-empty, non-comment line.
BatchSummary run_batch(const std::vector<std::string>& lines, const JobConfig& cfg);
BatchSummary run_batch_file(const std::string& path, const JobConfig& cfg);

enum class Format { json, csv };
Format format_from_string(const std::string& s);

std::string emit_report(const CurveResult& r, Format fmt, bool include_timings = true);
std::string emit_report(const BatchSummary& s, Format fmt, bool include_timings = true);

/// Inverse of emit_report(CurveResult, json).
CurveResult parse_report(const std::string& json);

/// 0 all ok; 2 unsupported model; 3 inconclusive or timeout; 4 invalid
/// input; 5 internal error. The most severe status wins.
int exit_code(const std::vector<CurveResult>& results);

}  // namespace rank0
