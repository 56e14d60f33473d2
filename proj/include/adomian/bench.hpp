#pragma once

#include <cstddef>
#include <filesystem>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "adomian/deadline.hpp"
#include "adomian/error.hpp"
#include "adomian/polynomial.hpp"

namespace adomian {

enum class Algorithm { kMatrix, kDuan1, kDuan3, kOracle };

std::string_view algorithm_name(Algorithm algorithm);
// Throws InvalidArgument listing the valid names.
Algorithm parse_algorithm(std::string_view name);
// Comma-separated list, e.g. "matrix,duan3".
std::vector<Algorithm> parse_algorithm_list(std::string_view csv);
std::string valid_algorithm_names();

// A_0 .. A_{order-1} of u^power by the chosen 1D algorithm.
std::vector<Polynomial> generate_1d(Algorithm algorithm, unsigned power, std::size_t order,
                                    const Deadline* deadline = nullptr);

struct BenchConfig {
  std::vector<Algorithm> algorithms;
  std::vector<unsigned> powers;
  std::vector<std::size_t> orders;
  unsigned repetitions = 1;
  double timeout_seconds = 600.0;
  unsigned warmup = 1;

  void validate() const;
};

struct BenchRow {
  Algorithm algorithm = Algorithm::kMatrix;
  unsigned power = 0;
  std::size_t order = 0;
  unsigned repetition = 0;  // 1-based
  std::optional<double> seconds;  // empty for timeouts

  bool ok() const { return seconds.has_value(); }
};

struct BenchReport {
  std::vector<BenchRow> rows;
};

// Thrown by the pre-timing correctness gate.
class AlgorithmMismatch : public Error {
 public:
  using Error::Error;
};

// Checks that every selected algorithm agrees on the smallest power and
// order, then times each (algorithm, power, order) `repetitions` times after
// `warmup` discarded runs. A run over budget is recorded as a timeout and the
// same algorithm/power is not attempted at larger orders.
BenchReport run_bench(const BenchConfig& config);

enum class ReportFormat { kCsv, kJson };

std::string render_report(const BenchReport& report, ReportFormat format);
// Throws Error on I/O failure.
void write_report(const BenchReport& report, ReportFormat format, const std::filesystem::path& path);

struct BenchCell {
  Algorithm algorithm;
  unsigned power;
  std::size_t order;
  std::optional<double> median_seconds;  // empty when every repetition timed out
};

// One cell per (algorithm, power, order), in first-seen row order.
std::vector<BenchCell> summarize(const BenchReport& report);
std::string summary_table(const BenchReport& report);

std::optional<double> median(std::vector<double> values);

}  // namespace adomian
