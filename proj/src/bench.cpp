#include "adomian/bench.hpp"

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <map>
#include <tuple>

#include <json.hpp>

#include "adomian/adomian_matrix.hpp"
#include "adomian/reference.hpp"

namespace adomian {

namespace {

constexpr Algorithm kAllAlgorithms[] = {Algorithm::kMatrix, Algorithm::kDuan1, Algorithm::kDuan3,
                                        Algorithm::kOracle};

std::string format_seconds(double seconds) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.6f", seconds);
  return buf;
}

}  // namespace

std::string_view algorithm_name(Algorithm algorithm) {
  switch (algorithm) {
    case Algorithm::kMatrix:
      return "matrix";
    case Algorithm::kDuan1:
      return "duan1";
    case Algorithm::kDuan3:
      return "duan3";
    case Algorithm::kOracle:
      return "oracle";
  }
  return "unknown";
}

std::string valid_algorithm_names() {
  std::string out;
  for (Algorithm a : kAllAlgorithms) {
    if (!out.empty()) out += ", ";
    out += algorithm_name(a);
  }
  return out;
}

Algorithm parse_algorithm(std::string_view name) {
  for (Algorithm a : kAllAlgorithms) {
    if (algorithm_name(a) == name) return a;
  }
  throw InvalidArgument("unknown algorithm '" + std::string(name) + "'; valid names: " +
                        valid_algorithm_names());
}

std::vector<Algorithm> parse_algorithm_list(std::string_view csv) {
  std::vector<Algorithm> out;
  std::size_t start = 0;
  while (start <= csv.size()) {
    std::size_t comma = csv.find(',', start);
    if (comma == std::string_view::npos) comma = csv.size();
    out.push_back(parse_algorithm(csv.substr(start, comma - start)));
    start = comma + 1;
  }
  return out;
}

std::vector<Polynomial> generate_1d(Algorithm algorithm, unsigned power, std::size_t order,
                                    const Deadline* deadline) {
  switch (algorithm) {
    case Algorithm::kMatrix: {
      AdomianResult r = adomian_power_1d(PowerSpec::line(power, order), deadline);
      auto entries = r.grid.entries();
      return {std::make_move_iterator(entries.begin()), std::make_move_iterator(entries.end())};
    }
    case Algorithm::kDuan1:
      return reference::duan_c1(power, order, deadline);
    case Algorithm::kDuan3:
      return reference::duan_c3(power, order, deadline);
    case Algorithm::kOracle:
      if (power < 1) throw InvalidArgument("power must be a positive integer");
      if (order < 1) throw InvalidArgument("order must be at least 1");
      return reference::oracle_series(power, order, deadline);
  }
  throw InvalidArgument("unknown algorithm");
}

void BenchConfig::validate() const {
  if (algorithms.empty()) throw InvalidArgument("no algorithms selected");
  if (powers.empty()) throw InvalidArgument("no powers given");
  if (orders.empty()) throw InvalidArgument("no orders given");
  if (repetitions < 1) throw InvalidArgument("repetitions must be at least 1");
  if (!(timeout_seconds > 0)) throw InvalidArgument("timeout must be positive");
  for (unsigned p : powers) {
    if (p < 1) throw InvalidArgument("powers must be positive integers");
  }
  for (std::size_t n : orders) {
    if (n < 1) throw InvalidArgument("orders must be at least 1");
  }
}

namespace {

void correctness_gate(const BenchConfig& config) {
  unsigned power = *std::min_element(config.powers.begin(), config.powers.end());
  std::size_t order = *std::min_element(config.orders.begin(), config.orders.end());
  Algorithm first = config.algorithms.front();
  std::vector<Polynomial> reference = generate_1d(first, power, order);
  for (Algorithm other : config.algorithms) {
    if (other == first) continue;
    std::vector<Polynomial> candidate = generate_1d(other, power, order);
    for (std::size_t k = 0; k < order; ++k) {
      if (reference[k] != candidate[k]) {
        throw AlgorithmMismatch(std::string(algorithm_name(first)) + " and " +
                                std::string(algorithm_name(other)) + " disagree at A[" +
                                std::to_string(k) + "] for power " + std::to_string(power) + ":\n  " +
                                poly_format(reference[k]) + "\n  " + poly_format(candidate[k]));
      }
    }
  }
}

// Wall-clock seconds for one generation, or nullopt on timeout.
std::optional<double> timed_run(Algorithm algorithm, unsigned power, std::size_t order, double budget) {
  using Clock = std::chrono::steady_clock;
  Deadline deadline = Deadline::after(std::chrono::duration<double>(budget));
  auto start = Clock::now();
  try {
    deadline.check();
    auto result = generate_1d(algorithm, power, order, &deadline);
    (void)result;
  } catch (const Timeout&) {
    return std::nullopt;
  }
  std::chrono::duration<double> elapsed = Clock::now() - start;
  if (elapsed.count() > budget) return std::nullopt;
  return elapsed.count();
}

}  // namespace

BenchReport run_bench(const BenchConfig& config) {
  config.validate();
  correctness_gate(config);

  BenchReport report;
  for (Algorithm algorithm : config.algorithms) {
    for (unsigned power : config.powers) {
      std::optional<std::size_t> failed_order;
      for (std::size_t order : config.orders) {
        bool skip = failed_order && order >= *failed_order;
        for (unsigned w = 0; w < config.warmup && !skip; ++w) {
          if (!timed_run(algorithm, power, order, config.timeout_seconds)) skip = true;
        }
        for (unsigned rep = 1; rep <= config.repetitions; ++rep) {
          BenchRow row{algorithm, power, order, rep, std::nullopt};
          if (!skip) {
            row.seconds = timed_run(algorithm, power, order, config.timeout_seconds);
            if (!row.seconds) skip = true;
          }
          report.rows.push_back(row);
        }
        if (skip && (!failed_order || order < *failed_order)) failed_order = order;
      }
    }
  }
  return report;
}

std::string render_report(const BenchReport& report, ReportFormat format) {
  if (format == ReportFormat::kJson) {
    nlohmann::ordered_json rows = nlohmann::ordered_json::array();
    for (const BenchRow& r : report.rows) {
      nlohmann::ordered_json row;
      row["algorithm"] = std::string(algorithm_name(r.algorithm));
      row["power"] = r.power;
      row["order"] = r.order;
      row["repetition"] = r.repetition;
      row["seconds"] = r.seconds ? nlohmann::ordered_json(*r.seconds) : nlohmann::ordered_json(nullptr);
      row["status"] = r.ok() ? "ok" : "timeout";
      rows.push_back(std::move(row));
    }
    return rows.dump(2) + "\n";
  }
  std::string out = "algorithm,power,order,repetition,seconds,status\n";
  for (const BenchRow& r : report.rows) {
    out += algorithm_name(r.algorithm);
    out += ',' + std::to_string(r.power) + ',' + std::to_string(r.order) + ',' +
           std::to_string(r.repetition) + ',';
    if (r.seconds) out += format_seconds(*r.seconds);
    out += r.ok() ? ",ok\n" : ",timeout\n";
  }
  return out;
}

void write_report(const BenchReport& report, ReportFormat format, const std::filesystem::path& path) {
  std::ofstream file(path, std::ios::binary | std::ios::trunc);
  if (!file) throw Error("cannot open " + path.string() + " for writing");
  file << render_report(report, format);
  file.flush();
  if (!file) throw Error("failed writing " + path.string());
}

std::optional<double> median(std::vector<double> values) {
  if (values.empty()) return std::nullopt;
  std::sort(values.begin(), values.end());
  std::size_t mid = values.size() / 2;
  if (values.size() % 2 == 1) return values[mid];
  return (values[mid - 1] + values[mid]) / 2.0;
}

std::vector<BenchCell> summarize(const BenchReport& report) {
  using Key = std::tuple<Algorithm, unsigned, std::size_t>;
  std::vector<Key> order;
  std::map<Key, std::vector<double>> samples;
  for (const BenchRow& r : report.rows) {
    Key key{r.algorithm, r.power, r.order};
    auto [it, inserted] = samples.try_emplace(key);
    if (inserted) order.push_back(key);
    if (r.seconds) it->second.push_back(*r.seconds);
  }
  std::vector<BenchCell> cells;
  for (const Key& key : order) {
    cells.push_back(BenchCell{std::get<0>(key), std::get<1>(key), std::get<2>(key), median(samples[key])});
  }
  return cells;
}

std::string summary_table(const BenchReport& report) {
  std::string out;
  char line[128];
  std::snprintf(line, sizeof line, "%-10s %6s %6s %14s\n", "algorithm", "power", "order", "median_s");
  out += line;
  for (const BenchCell& c : summarize(report)) {
    std::string value = c.median_seconds ? format_seconds(*c.median_seconds) : "timeout";
    std::snprintf(line, sizeof line, "%-10s %6u %6zu %14s\n", std::string(algorithm_name(c.algorithm)).c_str(),
                  c.power, c.order, value.c_str());
    out += line;
  }
  return out;
}

}  // namespace adomian
