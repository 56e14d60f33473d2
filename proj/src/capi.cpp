#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "adomian/adomian.h"
#include "adomian/adomian_matrix.hpp"
#include "adomian/bench.hpp"
#include "adomian/error.hpp"
#include "adomian/reference.hpp"
#include "adomian/serialize.hpp"
#include "adomian/solver.hpp"

struct adm_grid {
  adomian::PolyGrid grid;
};

struct adm_bench_config {
  adomian::BenchConfig config;
};

struct adm_bench_report {
  adomian::BenchReport report;
};

struct adm_solution {
  adomian::SeriesSolution solution;
};

namespace {

thread_local std::string last_error;

adm_status fail(adm_status status, std::string message) {
  last_error = std::move(message);
  return status;
}

// Runs body, translating exceptions into status codes.
template <typename Body>
adm_status guarded(Body&& body) {
  try {
    last_error.clear();
    body();
    return ADM_OK;
  } catch (const adomian::ParseError& e) {
    return fail(ADM_ERR_PARSE, e.what());
  } catch (const adomian::LimitExceeded& e) {
    return fail(ADM_ERR_LIMIT, e.what());
  } catch (const adomian::Timeout& e) {
    return fail(ADM_ERR_TIMEOUT, e.what());
  } catch (const adomian::AlgorithmMismatch& e) {
    return fail(ADM_ERR_MISMATCH, e.what());
  } catch (const adomian::InvalidArgument& e) {
    return fail(ADM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const adomian::MissingAssignment& e) {
    return fail(ADM_ERR_INVALID_ARGUMENT, e.what());
  } catch (const adomian::Error& e) {
    return fail(ADM_ERR_IO, e.what());
  } catch (const std::bad_alloc&) {
    return fail(ADM_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(ADM_ERR_INTERNAL, e.what());
  }
}

char* copy_string(const std::string& s) {
  char* out = static_cast<char*>(std::malloc(s.size() + 1));
  if (!out) throw std::bad_alloc();
  std::memcpy(out, s.data(), s.size() + 1);
  return out;
}

void require(const void* p, const char* what) {
  if (!p) throw adomian::InvalidArgument(std::string(what) + " must not be null");
}

adomian::Algorithm to_algorithm(adm_algorithm algo) {
  switch (algo) {
    case ADM_ALGO_MATRIX:
      return adomian::Algorithm::kMatrix;
    case ADM_ALGO_DUAN1:
      return adomian::Algorithm::kDuan1;
    case ADM_ALGO_DUAN3:
      return adomian::Algorithm::kDuan3;
    case ADM_ALGO_ORACLE:
      return adomian::Algorithm::kOracle;
  }
  throw adomian::InvalidArgument("unknown algorithm code " + std::to_string(static_cast<int>(algo)));
}

adomian::PolyGrid generate_grid(adomian::Algorithm algo, int dim, unsigned power, size_t rows, size_t cols) {
  using adomian::PowerSpec;
  if (dim == 1) {
    if (cols != 1) throw adomian::InvalidArgument("1D generation takes a single column");
    PowerSpec::line(power, rows).validate();
    std::vector<adomian::Polynomial> entries = adomian::generate_1d(algo, power, rows);
    adomian::PolyGrid grid = adomian::PolyGrid::line(rows);
    for (size_t k = 0; k < rows; ++k) grid.at(k) = std::move(entries[k]);
    return grid;
  }
  if (dim != 2) throw adomian::InvalidArgument("dimension must be 1 or 2");
  PowerSpec spec = PowerSpec::grid(power, rows, cols);
  spec.validate();
  if (algo == adomian::Algorithm::kMatrix) return adomian::adomian_power_2d(spec).grid;
  if (algo == adomian::Algorithm::kOracle) {
    adomian::PolyGrid grid = adomian::PolyGrid::grid(rows, cols);
    for (size_t k = 0; k < rows; ++k) {
      for (size_t l = 0; l < cols; ++l) grid(k, l) = adomian::reference::oracle_2d(power, k, l);
    }
    return grid;
  }
  throw adomian::InvalidArgument(std::string(adomian::algorithm_name(algo)) +
                                 " supports only dim 1; use matrix or oracle for dim 2");
}

}  // namespace

extern "C" {

const char* adm_last_error(void) { return last_error.c_str(); }

void adm_string_free(char* s) { std::free(s); }

adm_status adm_algorithm_from_name(const char* name, adm_algorithm* out) {
  return guarded([&] {
    require(name, "name");
    require(out, "out");
    switch (adomian::parse_algorithm(name)) {
      case adomian::Algorithm::kMatrix:
        *out = ADM_ALGO_MATRIX;
        break;
      case adomian::Algorithm::kDuan1:
        *out = ADM_ALGO_DUAN1;
        break;
      case adomian::Algorithm::kDuan3:
        *out = ADM_ALGO_DUAN3;
        break;
      case adomian::Algorithm::kOracle:
        *out = ADM_ALGO_ORACLE;
        break;
    }
  });
}

adm_status adm_poly_canonicalize(const char* text, char** out) {
  return guarded([&] {
    require(text, "text");
    require(out, "out");
    *out = copy_string(adomian::poly_format(adomian::poly_parse(text)));
  });
}

adm_status adm_generate(adm_algorithm algo, int dim, unsigned power, size_t rows, size_t cols,
                        adm_grid** out) {
  return guarded([&] {
    require(out, "out");
    *out = nullptr;
    auto grid = generate_grid(to_algorithm(algo), dim, power, rows, cols);
    *out = new adm_grid{std::move(grid)};
  });
}

void adm_grid_free(adm_grid* grid) { delete grid; }

adm_status adm_grid_shape(const adm_grid* grid, int* dim, size_t* rows, size_t* cols) {
  return guarded([&] {
    require(grid, "grid");
    if (dim) *dim = grid->grid.dim();
    if (rows) *rows = grid->grid.rows();
    if (cols) *cols = grid->grid.cols();
  });
}

adm_status adm_grid_entry(const adm_grid* grid, size_t row, size_t col, char** out) {
  return guarded([&] {
    require(grid, "grid");
    require(out, "out");
    *out = copy_string(adomian::poly_format(grid->grid.at(row, col)));
  });
}

adm_status adm_grid_render(const adm_grid* grid, adm_format format, char** out) {
  return guarded([&] {
    require(grid, "grid");
    require(out, "out");
    switch (format) {
      case ADM_FORMAT_TEXT:
        *out = copy_string(adomian::render_grid_text(grid->grid));
        return;
      case ADM_FORMAT_JSON:
        *out = copy_string(adomian::render_grid_json(grid->grid));
        return;
      default:
        throw adomian::InvalidArgument("grids render as text or json");
    }
  });
}

adm_status adm_bench_config_new(adm_bench_config** out) {
  return guarded([&] {
    require(out, "out");
    *out = new adm_bench_config{};
  });
}

void adm_bench_config_free(adm_bench_config* config) { delete config; }

adm_status adm_bench_config_set_algorithms(adm_bench_config* config, const char* names) {
  return guarded([&] {
    require(config, "config");
    require(names, "names");
    config->config.algorithms = adomian::parse_algorithm_list(names);
  });
}

adm_status adm_bench_config_set_powers(adm_bench_config* config, const unsigned* powers, size_t count) {
  return guarded([&] {
    require(config, "config");
    if (count > 0) require(powers, "powers");
    config->config.powers.assign(powers, powers + count);
  });
}

adm_status adm_bench_config_set_orders(adm_bench_config* config, const size_t* orders, size_t count) {
  return guarded([&] {
    require(config, "config");
    if (count > 0) require(orders, "orders");
    config->config.orders.assign(orders, orders + count);
  });
}

adm_status adm_bench_config_set_repetitions(adm_bench_config* config, unsigned repetitions, unsigned warmup) {
  return guarded([&] {
    require(config, "config");
    if (repetitions < 1) throw adomian::InvalidArgument("repetitions must be at least 1");
    config->config.repetitions = repetitions;
    config->config.warmup = warmup;
  });
}

adm_status adm_bench_config_set_timeout(adm_bench_config* config, double seconds) {
  return guarded([&] {
    require(config, "config");
    if (!(seconds > 0)) throw adomian::InvalidArgument("timeout must be positive");
    config->config.timeout_seconds = seconds;
  });
}

adm_status adm_bench_run(const adm_bench_config* config, adm_bench_report** out) {
  return guarded([&] {
    require(config, "config");
    require(out, "out");
    *out = nullptr;
    auto report = adomian::run_bench(config->config);
    *out = new adm_bench_report{std::move(report)};
  });
}

void adm_bench_report_free(adm_bench_report* report) { delete report; }

adm_status adm_bench_report_counts(const adm_bench_report* report, size_t* rows, size_t* timeouts) {
  return guarded([&] {
    require(report, "report");
    size_t t = 0;
    for (const auto& row : report->report.rows) t += row.ok() ? 0 : 1;
    if (rows) *rows = report->report.rows.size();
    if (timeouts) *timeouts = t;
  });
}

namespace {

adomian::ReportFormat report_format(adm_format format) {
  switch (format) {
    case ADM_FORMAT_CSV:
      return adomian::ReportFormat::kCsv;
    case ADM_FORMAT_JSON:
      return adomian::ReportFormat::kJson;
    default:
      throw adomian::InvalidArgument("bench reports render as csv or json");
  }
}

}  // namespace

adm_status adm_bench_report_render(const adm_bench_report* report, adm_format format, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = copy_string(adomian::render_report(report->report, report_format(format)));
  });
}

adm_status adm_bench_report_write(const adm_bench_report* report, adm_format format, const char* path) {
  return guarded([&] {
    require(report, "report");
    require(path, "path");
    adomian::write_report(report->report, report_format(format), path);
  });
}

adm_status adm_bench_report_summary(const adm_bench_report* report, char** out) {
  return guarded([&] {
    require(report, "report");
    require(out, "out");
    *out = copy_string(adomian::summary_table(report->report));
  });
}

adm_status adm_solve(const char* a, const char* c, unsigned power, const char* g, const char* u0,
                     unsigned depth, adm_solution** out) {
  return guarded([&] {
    require(a, "a");
    require(c, "c");
    require(g, "g");
    require(u0, "u0");
    require(out, "out");
    *out = nullptr;
    adomian::IVProblem problem;
    problem.a = adomian::Rational::parse(a);
    problem.c = adomian::Rational::parse(c);
    problem.power = power;
    problem.g = adomian::UniPoly::parse(g);
    problem.u0 = adomian::Rational::parse(u0);
    problem.depth = depth;
    auto solution = adomian::solve(problem);
    *out = new adm_solution{std::move(solution)};
  });
}

void adm_solution_free(adm_solution* solution) { delete solution; }

adm_status adm_solution_component(const adm_solution* solution, size_t k, char** out) {
  return guarded([&] {
    require(solution, "solution");
    require(out, "out");
    const auto& components = solution->solution.components;
    if (k >= components.size()) throw adomian::InvalidArgument("component index out of range");
    *out = copy_string(components[k].to_string());
  });
}

adm_status adm_solution_partial_sum(const adm_solution* solution, size_t depth, char** out) {
  return guarded([&] {
    require(solution, "solution");
    require(out, "out");
    *out = copy_string(adomian::partial_sum(solution->solution, depth).to_string());
  });
}

adm_status adm_solution_render(const adm_solution* solution, adm_format format, char** out) {
  return guarded([&] {
    require(solution, "solution");
    require(out, "out");
    switch (format) {
      case ADM_FORMAT_TEXT:
        *out = copy_string(adomian::render_solution_text(solution->solution));
        return;
      case ADM_FORMAT_JSON:
        *out = copy_string(adomian::render_solution_json(solution->solution));
        return;
      default:
        throw adomian::InvalidArgument("solutions render as text or json");
    }
  });
}

}  // extern "C"
