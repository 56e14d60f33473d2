// adomian: generate Adomian polynomials, benchmark the generators, and solve
// demonstration initial value problems. Talks to the library only through
// its C interface.

#include <cstdio>
#include <cstdlib>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "adomian/adomian.h"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitUsage = 2;
constexpr int kExitAllTimedOut = 3;

// Owns a char* handed out by the C API.
struct CString {
  char* ptr = nullptr;
  ~CString() { adm_string_free(ptr); }
};

int report_error(adm_status status) {
  std::cerr << "error: " << adm_last_error() << "\n";
  return status == ADM_ERR_INVALID_ARGUMENT || status == ADM_ERR_PARSE || status == ADM_ERR_LIMIT
             ? kExitUsage
             : 1;
}

struct GenOptions {
  unsigned power = 0;
  size_t order = 0;
  size_t rows = 0;
  size_t cols = 0;
  std::string algo = "matrix";
  int dim = 1;
  std::string format = "text";
};

int run_gen(const GenOptions& o) {
  adm_algorithm algo;
  if (adm_algorithm_from_name(o.algo.c_str(), &algo) != ADM_OK) return report_error(ADM_ERR_INVALID_ARGUMENT);
  if (o.dim != 1 && o.dim != 2) {
    std::cerr << "error: --dim must be 1 or 2\n";
    return kExitUsage;
  }
  if (o.dim == 2 && (algo == ADM_ALGO_DUAN1 || algo == ADM_ALGO_DUAN3)) {
    std::cerr << "error: --algo " << o.algo << " supports only --dim 1\n";
    return kExitUsage;
  }
  size_t rows = o.dim == 1 ? o.order : (o.rows ? o.rows : o.order);
  size_t cols = o.dim == 1 ? 1 : (o.cols ? o.cols : o.order);
  if (rows == 0 || cols == 0) {
    std::cerr << "error: " << (o.dim == 1 ? "--order" : "--rows and --cols") << " must be given and positive\n";
    return kExitUsage;
  }
  adm_format format = o.format == "json" ? ADM_FORMAT_JSON : ADM_FORMAT_TEXT;

  adm_grid* grid = nullptr;
  if (adm_status s = adm_generate(algo, o.dim, o.power, rows, cols, &grid); s != ADM_OK) return report_error(s);
  CString text;
  adm_status s = adm_grid_render(grid, format, &text.ptr);
  adm_grid_free(grid);
  if (s != ADM_OK) return report_error(s);
  std::fputs(text.ptr, stdout);
  return kExitOk;
}

struct BenchOptions {
  std::string algos = "matrix,duan1,duan3";
  std::vector<unsigned> powers{3};
  std::vector<size_t> orders{10, 30, 50};
  unsigned reps = 3;
  unsigned warmup = 1;
  double timeout = 600.0;
  std::string out;
  std::string format = "csv";
};

int run_bench(const BenchOptions& o) {
  adm_bench_config* config = nullptr;
  if (adm_status s = adm_bench_config_new(&config); s != ADM_OK) return report_error(s);
  struct ConfigGuard {
    adm_bench_config* c;
    ~ConfigGuard() { adm_bench_config_free(c); }
  } guard{config};

  adm_status s = adm_bench_config_set_algorithms(config, o.algos.c_str());
  if (s == ADM_OK) s = adm_bench_config_set_powers(config, o.powers.data(), o.powers.size());
  if (s == ADM_OK) s = adm_bench_config_set_orders(config, o.orders.data(), o.orders.size());
  if (s == ADM_OK) s = adm_bench_config_set_repetitions(config, o.reps, o.warmup);
  if (s == ADM_OK) s = adm_bench_config_set_timeout(config, o.timeout);
  if (s != ADM_OK) return report_error(s);

  adm_bench_report* report = nullptr;
  if (s = adm_bench_run(config, &report); s != ADM_OK) {
    if (s == ADM_ERR_MISMATCH) {
      std::cerr << "error: correctness gate failed: " << adm_last_error() << "\n";
      return 1;
    }
    return report_error(s);
  }
  struct ReportGuard {
    adm_bench_report* r;
    ~ReportGuard() { adm_bench_report_free(r); }
  } report_guard{report};

  adm_format format = o.format == "json" ? ADM_FORMAT_JSON : ADM_FORMAT_CSV;
  if (!o.out.empty()) {
    if (s = adm_bench_report_write(report, format, o.out.c_str()); s != ADM_OK) return report_error(s);
  }
  CString summary;
  if (s = adm_bench_report_summary(report, &summary.ptr); s != ADM_OK) return report_error(s);
  std::fputs(summary.ptr, stdout);

  size_t rows = 0;
  size_t timeouts = 0;
  adm_bench_report_counts(report, &rows, &timeouts);
  return rows > 0 && rows == timeouts ? kExitAllTimedOut : kExitOk;
}

struct SolveOptions {
  std::string a = "0";
  std::string c = "1";
  unsigned power = 2;
  std::string g = "0";
  std::string u0 = "1";
  unsigned depth = 5;
  std::string format = "text";
};

int run_solve(const SolveOptions& o) {
  adm_solution* solution = nullptr;
  adm_status s = adm_solve(o.a.c_str(), o.c.c_str(), o.power, o.g.c_str(), o.u0.c_str(), o.depth, &solution);
  if (s != ADM_OK) return report_error(s);
  CString text;
  s = adm_solution_render(solution, o.format == "json" ? ADM_FORMAT_JSON : ADM_FORMAT_TEXT, &text.ptr);
  adm_solution_free(solution);
  if (s != ADM_OK) return report_error(s);
  std::fputs(text.ptr, stdout);
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Adomian polynomial generator, benchmark harness and ADM demo solver"};
  app.require_subcommand(1);

  GenOptions gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate Adomian polynomials of u^N");
  gen_cmd->add_option("--power", gen.power, "Nonlinearity order N")->required()->check(CLI::PositiveNumber);
  gen_cmd->add_option("--order", gen.order, "Number of polynomials n (1D)");
  gen_cmd->add_option("--rows", gen.rows, "Rows m of the Adomian matrix (2D)");
  gen_cmd->add_option("--cols", gen.cols, "Columns n of the Adomian matrix (2D)");
  gen_cmd->add_option("--algo", gen.algo, "matrix, duan1, duan3 or oracle")->capture_default_str();
  gen_cmd->add_option("--dim", gen.dim, "1 or 2")->capture_default_str();
  gen_cmd->add_option("--format", gen.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  BenchOptions bench;
  auto* bench_cmd = app.add_subcommand("bench", "Time the generators against each other");
  bench_cmd->add_option("--algos", bench.algos, "Comma-separated algorithms")->capture_default_str();
  bench_cmd->add_option("--powers", bench.powers, "Comma-separated N values")->delimiter(',');
  bench_cmd->add_option("--orders", bench.orders, "Comma-separated n values")->delimiter(',');
  bench_cmd->add_option("--reps", bench.reps, "Timed repetitions per cell")->capture_default_str();
  bench_cmd->add_option("--warmup", bench.warmup, "Discarded runs per cell")->capture_default_str();
  bench_cmd->add_option("--timeout", bench.timeout, "Seconds per run")->capture_default_str();
  bench_cmd->add_option("--out", bench.out, "Report file");
  bench_cmd->add_option("--format", bench.format)->check(CLI::IsMember({"csv", "json"}))->capture_default_str();

  SolveOptions solve;
  auto* solve_cmd = app.add_subcommand("solve", "Solve u' = a*u + c*u^N + g(x), u(0) = u0 by ADM");
  solve_cmd->add_option("--a", solve.a, "Linear coefficient")->capture_default_str();
  solve_cmd->add_option("--c", solve.c, "Nonlinear coefficient")->capture_default_str();
  solve_cmd->add_option("--power", solve.power, "Nonlinearity order N")->capture_default_str();
  solve_cmd->add_option("--g", solve.g, "Forcing polynomial in x")->capture_default_str();
  solve_cmd->add_option("--u0", solve.u0, "Initial value")->capture_default_str();
  solve_cmd->add_option("--depth", solve.depth, "Number of correction terms K")->capture_default_str();
  solve_cmd->add_option("--format", solve.format)->check(CLI::IsMember({"text", "json"}))->capture_default_str();

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }

  if (gen_cmd->parsed()) return run_gen(gen);
  if (bench_cmd->parsed()) return run_bench(bench);
  return run_solve(solve);
}
