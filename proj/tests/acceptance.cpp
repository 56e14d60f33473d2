// Acceptance checks 1-9. Prints one PASS/FAIL line per criterion and exits
// nonzero if any fails. Performance cases run in forked children under an
// address-space limit so an out-of-memory case fails cleanly.

#include <sys/resource.h>
#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstring>
#include <functional>
#include <sstream>
#include <string>
#include <vector>

#include "adomian/adomian_matrix.hpp"
#include "adomian/bench.hpp"
#include "adomian/reference.hpp"
#include "adomian/solver.hpp"
#include "support/oracles.hpp"

using namespace adomian;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

struct Outcome {
  bool pass = true;
  std::string detail;

  void fail(const std::string& why) {
    if (pass) detail = why;
    pass = false;
  }
};

Polynomial mono(std::initializer_list<std::pair<std::uint32_t, std::uint32_t>> factors, const mpz_class& coeff) {
  std::vector<Factor> fs;
  for (auto [i, e] : factors) fs.push_back({ComponentVar::line(i), e});
  return Polynomial(Monomial::from_factors(fs), Rational(coeff));
}

Outcome criterion1() {
  Outcome o;
  auto start = Clock::now();
  for (unsigned power : {2U, 3U, 5U, 10U}) {
    const std::size_t n = 15;
    PolyGrid matrix = adomian_power_1d(PowerSpec::line(power, n)).grid;
    auto c1 = reference::duan_c1(power, n);
    auto c3 = reference::duan_c3(power, n);
    for (std::size_t k = 0; k < n; ++k) {
      Polynomial oracle = reference::oracle_1d(power, k);
      if (!(matrix.at(k) == oracle && c1[k] == oracle && c3[k] == oracle)) {
        o.fail("disagreement at N=" + std::to_string(power) + " A[" + std::to_string(k) + "]");
      }
    }
  }
  double t = seconds_since(start);
  if (t >= 5.0) o.fail("took " + std::to_string(t) + " s (limit 5 s)");
  if (o.pass) o.detail = "N in {2,3,5,10}, n=15, four generators identical, " + std::to_string(t) + " s";
  return o;
}

Outcome criterion2() {
  Outcome o;
  for (unsigned power : {2U, 3U, 5U}) {
    PolyGrid g = adomian_power_1d(PowerSpec::line(power, 3)).grid;
    Polynomial a0 = mono({{0, power}}, 1);
    Polynomial a1 = mono({{0, power - 1}, {1, 1}}, power);
    Polynomial a2 = mono({{0, power - 1}, {2, 1}}, power) +
                    mono({{0, power - 2}, {1, 2}}, testing::pascal_binomial(power, 2));
    if (g.at(0) != a0) o.fail("A_0 wrong for N=" + std::to_string(power));
    if (g.at(1) != a1) o.fail("A_1 wrong for N=" + std::to_string(power));
    if (g.at(2) != a2) o.fail("A_2 wrong for N=" + std::to_string(power) + ": " + poly_format(g.at(2)));
  }
  if (o.pass) o.detail = "A_0, A_1, A_2 closed forms for N in {2,3,5}";
  return o;
}

Outcome criterion3() {
  Outcome o;
  std::uint64_t checked = 0;
  PolyGrid g1 = adomian_power_1d(PowerSpec::line(10, 50)).grid;
  for (std::size_t k = 0; k < 50; ++k) {
    for (const Term& t : g1.at(k).terms()) {
      std::uint64_t s = 0;
      for (const Factor& f : t.monomial.factors()) s += std::uint64_t{f.var.index()} * f.exp;
      if (s != k) o.fail("1D A[" + std::to_string(k) + "] has index sum " + std::to_string(s));
      ++checked;
    }
  }
  PolyGrid g2 = adomian_power_2d(PowerSpec::grid(3, 12, 12)).grid;
  for (std::size_t k = 0; k < 12; ++k) {
    for (std::size_t l = 0; l < 12; ++l) {
      for (const Term& t : g2(k, l).terms()) {
        std::uint64_t rs = 0;
        std::uint64_t cs = 0;
        for (const Factor& f : t.monomial.factors()) {
          rs += std::uint64_t{f.var.index()} * f.exp;
          cs += std::uint64_t{f.var.second()} * f.exp;
        }
        if (rs != k || cs != l) o.fail("2D A[" + std::to_string(k) + "," + std::to_string(l) + "] index sums off");
        ++checked;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(checked) + " monomials checked (N=10 n=50; N=3 12x12)";
  return o;
}

Outcome criterion4() {
  Outcome o;
  int evaluations = 0;
  for (unsigned power = 1; power <= 5; ++power) {
    PolyGrid g = adomian_power_1d(PowerSpec::line(power, 21)).grid;
    for (Rational t : {Rational(1), Rational(1, 2), Rational(-2)}) {
      Assignment assign;
      for (std::uint32_t k = 0; k <= 20; ++k) assign[ComponentVar::line(k)] = t.pow(k);
      for (unsigned m = 0; m <= 20; ++m) {
        Rational expected = Rational(testing::pascal_binomial(m + power - 1, m)) * t.pow(m);
        if (poly_eval(g.at(m), assign) != expected) {
          o.fail("N=" + std::to_string(power) + " M=" + std::to_string(m) + " t=" + t.to_string());
        }
        ++evaluations;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(evaluations) + " evaluations match C(M+N-1,M) t^M";
  return o;
}

Outcome criterion5() {
  Outcome o;
  auto start = Clock::now();
  IVProblem grow;
  grow.depth = 20;
  SeriesSolution s = solve(grow);
  for (std::size_t k = 0; k <= 20; ++k) {
    if (s.components[k] != UniPoly::monomial(k)) o.fail("u' = u^2: u_" + std::to_string(k) + " != x^k");
  }
  UniPoly sum = partial_sum(s, 20);
  UniPoly residual = sum.derivative() - sum.pow(2);
  for (std::size_t j = 0; j <= 19; ++j) {
    if (!residual.coeff(j).is_zero()) o.fail("residual coefficient of x^" + std::to_string(j) + " nonzero");
  }

  IVProblem decay;
  decay.a = -1;
  decay.c = 0;
  decay.depth = 10;
  SeriesSolution d = solve(decay);
  Rational factorial(1);
  for (std::size_t k = 0; k <= 10; ++k) {
    if (k > 0) factorial *= Rational(static_cast<std::int64_t>(k));
    Rational c = (k % 2 ? Rational(-1) : Rational(1)) / factorial;
    if (d.components[k] != UniPoly::monomial(k, c)) o.fail("u' = -u: u_" + std::to_string(k) + " wrong");
  }
  double t = seconds_since(start);
  if (t >= 2.0) o.fail("took " + std::to_string(t) + " s (limit 2 s)");
  if (o.pass) o.detail = "u'=u^2 to k=20 with residual O(x^20); u'=-u to k=10; " + std::to_string(t) + " s";
  return o;
}

Outcome criterion6() {
  Outcome o;
  int compared = 0;
  for (unsigned power = 1; power <= 5; ++power) {
    for (std::size_t m = 1; m <= 10; ++m) {
      PolyGrid g2 = adomian_power_2d(PowerSpec::grid(power, m, 1)).grid;
      PolyGrid g1 = adomian_power_1d(PowerSpec::line(power, m)).grid;
      for (std::size_t k = 0; k < m; ++k) {
        Polynomial flat = poly_substitute<Polynomial>(
            g2(k, 0), [](ComponentVar v) { return Polynomial(ComponentVar::line(v.index())); });
        if (flat != g1.at(k)) o.fail("N=" + std::to_string(power) + " m=" + std::to_string(m));
        ++compared;
      }
    }
  }
  if (o.pass) o.detail = std::to_string(compared) + " entries identical under u[i] = u[i,0]";
  return o;
}

struct GuardedRun {
  enum Status { kOk, kTimeout, kOutOfMemory, kCrashed } status = kCrashed;
  double seconds = 0;
  long peak_rss_kb = 0;
  std::uint64_t terms = 0;
};

constexpr rlim_t kAddressSpaceLimit = 4500ULL << 20;

// Runs `body` in a child process with an address-space cap and a deadline.
// The child writes "status seconds terms" to a pipe.
GuardedRun run_guarded(double budget, const std::function<std::uint64_t(const Deadline*)>& body) {
  int fds[2];
  GuardedRun out;
  if (pipe(fds) != 0) return out;
  std::fflush(stdout);
  pid_t pid = fork();
  if (pid == 0) {
    close(fds[0]);
    rlimit as{kAddressSpaceLimit, kAddressSpaceLimit};
    setrlimit(RLIMIT_AS, &as);
    alarm(static_cast<unsigned>(budget) + 60);
    char msg[128];
    auto start = Clock::now();
    int status = 0;
    std::uint64_t terms = 0;
    try {
      Deadline deadline = Deadline::after(std::chrono::duration<double>(budget));
      terms = body(&deadline);
    } catch (const Timeout&) {
      status = 1;
    } catch (const std::bad_alloc&) {
      status = 2;
    }
    int len = std::snprintf(msg, sizeof msg, "%d %.6f %llu", status, seconds_since(start),
                            static_cast<unsigned long long>(terms));
    ssize_t written = write(fds[1], msg, len);
    (void)written;
    _exit(0);
  }
  close(fds[1]);
  std::string text;
  char buf[128];
  ssize_t n;
  while ((n = read(fds[0], buf, sizeof buf)) > 0) text.append(buf, n);
  close(fds[0]);
  int wstatus = 0;
  rusage usage{};
  wait4(pid, &wstatus, 0, &usage);
  out.peak_rss_kb = usage.ru_maxrss;
  int code = -1;
  unsigned long long terms = 0;
  if (std::sscanf(text.c_str(), "%d %lf %llu", &code, &out.seconds, &terms) == 3) {
    out.terms = terms;
    out.status = code == 0 ? GuardedRun::kOk : code == 1 ? GuardedRun::kTimeout : GuardedRun::kOutOfMemory;
  } else if (WIFSIGNALED(wstatus) && WTERMSIG(wstatus) == SIGALRM) {
    out.status = GuardedRun::kTimeout;
  }
  return out;
}

std::uint64_t term_total(const PolyGrid& g) {
  std::uint64_t total = 0;
  for (const Polynomial& p : g.entries()) total += p.size();
  return total;
}

Outcome criterion7() {
  struct Case {
    const char* label;
    PowerSpec spec;
    double budget;
  } cases[] = {
      {"1D N=3 n=100", PowerSpec::line(3, 100), 1.0},
      {"1D N=5 n=50", PowerSpec::line(5, 50), 10.0},
      {"1D N=10 n=100", PowerSpec::line(10, 100), 120.0},
      {"2D N=3 40x40", PowerSpec::grid(3, 40, 40), 120.0},
  };
  Outcome o;
  std::ostringstream detail;
  for (const Case& c : cases) {
    GuardedRun r = run_guarded(c.budget, [&](const Deadline* d) {
      AdomianResult res = c.spec.dim == 1 ? adomian_power_1d(c.spec, d) : adomian_power_2d(c.spec, d);
      return term_total(res.grid);
    });
    char line[256];
    const char* status = r.status == GuardedRun::kOk            ? "ok"
                         : r.status == GuardedRun::kTimeout     ? "timeout"
                         : r.status == GuardedRun::kOutOfMemory ? "out of memory"
                                                                : "crashed";
    std::snprintf(line, sizeof line, "%s: %s %.3f s (limit %.0f s), %llu terms, peak %ld MB", c.label, status,
                  r.seconds, c.budget, static_cast<unsigned long long>(r.terms), r.peak_rss_kb / 1024);
    if (detail.tellp() > 0) detail << "; ";
    detail << line;
    if (r.status != GuardedRun::kOk || r.seconds > c.budget) o.pass = false;
  }
  o.detail = detail.str();
  return o;
}

Outcome criterion8() {
  Outcome o;
  BenchConfig cfg;
  cfg.algorithms = {Algorithm::kMatrix, Algorithm::kDuan1, Algorithm::kDuan3};
  cfg.powers = {3};
  cfg.orders = {50};
  cfg.repetitions = 3;
  cfg.warmup = 1;
  cfg.timeout_seconds = 600;
  BenchReport report = run_bench(cfg);
  std::optional<double> m, d1, d3;
  for (const BenchCell& c : summarize(report)) {
    if (c.algorithm == Algorithm::kMatrix) m = c.median_seconds;
    if (c.algorithm == Algorithm::kDuan1) d1 = c.median_seconds;
    if (c.algorithm == Algorithm::kDuan3) d3 = c.median_seconds;
  }
  if (!m) {
    o.fail("matrix run timed out");
    return o;
  }
  // A timed-out Duan run counts as slower than the matrix run.
  bool faster1 = !d1 || *m < *d1;
  bool faster3 = !d3 || *m < *d3;
  char line[256];
  std::snprintf(line, sizeof line, "N=3 n=50 medians: matrix %.6f s, duan1 %s s, duan3 %s s; speedup %.1fx / %.1fx",
                *m, d1 ? std::to_string(*d1).c_str() : "timeout", d3 ? std::to_string(*d3).c_str() : "timeout",
                d1 ? *d1 / *m : 0.0, d3 ? *d3 / *m : 0.0);
  o.detail = line;
  o.pass = faster1 && faster3;
  return o;
}

Outcome criterion9() {
  Outcome o;
  reference::ReducedPolyTable c = reference::duan_c3_table(15);
  Polynomial half_u1_sq(Monomial(ComponentVar::line(1), 2), Rational(1, 2));
  if (c.at(2, 2) != half_u1_sq) o.fail("C[2][2] = " + poly_format(c.at(2, 2)));
  std::uint64_t coefficients = 0;
  for (unsigned power = 1; power <= 10; ++power) {
    for (std::size_t n = 1; n <= 15; ++n) {
      auto series = reference::duan_c3(power, n);
      for (const Polynomial& p : series) {
        for (const Term& t : p.terms()) {
          if (!t.coeff.is_integer()) o.fail("non-integer coefficient at N=" + std::to_string(power));
          ++coefficients;
        }
      }
    }
  }
  if (o.pass) o.detail = "C[2][2] = 1/2*u[1]^2; " + std::to_string(coefficients) + " coefficients integral";
  return o;
}

}  // namespace

int main() {
  std::vector<std::pair<int, std::function<Outcome()>>> criteria = {
      {1, criterion1}, {2, criterion2}, {3, criterion3}, {4, criterion4}, {5, criterion5},
      {6, criterion6}, {7, criterion7}, {8, criterion8}, {9, criterion9},
  };
  int failures = 0;
  for (auto& [id, check] : criteria) {
    Outcome o;
    try {
      o = check();
    } catch (const std::exception& e) {
      o.pass = false;
      o.detail = std::string("exception: ") + e.what();
    }
    std::printf("criterion %d: %s - %s\n", id, o.pass ? "PASS" : "FAIL", o.detail.c_str());
    std::fflush(stdout);
    if (!o.pass) ++failures;
  }
  std::printf("%d of %zu criteria passed\n", static_cast<int>(criteria.size()) - failures, criteria.size());
  return failures == 0 ? 0 : 1;
}
