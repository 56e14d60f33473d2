/*
 * C interface to the Adomian polynomial library.
 *
 * All objects are opaque handles owned by the caller and released with the
 * matching *_free function. Every fallible call returns an adm_status; on
 * failure a description is available from adm_last_error() until the next
 * call on the same thread. Strings returned through char** out-parameters
 * are heap copies released with adm_string_free.
 */
#ifndef ADOMIAN_ADOMIAN_H
#define ADOMIAN_ADOMIAN_H

#include <stddef.h>

#if defined(_WIN32)
#define ADM_API __declspec(dllexport)
#else
#define ADM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum adm_status {
  ADM_OK = 0,
  ADM_ERR_INVALID_ARGUMENT = 1,
  ADM_ERR_PARSE = 2,
  ADM_ERR_LIMIT = 3,
  ADM_ERR_TIMEOUT = 4,
  ADM_ERR_MISMATCH = 5,
  ADM_ERR_IO = 6,
  ADM_ERR_INTERNAL = 7
} adm_status;

typedef enum adm_algorithm {
  ADM_ALGO_MATRIX = 0,
  ADM_ALGO_DUAN1 = 1,
  ADM_ALGO_DUAN3 = 2,
  ADM_ALGO_ORACLE = 3
} adm_algorithm;

typedef enum adm_format { ADM_FORMAT_TEXT = 0, ADM_FORMAT_JSON = 1, ADM_FORMAT_CSV = 2 } adm_format;

typedef struct adm_grid adm_grid;
typedef struct adm_bench_config adm_bench_config;
typedef struct adm_bench_report adm_bench_report;
typedef struct adm_solution adm_solution;

ADM_API const char* adm_last_error(void);
ADM_API void adm_string_free(char* s);

/* Name lookup: "matrix", "duan1", "duan3", "oracle". */
ADM_API adm_status adm_algorithm_from_name(const char* name, adm_algorithm* out);

/* Polynomial text: parse and re-emit in canonical form. */
ADM_API adm_status adm_poly_canonicalize(const char* text, char** out);

/*
 * Adomian polynomials of u^power. dim 1 uses rows as the order n (cols must
 * be 1); dim 2 builds the rows x cols Adomian matrix and only accepts
 * ADM_ALGO_MATRIX and ADM_ALGO_ORACLE.
 */
ADM_API adm_status adm_generate(adm_algorithm algo, int dim, unsigned power, size_t rows,
                                size_t cols, adm_grid** out);
ADM_API void adm_grid_free(adm_grid* grid);
ADM_API adm_status adm_grid_shape(const adm_grid* grid, int* dim, size_t* rows, size_t* cols);
ADM_API adm_status adm_grid_entry(const adm_grid* grid, size_t row, size_t col, char** out);
/* ADM_FORMAT_TEXT or ADM_FORMAT_JSON. */
ADM_API adm_status adm_grid_render(const adm_grid* grid, adm_format format, char** out);

ADM_API adm_status adm_bench_config_new(adm_bench_config** out);
ADM_API void adm_bench_config_free(adm_bench_config* config);
/* Comma-separated algorithm names. */
ADM_API adm_status adm_bench_config_set_algorithms(adm_bench_config* config, const char* names);
ADM_API adm_status adm_bench_config_set_powers(adm_bench_config* config, const unsigned* powers,
                                               size_t count);
ADM_API adm_status adm_bench_config_set_orders(adm_bench_config* config, const size_t* orders,
                                               size_t count);
ADM_API adm_status adm_bench_config_set_repetitions(adm_bench_config* config, unsigned repetitions,
                                                    unsigned warmup);
ADM_API adm_status adm_bench_config_set_timeout(adm_bench_config* config, double seconds);

ADM_API adm_status adm_bench_run(const adm_bench_config* config, adm_bench_report** out);
ADM_API void adm_bench_report_free(adm_bench_report* report);
ADM_API adm_status adm_bench_report_counts(const adm_bench_report* report, size_t* rows,
                                           size_t* timeouts);
/* ADM_FORMAT_CSV or ADM_FORMAT_JSON. */
ADM_API adm_status adm_bench_report_render(const adm_bench_report* report, adm_format format,
                                           char** out);
ADM_API adm_status adm_bench_report_write(const adm_bench_report* report, adm_format format,
                                          const char* path);
ADM_API adm_status adm_bench_report_summary(const adm_bench_report* report, char** out);

/*
 * u' = a*u + c*u^power + g(x), u(0) = u0. Rationals as "p/q" or "p";
 * g as a polynomial in x such as "1 - 2*x + 1/3*x^2".
 */
ADM_API adm_status adm_solve(const char* a, const char* c, unsigned power, const char* g,
                             const char* u0, unsigned depth, adm_solution** out);
ADM_API void adm_solution_free(adm_solution* solution);
ADM_API adm_status adm_solution_component(const adm_solution* solution, size_t k, char** out);
ADM_API adm_status adm_solution_partial_sum(const adm_solution* solution, size_t depth, char** out);
/* ADM_FORMAT_TEXT or ADM_FORMAT_JSON. */
ADM_API adm_status adm_solution_render(const adm_solution* solution, adm_format format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* ADOMIAN_ADOMIAN_H */
