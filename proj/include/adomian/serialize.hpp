#pragma once

#include <string>

#include <json.hpp>

#include "adomian/polynomial.hpp"
#include "adomian/series_grid.hpp"
#include "adomian/solver.hpp"

namespace adomian {

// [{"coeff": "3/2", "monomial": [{"var": [0], "family": "u", "exp": 2}, ...]}, ...]
// in canonical term order.
nlohmann::ordered_json poly_to_json(const Polynomial& p);
// Throws ParseError on a malformed document.
Polynomial poly_from_json(const nlohmann::json& doc);

// One "A[k] = ..." (1D) or "A[k,l] = ..." (2D, row-major) line per entry.
std::string render_grid_text(const SeriesGrid<Polynomial>& grid);
// {"dim": d, "rows": m, "cols": n, "entries": [{"index": [k] | [k,l], "poly": [...]}, ...]}
std::string render_grid_json(const SeriesGrid<Polynomial>& grid);

// Rationals as "p/q" strings, "p" for integers.
nlohmann::ordered_json unipoly_to_json(const UniPoly& p);

// "u[k] = ..." per component followed by "sum = ..." for the full partial sum.
std::string render_solution_text(const SeriesSolution& solution);
// {"components": [[c0, c1, ...], ...], "partial_sum": [...]}
std::string render_solution_json(const SeriesSolution& solution);

}  // namespace adomian
