#include "adomian/serialize.hpp"

#include "adomian/error.hpp"

namespace adomian {

nlohmann::ordered_json poly_to_json(const Polynomial& p) {
  nlohmann::ordered_json terms = nlohmann::ordered_json::array();
  for (const Term& t : p.terms()) {
    nlohmann::ordered_json factors = nlohmann::ordered_json::array();
    for (const Factor& f : t.monomial.factors()) {
      nlohmann::ordered_json factor;
      if (f.var.dim() == 1) {
        factor["var"] = {f.var.index()};
      } else {
        factor["var"] = {f.var.index(), f.var.second()};
      }
      factor["family"] = std::string(1, f.var.family());
      factor["exp"] = f.exp;
      factors.push_back(std::move(factor));
    }
    nlohmann::ordered_json term;
    term["coeff"] = t.coeff.to_string();
    term["monomial"] = std::move(factors);
    terms.push_back(std::move(term));
  }
  return terms;
}

Polynomial poly_from_json(const nlohmann::json& doc) {
  if (!doc.is_array()) throw ParseError(0, "array of terms");
  std::vector<Term> terms;
  std::size_t position = 0;
  for (const auto& term : doc) {
    if (!term.is_object() || !term.contains("coeff") || !term["coeff"].is_string() ||
        !term.contains("monomial") || !term["monomial"].is_array()) {
      throw ParseError(position, "term object with string \"coeff\" and array \"monomial\"");
    }
    std::vector<Factor> factors;
    for (const auto& factor : term["monomial"]) {
      if (!factor.is_object() || !factor.contains("var") || !factor["var"].is_array()) {
        throw ParseError(position, "factor object with array \"var\"");
      }
      const auto& var = factor["var"];
      std::string family = factor.value("family", std::string("u"));
      if (family.size() != 1 || var.empty() || var.size() > 2) {
        throw ParseError(position, "one-letter family and one or two indices");
      }
      std::uint32_t exp = factor.value("exp", 1U);
      if (exp == 0) throw ParseError(position, "positive exponent");
      try {
        ComponentVar v = var.size() == 1
                             ? ComponentVar::line(var[0].get<std::uint32_t>(), family[0])
                             : ComponentVar::grid(var[0].get<std::uint32_t>(), var[1].get<std::uint32_t>(),
                                                  family[0]);
        factors.push_back(Factor{v, exp});
      } catch (const nlohmann::json::exception&) {
        throw ParseError(position, "nonnegative integer indices");
      } catch (const InvalidArgument&) {
        throw ParseError(position, "valid component symbol");
      }
    }
    terms.push_back(Term{Monomial::from_factors(std::move(factors)),
                         Rational::parse(term["coeff"].get<std::string>())});
    ++position;
  }
  return Polynomial::from_terms(std::move(terms));
}

namespace {

std::string entry_label(const SeriesGrid<Polynomial>& grid, std::size_t k, std::size_t l) {
  if (grid.dim() == 1) return "A[" + std::to_string(k) + "]";
  return "A[" + std::to_string(k) + "," + std::to_string(l) + "]";
}

}  // namespace

std::string render_grid_text(const SeriesGrid<Polynomial>& grid) {
  std::string out;
  for (std::size_t k = 0; k < grid.rows(); ++k) {
    for (std::size_t l = 0; l < grid.cols(); ++l) {
      out += entry_label(grid, k, l);
      out += " = ";
      out += poly_format(grid(k, l));
      out += '\n';
    }
  }
  return out;
}

std::string render_grid_json(const SeriesGrid<Polynomial>& grid) {
  nlohmann::ordered_json doc;
  doc["dim"] = grid.dim();
  doc["rows"] = grid.rows();
  doc["cols"] = grid.cols();
  nlohmann::ordered_json entries = nlohmann::ordered_json::array();
  for (std::size_t k = 0; k < grid.rows(); ++k) {
    for (std::size_t l = 0; l < grid.cols(); ++l) {
      nlohmann::ordered_json entry;
      entry["index"] = grid.dim() == 1 ? nlohmann::ordered_json{k} : nlohmann::ordered_json{k, l};
      entry["poly"] = poly_to_json(grid(k, l));
      entries.push_back(std::move(entry));
    }
  }
  doc["entries"] = std::move(entries);
  return doc.dump() + "\n";
}

nlohmann::ordered_json unipoly_to_json(const UniPoly& p) {
  nlohmann::ordered_json coeffs = nlohmann::ordered_json::array();
  for (const Rational& c : p.coefficients()) coeffs.push_back(c.to_string());
  return coeffs;
}

std::string render_solution_text(const SeriesSolution& solution) {
  std::string out;
  for (std::size_t k = 0; k < solution.components.size(); ++k) {
    out += "u[" + std::to_string(k) + "] = " + solution.components[k].to_string() + "\n";
  }
  out += "sum = " + partial_sum(solution, solution.components.size() - 1).to_string() + "\n";
  return out;
}

std::string render_solution_json(const SeriesSolution& solution) {
  nlohmann::ordered_json doc;
  nlohmann::ordered_json components = nlohmann::ordered_json::array();
  for (const UniPoly& c : solution.components) components.push_back(unipoly_to_json(c));
  doc["components"] = std::move(components);
  doc["partial_sum"] = unipoly_to_json(partial_sum(solution, solution.components.size() - 1));
  return doc.dump() + "\n";
}

}  // namespace adomian
