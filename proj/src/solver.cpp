#include "adomian/solver.hpp"

#include <string>

#include "adomian/convolution.hpp"
#include "adomian/error.hpp"

namespace adomian {

void IVProblem::validate() const {
  if (power < 1) throw InvalidArgument("power must be a positive integer");
  if (depth < 1) throw InvalidArgument("depth must be at least 1");
}

SeriesSolution solve(const IVProblem& problem) {
  problem.validate();
  SeriesSolution out;
  out.components.reserve(problem.depth + 1);
  out.components.push_back(UniPoly(problem.u0) + problem.g.integrate());

  IncrementalPower<UniPoly> nonlinear(problem.power);
  for (unsigned k = 0; k < problem.depth; ++k) {
    const UniPoly& uk = out.components.back();
    const UniPoly& ak = nonlinear.push(uk);
    UniPoly rhs = uk * problem.a + ak * problem.c;
    out.components.push_back(rhs.integrate());
  }
  return out;
}

UniPoly partial_sum(const SeriesSolution& solution, std::size_t depth) {
  if (depth >= solution.components.size()) {
    throw InvalidArgument("depth " + std::to_string(depth) + " exceeds the " +
                          std::to_string(solution.components.size()) + " computed components");
  }
  UniPoly sum;
  for (std::size_t k = 0; k <= depth; ++k) sum += solution.components[k];
  return sum;
}

}  // namespace adomian
