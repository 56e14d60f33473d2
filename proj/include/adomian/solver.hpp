#pragma once

#include <cstddef>
#include <vector>

#include "adomian/rational.hpp"
#include "adomian/unipoly.hpp"

namespace adomian {

// u' = a*u + c*u^power + g(x),  u(0) = u0, truncated after `depth` steps.
struct IVProblem {
  Rational a;
  Rational c{1};
  unsigned power = 2;
  UniPoly g;
  Rational u0{1};
  unsigned depth = 5;

  void validate() const;
};

struct SeriesSolution {
  // u_0(x) .. u_depth(x)
  std::vector<UniPoly> components;
};

// ADM recursion with L = d/dx:
//   u_0 = u0 + int_0^x g,   u_{k+1} = int_0^x (a*u_k + c*A_k),
// where A_k is the Adomian polynomial of u^power evaluated on the polynomial
// components, produced by the convolution fold over UniPoly entries.
SeriesSolution solve(const IVProblem& problem);

// u_0 + ... + u_depth. Throws InvalidArgument when depth exceeds the
// computed components.
UniPoly partial_sum(const SeriesSolution& solution, std::size_t depth);

}  // namespace adomian
