#pragma once

// Depth-one relations in the Lie coalgebra: the chosen bases and the
// reduction tables for N = 1, 2, 3, 4, 6, 8.
//
// Bases (ξ = ξ_N):
//   N = 1      ζ(r; 1), r odd > 1
//   N = 2      ζ(r; -1), r odd
//   N = 3, 4   ζ(r; ξ), r >= 1
//   N = 6      ζ(r; ξ), r >= 2 (unramified)
//   N = 8      ζ(r; ξ), ζ(r; -ξ), r >= 1

#include "mzv/lincomb.hpp"

#include <compare>
#include <vector>

namespace mzv {

struct Depth1Symbol {
  int N = 1;
  int r = 1;
  int e = 0;  // root ξ_N^e
  auto operator<=>(const Depth1Symbol&) const = default;
};

std::vector<Depth1Symbol> depth1_basis(int N, int r);
bool is_depth1_basis(const Depth1Symbol& s);

// ζ^l(r; ξ_N^e) in the chosen basis. Rejects (r, e) = (1, 0), and the
// ramified N = 6 weight-one roots, for which no table exists.
LinComb<Depth1Symbol> reduce_depth1(int N, int r, int e);

// Same reduction, but ζ^l(1; 1) is read as the regularized value 0.
// This is the form needed for left factors produced by cuts.
LinComb<Depth1Symbol> reduce_depth1_regularized(int N, int r, int e);

// Coefficient of ζ^l(r; ξ^eta) in reduce_depth1(N, r, eps).
Rational c_coeff(int N, int eta, int eps, int r);

// Both sides of ζ(r; η) = d^{r-1} Σ_{ε^d = η} ζ(r; ε), reduced to the basis.
// eta is an exponent mod N/d.
struct DistributionCheck {
  LinComb<Depth1Symbol> lhs;
  LinComb<Depth1Symbol> rhs;
  bool holds() const { return lhs == rhs; }
};
DistributionCheck distribution_check(int N, int d, int r, int eta);

}  // namespace mzv
