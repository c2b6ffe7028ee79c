#pragma once

// The explicit systems of the small-depth examples: depth three for N = 2
// and depth two for N = 3, 4. Each comes in two independent forms, the
// closed formulas and the coefficients read off the general engine.

#include "mzv/descent.hpp"

#include <vector>

namespace mzv {

// M_3 X = A for ζ(2a+1, 2b+1, \overline{2c+1}), with rows projected on
// ζ^l(2r+1; 1) and columns ζ(1, 2(n-k)+1, \overline{2k+1}), n = a+b+c.
struct DepthThreeSystem {
  int a = 1, b = 1, c = 1;
  std::vector<std::vector<Rational>> M;
  std::vector<Rational> A;
  std::vector<Rational> alpha;   // solution X
  LinComb<MZVSymbol> element;    // ζ(...) - Σ α_k ζ(1, ., .) - binom ζ(2a+1, 1, .)
};

DepthThreeSystem depth_three_closed_form(int a, int b, int c);
DepthThreeSystem depth_three_machine(DescentEngine& engine, int a, int b, int c);

// α^{a,b}_k (k = b+1 .. a+b) and β^{a,b} of the N = 3, 4 depth-two corrections.
struct DepthTwoCoefficients {
  int a = 1, b = 1;
  std::vector<Rational> alpha;
  Rational beta;
};
DepthTwoCoefficients depth_two_closed_form(int a, int b);
// Level-zero element ζ(2a+1, 2b+1; 1, ξ) - β ζ(1, n-1) - Σ α_k ζ(n-2k, 2k).
LinComb<MZVSymbol> depth_two_element(int N, const DepthTwoCoefficients& c);

}  // namespace mzv
