#pragma once

// Numeric values of ζ(x; ε) at roots of unity.

#include "mzv/depth1.hpp"
#include "mzv/lincomb.hpp"
#include "mzv/words.hpp"

#include <boost/multiprecision/complex128.hpp>
#include <boost/multiprecision/float128.hpp>

#include <string>
#include <vector>

namespace mzv {

using Real = boost::multiprecision::float128;
using Complex = boost::multiprecision::complex128;

struct NumericValue {
  Real real = 0;
  Real imag = 0;
  Real error_bound = 0;
};

enum class EvalMethod {
  Auto,       // nested sums for depth 1, path splitting otherwise
  NestedSum,  // truncated nested sum with an Euler–Maclaurin tail on the last index
  Split,      // split the iterated integral at 1/2; every piece converges geometrically
};

// Requires k = 0, s = 0, a convergent symbol and cutoff >= 10.
NumericValue eval_mzv(const MZVSymbol& z, long cutoff, EvalMethod method = EvalMethod::Auto);

struct Residual {
  Real real = 0;   // |Re(lhs - rhs)|
  Real imag = 0;   // |Im(lhs - rhs)|
  Real bound = 0;  // combined truncation bound
  Real magnitude() const;
};
Residual check_relation(const LinComb<MZVSymbol>& lhs, const LinComb<MZVSymbol>& rhs, long cutoff,
                        EvalMethod method = EvalMethod::Auto);

// Every row ζ(r; ξ^e) = reduce_depth1(N, r, e) for 1 <= r <= r_max, checked on
// the part that survives in the Lie coalgebra: real part for odd r, imaginary
// part for even r. Rows without a table (ramified or divergent) are skipped.
struct TableRowCheck {
  int r = 1;
  int e = 0;
  LinComb<Depth1Symbol> reduction;
  Real residual = 0;
  Real bound = 0;
};
std::vector<TableRowCheck> check_depth1_table(int N, int r_max, long cutoff);

std::string format_real(const Real& v, int digits = 25);

}  // namespace mzv
