#include "mzv/oracle.hpp"

#include "mzv/errors.hpp"

#include <boost/math/constants/constants.hpp>
#include <boost/math/special_functions/bernoulli.hpp>
#include <boost/math/special_functions/factorials.hpp>

#include <algorithm>
#include <numeric>
#include <optional>
#include <sstream>
#include <vector>

namespace mzv {

namespace {

const Real kRoundingFloor = Real(1e-32);

Complex root_value(int N, int e) {
  const Real angle = 2 * boost::math::constants::pi<Real>() * e / N;
  return Complex(cos(angle), sin(angle));
}

Real to_real(const Rational& q) {
  return Real(numerator(q).str()) / Real(denominator(q).str());
}

Real ipow_inv(Real m, int r) {
  Real p = 1;
  for (int j = 0; j < r; ++j) p *= m;
  return 1 / p;
}

struct Approx {
  Complex value;
  Real bound;
};

// ζ(r; ε) by block summation over one period of ε with an Euler–Maclaurin tail.
Approx depth_one(int N, int r, int e, long cutoff) {
  const int L = e == 0 ? 1 : N / static_cast<int>(std::gcd(N, e));
  const Complex eps = root_value(N, e);
  const long Q = std::max(cutoff / L, 1L);
  Complex sum = 0, pw = 1;
  for (long m = 1; m <= Q * L; ++m) {
    pw *= eps;
    sum += pw * ipow_inv(Real(m), r);
  }
  std::vector<Complex> epsj(static_cast<std::size_t>(L + 1));
  for (int j = 0; j <= L; ++j) epsj[static_cast<std::size_t>(j)] = root_value(N, e * j % N);

  // d-th derivative of f(x) = Σ_j ε^j (xL + j)^{-r} at x = Q.
  auto deriv = [&](int d) {
    Complex acc = 0;
    Real falling = 1;
    for (int q = 0; q < d; ++q) falling *= -(r + q);
    for (int j = 1; j <= L; ++j) {
      Real base = Real(Q) * L + j;
      acc += epsj[static_cast<std::size_t>(j)] * falling * pow(Real(L), Real(d)) * pow(base, Real(-(r + d)));
    }
    return acc;
  };
  Complex integral = 0;
  for (int j = 1; j <= L; ++j) {
    Real base = Real(Q) * L + j;
    if (r > 1)
      integral += epsj[static_cast<std::size_t>(j)] * pow(base, Real(1 - r)) / (Real(L) * (r - 1));
    else
      integral -= epsj[static_cast<std::size_t>(j)] * log(base) / Real(L);
  }
  Complex tail = integral + deriv(0) / 2;
  constexpr int kTerms = 8;
  for (int k = 1; k <= kTerms; ++k)
    tail -= boost::math::bernoulli_b2n<Real>(k) / boost::math::factorial<Real>(2 * k) * deriv(2 * k - 1);
  const Real next = abs(boost::math::bernoulli_b2n<Real>(kTerms + 1) /
                        boost::math::factorial<Real>(2 * kTerms + 2) * deriv(2 * kTerms + 1));
  return {sum + tail, 2 * next + kRoundingFloor * Real(Q * L)};
}

using CLetter = std::optional<Complex>;  // nullopt is the letter 0

// I(0; w; y) for a word whose first letter is nonzero and whose nonzero
// letters satisfy |y/c| < 1, by the nested series in gap form.
Approx zero_start_series(const std::vector<CLetter>& w, Complex y, long K) {
  if (w.empty()) return {Complex(1), 0};
  if (!w.front()) throw DomainError("series: leading zero letter");
  std::vector<Complex> ratio;
  std::vector<int> x;
  for (const auto& a : w) {
    if (a) {
      ratio.push_back(y / *a);
      x.push_back(1);
    } else {
      ++x.back();
    }
  }
  const int q = static_cast<int>(ratio.size());
  Real rho = 0;
  for (const auto& c : ratio) rho = std::max(rho, Real(abs(c)));
  if (rho >= 1) throw DomainError("series: ratio not below one");

  // A_j(k) = k^{-x_j} Σ_{k' < k} A_{j-1}(k') w_j^{k-k'}, with A_0 = δ_{k,0}.
  // A[j] holds A_j(k-1) on entry to step k; B[j] = Σ_{k' < k} A_{j-1}(k') w_j^{k-k'}.
  std::vector<Complex> B(static_cast<std::size_t>(q), Complex(0)), A(static_cast<std::size_t>(q + 1), Complex(0));
  A[0] = 1;
  Complex total = 0;
  for (long k = 1; k <= K; ++k) {
    for (int j = q; j >= 1; --j) {
      const auto jj = static_cast<std::size_t>(j - 1);
      B[jj] = ratio[jj] * (B[jj] + A[jj]);
      A[jj + 1] = B[jj] * ipow_inv(Real(k), x[jj]);
    }
    A[0] = 0;
    total += A[static_cast<std::size_t>(q)];
  }
  // Σ_{k > K} ρ^k binom(k-1, q-1): ratio of consecutive terms at most λ.
  Real term = pow(rho, Real(K + 1));
  for (int j = 1; j < q; ++j) term *= Real(K + 1 - j) / j;
  const Real lambda = rho * Real(K + 1) / Real(K + 2 - q);
  const Real tail = lambda < 1 ? term / (1 - lambda) : Real(1);
  if (q % 2) total = -total;
  return {total, tail + kRoundingFloor * Real(K) * q};
}

Approx split_eval(const MZVSymbol& z, long K) {
  auto [sign, word] = mzv_to_word(z);
  std::vector<CLetter> w;
  for (Letter a : word.body) w.push_back(a.is_zero() ? CLetter{} : CLetter{root_value(z.N, a.exponent())});
  const Complex half(Real(0.5), Real(0));
  Complex value = 0;
  Real bound = 0;
  const std::size_t n = w.size();
  for (std::size_t i = 0; i <= n; ++i) {
    std::vector<CLetter> u(w.begin(), w.begin() + static_cast<long>(i));
    // I(1/2; v; 1) = (-1)^{|v|} I(0; rev(1 - v); 1/2).
    std::vector<CLetter> v;
    for (std::size_t j = n; j > i; --j) {
      const auto& a = w[j - 1];
      Complex c = a ? Complex(1) - *a : Complex(1);
      v.push_back(abs(c) < Real(1e-20) ? CLetter{} : CLetter{c});
    }
    if (!u.empty() && !u.front()) throw DomainError("split: leading zero");
    Approx left = zero_start_series(u, half, K);
    Approx right = zero_start_series(v, half, K);
    if ((n - i) % 2) right.value = -right.value;
    value += left.value * right.value;
    bound += abs(left.value) * right.bound + abs(right.value) * left.bound + left.bound * right.bound;
  }
  if (sign < 0) value = -value;
  return {value, bound};
}

// Plain truncated nested sum; the bound is the change since the half-way checkpoint.
Approx nested_eval(const MZVSymbol& z, long K) {
  const int p = z.depth();
  std::vector<Complex> eps;
  for (int e : z.eps) eps.push_back(root_value(z.N, e));
  std::vector<Complex> S(static_cast<std::size_t>(p + 1), Complex(0)), pw(static_cast<std::size_t>(p), Complex(1));
  S[0] = 1;
  Complex half = 0;
  for (long k = 1; k <= K; ++k) {
    for (int j = p; j >= 1; --j) {
      const auto jj = static_cast<std::size_t>(j - 1);
      pw[jj] *= eps[jj];
      S[jj + 1] += S[jj] * pw[jj] * ipow_inv(Real(k), z.x[jj]);
    }
    if (k == K / 2) half = S[static_cast<std::size_t>(p)];
  }
  const Complex full = S[static_cast<std::size_t>(p)];
  return {full, 2 * abs(full - half) + kRoundingFloor * Real(K) * p};
}

}  // namespace

NumericValue eval_mzv(const MZVSymbol& z, long cutoff, EvalMethod method) {
  validate(z);
  if (z.k != 0 || z.s != 0) throw DomainError("eval_mzv requires k = 0 and s = 0");
  if (cutoff < 10) throw DomainError("eval_mzv requires cutoff >= 10");
  Approx a{Complex(1), 0};
  if (z.depth() > 0) {
    if (method == EvalMethod::Auto) method = z.depth() == 1 ? EvalMethod::NestedSum : EvalMethod::Split;
    if (method == EvalMethod::Split)
      a = split_eval(z, std::min(cutoff, 400L));
    else if (z.depth() == 1)
      a = depth_one(z.N, z.x[0], z.eps[0], cutoff);
    else
      a = nested_eval(z, cutoff);
  }
  return NumericValue{a.value.real(), a.value.imag(), a.bound};
}

Real Residual::magnitude() const { return sqrt(real * real + imag * imag); }

Residual check_relation(const LinComb<MZVSymbol>& lhs, const LinComb<MZVSymbol>& rhs, long cutoff,
                        EvalMethod method) {
  Complex diff = 0;
  Real bound = 0;
  auto accumulate = [&](const LinComb<MZVSymbol>& side, int sign) {
    for (const auto& [s, c] : side) {
      Complex twopii(0, 2 * boost::math::constants::pi<Real>());
      Complex factor = 1;
      for (int q = 0; q < s.s; ++q) factor *= twopii;
      MZVSymbol core = s;
      core.s = 0;
      for (const auto& [t, tc] : regularize_leading_zeros(core)) {
        const NumericValue v = eval_mzv(t, cutoff, method);
        const Real coeff = to_real(c * tc) * sign;
        diff += factor * Complex(v.real, v.imag) * coeff;
        bound += abs(factor) * abs(coeff) * v.error_bound;
      }
    }
  };
  accumulate(lhs, 1);
  accumulate(rhs, -1);
  return Residual{abs(diff.real()), abs(diff.imag()), bound};
}

std::vector<TableRowCheck> check_depth1_table(int N, int r_max, long cutoff) {
  std::vector<TableRowCheck> out;
  for (int r = 1; r <= r_max; ++r)
    for (int e = 0; e < N; ++e) {
      if (r == 1 && e == 0) continue;
      TableRowCheck row{r, e, {}, 0, 0};
      try {
        row.reduction = reduce_depth1(N, r, e);
      } catch (const DomainError&) {
        continue;
      }
      LinComb<MZVSymbol> rhs;
      for (const auto& [b, c] : row.reduction) rhs.add(make_mzv(N, {b.r}, {b.e}), c);
      const Residual res = check_relation(LinComb<MZVSymbol>(make_mzv(N, {r}, {e}), Rational(1)), rhs, cutoff);
      row.residual = r % 2 == 1 ? res.real : res.imag;
      row.bound = res.bound;
      out.push_back(std::move(row));
    }
  return out;
}

std::string format_real(const Real& v, int digits) {
  std::ostringstream out;
  out.precision(digits);
  out << v;
  return out.str();
}

}  // namespace mzv
