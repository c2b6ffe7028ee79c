#include "mzv/appendix.hpp"

#include "mzv/errors.hpp"

#include <Eigen/LU>

namespace mzv {

namespace {

Rational C(long n, long k) { return Rational(binomial(n, k)); }
Rational delta(bool b) { return Rational(b ? 1 : 0); }
Rational quarter_pow(long r) { return power(Rational(1, 4), r); }  // 2^{-2r}

std::vector<Rational> solve(const std::vector<std::vector<Rational>>& M, const std::vector<Rational>& A) {
  const auto n = static_cast<Eigen::Index>(A.size());
  RationalMatrix m(n, n);
  RationalVector v(n);
  for (Eigen::Index r = 0; r < n; ++r) {
    v(r) = A[static_cast<std::size_t>(r)];
    for (Eigen::Index k = 0; k < n; ++k) m(r, k) = M[static_cast<std::size_t>(r)][static_cast<std::size_t>(k)];
  }
  Eigen::FullPivLU<RationalMatrix> lu(m);
  if (!lu.isInvertible()) throw CertificateError("singular appendix system");
  RationalVector x = lu.solve(v);
  return std::vector<Rational>(x.data(), x.data() + x.size());
}

MZVSymbol bar2(std::vector<int> x) {
  std::vector<int> e(x.size(), 0);
  e.back() = 1;
  return make_mzv(2, std::move(x), std::move(e));
}

void fill_element(DepthThreeSystem& s) {
  const int n = s.a + s.b + s.c;
  s.alpha = solve(s.M, s.A);
  s.element = LinComb<MZVSymbol>();
  s.element.add(bar2({2 * s.a + 1, 2 * s.b + 1, 2 * s.c + 1}), Rational(1));
  for (int k = 1; k <= n; ++k)
    s.element.add(bar2({1, 2 * (n - k) + 1, 2 * k + 1}), -s.alpha[static_cast<std::size_t>(k - 1)]);
  s.element.add(bar2({2 * s.a + 1, 1, 2 * (s.b + s.c) + 1}), -C(2 * (s.b + s.c), 2 * s.c));
}

}  // namespace

DepthThreeSystem depth_three_closed_form(int a, int b, int c) {
  if (a < 1 || b < 1 || c < 1) throw DomainError("depth-three system needs a, b, c >= 1");
  DepthThreeSystem s{a, b, c, {}, {}, {}, {}};
  const int n = a + b + c;
  for (int r = 1; r <= n; ++r) {
    std::vector<Rational> row;
    for (int k = 1; k <= n; ++k) {
      Rational m = delta(r == n) * (quarter_pow(r) - 2) * C(2 * n, 2 * k) +
                   delta(k <= r && r < n) * C(2 * r, 2 * k) * (quarter_pow(r) - 1) -
                   delta(r < n - k) * C(2 * (n - r), 2 * k) -
                   delta(n - k <= r && r < n) * C(2 * r, 2 * (n - k));
      row.push_back(m);
    }
    s.M.push_back(std::move(row));
    const long nr = n - r;
    Rational A = delta(b <= r && r < a + b) * C(2 * nr, 2 * c) * C(2 * r, 2 * b) -
                 delta(a < r && r < a + b) * C(2 * nr, 2 * c) * C(2 * r, 2 * a) -
                 delta(b <= r && r < b + c) * C(2 * nr, 2 * a) * C(2 * r, 2 * b) -
                 delta(r <= a) * C(2 * nr, 2 * (b + c)) * C(2 * (b + c), 2 * c) +
                 delta(r < b + c) * C(2 * nr, 2 * a) * C(2 * (b + c), 2 * c) +
                 delta(c <= r && r < b + c) * C(2 * r, 2 * c) * C(2 * nr, 2 * a) * (quarter_pow(r) - 1);
    s.A.push_back(A);
  }
  fill_element(s);
  return s;
}

DepthThreeSystem depth_three_machine(DescentEngine& engine, int a, int b, int c) {
  if (engine.spec().N != 2 || engine.spec().plain) throw DomainError("depth-three system needs the N=2 descent");
  if (a < 1 || b < 1 || c < 1) throw DomainError("depth-three system needs a, b, c >= 1");
  DepthThreeSystem s{a, b, c, {}, {}, {}, {}};
  const int n = a + b + c;
  // Row r: the D_{2r+1} coordinate on ζ(1, \overline{2(n-r)+1}), rescaled to ζ^l(2r+1; 1).
  auto coord = [&](const LinComb<RowKey>& v, int r) {
    return v.coeff(RowKey{2 * r + 1, 0, bar2({1, 2 * (n - r) + 1})}) * (quarter_pow(r) - 1);
  };
  std::vector<LinComb<RowKey>> cols;
  for (int k = 1; k <= n; ++k) cols.push_back(engine.derivation_vector(bar2({1, 2 * (n - k) + 1, 2 * k + 1}), 1));
  const auto vx = engine.derivation_vector(bar2({2 * a + 1, 2 * b + 1, 2 * c + 1}), 1);
  const auto vy = engine.derivation_vector(bar2({2 * a + 1, 1, 2 * (b + c) + 1}), 1);
  const Rational binom_bc = C(2 * (b + c), 2 * c);
  for (int r = 1; r <= n; ++r) {
    std::vector<Rational> row;
    for (int k = 1; k <= n; ++k) row.push_back(coord(cols[static_cast<std::size_t>(k - 1)], r));
    s.M.push_back(std::move(row));
    s.A.push_back(coord(vx, r) - binom_bc * coord(vy, r));
  }
  fill_element(s);
  return s;
}

DepthTwoCoefficients depth_two_closed_form(int a, int b) {
  if (a < 1 || b < 1) throw DomainError("depth-two system needs a, b >= 1");
  const int n = 2 * (a + b + 1);
  std::vector<std::vector<Rational>> M;
  std::vector<Rational> A;
  for (int r = b + 1; r <= n / 2 - 1; ++r) {
    std::vector<Rational> row;
    for (int k = b + 1; k <= n / 2 - 1; ++k) row.push_back(C(2 * r - 1, 2 * k - 1));
    M.push_back(std::move(row));
    A.push_back(-C(2 * r - 1, 2 * b));
  }
  DepthTwoCoefficients out{a, b, solve(M, A), C(n - 2, 2 * b)};
  for (int k = b + 1; k <= a + b; ++k) out.beta += out.alpha[static_cast<std::size_t>(k - b - 1)] * C(n - 2, 2 * k - 1);
  return out;
}

LinComb<MZVSymbol> depth_two_element(int N, const DepthTwoCoefficients& c) {
  if (N != 3 && N != 4) throw DomainError("depth-two element is defined for N = 3, 4");
  const int n = 2 * (c.a + c.b + 1);
  LinComb<MZVSymbol> out;
  out.add(make_mzv(N, {2 * c.a + 1, 2 * c.b + 1}, {0, 1}), Rational(1));
  out.add(make_mzv(N, {1, n - 1}, {0, 1}), -c.beta);
  for (int k = c.b + 1; k <= c.a + c.b; ++k)
    out.add(make_mzv(N, {n - 2 * k, 2 * k}, {0, 1}), -c.alpha[static_cast<std::size_t>(k - c.b - 1)]);
  return out;
}

}  // namespace mzv
