#include "mzv/depth1.hpp"

#include "mzv/errors.hpp"
#include "mzv/words.hpp"

#include <string>

namespace mzv {

namespace {

Rational pow2(long e) { return power(Rational(2), e); }
Rational pow3(long e) { return power(Rational(3), e); }

// Coefficients of ζ^l(r; ξ^e) on basis roots, as (root, coefficient) pairs.
LinComb<Depth1Symbol> table(int N, int r, int e) {
  LinComb<Depth1Symbol> out;
  auto put = [&](int root, const Rational& c) { out.add(Depth1Symbol{N, r, root}, c); };
  const bool odd = r % 2 == 1;
  const Rational sg(odd ? 1 : -1);  // (-1)^{r-1}
  switch (N) {
    case 1:
      if (odd && r > 1) put(0, Rational(1));
      break;
    case 2:
      if (e == 1) {
        if (odd) put(1, Rational(1));
      } else if (odd && r > 1) {
        put(1, Rational(1) / (pow2(1 - r) - 1));
      }
      break;
    case 3:
      if (e == 1) put(1, Rational(1));
      else if (e == 2) put(1, sg);
      else if (odd && r > 1) put(1, 2 * pow3(r - 1) / (1 - pow3(r - 1)));
      break;
    case 4:
      if (e == 1) put(1, Rational(1));
      else if (e == 3) put(1, sg);
      else if (!odd) break;
      else if (e == 2) put(1, pow2(r));
      else if (r > 1) put(1, pow2(r - 1) / (1 - pow2(r - 1)) * pow2(r));
      break;
    case 6: {
      if (r == 1) {
        if (e == 2 || e == 3 || e == 4)
          throw DomainError("no depth-one table for ramified N=6 weight one");
        break;  // ζ^l(1; ξ^{±1}) vanishes in the unramified quotient
      }
      if (e == 1) { put(1, Rational(1)); break; }
      if (e == 5) { put(1, sg); break; }
      if (e == 2 || e == 4) {
        Rational c = pow2(r - 1) / (1 - power(Rational(-2), r - 1));
        put(1, e == 4 ? c * sg : c);
        break;
      }
      if (!odd) break;
      Rational c3 = 2 * pow3(r - 1) / (1 - pow3(r - 1));
      put(1, e == 3 ? c3 : pow2(r - 1) / (1 - pow2(r - 1)) * c3);
      break;
    }
    case 8: {
      const Rational c = pow2(r - 1);
      switch (e) {
        case 1: put(1, Rational(1)); break;
        case 5: put(5, Rational(1)); break;
        case 7: put(1, sg); break;
        case 3: put(5, sg); break;
        case 2: put(1, c); put(5, c); break;
        case 6: put(1, c * sg); put(5, c * sg); break;
        case 4:
          if (odd) { put(1, c * pow2(r)); put(5, c * pow2(r)); }
          break;
        default:
          if (odd && r > 1) {
            Rational k = pow2(r - 1) / (1 - pow2(r - 1)) * c * pow2(r);
            put(1, k);
            put(5, k);
          }
      }
      break;
    }
    default:
      throw DomainError("unsupported modulus N=" + std::to_string(N));
  }
  return out;
}

}  // namespace

std::vector<Depth1Symbol> depth1_basis(int N, int r) {
  if (!supported_modulus(N)) throw DomainError("unsupported modulus N=" + std::to_string(N));
  if (r < 1) return {};
  switch (N) {
    case 1: return r % 2 && r > 1 ? std::vector<Depth1Symbol>{{1, r, 0}} : std::vector<Depth1Symbol>{};
    case 2: return r % 2 ? std::vector<Depth1Symbol>{{2, r, 1}} : std::vector<Depth1Symbol>{};
    case 6: return r > 1 ? std::vector<Depth1Symbol>{{6, r, 1}} : std::vector<Depth1Symbol>{};
    case 8: return {{8, r, 1}, {8, r, 5}};
    default: return {{N, r, 1}};
  }
}

bool is_depth1_basis(const Depth1Symbol& s) {
  for (const auto& b : depth1_basis(s.N, s.r))
    if (b == s) return true;
  return false;
}

LinComb<Depth1Symbol> reduce_depth1(int N, int r, int e) {
  if (!supported_modulus(N)) throw DomainError("unsupported modulus N=" + std::to_string(N));
  if (r < 1) throw DomainError("depth-one weight must be positive");
  e = mod(e, N);
  if (r == 1 && e == 0) throw DomainError("ζ(1; 1) is divergent");
  return table(N, r, e);
}

LinComb<Depth1Symbol> reduce_depth1_regularized(int N, int r, int e) {
  if (r == 1 && mod(e, N) == 0) return {};
  return reduce_depth1(N, r, e);
}

Rational c_coeff(int N, int eta, int eps, int r) {
  Depth1Symbol b{N, r, mod(eta, N)};
  if (!is_depth1_basis(b)) throw DomainError("(r, eta) is not a depth-one basis index");
  return reduce_depth1(N, r, eps).coeff(b);
}

DistributionCheck distribution_check(int N, int d, int r, int eta) {
  if (d < 1 || N % d != 0) throw DomainError("d must divide N");
  const int q = N / d;
  DistributionCheck out;
  out.lhs = reduce_depth1(N, r, mod(eta, q) * d);
  const Rational scale = power(Rational(d), r - 1);
  for (int j = 0; j < d; ++j) out.rhs.add(reduce_depth1(N, r, mod(eta, q) + j * q), scale);
  return out;
}

}  // namespace mzv
