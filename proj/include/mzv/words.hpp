#pragma once

// Words over {0} ∪ μ_N, iterated-integral symbols and the ζ-notation.
//
// A root of unity ξ_N^e is stored as its exponent e mod N, with ξ_N fixed to
// exp(2πi/N). The convention linking the two notations is
//
//   ζ_k(x_1..x_p; ε_1..ε_p) = (-1)^p I(0; 0^k η_1 0^{x_1-1} ... η_p 0^{x_p-1}; 1),
//   η_i = (ε_i ⋯ ε_p)^{-1}.

#include "mzv/lincomb.hpp"

#include <compare>
#include <optional>
#include <utility>
#include <vector>

namespace mzv {

bool supported_modulus(int N);  // N ∈ {1,2,3,4,6,8}
int mod(long a, int N);         // representative in [0, N)

struct RootOfUnity {
  int modulus = 1;
  int exponent = 0;

  RootOfUnity() = default;
  RootOfUnity(int N, long e);

  RootOfUnity operator*(const RootOfUnity& o) const;
  RootOfUnity inverse() const;
  bool is_one() const { return exponent == 0; }

  auto operator<=>(const RootOfUnity&) const = default;
};

// Either the letter 0 or a root of unity given by its exponent.
class Letter {
 public:
  static Letter zero() { return Letter(-1); }
  static Letter root(int exponent) { return Letter(exponent); }

  bool is_zero() const { return code_ < 0; }
  int exponent() const;  // throws DomainError on the zero letter

  auto operator<=>(const Letter&) const = default;

 private:
  explicit Letter(int code) : code_(code) {}
  int code_;
};

using Word = std::vector<Letter>;

// I(a_0; a_1..a_n; a_{n+1}) over μ_N ∪ {0}.
struct IISymbol {
  int N = 1;
  Letter start = Letter::zero();
  Word body;
  Letter end = Letter::root(0);

  int weight() const { return static_cast<int>(body.size()); }
  int depth() const;  // number of nonzero letters in the body
  auto operator<=>(const IISymbol&) const = default;
};

// ζ_k(x; ε)·(2πi)^s. Roots are exponents mod N.
struct MZVSymbol {
  int N = 1;
  int k = 0;
  std::vector<int> x;
  std::vector<int> eps;
  int s = 0;

  int depth() const { return static_cast<int>(x.size()); }
  int weight() const;
  auto operator<=>(const MZVSymbol&) const = default;
};

// Checked constructor: reduces roots mod N and enforces the invariants
// (x_i >= 1, (x_p, ε_p) != (1, 1), s even when N <= 2).
MZVSymbol make_mzv(int N, std::vector<int> x, std::vector<int> eps, int k = 0, int s = 0);
MZVSymbol unit_mzv(int N, int s = 0);
void validate(const MZVSymbol& z);

IISymbol unit_symbol(int N);

// Returns ((-1)^p, I(0; word; 1)). Rejects s != 0.
std::pair<int, IISymbol> mzv_to_word(const MZVSymbol& z);
// Inverse of mzv_to_word. Requires endpoints (0, 1).
std::pair<int, MZVSymbol> word_to_mzv(const IISymbol& w);

// Canonical form under rules (i), (ii), (v), (vi): weight 0 gives the unit,
// equal endpoints give zero, otherwise the word is rescaled so that it ends
// at 1 (reversing first when it ends at 0). Returns the sign, or nothing
// when the symbol vanishes.
std::optional<std::pair<int, IISymbol>> normalize_signed(const IISymbol& w);
LinComb<IISymbol> normalize(const IISymbol& w);

// Interleavings of u and v with multiplicity.
template <class T>
LinComb<std::vector<T>> shuffle(const std::vector<T>& u, const std::vector<T>& v) {
  LinComb<std::vector<T>> out;
  std::vector<T> cur;
  cur.reserve(u.size() + v.size());
  auto rec = [&](auto&& self, std::size_t i, std::size_t j) -> void {
    if (i == u.size() && j == v.size()) {
      out.add(cur, Rational(1));
      return;
    }
    if (i < u.size()) {
      cur.push_back(u[i]);
      self(self, i + 1, j);
      cur.pop_back();
    }
    if (j < v.size()) {
      cur.push_back(v[j]);
      self(self, i, j + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0, 0);
  return out;
}

template <class T>
LinComb<std::vector<T>> shuffle(const LinComb<std::vector<T>>& a, const LinComb<std::vector<T>>& b) {
  LinComb<std::vector<T>> out;
  for (const auto& [u, cu] : a)
    for (const auto& [v, cv] : b) out.add(shuffle(u, v), cu * cv);
  return out;
}

// Rule (iii): ζ_k(x; ε) = (-1)^k Σ_{|i| = k} Π binom(x_j + i_j - 1, i_j) ζ(x + i; ε).
LinComb<MZVSymbol> regularize_leading_zeros(const MZVSymbol& z);

// Rule (iv) with i = 0..n: I(a_0; w; a_{n+1}) = Σ_i I(a_0; a_1..a_i; x) I(x; a_{i+1}..a_n; a_{n+1}).
std::vector<std::pair<IISymbol, IISymbol>> path_compose(const IISymbol& w, Letter x);

}  // namespace mzv
