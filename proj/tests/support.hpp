#pragma once

// Test-side oracles: canonical classes of iterated integrals in the shuffle
// algebra. A factor I(a; w; b) is moved to base point 0 by path composition,
// rescaled to end at 1, and shuffle-regularized (a leading 0 or a trailing 1
// counts as zero). Products become shuffles, so two combinations agree in
// A = H / (2πi) exactly when their classes agree. The Lie class further
// applies the first Eulerian idempotent, which kills shuffle products.
// Both classes are memoized; the oracles are single-threaded.

#include "mzv/coaction.hpp"
#include "mzv/words.hpp"

#include <cstddef>
#include <map>
#include <vector>

namespace mzv::testing {

using WordComb = LinComb<Word>;

inline bool is_zero_letter(Letter a) { return a.is_zero(); }
inline bool is_one_letter(Letter a) { return !a.is_zero() && a.exponent() == 0; }

// Regularization of a word that does not end with the letter 1.
inline WordComb regularize_leading(const Word& w) {
  std::size_t k = 0;
  while (k < w.size() && is_zero_letter(w[k])) ++k;
  if (k == 0) return WordComb(w, Rational(1));
  if (k == w.size()) return {};
  const Word zeros(k, Letter::zero());
  const Word rest(w.begin() + static_cast<long>(k) + 1, w.end());
  WordComb out;
  for (const auto& [s, c] : shuffle(zeros, rest)) {
    Word x{w[k]};
    x.insert(x.end(), s.begin(), s.end());
    out.add(x, k % 2 ? -c : c);
  }
  return out;
}

inline WordComb regularize(const Word& w) {
  if (w.empty()) return WordComb(w, Rational(1));
  std::size_t m = 0;
  while (m < w.size() && is_one_letter(w[w.size() - 1 - m])) ++m;
  if (m == 0) return regularize_leading(w);
  if (m == w.size()) return {};
  const Word head(w.begin(), w.end() - static_cast<long>(m) - 1);
  const Word ones(m, Letter::root(0));
  const Letter a = w[w.size() - 1 - m];
  WordComb out;
  for (const auto& [s, c] : shuffle(head, ones)) {
    Word x = s;
    x.push_back(a);
    out.add(regularize_leading(x), m % 2 ? -c : c);
  }
  return out;
}

// I(0; w; c) rescaled to I(0; w / c; 1) and regularized.
inline WordComb from_zero(const Word& w, Letter c, int N) {
  if (c.is_zero()) return w.empty() ? WordComb(w, Rational(1)) : WordComb();
  Word v;
  for (Letter a : w) v.push_back(a.is_zero() ? a : Letter::root(mod(a.exponent() - c.exponent(), N)));
  return regularize(v);
}

inline WordComb algebra_class(const IISymbol& f) {
  if (f.body.empty()) return WordComb(Word{}, Rational(1));
  if (f.start == f.end) return {};
  if (f.start.is_zero()) return from_zero(f.body, f.end, f.N);
  WordComb out;
  const auto n = f.body.size();
  for (std::size_t i = 0; i <= n; ++i) {
    const Word head(f.body.begin(), f.body.begin() + static_cast<long>(i));
    const Word tail(f.body.begin() + static_cast<long>(i), f.body.end());
    const Word rev(head.rbegin(), head.rend());
    out.add(shuffle(from_zero(rev, f.start, f.N), from_zero(tail, f.end, f.N)), Rational(i % 2 ? -1 : 1));
  }
  return out;
}

inline WordComb product_class(const std::vector<IISymbol>& factors) {
  WordComb acc(Word{}, Rational(1));
  for (const auto& f : factors) acc = shuffle(acc, algebra_class(f));
  return acc;
}

// First Eulerian idempotent: Σ_k (-1)^{k-1}/k Σ_{w = w_1⋯w_k} w_1 ш ⋯ ш w_k.
inline WordComb eulerian(const Word& w) {
  static std::map<Word, WordComb> cache;
  if (auto it = cache.find(w); it != cache.end()) return it->second;
  WordComb out;
  const auto n = w.size();
  if (n == 0) return out;
  for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
    WordComb prod(Word{}, Rational(1));
    Word cur;
    int k = 0;
    for (std::size_t i = 0; i < n; ++i) {
      cur.push_back(w[i]);
      if (i == n - 1 || (mask >> i & 1UL)) {
        prod = shuffle(prod, WordComb(cur, Rational(1)));
        cur.clear();
        ++k;
      }
    }
    out.add(prod, Rational(k % 2 ? 1 : -1, k));
  }
  cache.emplace(w, out);
  return out;
}

inline WordComb lie_class(const IISymbol& f) {
  static std::map<IISymbol, WordComb> cache;
  if (auto it = cache.find(f); it != cache.end()) return it->second;
  WordComb out;
  for (const auto& [w, c] : algebra_class(f)) out.add(eulerian(w), c);
  cache.emplace(f, out);
  return out;
}

inline IISymbol word_symbol(int N, Word body) {
  IISymbol s;
  s.N = N;
  s.body = std::move(body);
  return s;
}

// (Δ ⊗ id)Δ(w) - (id ⊗ Δ)Δ(w) on classes in A ⊗ A ⊗ H.
struct TripleKey {
  Word a, b;
  IISymbol c;
  auto operator<=>(const TripleKey&) const = default;
};

inline LinComb<TripleKey> coassociativity_defect(const IISymbol& w) {
  LinComb<TripleKey> d;
  for (const auto& [k1, c1] : coact(w)) {
    const WordComb A = product_class(k1.left);
    for (const auto& [k2, c2] : coact(k1.right)) {
      const WordComb B = product_class(k2.left);
      for (const auto& [a, ca] : A)
        for (const auto& [b, cb] : B) d.add(TripleKey{a, b, k2.right}, c1 * c2 * ca * cb);
    }
    LinComb<std::pair<Word, Word>> acc({Word{}, Word{}}, c1);
    for (const auto& l : k1.left) {
      LinComb<std::pair<Word, Word>> next;
      for (const auto& [k2, c2] : coact(l)) {
        const WordComb a2 = product_class(k2.left);
        const WordComb b2 = algebra_class(k2.right);
        for (const auto& [ab, c] : acc)
          for (const auto& [p, cp] : a2)
            for (const auto& [q, cq] : b2)
              for (const auto& [u, cu] : shuffle(ab.first, p))
                for (const auto& [v, cv] : shuffle(ab.second, q)) next.add({u, v}, c * c2 * cp * cq * cu * cv);
      }
      acc = std::move(next);
    }
    for (const auto& [ab, c] : acc) d.add(TripleKey{ab.first, ab.second, k1.right}, -c);
  }
  return d;
}

// D_r(u ш v) - D_r(u)·v - u·D_r(v), left factors taken in the Lie coalgebra.
// A factor of weight exactly r contributes its full cut. The Eulerian
// idempotent is linear, so it is applied once to the summed algebra classes.
inline LinComb<std::pair<Word, IISymbol>> leibniz_defect(int N, const Word& u, const Word& v, int r) {
  LinComb<std::pair<Word, IISymbol>> classes;
  auto put = [&](const IISymbol& left, const IISymbol& right, const Rational& c) {
    for (const auto& [x, q] : algebra_class(left)) classes.add({x, right}, c * q);
  };
  for (const auto& [w, c] : shuffle(u, v))
    for (const auto& t : D_r(word_symbol(N, w), r)) put(t.left, t.right, c * t.coeff);
  auto side = [&](const Word& a, const Word& b) {
    const int n = static_cast<int>(a.size());
    if (n < r) return;
    if (n == r) {
      put(word_symbol(N, a), word_symbol(N, b), Rational(-1));
      return;
    }
    for (const auto& t : D_r(word_symbol(N, a), r))
      for (const auto& [w, c] : shuffle(t.right.body, b)) put(t.left, word_symbol(N, w), -c * t.coeff);
  };
  side(u, v);
  side(v, u);
  LinComb<std::pair<Word, IISymbol>> d;
  for (const auto& [key, c] : classes)
    for (const auto& [x, q] : eulerian(key.first)) d.add({x, key.second}, c * q);
  return d;
}

// All admissible depth >= 1, k = 0 symbols of weight n.
inline std::vector<MZVSymbol> all_symbols(int N, int n) {
  std::vector<MZVSymbol> out;
  for (unsigned long mask = 0; mask < (1UL << (n - 1)); ++mask) {
    std::vector<int> x;
    int run = 1;
    for (int i = 0; i < n - 1; ++i) {
      if (mask >> i & 1UL) {
        x.push_back(run);
        run = 1;
      } else {
        ++run;
      }
    }
    x.push_back(run);
    const int p = static_cast<int>(x.size());
    long total = 1;
    for (int i = 0; i < p; ++i) total *= N;
    for (long code = 0; code < total; ++code) {
      std::vector<int> eps;
      long c = code;
      for (int i = 0; i < p; ++i, c /= N) eps.push_back(static_cast<int>(c % N));
      if (x.back() == 1 && eps.back() == 0) continue;
      out.push_back(make_mzv(N, x, eps));
    }
  }
  return out;
}

}  // namespace mzv::testing
