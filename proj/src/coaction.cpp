#include "mzv/coaction.hpp"

#include "mzv/errors.hpp"

#include <algorithm>

namespace mzv {

std::string_view tag_name(Tag t) {
  switch (t) {
    case Tag::A0: return "a0";
    case Tag::A: return "a";
    case Tag::B: return "b";
    case Tag::C: return "c";
    case Tag::D: return "d";
    case Tag::Dprime: return "d'";
    case Tag::Raw: return "raw";
  }
  return "raw";
}

namespace {

Letter at(const IISymbol& w, std::size_t i) {
  if (i == 0) return w.start;
  if (i == w.body.size() + 1) return w.end;
  return w.body[i - 1];
}

IISymbol sub(const IISymbol& w, std::size_t from, std::size_t to) {
  IISymbol s{w.N, at(w, from), {}, at(w, to)};
  for (std::size_t j = from + 1; j < to; ++j) s.body.push_back(at(w, j));
  return s;
}

}  // namespace

LinComb<CoactKey> coact(const IISymbol& w) {
  LinComb<CoactKey> out;
  const std::size_t n = w.body.size();
  if (n >= 8 * sizeof(unsigned long) - 1) throw DomainError("coact: word too long");
  for (unsigned long mask = 0; mask < (1UL << n); ++mask) {
    std::vector<std::size_t> kept{0};
    for (std::size_t j = 0; j < n; ++j)
      if (mask >> j & 1UL) kept.push_back(j + 1);
    kept.push_back(n + 1);

    int sign = 1;
    CoactKey key;
    bool vanishes = false;
    for (std::size_t q = 0; q + 1 < kept.size() && !vanishes; ++q) {
      auto f = normalize_signed(sub(w, kept[q], kept[q + 1]));
      if (!f) {
        vanishes = true;
      } else if (f->second.weight() > 0) {
        sign *= f->first;
        key.left.push_back(f->second);
      }
    }
    if (vanishes) continue;
    IISymbol right{w.N, w.start, {}, w.end};
    for (std::size_t q = 1; q + 1 < kept.size(); ++q) right.body.push_back(at(w, kept[q]));
    auto rn = normalize_signed(right);
    if (!rn) continue;
    sign *= rn->first;
    key.right = rn->second;
    std::sort(key.left.begin(), key.left.end());
    out.add(key, Rational(sign));
  }
  return out;
}

std::size_t coact_subsequence_count(const IISymbol& w) { return std::size_t{1} << w.body.size(); }

std::vector<WordTerm> D_r(const IISymbol& w, int r) {
  const int n = w.weight();
  if (r < 1 || r >= n) throw DomainError("D_r requires 1 <= r < weight");
  std::vector<WordTerm> out;
  for (int q = 0; q + r <= n; ++q) {
    auto left = normalize_signed(sub(w, static_cast<std::size_t>(q), static_cast<std::size_t>(q + r + 1)));
    if (!left) continue;
    IISymbol right{w.N, w.start, {}, w.end};
    for (int j = 1; j <= q; ++j) right.body.push_back(at(w, j));
    for (int j = q + r + 1; j <= n; ++j) right.body.push_back(at(w, j));
    out.push_back(WordTerm{CutRecord{q, r}, left->second, std::move(right), Rational(left->first)});
  }
  return out;
}

std::vector<WordTerm> D_r(const MZVSymbol& z, int r) {
  auto [sign, w] = mzv_to_word(z);
  auto terms = D_r(w, r);
  for (auto& t : terms) t.coeff *= sign;
  return terms;
}

namespace {

// I(0; 0^j β 0^m; c) modulo products, as a multiple of ζ^l(m+j+1; c/β).
void add_zero_start(LinComb<Depth1Symbol>& out, int N, const Word& u, Letter c, const Rational& scale) {
  if (c.is_zero()) return;
  std::size_t j = 0;
  while (u[j].is_zero()) ++j;
  const long m = static_cast<long>(u.size() - j - 1);
  const int r = static_cast<int>(m + static_cast<long>(j) + 1);
  const int e = mod(c.exponent() - u[j].exponent(), N);
  Integer b = binomial(m + static_cast<long>(j), static_cast<long>(j));
  Rational coeff = j % 2 ? Rational(b) : Rational(-b);
  out.add(reduce_depth1_regularized(N, r, e), coeff * scale);
}

}  // namespace

std::optional<LinComb<Depth1Symbol>> left_to_depth1(const IISymbol& left) {
  if (left.depth() != 1) return std::nullopt;
  LinComb<Depth1Symbol> out;
  // I(a; u; b) = I(0; u; b) + (-1)^{|u|} I(0; rev u; a) modulo products.
  add_zero_start(out, left.N, left.body, left.end, Rational(1));
  Word rev(left.body.rbegin(), left.body.rend());
  add_zero_start(out, left.N, rev, left.start, Rational(left.body.size() % 2 ? -1 : 1));
  return out;
}

ReducedTensor depth_graded(const std::vector<WordTerm>& terms, int N) {
  ReducedTensor out;
  for (const auto& t : terms) {
    auto l = left_to_depth1(t.left);
    if (!l || l->empty()) continue;
    if (std::all_of(t.right.body.begin(), t.right.body.end(), [](Letter a) { return a.is_zero(); }) &&
        !t.right.body.empty())
      continue;  // I(0; 0^n; 1) = 0
    auto [sign, z] = word_to_mzv(t.right);
    for (const auto& [rz, rc] : regularize_leading_zeros(z))
      for (const auto& [b, bc] : *l) out.add(TensorKey{b, rz}, t.coeff * sign * rc * bc);
  }
  (void)N;
  return out;
}

ReducedTensor TensorComb::reduced() const {
  ReducedTensor out;
  for (const auto& t : terms)
    for (const auto& [b, c] : reduce_depth1_regularized(t.left.N, t.left.r, t.left.e))
      out.add(TensorKey{b, t.right}, t.coeff * c);
  return out;
}

TensorComb D_rp(const MZVSymbol& z, int r) {
  validate(z);
  if (z.k != 0) throw DomainError("D_rp requires k = 0; regularize leading zeros first");
  const int N = z.N;
  const int p = z.depth();
  TensorComb out;
  out.r = r;
  if (r < 1 || r > z.weight() - z.s) throw DomainError("D_rp requires 1 <= r <= weight");
  if (N == 6 && r == 1) return out;  // no weight-one part in the unramified quotient

  const auto& x = z.x;
  const auto& e = z.eps;
  auto emit = [&](Tag tag, const Rational& c, int le, std::vector<int> nx, std::vector<int> ne) {
    if (c == 0) return;
    MZVSymbol right{N, 0, std::move(nx), std::move(ne), z.s};
    validate(right);
    out.terms.push_back(TensorTerm{tag, Depth1Symbol{N, r, mod(le, N)}, std::move(right), c});
  };
  // 1-based access to the arguments.
  auto X = [&](int i) { return x[static_cast<std::size_t>(i - 1)]; };
  auto E = [&](int i) { return e[static_cast<std::size_t>(i - 1)]; };
  auto merged = [&](int i, int xv) {
    // Positions i and i+1 replaced by one argument (xv, e_i + e_{i+1}).
    std::vector<int> nx, ne;
    for (int j = 1; j <= p; ++j) {
      if (j == i + 1) continue;
      if (j == i) {
        nx.push_back(xv);
        ne.push_back(mod(E(i) + E(i + 1), N));
      } else {
        nx.push_back(X(j));
        ne.push_back(E(j));
      }
    }
    return std::make_pair(nx, ne);
  };
  auto sgn = [](long k) { return Rational(k % 2 ? -1 : 1); };

  if (p >= 1 && r == X(1))
    emit(Tag::A0, Rational(1), E(1), std::vector<int>(x.begin() + 1, x.end()), std::vector<int>(e.begin() + 1, e.end()));
  for (int i = 2; i <= p; ++i) {
    if (X(i) <= r && r < X(i) + X(i - 1) - 1) {
      auto [nx, ne] = merged(i - 1, X(i - 1) + X(i) - r);
      emit(i < p ? Tag::A : Tag::D, sgn(r - X(i)) * Rational(binomial(r - 1, r - X(i))), E(i), nx, ne);
    }
  }
  for (int i = 1; i < p; ++i) {
    if (X(i) <= r && r < X(i) + X(i + 1) - 1) {
      auto [nx, ne] = merged(i, X(i) + X(i + 1) - r);
      emit(Tag::B, sgn(X(i)) * Rational(binomial(r - 1, r - X(i))), -E(i), nx, ne);
    }
  }
  for (int i = 2; i <= p; ++i) {
    if (r == X(i - 1) + X(i) - 1 && mod(E(i - 1) + E(i), N) != 0) {
      auto [nx, ne] = merged(i - 1, 1);
      const Rational s = sgn(X(i - 1));
      const Tag tag = i < p ? Tag::C : Tag::Dprime;
      emit(tag, s * Rational(binomial(r - 1, X(i) - 1)), -E(i - 1), nx, ne);
      emit(tag, -s * Rational(binomial(r - 1, X(i - 1) - 1)), E(i), nx, ne);
    }
  }
  return out;
}

LinComb<MZVSymbol> D_eta_rp(const MZVSymbol& z, int r, int eta) {
  const Depth1Symbol b{z.N, r, mod(eta, z.N)};
  if (!is_depth1_basis(b)) throw DomainError("(r, eta) is not a depth-one basis index");
  LinComb<MZVSymbol> out;
  for (const auto& [key, c] : D_rp(z, r).reduced())
    if (key.first == b) out.add(key.second, c);
  return out;
}

}  // namespace mzv
