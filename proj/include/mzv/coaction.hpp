#pragma once

// Goncharov's coaction on words, the weight-graded derivations D_r and the
// depth-graded operators D_{r,p} in ζ-notation.

#include "mzv/depth1.hpp"
#include "mzv/words.hpp"

#include <compare>
#include <optional>
#include <map>
#include <string_view>
#include <vector>

namespace mzv {

// Term families of the depth-graded formula. D and Dprime are the
// deconcatenation terms (cuts ending at the last argument).
enum class Tag { A0, A, B, C, D, Dprime, Raw };
std::string_view tag_name(Tag t);

// Δ(w) as a combination of (formal product of left factors) ⊗ (right word).
// Every factor is normalized; units are dropped from the product.
struct CoactKey {
  std::vector<IISymbol> left;  // sorted multiset
  IISymbol right;
  auto operator<=>(const CoactKey&) const = default;
};
LinComb<CoactKey> coact(const IISymbol& w);
std::size_t coact_subsequence_count(const IISymbol& w);

struct CutRecord {
  int p = 0;  // the cut is a_p; a_{p+1}..a_{p+r}; a_{p+r+1}
  int r = 0;
  auto operator<=>(const CutRecord&) const = default;
};

struct WordTerm {
  CutRecord cut;
  IISymbol left;   // normalized
  IISymbol right;  // I(a_0; ... a_p, a_{p+r+1} ...; a_{n+1})
  Rational coeff;
};

// D_r on a word: one term per cut of interior length r whose left factor
// survives normalization, in cut order. Requires 1 <= r < weight.
std::vector<WordTerm> D_r(const IISymbol& w, int r);
// D_r on a symbol through its word, the sign (-1)^p folded into coeff.
std::vector<WordTerm> D_r(const MZVSymbol& z, int r);

// Image of a left factor in gr^D_1 L, in the depth-one basis. Returns
// nothing when the factor has depth other than one.
std::optional<LinComb<Depth1Symbol>> left_to_depth1(const IISymbol& left);

struct TensorTerm {
  Tag tag = Tag::Raw;
  Depth1Symbol left;  // ζ^l(r; ε) before reduction
  MZVSymbol right;
  Rational coeff;
};

// Reduced form: (basis element, right symbol) -> coefficient.
using TensorKey = std::pair<Depth1Symbol, MZVSymbol>;
using ReducedTensor = LinComb<TensorKey>;

struct TensorComb {
  int r = 0;
  std::vector<TensorTerm> terms;
  ReducedTensor reduced() const;
};

// Depth-graded part of D_r on words: cuts with exactly one nonzero interior
// letter, right factors converted to ζ-notation (and regularized).
ReducedTensor depth_graded(const std::vector<WordTerm>& terms, int N);

// D_{r,p} of the depth-graded formula, every term tagged with its family.
// Requires k = 0 and s = 0; 1 <= r <= weight.
TensorComb D_rp(const MZVSymbol& z, int r);

// Projection of D_{r,p}(z) on the basis coordinate ζ^l(r; ξ^eta).
LinComb<MZVSymbol> D_eta_rp(const MZVSymbol& z, int r, int eta);

}  // namespace mzv
