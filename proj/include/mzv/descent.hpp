#pragma once

// Levels, derivation splits, the ∂ matrices and the corrections cl of the
// motivic level filtration.

#include "mzv/coaction.hpp"

#include <Eigen/Core>
#include <boost/multiprecision/eigen.hpp>

#include <compare>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <tuple>
#include <vector>

namespace mzv {

using RationalMatrix = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;
using RationalVector = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

// A linear functional on the depth-one basis at a fixed weight r, e.g.
// D^ξ_r or D^ξ_r - D^{-ξ}_r. `descent` marks membership in 𝒟^d.
struct Functional {
  std::string name;
  bool descent = false;
  std::map<int, Rational> weights;  // basis root exponent -> weight
};

// (k_N / k_N', M / M') with the prime P. The "plain" spec of an N has no
// descent part: every derivation is in 𝒟^{∖d} and every level is 0.
struct DescentSpec {
  int N = 2;
  int Nprime = 1;
  int M = 2;
  int Mprime = 1;
  int P = 2;
  std::string label;       // e.g. "k4/Q,2/1"
  bool plain = false;
  bool matrices = true;    // false for split-only specs

  std::vector<Functional> functionals(int r) const;
  bool operator==(const DescentSpec& o) const { return label == o.label && N == o.N; }
};

DescentSpec make_spec(int N, int Nprime, int M, int Mprime);
DescentSpec spec_from_label(int N, const std::string& label);
DescentSpec plain_spec(int N);
std::vector<DescentSpec> supported_specs(int N);
int default_ramification(int N);

// Textual form of the split, for display.
struct DerivationSplit {
  std::vector<std::string> descent;
  std::vector<std::string> rest;
};
DerivationSplit derivation_split(const DescentSpec& spec);

// Shape test for elements of the basis ℬ^N (the (2πi)^s factor is free).
bool is_basis_shape(const MZVSymbol& z);
int level(const MZVSymbol& b, const DescentSpec& spec);

// ℬ^N elements of weight n and depth p (all s-blocks when p is given,
// s = 0 only when s_block_only), in reversed-lexicographic order.
std::vector<MZVSymbol> enumerate_basis(int N, int n, int p, bool s_block_only = false);
std::vector<MZVSymbol> enumerate_basis_all_depths(int N, int n);

struct RowKey {
  int r = 0;
  int functional = 0;
  MZVSymbol target;
  auto operator<=>(const RowKey&) const = default;
};

struct PartialMatrix {
  std::string spec_label;
  int N = 2, n = 0, p = 0, i = 0;
  std::vector<MZVSymbol> columns;
  std::vector<RowKey> rows;
  RationalMatrix entries;
};

struct Certificate {
  bool pass = false;
  std::string orientation;  // "lower", "upper", "diagonal" or "empty"
  int P = 2;
  std::string detail;
};

// Sorts rows by (r, functional, reversed target) and columns by reversed
// tuple, then checks that the diagonal is a P-adic unit and that one strict
// triangle is divisible by P. Throws CertificateError on an entry of
// negative valuation.
Certificate check_unitriangular_modP(const PartialMatrix& m, int P);

struct Correction {
  MZVSymbol element;
  LinComb<MZVSymbol> correction;         // exact top-depth part of cl
  std::vector<MZVSymbol> free_parameters;  // lower-depth basis elements left undetermined
};

class DescentEngine {
 public:
  explicit DescentEngine(DescentSpec spec);
  ~DescentEngine();
  DescentEngine(const DescentEngine&) = delete;
  DescentEngine& operator=(const DescentEngine&) = delete;

  const DescentSpec& spec() const { return spec_; }

  // ℬ_{n,p,>=i}, block s = 0.
  std::vector<MZVSymbol> basis(int n, int p, int i) const;
  std::vector<RowKey> rows(int n, int p, int i) const;

  // ∂^i of a k = 0, s = 0 symbol, right factors decomposed into the row bases.
  LinComb<RowKey> derivation_vector(const MZVSymbol& z, int i);

  const PartialMatrix& partial_matrix(int n, int p, int i);
  Certificate certificate(int n, int p, int i);

  // Coordinates of z in gr_p ℋ_n^{>= i} on ℬ_{n,p,>=i}. Symbols may carry
  // leading zeros or a (2πi)^s factor.
  LinComb<MZVSymbol> decompose(const MZVSymbol& z, int i);
  LinComb<MZVSymbol> decompose(const LinComb<MZVSymbol>& z, int i);

  // b of level <= i: cl(b) on level >= i+1 with b + cl(b) in F_i, top depth.
  Correction solve_correction(const MZVSymbol& b, int i);
  std::vector<Correction> corrected_basis(int n, int i);

 private:
  struct Solver;
  const Solver& solver(int n, int p, int i);

  DescentSpec spec_;
  std::map<std::tuple<int, int, int>, std::unique_ptr<Solver>> solvers_;
  std::map<std::pair<MZVSymbol, int>, LinComb<MZVSymbol>> memo_;
};

// Descent criterion applied recursively to the top-depth part of z (a combination of basis
// elements of one weight). Returns the failing derivation chain, outermost
// first, when z does not descend.
struct DescentVerdict {
  bool descends = true;
  std::vector<std::string> witness;
};
DescentVerdict descent_check(const LinComb<MZVSymbol>& z, DescentEngine& engine);

bool honorary_precheck(const MZVSymbol& z, int N);

}  // namespace mzv
