#pragma once

// Generator counts, dimensions of ℋ^N_n and the f-alphabet comodule model.

#include "mzv/exactnum.hpp"

#include <compare>
#include <optional>
#include <string>
#include <vector>

namespace mzv {

struct GenProfile {
  int N = 1;
  int M = 1;
  int a = 0;              // generators in degree 1
  int b = 0;              // generators in each degree r > 1
  bool odd_only = false;  // N = 1, 2: generators only in odd degrees
  int t_weight = 1;       // weight of the polynomial generator t: 2 for N <= 2

  int generators(int r) const;
};

GenProfile gen_counts(int N, int M);
int default_gen_ramification(int N);

// d_0..d_{n_max} from the closed recursions of the dimension table.
std::vector<Integer> dims(int N, int M, int n_max);
// Denominator coefficients of the Hilbert series, constant term first.
std::vector<long> hilbert_denominator(const GenProfile& g);
std::string hilbert_series(const GenProfile& g);  // e.g. "1/(1-3t)"

struct FLetter {
  int r = 1;  // degree
  int j = 1;  // generator index within the degree
  auto operator<=>(const FLetter&) const = default;
};

struct FWord {
  std::vector<FLetter> letters;
  int t_power = 0;
  auto operator<=>(const FWord&) const = default;
};

int fword_weight(const FWord& w, const GenProfile& g);
std::vector<FWord> enumerate_fwords(const GenProfile& g, int n);

// Strips the leading letter when it is f^j_r.
std::optional<FWord> f_deconcat_Dr(const FWord& w, int r, int j);

// dim ker Δ' on H_n: degree-n generators, plus t^{n/t_weight} when it exists.
int f_kernel_dim(int N, int M, int n);
// Same number from the rank of Δ' on all weight-n words.
int f_kernel_dim_bruteforce(int N, int M, int n);

}  // namespace mzv
