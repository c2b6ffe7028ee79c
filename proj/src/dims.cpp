#include "mzv/dims.hpp"

#include "mzv/descent.hpp"
#include "mzv/errors.hpp"
#include "mzv/words.hpp"

#include <Eigen/LU>

#include <map>
#include <optional>
#include <cstdlib>
#include <sstream>

namespace mzv {

namespace {

int euler_phi(int n) {
  int out = n;
  for (int q = 2; q <= n; ++q)
    if (n % q == 0 && is_prime(q)) out = out / q * (q - 1);
  return out;
}

int prime_count(int n) {
  int out = 0;
  for (int q = 2; q <= n; ++q)
    if (n % q == 0 && is_prime(q)) ++out;
  return out;
}

}  // namespace

int GenProfile::generators(int r) const {
  if (r < 1) return 0;
  if (odd_only && r % 2 == 0) return 0;
  return r == 1 ? a : b;
}

int default_gen_ramification(int N) {
  switch (N) {
    case 1: case 6: return 1;
    case 2: case 4: case 8: return 2;
    case 3: return 3;
  }
  throw DomainError("unsupported modulus N=" + std::to_string(N));
}

GenProfile gen_counts(int N, int M) {
  if (!supported_modulus(N)) throw DomainError("unsupported modulus N=" + std::to_string(N));
  if (M < 1 || N % M != 0) throw DomainError("M must divide N");
  GenProfile g;
  g.N = N;
  g.M = M;
  if (N <= 2) {
    g.odd_only = true;
    g.t_weight = 2;
    g.a = M == 2 ? 1 : 0;
    g.b = 1;
    return g;
  }
  g.b = euler_phi(N) / 2;
  g.a = g.b + prime_count(M) - 1;
  return g;
}

std::vector<Integer> dims(int N, int M, int n_max) {
  const GenProfile g = gen_counts(N, M);
  std::vector<Integer> e(static_cast<std::size_t>(n_max + 1), 0), d(e.size(), 0);
  if (n_max < 0) return {};
  e[0] = 1;
  for (int n = 1; n <= n_max; ++n)
    for (int r = 1; r <= n; ++r) e[n] += g.generators(r) * e[n - r];
  for (int n = 0; n <= n_max; ++n)
    for (int k = n; k >= 0; k -= g.t_weight) d[n] += e[k];
  return d;
}

std::vector<long> hilbert_denominator(const GenProfile& g) {
  if (g.odd_only) return {1, -g.a, -1, g.a - g.b};
  return {1, -(g.a + 1), g.a - g.b};
}

std::string hilbert_series(const GenProfile& g) {
  auto c = hilbert_denominator(g);
  while (c.size() > 1 && c.back() == 0) c.pop_back();
  std::ostringstream out;
  out << "1/(1";
  for (std::size_t k = 1; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    out << (c[k] < 0 ? "-" : "+");
    if (std::abs(c[k]) != 1) out << std::abs(c[k]);
    out << "t";
    if (k > 1) out << "^" << k;
  }
  out << ")";
  return out.str();
}

int fword_weight(const FWord& w, const GenProfile& g) {
  int n = g.t_weight * w.t_power;
  for (const auto& l : w.letters) n += l.r;
  return n;
}

std::vector<FWord> enumerate_fwords(const GenProfile& g, int n) {
  std::vector<FWord> out;
  FWord cur;
  auto rec = [&](auto&& self, int left) -> void {
    if (left % g.t_weight == 0) {
      FWord w = cur;
      w.t_power = left / g.t_weight;
      out.push_back(std::move(w));
    }
    for (int r = 1; r <= left; ++r)
      for (int j = 1; j <= g.generators(r); ++j) {
        cur.letters.push_back(FLetter{r, j});
        self(self, left - r);
        cur.letters.pop_back();
      }
  };
  if (n >= 0) rec(rec, n);
  return out;
}

std::optional<FWord> f_deconcat_Dr(const FWord& w, int r, int j) {
  if (w.letters.empty() || w.letters.front() != FLetter{r, j}) return std::nullopt;
  FWord rest{std::vector<FLetter>(w.letters.begin() + 1, w.letters.end()), w.t_power};
  return rest;
}

int f_kernel_dim(int N, int M, int n) {
  const GenProfile g = gen_counts(N, M);
  return g.generators(n) + (n % g.t_weight == 0 ? 1 : 0);
}

int f_kernel_dim_bruteforce(int N, int M, int n) {
  const GenProfile g = gen_counts(N, M);
  // Δ'(w t^k) = Σ_{w = uv, u nonempty} u ⊗ v t^k, without the term w ⊗ 1 when k = 0.
  // Δ' preserves the t-power and the first letter, so the rank is summed over
  // those blocks.
  using Tensor = std::pair<std::vector<FLetter>, FWord>;
  std::map<std::pair<int, std::optional<FLetter>>, std::vector<FWord>> blocks;
  for (auto& w : enumerate_fwords(g, n)) {
    std::optional<FLetter> first;
    if (!w.letters.empty()) first = w.letters.front();
    blocks[{w.t_power, first}].push_back(std::move(w));
  }
  int kernel = 0;
  for (const auto& [key, words] : blocks) {
    std::map<Tensor, Eigen::Index> index;
    std::vector<std::vector<Eigen::Index>> images(words.size());
    for (std::size_t c = 0; c < words.size(); ++c) {
      const auto& w = words[c];
      for (std::size_t cut = 1; cut <= w.letters.size(); ++cut) {
        if (cut == w.letters.size() && w.t_power == 0) continue;
        Tensor t{std::vector<FLetter>(w.letters.begin(), w.letters.begin() + static_cast<long>(cut)),
                 FWord{std::vector<FLetter>(w.letters.begin() + static_cast<long>(cut), w.letters.end()), w.t_power}};
        auto [it, fresh] = index.try_emplace(t, static_cast<Eigen::Index>(index.size()));
        images[c].push_back(it->second);
      }
    }
    if (index.empty()) {
      kernel += static_cast<int>(words.size());
      continue;
    }
    RationalMatrix m =
        RationalMatrix::Zero(static_cast<Eigen::Index>(index.size()), static_cast<Eigen::Index>(words.size()));
    for (std::size_t c = 0; c < words.size(); ++c)
      for (auto row : images[c]) m(row, static_cast<Eigen::Index>(c)) += 1;
    Eigen::FullPivLU<RationalMatrix> lu(m);
    kernel += static_cast<int>(words.size()) - static_cast<int>(lu.rank());
  }
  return kernel;
}

}  // namespace mzv
