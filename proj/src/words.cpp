#include "mzv/words.hpp"

#include "mzv/errors.hpp"

#include <algorithm>
#include <string>

namespace mzv {

bool supported_modulus(int N) {
  return N == 1 || N == 2 || N == 3 || N == 4 || N == 6 || N == 8;
}

int mod(long a, int N) {
  long r = a % N;
  return static_cast<int>(r < 0 ? r + N : r);
}

RootOfUnity::RootOfUnity(int N, long e) : modulus(N), exponent(mod(e, N)) {
  if (!supported_modulus(N)) throw DomainError("unsupported modulus N=" + std::to_string(N));
}

RootOfUnity RootOfUnity::operator*(const RootOfUnity& o) const {
  if (o.modulus != modulus) throw DomainError("roots of unity with different moduli");
  return RootOfUnity(modulus, exponent + o.exponent);
}

RootOfUnity RootOfUnity::inverse() const { return RootOfUnity(modulus, -exponent); }

int Letter::exponent() const {
  if (is_zero()) throw DomainError("the letter 0 has no exponent");
  return code_;
}

int IISymbol::depth() const {
  return static_cast<int>(std::count_if(body.begin(), body.end(), [](Letter a) { return !a.is_zero(); }));
}

int MZVSymbol::weight() const {
  int w = k + s;
  for (int v : x) w += v;
  return w;
}

void validate(const MZVSymbol& z) {
  if (!supported_modulus(z.N)) throw DomainError("unsupported modulus N=" + std::to_string(z.N));
  if (z.x.size() != z.eps.size()) throw DomainError("exponent and root vectors differ in length");
  if (z.k < 0 || z.s < 0) throw DomainError("negative leading-zero count or pi power");
  for (int v : z.x)
    if (v < 1) throw DomainError("exponents must be positive");
  for (int e : z.eps)
    if (e < 0 || e >= z.N) throw DomainError("root exponent out of range");
  if (!z.x.empty() && z.x.back() == 1 && z.eps.back() == 0)
    throw DomainError("divergent symbol: (x_p, eps_p) = (1, 1)");
  if (z.N <= 2 && z.s % 2 != 0) throw DomainError("odd power of 2πi for N <= 2");
}

MZVSymbol make_mzv(int N, std::vector<int> x, std::vector<int> eps, int k, int s) {
  if (!supported_modulus(N)) throw DomainError("unsupported modulus N=" + std::to_string(N));
  for (int& e : eps) e = mod(e, N);
  MZVSymbol z{N, k, std::move(x), std::move(eps), s};
  validate(z);
  return z;
}

MZVSymbol unit_mzv(int N, int s) { return make_mzv(N, {}, {}, 0, s); }

IISymbol unit_symbol(int N) { return IISymbol{N, Letter::zero(), {}, Letter::root(0)}; }

std::pair<int, IISymbol> mzv_to_word(const MZVSymbol& z) {
  if (z.s != 0) throw DomainError("mzv_to_word: a (2πi)^s factor has no word form");
  IISymbol w = unit_symbol(z.N);
  w.body.assign(static_cast<std::size_t>(z.k), Letter::zero());
  const int p = z.depth();
  for (int i = 0; i < p; ++i) {
    long tail = 0;
    for (int j = i; j < p; ++j) tail += z.eps[j];
    w.body.push_back(Letter::root(mod(-tail, z.N)));
    w.body.insert(w.body.end(), static_cast<std::size_t>(z.x[i] - 1), Letter::zero());
  }
  return {p % 2 ? -1 : 1, w};
}

std::pair<int, MZVSymbol> word_to_mzv(const IISymbol& w) {
  if (!w.start.is_zero() || w.end.is_zero() || w.end.exponent() != 0)
    throw DomainError("word_to_mzv: endpoints must be (0, 1)");
  MZVSymbol z;
  z.N = w.N;
  std::size_t pos = 0;
  while (pos < w.body.size() && w.body[pos].is_zero()) ++pos;
  if (pos == w.body.size() && pos > 0) throw DomainError("malformed word: only zero letters");
  z.k = static_cast<int>(pos);
  std::vector<int> etas;
  for (; pos < w.body.size(); ++pos) {
    if (w.body[pos].is_zero()) {
      ++z.x.back();
    } else {
      etas.push_back(w.body[pos].exponent());
      z.x.push_back(1);
    }
  }
  const int p = static_cast<int>(etas.size());
  for (int i = 0; i < p; ++i) {
    int next = i + 1 < p ? etas[i + 1] : 0;
    z.eps.push_back(mod(next - etas[i], w.N));
  }
  validate(z);
  return {p % 2 ? -1 : 1, z};
}

namespace {

Letter scale(Letter a, int alpha, int N) {
  return a.is_zero() ? a : Letter::root(mod(a.exponent() + alpha, N));
}

}  // namespace

std::optional<std::pair<int, IISymbol>> normalize_signed(const IISymbol& w) {
  if (w.body.empty()) return std::make_pair(1, unit_symbol(w.N));
  if (w.start == w.end) return std::nullopt;
  const int N = w.N;
  IISymbol out{N, w.start, w.body, w.end};
  int sign = 1;
  if (out.end.is_zero()) {
    // Homothety by start^{-1}, then reversal to end at 1.
    int alpha = -out.start.exponent();
    for (auto& a : out.body) a = scale(a, alpha, N);
    std::reverse(out.body.begin(), out.body.end());
    out.start = Letter::zero();
    out.end = Letter::root(0);
    if (out.body.size() % 2) sign = -1;
  } else {
    int alpha = -out.end.exponent();
    for (auto& a : out.body) a = scale(a, alpha, N);
    out.start = scale(out.start, alpha, N);
    out.end = Letter::root(0);
  }
  return std::make_pair(sign, out);
}

LinComb<IISymbol> normalize(const IISymbol& w) {
  LinComb<IISymbol> out;
  if (auto t = normalize_signed(w)) out.add(t->second, Rational(t->first));
  return out;
}

LinComb<MZVSymbol> regularize_leading_zeros(const MZVSymbol& z) {
  LinComb<MZVSymbol> out;
  if (z.k == 0) {
    out.add(z, Rational(1));
    return out;
  }
  const int p = z.depth();
  if (p == 0) throw DomainError("regularize_leading_zeros: no nonzero letter");
  std::vector<int> parts(static_cast<std::size_t>(p), 0);
  auto rec = [&](auto&& self, int j, int left) -> void {
    if (j == p - 1) {
      parts[j] = left;
      Integer c = 1;
      MZVSymbol t = z;
      t.k = 0;
      for (int q = 0; q < p; ++q) {
        c *= binomial(z.x[q] + parts[q] - 1, parts[q]);
        t.x[q] += parts[q];
      }
      out.add(t, Rational(z.k % 2 ? -c : c));
      return;
    }
    for (int v = 0; v <= left; ++v) {
      parts[j] = v;
      self(self, j + 1, left - v);
    }
  };
  rec(rec, 0, z.k);
  return out;
}

std::vector<std::pair<IISymbol, IISymbol>> path_compose(const IISymbol& w, Letter x) {
  std::vector<std::pair<IISymbol, IISymbol>> out;
  const auto n = w.body.size();
  for (std::size_t i = 0; i <= n; ++i) {
    IISymbol a{w.N, w.start, Word(w.body.begin(), w.body.begin() + static_cast<long>(i)), x};
    IISymbol b{w.N, x, Word(w.body.begin() + static_cast<long>(i), w.body.end()), w.end};
    out.emplace_back(std::move(a), std::move(b));
  }
  return out;
}

}  // namespace mzv
