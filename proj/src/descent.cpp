#include "mzv/descent.hpp"

#include "mzv/errors.hpp"
#include "mzv/io.hpp"

#include <Eigen/LU>

#include <algorithm>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <sstream>

namespace mzv {

namespace {

std::string field(int N) { return N <= 2 ? "Q" : "k" + std::to_string(N); }

// Word-letter sign of position j for N = 8: η_j ∈ -ξ^{-1}·{1}, i.e. ε_j⋯ε_p ξ^{-1} = -1.
int sign8(const MZVSymbol& b, int j) {
  if (b.N != 8) return 0;
  long s = 0;
  for (int q = j; q < b.depth(); ++q) s += b.eps[static_cast<std::size_t>(q)];
  return mod(s - 1, 8) == 4 ? 1 : 0;
}

std::vector<int> reversed_key(const MZVSymbol& b) {
  std::vector<int> key;
  for (int j = b.depth() - 1; j >= 0; --j) {
    key.push_back(b.x[static_cast<std::size_t>(j)]);
    key.push_back(sign8(b, j));
  }
  return key;
}

bool revlex_less(const MZVSymbol& a, const MZVSymbol& b) {
  if (a.s != b.s) return a.s < b.s;
  return reversed_key(a) < reversed_key(b);
}

void compositions(int n, int p, int minpart, std::vector<int>& cur, std::vector<std::vector<int>>& out) {
  if (p == 0) {
    if (n == 0) out.push_back(cur);
    return;
  }
  for (int a = minpart; a <= n - minpart * (p - 1); ++a) {
    cur.push_back(a);
    compositions(n - a, p - 1, minpart, cur, out);
    cur.pop_back();
  }
}

// s = 0 basis elements of weight n and depth p, unsorted.
std::vector<MZVSymbol> zeta_part(int N, int n, int p) {
  std::vector<MZVSymbol> out;
  if (p == 0) {
    if (n == 0) out.push_back(unit_mzv(N));
    return out;
  }
  std::vector<std::vector<int>> xs;
  std::vector<int> cur;
  compositions(n, p, N == 6 ? 2 : 1, cur, xs);
  for (const auto& x : xs) {
    if (N == 2 && !std::all_of(x.begin(), x.end(), [](int v) { return v % 2 == 1; })) continue;
    if (N == 8) {
      for (int mask = 0; mask < (1 << (p - 1)); ++mask)
        for (int last : {1, 5}) {
          std::vector<int> e;
          for (int j = 0; j < p - 1; ++j) e.push_back(mask >> (p - 2 - j) & 1 ? 4 : 0);
          e.push_back(last);
          out.push_back(MZVSymbol{N, 0, x, e, 0});
        }
    } else {
      std::vector<int> e(static_cast<std::size_t>(p), 0);
      e.back() = 1;
      out.push_back(MZVSymbol{N, 0, x, e, 0});
    }
  }
  return out;
}

void require_descent_modulus(int N) {
  if (N != 2 && N != 3 && N != 4 && N != 6 && N != 8)
    throw DomainError("no basis or descent data for N=" + std::to_string(N));
}

// The level kinds of the supported descents.
enum class Kind { Plain, N2, SameField, PP, P1, N6, K8K4, K8Q22, K8Q21 };

Kind kind_of(const DescentSpec& s) {
  if (s.plain) return Kind::Plain;
  switch (s.N) {
    case 2: return Kind::N2;
    case 3:
    case 4:
      if (s.Nprime == s.N) return Kind::SameField;
      return s.Mprime == s.M ? Kind::PP : Kind::P1;
    case 6: return Kind::N6;
    case 8:
      if (s.Nprime == 4) return Kind::K8K4;
      return s.Mprime == 2 ? Kind::K8Q22 : Kind::K8Q21;
  }
  throw DomainError("descent " + s.label + " has no level function");
}

}  // namespace

int default_ramification(int N) {
  switch (N) {
    case 2: case 4: case 8: return 2;
    case 3: case 9: return 3;
    case 1: case 6: return 1;
  }
  throw DomainError("unsupported modulus N=" + std::to_string(N));
}

DescentSpec make_spec(int N, int Nprime, int M, int Mprime) {
  if (Nprime < 1 || N % Nprime != 0) throw DomainError("N' must divide N");
  if (Mprime < 1 || M % Mprime != 0) throw DomainError("M' must divide M");
  if (M != default_ramification(N))
    throw DomainError("descent data exists only for M=" + std::to_string(default_ramification(N)) + " at N=" +
                      std::to_string(N));
  DescentSpec s;
  s.N = N;
  s.Nprime = Nprime;
  s.M = M;
  s.Mprime = Mprime;
  s.P = (N == 3 || N == 6 || N == 9) ? 3 : 2;
  s.label = field(N) + "/" + field(Nprime) + "," + std::to_string(M) + "/" + std::to_string(Mprime);
  const bool rational = Nprime <= 2;
  bool ok = false;
  switch (N) {
    case 2: ok = rational && Mprime == 1; break;
    case 3: ok = (Nprime == 3 && Mprime == 1) || (Nprime == 1 && (Mprime == 1 || Mprime == 3)); break;
    case 4: ok = (Nprime == 4 && Mprime == 1) || (rational && (Mprime == 1 || Mprime == 2)); break;
    case 6: ok = rational && Mprime == 1; break;
    case 8: ok = (Nprime == 4 && Mprime == 2) || (rational && (Mprime == 1 || Mprime == 2)); break;
    case 9: ok = Nprime == 3 && Mprime == 3; s.matrices = false; break;
  }
  if (!ok) throw DomainError("unsupported descent " + s.label);
  return s;
}

DescentSpec plain_spec(int N) {
  require_descent_modulus(N);
  DescentSpec s;
  s.N = N;
  s.Nprime = N;
  s.M = default_ramification(N);
  s.Mprime = s.M;
  s.P = (N == 3 || N == 6) ? 3 : 2;
  s.plain = true;
  s.label = "plain";
  return s;
}

std::vector<DescentSpec> supported_specs(int N) {
  switch (N) {
    case 2: return {make_spec(2, 1, 2, 1)};
    case 3: return {make_spec(3, 3, 3, 1), make_spec(3, 1, 3, 3), make_spec(3, 1, 3, 1)};
    case 4: return {make_spec(4, 4, 2, 1), make_spec(4, 2, 2, 2), make_spec(4, 2, 2, 1)};
    case 6: return {make_spec(6, 1, 1, 1)};
    case 8: return {make_spec(8, 4, 2, 2), make_spec(8, 2, 2, 2), make_spec(8, 2, 2, 1)};
    case 9: return {make_spec(9, 3, 3, 3)};
  }
  return {};
}

DescentSpec spec_from_label(int N, const std::string& label) {
  if (label == "plain") return plain_spec(N);
  for (auto& s : supported_specs(N))
    if (s.label == label) return s;
  throw DomainError("unknown descent '" + label + "' for N=" + std::to_string(N));
}

std::vector<Functional> DescentSpec::functionals(int r) const {
  if (!matrices) throw DomainError("descent " + label + " supports the derivation split only");
  require_descent_modulus(N);
  const std::string rs = std::to_string(r);
  auto one = [&](std::string name, int root, bool d) {
    return Functional{std::move(name) + "_" + rs, d, {{root, Rational(1)}}};
  };
  if (N == 2) {
    if (r % 2 == 0) return {};
    return {one("D^{-1}", 1, !plain && r == 1)};
  }
  if (N == 8) {
    Functional plus = one("D^{xi}", 1, false);
    Functional minus = one("D^{-xi}", 5, false);
    if (plain) return {plus, minus};
    const Kind k = kind_of(*this);
    const bool full = k != Kind::K8K4 && (r % 2 == 0 || (k == Kind::K8Q21 && r == 1));
    if (full) {
      plus.descent = minus.descent = true;
      return {plus, minus};
    }
    Functional diff{"D^{xi}_" + rs + "-D^{-xi}_" + rs, true, {{1, Rational(1)}, {5, Rational(-1)}}};
    return {plus, diff};
  }
  if (N == 6 && r == 1) return {};
  bool d = false;
  switch (kind_of(*this)) {
    case Kind::Plain: break;
    case Kind::SameField: d = r == 1; break;
    case Kind::PP: d = r % 2 == 0; break;
    case Kind::P1: d = r % 2 == 0 || r == 1; break;
    case Kind::N6: d = r % 2 == 0; break;
    default: break;
  }
  return {one("D^{xi}", 1, d)};
}

DerivationSplit derivation_split(const DescentSpec& s) {
  if (s.N == 9) return {{"D^{xi9}_r-D^{-xi9^4}_r, D^{xi9}_r-D^{-xi9^7}_r, r>0"}, {"D^{xi9}_r, r>0"}};
  if (s.plain) {
    if (s.N == 2) return {{}, {"D^{-1}_{2r+1}, r>=0"}};
    if (s.N == 8) return {{}, {"D^{xi}_r, D^{-xi}_r, r>0"}};
    if (s.N == 6) return {{}, {"D^{xi}_r, r>1"}};
    return {{}, {"D^{xi}_r, r>0"}};
  }
  switch (kind_of(s)) {
    case Kind::N2: return {{"D^{-1}_1"}, {"D^{-1}_{2r+1}, r>0"}};
    case Kind::SameField: return {{"D^{xi}_1"}, {"D^{xi}_r, r>1"}};
    case Kind::PP: return {{"D^{xi}_{2r}, r>0"}, {"D^{xi}_{2r+1}, r>=0"}};
    case Kind::P1: return {{"D^{xi}_1", "D^{xi}_{2r}, r>0"}, {"D^{xi}_{2r+1}, r>0"}};
    case Kind::N6: return {{"D^{xi}_{2r}, r>0"}, {"D^{xi}_{2r+1}, r>0"}};
    case Kind::K8K4: return {{"D^{xi}_r-D^{-xi}_r, r>0"}, {"D^{xi}_r, r>0"}};
    case Kind::K8Q22:
      return {{"D^{xi}_{2r+1}-D^{-xi}_{2r+1}, r>=0", "D^{xi}_{2r}, D^{-xi}_{2r}, r>0"}, {"D^{xi}_{2r+1}, r>=0"}};
    case Kind::K8Q21:
      return {{"D^{xi}_1, D^{-xi}_1", "D^{xi}_{2r+1}-D^{-xi}_{2r+1}, r>0", "D^{xi}_{2r}, D^{-xi}_{2r}, r>0"},
              {"D^{xi}_{2r+1}, r>0"}};
    default: break;
  }
  throw DomainError("no split for " + s.label);
}

bool is_basis_shape(const MZVSymbol& z) {
  if (z.k != 0 || z.s < 0) return false;
  const int p = z.depth();
  if (z.N <= 2 && z.s % 2) return false;
  if (p == 0) return true;
  for (int j = 0; j < p; ++j) {
    const int x = z.x[static_cast<std::size_t>(j)];
    const int e = z.eps[static_cast<std::size_t>(j)];
    const bool last = j == p - 1;
    switch (z.N) {
      case 2:
        if (x % 2 == 0 || e != (last ? 1 : 0)) return false;
        break;
      case 3:
      case 4:
        if (x < 1 || e != (last ? 1 : 0)) return false;
        break;
      case 6:
        if (x < 2 || e != (last ? 1 : 0)) return false;
        break;
      case 8:
        if (x < 1 || (last ? (e != 1 && e != 5) : (e != 0 && e != 4))) return false;
        break;
      default:
        return false;
    }
  }
  return true;
}

int level(const MZVSymbol& b, const DescentSpec& spec) {
  if (b.N != spec.N) throw DomainError("level: symbol and descent have different N");
  if (!is_basis_shape(b)) throw DomainError("level: " + format_symbol(b) + " is not a basis element");
  const Kind k = kind_of(spec);
  int count = 0;
  for (int j = 0; j < b.depth(); ++j) {
    const int x = b.x[static_cast<std::size_t>(j)];
    const bool even = x % 2 == 0;
    const bool s = sign8(b, j) == 1;
    switch (k) {
      case Kind::Plain: break;
      case Kind::N2:
      case Kind::SameField: count += x == 1; break;
      case Kind::PP:
      case Kind::N6: count += even; break;
      case Kind::P1: count += even || x == 1; break;
      case Kind::K8K4: count += s; break;
      case Kind::K8Q22: count += even || s; break;
      case Kind::K8Q21: count += even || x == 1 || s; break;
    }
  }
  return count;
}

std::vector<MZVSymbol> enumerate_basis(int N, int n, int p, bool s_block_only) {
  require_descent_modulus(N);
  std::vector<MZVSymbol> out;
  if (n < 0 || p < 0) return out;
  const int step = N <= 2 ? 2 : 1;
  for (int s = 0; s <= n; s += step) {
    if (s > 0 && s_block_only) break;
    for (auto z : zeta_part(N, n - s, p)) {
      z.s = s;
      out.push_back(std::move(z));
    }
  }
  std::sort(out.begin(), out.end(), revlex_less);
  return out;
}

std::vector<MZVSymbol> enumerate_basis_all_depths(int N, int n) {
  std::vector<MZVSymbol> out;
  for (int p = 0; p <= n; ++p) {
    auto part = enumerate_basis(N, n, p);
    out.insert(out.end(), part.begin(), part.end());
  }
  return out;
}

Certificate check_unitriangular_modP(const PartialMatrix& m, int P) {
  Certificate cert;
  cert.P = P;
  const auto cols = m.columns.size();
  if (cols == 0 && m.rows.empty()) {
    cert.pass = true;
    cert.orientation = "empty";
    cert.detail = "no basis elements";
    return cert;
  }
  if (cols != m.rows.size()) {
    cert.detail = "matrix is " + std::to_string(m.rows.size()) + "x" + std::to_string(cols);
    return cert;
  }
  for (Eigen::Index a = 0; a < m.entries.rows(); ++a)
    for (Eigen::Index b = 0; b < m.entries.cols(); ++b)
      if (padic_valuation(m.entries(a, b), P) < Valuation::finite(0))
        throw CertificateError("entry " + to_string(m.entries(a, b)) + " has negative " + std::to_string(P) +
                               "-adic valuation at (n,p,i)=(" + std::to_string(m.n) + "," + std::to_string(m.p) +
                               "," + std::to_string(m.i) + ")");

  std::vector<std::size_t> corder(cols), rorder(cols);
  for (std::size_t j = 0; j < cols; ++j) corder[j] = rorder[j] = j;
  std::stable_sort(corder.begin(), corder.end(),
                   [&](std::size_t a, std::size_t b) { return revlex_less(m.columns[a], m.columns[b]); });
  std::stable_sort(rorder.begin(), rorder.end(), [&](std::size_t a, std::size_t b) {
    const auto& x = m.rows[a];
    const auto& y = m.rows[b];
    if (x.r != y.r) return x.r < y.r;
    if (x.functional != y.functional) return x.functional < y.functional;
    return revlex_less(x.target, y.target);
  });

  bool lower = true, upper = true;
  const Valuation zero = Valuation::finite(0);
  for (std::size_t a = 0; a < cols; ++a) {
    for (std::size_t b = 0; b < cols; ++b) {
      const auto& q = m.entries(static_cast<Eigen::Index>(rorder[a]), static_cast<Eigen::Index>(corder[b]));
      const bool unit = padic_valuation(q, P) == zero;
      if (a == b && !unit) {
        cert.detail = "diagonal entry " + std::to_string(a) + " is " + to_string(q) + ", not a " +
                      std::to_string(P) + "-adic unit";
        return cert;
      }
      if (a < b && unit) lower = false;
      if (a > b && unit) upper = false;
    }
  }
  cert.pass = lower || upper;
  cert.orientation = lower && upper ? "diagonal" : lower ? "lower" : upper ? "upper" : "none";
  cert.detail = std::to_string(cols) + "x" + std::to_string(cols) +
                (cert.pass ? ", unitriangular mod " + std::to_string(P) : ", units on both sides of the diagonal");
  return cert;
}

struct DescentEngine::Solver {
  PartialMatrix matrix;
  std::map<RowKey, Eigen::Index> row_index;
  std::unique_ptr<Eigen::FullPivLU<RationalMatrix>> lu;
};

DescentEngine::DescentEngine(DescentSpec spec) : spec_(std::move(spec)) {
  if (!spec_.matrices) throw DomainError("descent " + spec_.label + " supports the derivation split only");
  require_descent_modulus(spec_.N);
}

DescentEngine::~DescentEngine() = default;

std::vector<MZVSymbol> DescentEngine::basis(int n, int p, int i) const {
  std::vector<MZVSymbol> out;
  for (auto& b : enumerate_basis(spec_.N, n, p, true))
    if (level(b, spec_) >= i) out.push_back(std::move(b));
  return out;
}

std::vector<RowKey> DescentEngine::rows(int n, int p, int i) const {
  std::vector<RowKey> out;
  for (int r = 1; r <= n; ++r) {
    const auto fs = spec_.functionals(r);
    for (std::size_t f = 0; f < fs.size(); ++f) {
      const int ii = std::max(fs[f].descent ? i - 1 : i, 0);
      for (auto& t : basis(n - r, p - 1, ii)) out.push_back(RowKey{r, static_cast<int>(f), std::move(t)});
    }
  }
  return out;
}

LinComb<RowKey> DescentEngine::derivation_vector(const MZVSymbol& z, int i) {
  if (z.k != 0 || z.s != 0) throw DomainError("derivation_vector requires k = 0 and s = 0");
  LinComb<RowKey> out;
  const int n = z.weight();
  for (int r = 1; r <= n; ++r) {
    const auto fs = spec_.functionals(r);
    if (fs.empty()) continue;
    const auto terms = D_rp(z, r).reduced();
    for (std::size_t f = 0; f < fs.size(); ++f) {
      const int ii = std::max(fs[f].descent ? i - 1 : i, 0);
      LinComb<MZVSymbol> y;
      for (const auto& [key, c] : terms) {
        auto w = fs[f].weights.find(key.first.e);
        if (w != fs[f].weights.end()) y.add(key.second, c * w->second);
      }
      for (const auto& [right, c] : y)
        for (const auto& [t, cc] : decompose(right, ii)) out.add(RowKey{r, static_cast<int>(f), t}, c * cc);
    }
  }
  return out;
}

namespace {

std::filesystem::path cache_path(const std::string& dir, const DescentSpec& s, int n, int p, int i) {
  std::string label = "N" + std::to_string(s.N) + "_" + s.label;
  for (char& ch : label)
    if (ch == '/' || ch == ',') ch = '_';
  return std::filesystem::path(dir) / (label + "_n" + std::to_string(n) + "_p" + std::to_string(p) + "_i" +
                                       std::to_string(i) + ".json");
}

}  // namespace

const DescentEngine::Solver& DescentEngine::solver(int n, int p, int i) {
  const auto key = std::make_tuple(n, p, i);
  if (auto it = solvers_.find(key); it != solvers_.end()) return *it->second;

  auto sv = std::make_unique<Solver>();
  auto& m = sv->matrix;
  m.spec_label = spec_.label;
  m.N = spec_.N;
  m.n = n;
  m.p = p;
  m.i = i;
  m.columns = basis(n, p, i);
  m.rows = rows(n, p, i);
  for (std::size_t k = 0; k < m.rows.size(); ++k) sv->row_index.emplace(m.rows[k], static_cast<Eigen::Index>(k));
  m.entries = RationalMatrix::Zero(static_cast<Eigen::Index>(m.rows.size()), static_cast<Eigen::Index>(m.columns.size()));

  const char* dir = std::getenv("MZV_CACHE_DIR");
  const auto path = dir ? cache_path(dir, spec_, n, p, i) : std::filesystem::path();
  bool loaded = false;
  if (dir && std::filesystem::exists(path)) {
    std::ifstream in(path);
    auto doc = nlohmann::json::parse(in, nullptr, false);
    if (!doc.is_discarded() && doc.value("rows", 0u) == m.rows.size() && doc.value("columns", 0u) == m.columns.size()) {
      for (const auto& e : doc["entries"])
        m.entries(e[0].get<Eigen::Index>(), e[1].get<Eigen::Index>()) = parse_rational(e[2].get<std::string>());
      loaded = true;
    }
  }
  if (!loaded) {
    for (std::size_t j = 0; j < m.columns.size(); ++j)
      for (const auto& [row, c] : derivation_vector(m.columns[j], i)) {
        auto it = sv->row_index.find(row);
        if (it == sv->row_index.end())
          throw CertificateError("derivation lands outside the row basis at (n,p,i)=(" + std::to_string(n) + "," +
                                 std::to_string(p) + "," + std::to_string(i) + ")");
        m.entries(it->second, static_cast<Eigen::Index>(j)) = c;
      }
    if (dir) {
      nlohmann::ordered_json doc;
      doc["spec"] = spec_.label;
      doc["N"] = spec_.N;
      doc["n"] = n;
      doc["p"] = p;
      doc["i"] = i;
      doc["rows"] = m.rows.size();
      doc["columns"] = m.columns.size();
      doc["entries"] = nlohmann::json::array();
      for (Eigen::Index a = 0; a < m.entries.rows(); ++a)
        for (Eigen::Index b = 0; b < m.entries.cols(); ++b)
          if (m.entries(a, b) != 0) doc["entries"].push_back({a, b, to_string(m.entries(a, b))});
      std::filesystem::create_directories(dir);
      std::ofstream(path) << doc.dump() << '\n';
    }
  }
  if (m.rows.size() == m.columns.size() && !m.columns.empty()) {
    sv->lu = std::make_unique<Eigen::FullPivLU<RationalMatrix>>(m.entries);
    if (!sv->lu->isInvertible()) sv->lu.reset();
  }
  return *solvers_.emplace(key, std::move(sv)).first->second;
}

const PartialMatrix& DescentEngine::partial_matrix(int n, int p, int i) { return solver(n, p, i).matrix; }

Certificate DescentEngine::certificate(int n, int p, int i) {
  return check_unitriangular_modP(partial_matrix(n, p, i), spec_.P);
}

LinComb<MZVSymbol> DescentEngine::decompose(const MZVSymbol& z, int i) {
  i = std::max(i, 0);
  if (z.N != spec_.N) throw DomainError("decompose: symbol and descent have different N");
  if (z.k > 0) return decompose(regularize_leading_zeros(z), i);
  if (z.s > 0) {
    MZVSymbol core = z;
    core.s = 0;
    LinComb<MZVSymbol> out;
    for (const auto& [b, c] : decompose(core, i)) {
      MZVSymbol t = b;
      t.s += z.s;
      out.add(t, c);
    }
    return out;
  }
  const auto key = std::make_pair(z, i);
  if (auto it = memo_.find(key); it != memo_.end()) return it->second;

  LinComb<MZVSymbol> res;
  const int p = z.depth();
  if (p == 0) {
    if (i == 0) res.add(z, Rational(1));
  } else {
    const int n = z.weight();
    const auto& sv = solver(n, p, i);
    const auto& m = sv.matrix;
    if (!m.columns.empty()) {
      if (!sv.lu)
        throw CertificateError("singular system at (n,p,i)=(" + std::to_string(n) + "," + std::to_string(p) + "," +
                               std::to_string(i) + ")");
      RationalVector v = RationalVector::Zero(static_cast<Eigen::Index>(m.rows.size()));
      for (const auto& [row, c] : derivation_vector(z, i)) v(sv.row_index.at(row)) = c;
      RationalVector x = sv.lu->solve(v);
      for (Eigen::Index j = 0; j < x.size(); ++j) res.add(m.columns[static_cast<std::size_t>(j)], x(j));
    }
  }
  memo_.emplace(key, res);
  return res;
}

LinComb<MZVSymbol> DescentEngine::decompose(const LinComb<MZVSymbol>& z, int i) {
  LinComb<MZVSymbol> out;
  for (const auto& [s, c] : z) out.add(decompose(s, i), c);
  return out;
}

Correction DescentEngine::solve_correction(const MZVSymbol& b, int i) {
  if (b.N != spec_.N || !is_basis_shape(b)) throw DomainError("solve_correction: not a basis element");
  if (level(b, spec_) > i) throw DomainError("solve_correction: level of the element exceeds i");
  Correction out;
  out.element = b;
  if (b.depth() > 0) out.correction = decompose(b, i + 1).scaled(Rational(-1));
  for (int q = 1; q < b.depth(); ++q)
    for (auto& e : enumerate_basis(spec_.N, b.weight(), q))
      if (level(e, spec_) >= i + 1) out.free_parameters.push_back(std::move(e));
  return out;
}

std::vector<Correction> DescentEngine::corrected_basis(int n, int i) {
  std::vector<Correction> out;
  for (const auto& b : enumerate_basis_all_depths(spec_.N, n))
    if (level(b, spec_) <= i) out.push_back(solve_correction(b, i));
  return out;
}

namespace {

DescentVerdict check_rec(const LinComb<MZVSymbol>& z, DescentEngine& engine) {
  DescentVerdict verdict;
  int p = 0, n = -1;
  for (const auto& [s, c] : z) {
    p = std::max(p, s.depth());
    if (n >= 0 && s.weight() != n) throw DomainError("descent_check: mixed weights");
    n = s.weight();
  }
  if (p == 0) return verdict;
  LinComb<MZVSymbol> top;
  for (const auto& [s, c] : z)
    if (s.depth() == p) top.add(s, c);

  const auto& spec = engine.spec();
  for (int r = 1; r <= n; ++r) {
    const auto fs = spec.functionals(r);
    if (fs.empty()) continue;
    ReducedTensor terms;
    for (const auto& [s, c] : top) {
      MZVSymbol core = s;
      const int pi = core.s;
      core.s = 0;
      if (r > core.weight()) continue;
      for (const auto& [key, cc] : D_rp(core, r).reduced()) {
        TensorKey k = key;
        k.second.s = pi;
        terms.add(k, c * cc);
      }
    }
    for (const auto& f : fs) {
      LinComb<MZVSymbol> y;
      for (const auto& [key, c] : terms) {
        auto w = f.weights.find(key.first.e);
        if (w != f.weights.end()) y.add(key.second, c * w->second);
      }
      if (p > 1) y = engine.decompose(y, 0);
      if (y.empty()) continue;
      if (f.descent) {
        verdict.descends = false;
        verdict.witness = {f.name};
        return verdict;
      }
      if (p > 1) {
        auto sub = check_rec(y, engine);
        if (!sub.descends) {
          sub.witness.insert(sub.witness.begin(), f.name);
          return sub;
        }
      }
    }
  }
  return verdict;
}

}  // namespace

DescentVerdict descent_check(const LinComb<MZVSymbol>& z, DescentEngine& engine) {
  for (const auto& [s, c] : z)
    if (!is_basis_shape(s) || s.N != engine.spec().N)
      throw DomainError("descent_check: " + format_symbol(s) + " is not a basis element");
  return check_rec(z, engine);
}

bool honorary_precheck(const MZVSymbol& z, int N) {
  if (z.N != N) throw DomainError("honorary_precheck: symbol and N differ");
  if (N == 2) return std::none_of(z.eps.begin(), z.eps.end(), [](int e) { return e == 1; });
  if (N == 6) {
    bool plus = true, minus = true;
    long tail = 0;
    for (int j = z.depth() - 1; j >= 0; --j) {
      tail += z.eps[static_cast<std::size_t>(j)];
      const int eta = mod(-tail, 6);
      plus = plus && (eta == 0 || eta == 1);
      minus = minus && (eta == 0 || eta == 5);
    }
    return plus || minus;
  }
  throw DomainError("honorary_precheck is defined for N = 2 and N = 6 only");
}

}  // namespace mzv
