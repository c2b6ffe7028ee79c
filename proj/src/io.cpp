#include "mzv/io.hpp"

#include "mzv/errors.hpp"

#include <regex>
#include <sstream>

namespace mzv {

namespace {

std::string join(const std::vector<int>& v) {
  std::string out;
  for (std::size_t j = 0; j < v.size(); ++j) out += (j ? "," : "") + std::to_string(v[j]);
  return out;
}

std::vector<std::string> split(const std::string& text, char sep) {
  std::vector<std::string> out;
  std::stringstream in(text);
  std::string item;
  while (std::getline(in, item, sep)) out.push_back(item);
  return out;
}

std::string trim(std::string_view s) {
  const auto b = s.find_first_not_of(" \t\n");
  if (b == std::string_view::npos) return {};
  const auto e = s.find_last_not_of(" \t\n");
  return std::string(s.substr(b, e - b + 1));
}

int to_int(const std::string& s) {
  const std::string t = trim(s);
  static const std::regex integer(R"(-?\d{1,9})");
  if (!std::regex_match(t, integer)) throw DomainError("expected an integer, got '" + t + "'");
  return std::stoi(t);
}

std::vector<int> int_list(const std::string& text) {
  std::vector<int> out;
  if (trim(text).empty()) return out;
  for (const auto& item : split(text, ',')) out.push_back(to_int(item));
  return out;
}

std::string pi_suffix(int s) { return s > 0 ? " * pi^" + std::to_string(s) : ""; }

}  // namespace

std::string format_symbol(const MZVSymbol& z) {
  std::string out = "zeta[" + std::to_string(z.N) + "](" + std::to_string(z.k) + ";";
  if (!z.x.empty()) out += " " + join(z.x);
  out += " |";
  if (!z.eps.empty()) out += " " + join(z.eps);
  return out + ")" + pi_suffix(z.s);
}

std::string format_symbol_short(const MZVSymbol& z) {
  if (z.N != 2 || z.k != 0) return format_symbol(z);
  std::string out = "zeta(";
  for (int j = 0; j < z.depth(); ++j)
    out += (j ? "," : "") + std::string(z.eps[static_cast<std::size_t>(j)] ? "-" : "") +
           std::to_string(z.x[static_cast<std::size_t>(j)]);
  return out + ")" + pi_suffix(z.s);
}

MZVSymbol parse_symbol(std::string_view text) {
  static const std::regex full(R"(\s*zeta\[\s*(\d+)\s*\]\(\s*(\d+)\s*;([^|]*)\|([^)]*)\)\s*(?:\*\s*pi\^(\d+))?\s*)");
  static const std::regex shorthand(R"(\s*zeta\(([^)]*)\)\s*(?:\*\s*pi\^(\d+))?\s*)");
  const std::string s(text);
  std::smatch m;
  if (std::regex_match(s, m, full)) {
    const int s_pow = m[5].matched ? to_int(m[5]) : 0;
    return make_mzv(to_int(m[1]), int_list(m[3]), int_list(m[4]), to_int(m[2]), s_pow);
  }
  if (std::regex_match(s, m, shorthand)) {
    std::vector<int> x, e;
    for (int v : int_list(m[1])) {
      if (v == 0) throw DomainError("zero argument in '" + s + "'");
      x.push_back(v < 0 ? -v : v);
      e.push_back(v < 0 ? 1 : 0);
    }
    return make_mzv(2, x, e, 0, m[2].matched ? to_int(m[2]) : 0);
  }
  throw DomainError("malformed symbol '" + s + "'");
}

std::string format_letter(Letter a) { return a.is_zero() ? "0" : "u" + std::to_string(a.exponent()); }

std::string format_word(const IISymbol& w) {
  std::string out = "I[" + std::to_string(w.N) + "](" + format_letter(w.start) + ";";
  for (std::size_t j = 0; j < w.body.size(); ++j) out += (j ? "," : " ") + format_letter(w.body[j]);
  return out + "; " + format_letter(w.end) + ")";
}

IISymbol parse_word(std::string_view text) {
  static const std::regex shape(R"(\s*I\[\s*(\d+)\s*\]\(([^;]*);([^;]*);([^)]*)\)\s*)");
  const std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, shape)) throw DomainError("malformed word '" + s + "'");
  const int N = to_int(m[1]);
  if (!supported_modulus(N)) throw DomainError("unsupported modulus N=" + std::to_string(N));
  auto letter = [&](const std::string& raw) {
    const std::string t = trim(raw);
    if (t == "0") return Letter::zero();
    if (t.size() < 2 || t[0] != 'u') throw DomainError("malformed letter '" + t + "'");
    return Letter::root(mod(to_int(t.substr(1)), N));
  };
  IISymbol w{N, letter(m[2]), {}, letter(m[4])};
  if (!trim(m[3].str()).empty())
    for (const auto& item : split(m[3], ',')) w.body.push_back(letter(item));
  return w;
}

std::string format_depth1(const Depth1Symbol& s) {
  return "zl[" + std::to_string(s.N) + "](" + std::to_string(s.r) + " | " + std::to_string(s.e) + ")";
}

nlohmann::ordered_json serialize(const LinComb<MZVSymbol>& comb, int N) {
  nlohmann::ordered_json doc;
  doc["terms"] = nlohmann::ordered_json::array();
  std::optional<int> weight, depth;
  bool uniform_w = true, uniform_d = true;
  for (const auto& [z, c] : comb) {
    doc["terms"].push_back({{"symbol", format_symbol(z)}, {"coeff", to_string(c)}});
    if (weight && *weight != z.weight()) uniform_w = false;
    if (depth && *depth != z.depth()) uniform_d = false;
    weight = z.weight();
    depth = z.depth();
  }
  doc["meta"]["N"] = N;
  doc["meta"]["weight"] = weight && uniform_w ? nlohmann::ordered_json(*weight) : nlohmann::ordered_json();
  doc["meta"]["depth"] = depth && uniform_d ? nlohmann::ordered_json(*depth) : nlohmann::ordered_json();
  return doc;
}

LinComb<MZVSymbol> deserialize(const nlohmann::json& doc) {
  LinComb<MZVSymbol> out;
  if (!doc.contains("terms") || !doc["terms"].is_array()) throw DomainError("document has no terms array");
  for (const auto& t : doc["terms"])
    out.add(parse_symbol(t.at("symbol").get<std::string>()), parse_rational(t.at("coeff").get<std::string>()));
  return out;
}

}  // namespace mzv
