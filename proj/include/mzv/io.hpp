#pragma once

// Text and JSON forms of symbols and combinations.
//
//   zeta[N](k; x1,...,xp | e1,...,ep) * pi^s    roots as exponents of ξ_N
//   zeta(3,-5)                                  N = 2 shorthand, -x marks root -1
//   I[N](a0; a1,...,an; b)                      letters 0 or u<e> for ξ_N^e
//   zl[N](r | e)                                ζ^l(r; ξ_N^e)

#include "mzv/coaction.hpp"
#include "mzv/lincomb.hpp"
#include "mzv/words.hpp"

#include <json.hpp>

#include <string>
#include <string_view>

namespace mzv {

std::string format_symbol(const MZVSymbol& z);
// N = 2 signed shorthand when k = 0; falls back to format_symbol otherwise.
std::string format_symbol_short(const MZVSymbol& z);
MZVSymbol parse_symbol(std::string_view text);

std::string format_letter(Letter a);
std::string format_word(const IISymbol& w);
IISymbol parse_word(std::string_view text);

std::string format_depth1(const Depth1Symbol& s);

// {"terms": [{"symbol", "coeff"}], "meta": {"N", "weight", "depth"}}, terms in
// key order. Weight and depth are null when the terms disagree or are absent.
nlohmann::ordered_json serialize(const LinComb<MZVSymbol>& comb, int N);
LinComb<MZVSymbol> deserialize(const nlohmann::json& doc);

}  // namespace mzv
