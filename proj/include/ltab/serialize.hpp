#pragma once

#include <string>

#include <json.hpp>

#include "ltab/l_prime.hpp"
#include "ltab/l_tableaux.hpp"
#include "ltab/rsk.hpp"
#include "ltab/tableaux.hpp"

namespace ltab {

/// Key order is part of the output format, so objects keep insertion order.
using Json = nlohmann::ordered_json;

// Schemas (rows always bottom row first, French convention):
//   filling: {"shape": [..], "inner": [..]?, "rows": [[..]], "orientation": "standard"|"rotated180", "box": [h, w]?}
//   word:    {"r": int, "letters": [..]}
//   rsk:     {"P": filling, "Q": filling}
//   grid:    {"family": "l"|"restricted"|"lprime", "params": {..}, "grid": [[{"kind": .., "value": ..}]]}
// "inner" is omitted when empty and "box" when the orientation is standard;
// "value" is absent exactly for gray cells.

Json to_json(const Filling& f);
Json to_json(const Word& w);
Json to_json(const RskPair& pair);
Json to_json(const LTableau& t);
Json to_json(const LPrimeTableau& t);
/// L-tableau tagged as a restricted tableau with the given alphabet cut.
Json to_json_restricted(const LTableau& t, int i);

/// Parsers throw TableauError(validation, "json.*") on malformed input.
Filling filling_from_json(const Json& j);
Word word_from_json(const Json& j);
RskPair rsk_pair_from_json(const Json& j);
LTableau l_tableau_from_json(const Json& j);
LPrimeTableau lprime_from_json(const Json& j);

std::string to_ascii(const Filling& f);
std::string to_ascii(const LTableau& t);
std::string to_ascii(const LPrimeTableau& t);

/// ytableau bodies in the colour scheme of the usual figures: red cells
/// shaded, blue entries in blue, gray cells shaded gray, \none for holes.
std::string to_latex(const Filling& f);
std::string to_latex(const LTableau& t);
std::string to_latex(const LPrimeTableau& t);

}  // namespace ltab
