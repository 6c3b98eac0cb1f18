#pragma once

// JSON and text renderings of the library's values.
//
//   combination   {"terms": [{"coeff": "p/q", "class": "a1.b1"}, ...]}
//                 terms sorted by class string; homology classes are
//                 integer arrays and sort by vector order
//   polynomial    {"polynomial": "t^2-t+1"}
//   presentation  {"generators": [...], "relators": [...]}
//   cover         {"meridian": "m", "generators": [...],
//                  "relators": ["a1(0).A1(1)", ...], "pairs": [{"y", "z"}]}
//   model         {"genus": g, "monodromy": {"a1": word, ...},
//                  "inverse": {"a1": word, ...}, "alexander": "t^2-t+1"}

#include <string>
#include <string_view>

#include "json.hpp"

#include "goldknot/cover.hpp"
#include "goldknot/goldman.hpp"
#include "goldknot/knots.hpp"
#include "goldknot/laurent.hpp"
#include "goldknot/liealg.hpp"
#include "goldknot/presentation.hpp"
#include "goldknot/words.hpp"

namespace goldknot {

using Json = nlohmann::ordered_json;

Json to_json(const LinearCombination& c, const Alphabet& alphabet);
Json to_json(const HomologyCombination& c);
Json to_json(const LaurentPolynomial& p);
Json to_json(const GroupPresentation& p);
Json to_json(const LeveledPresentation& p);
Json to_json(const TOrbitClass& o, const Alphabet& alphabet);

/// One "coeff class" line per term, "0" for the empty combination.
std::string to_text(const LinearCombination& c, const Alphabet& alphabet);
std::string to_text(const HomologyCombination& c);
std::string to_text(const GroupPresentation& p);
std::string to_text(const LeveledPresentation& p);

FiberedKnotModel parse_model(const Json& doc, std::string name);
FiberedKnotModel load_model(const std::string& path);

}  // namespace goldknot
