#ifndef FGLFORGE_JSON_IO_HPP
#define FGLFORGE_JSON_IO_HPP

#include <string>
#include <string_view>

#include "json.hpp"

#include "fglforge/descent.hpp"
#include "fglforge/fgl.hpp"
#include "fglforge/koszul.hpp"
#include "fglforge/steenrod.hpp"

namespace fglforge {

using Json = nlohmann::ordered_json;

// {"alphabet":"b"|"m"|"v", "prime":p|null, "dimBound":D|null,
//  "terms":[{"coeff":"num/den","exps":{"1":2}}, ...]} in canonical order.
Json to_json(const GradedPoly& p);
GradedPoly poly_from_json(const Json& j);

// GradedPoly fields plus "tlow", "thigh" (null when unbounded) and
// "coeffs":{"-2":<poly>, ...} in increasing t-degree.
Json to_json(const TLaurent& a);
TLaurent tlaurent_from_json(const Json& j);

// Univariate or bivariate series: GradedPoly header plus "vars", "xBound" and
// "coeffs":[{"i":i,"j":j,"terms":[...]}, ...] in (i, j) order.
Json to_json(const Series& s);
Series series_from_json(const Json& j);

// Series JSON plus "kind".
Json to_json(const FormalGroupLaw& law);
FormalGroupLaw fgl_from_json(const Json& j);

Json to_json(const SyzygyReport& r);
SyzygyReport syzygy_report_from_json(const Json& j);

// {"support":[{"label":"e0","codim":3}], "coefficients":[<poly>|"text"], "level":m}
Json to_json(const FormalRelation& r);
FormalRelation formal_relation_from_json(const Json& j, const Alphabet& alphabet, int dim_bound);

Json to_json(const CongruenceReport& r);
Json to_json(const FglAxiomReport& r);

// Inverse of GradedPoly::to_string: "2*v1^3 - 3/2*v2 + 1". Every generator
// symbol must match the alphabet.
GradedPoly parse_poly(std::string_view text, const Alphabet& alphabet, int dim_bound);

// An element given on the command line: JSON (starting with '{') or text.
GradedPoly parse_element(const std::string& arg, const Alphabet& alphabet, int dim_bound);

} // namespace fglforge

#endif
