#ifndef PARKSPACE_SERIALIZE_HPP
#define PARKSPACE_SERIALIZE_HPP

#include <nlohmann/json.hpp>

#include "parkspace/exact.hpp"
#include "parkspace/groups.hpp"

namespace parkspace {

using Json = nlohmann::json;

// Canonical polynomial form: {"min_deg": int, "coeffs": [["num","den"], ...]}
// with all integers serialized as decimal strings.
Json laurent_to_json(const LaurentPoly& l);
Json poly_to_json(const Poly& p);
Json rational_to_json(const Rational& r);
Json rational_function_to_json(const RationalFunction& f);
Json upoly_to_json(const UPoly& h);

LaurentPoly laurent_from_json(const Json& j);
Poly poly_from_json(const Json& j);
Rational rational_from_json(const Json& j);

Json residue_condition_to_json(const ResidueCondition& c);
ResidueCondition residue_condition_from_json(const Json& j);

}  // namespace parkspace

#endif  // PARKSPACE_SERIALIZE_HPP
