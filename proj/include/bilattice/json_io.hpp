#pragma once

// JSON exchange formats. Every number is an exact string in the scalar text
// format, so documents round-trip byte-identically through dump/parse.

#include <json.hpp>

#include "bilattice/classical.hpp"
#include "bilattice/classifier.hpp"
#include "bilattice/families.hpp"
#include "bilattice/functional.hpp"
#include "bilattice/recurrence.hpp"
#include "bilattice/sigma_ring.hpp"

namespace bilattice {

using Json = nlohmann::ordered_json;

Json scalar_to_json(const ExactScalar& x);
ExactScalar scalar_from_json(const Json& j);

Json scalars_to_json(const std::vector<ExactScalar>& xs);
std::vector<ExactScalar> scalars_from_json(const Json& j);

/// {"plain": "...", "sigma": "..."}
Json sigma_scalar_to_json(const SigmaScalar& x);
SigmaScalar sigma_scalar_from_json(const Json& j);

/// {"even": [...], "odd": [...], "gamma": "..."}
Json to_json(const SigmaPoly& f);
SigmaPoly sigma_poly_from_json(const Json& j);

/// {"m": [{"plain","sigma"}...], "gamma": "..."}; functionals that are not
/// sigma-linear also carry "twisted" in the same shape.
Json to_json(const MomentFunctional& u);
MomentFunctional functional_from_json(const Json& j);

/// {"B": [...], "C": [...], "h": [...], "checked_to": N}
Json to_json(const RecurrenceTable& t);
RecurrenceTable table_from_json(const Json& j);

/// {"a","s","t","k": [...], "R": [[coefficients]...]}; t starts at t_1.
Json to_json(const RodriguesData& r);
RodriguesData rodrigues_from_json(const Json& j);

Json to_json(const RegularityVerdict& v);

/// {"family": "H", "params": {...}, "root": "..."}
Json to_json(const FamilyDescriptor& d);
FamilyDescriptor descriptor_from_json(const Json& j);

Json to_json(const AffineMap& m);

/// {"case","family","params","map":{"lambda","mu"},"symmetric_params":{...},...}
Json to_json(const Classification& c);

/// {"identity","params","checked_to","failures",...}
Json to_json(const IdentityReport& r);

}  // namespace bilattice
