#pragma once

// JSON encodings of the library's values.  Rationals are always strings such
// as "3" or "-1/2"; subspaces are stored by their canonical bases.

#include <nlohmann/json.hpp>

#include "dfinv/fox.hpp"
#include "dfinv/omega.hpp"
#include "dfinv/tcone.hpp"
#include "dfinv/tori.hpp"

namespace dfinv::io {

using Json = nlohmann::ordered_json;

Json to_json(const Rational& q);
/// Accepts a string "p/q" or a JSON integer.
Rational rational_from_json(const Json& j);

Json to_json(const RationalVector& v);
RationalVector vector_from_json(const Json& j, std::size_t expected_size);

/// {"n": n, "basis": [[...], ...]}
Json to_json(const RationalSubspace& s);
RationalSubspace subspace_from_json(const Json& j);

/// {"lambda": [...], "basis": [[...], ...]}
Json to_json(const TranslatedTorus& c);
TranslatedTorus component_from_json(const Json& j, std::size_t n);

/// {"n": n, "degree": i, "components": [...]}; degree is omitted if absent.
Json to_json(const VarietyDescription& d, std::optional<std::size_t> degree = std::nullopt);
VarietyDescription description_from_json(const Json& j);

/// {"n": n, "graded": [{"degree": i, "components": [...]}, ...]}
Json to_json(const GradedDescription& g);
GradedDescription graded_from_json(const Json& j);

/// {"n": n, "subspaces": [basis, ...]}
Json to_json(const SubspaceArrangement& a);
SubspaceArrangement arrangement_from_json(const Json& j);

/// [{"exponents": [...], "coeff": "..."}, ...]
Json to_json(const LaurentPoly& f);
LaurentPoly laurent_from_json(const Json& j, std::size_t n);

Json to_json(const AdmissiblePartition& p, const LaurentPoly& f);

/// {"n": n, "rows": m, "cols": q, "torsion": [...], "entries": [["poly", ...], ...]}
Json to_json(const AlexanderMatrix& a);

/// {"member": bool, "blockers": [{"component": ..., "reason": ...}]}
Json to_json(const OmegaVerdict& v);
OmegaVerdict verdict_from_json(const Json& j, std::size_t n);

Json to_json(const NonOpenWitness& w);
Json to_json(const FpkReport& r);
Json to_json(const PluckerForm& f);

}  // namespace dfinv::io
