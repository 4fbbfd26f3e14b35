#pragma once

#include "gla/folding.hpp"
#include "gla/reps.hpp"

#include "json.hpp"

namespace gla {

using nlohmann::json;

/// {"order": n, "coeffs": ["p/q", ...]}; fraction strings are canonical.
json cyc_json(const CycNum& a);
json rat_json(const Rat& r);

/// Full structure-constant export: basis labels, sparse brackets for i < j,
/// grading dimensions, and the automorphism order. Top-level "schema": 1.
json algebra_json(const GradedLieAlgebra& alg);

/// Exponent table of the cocycle on the cyclic generators.
json cocycle_json(const Cocycle& c);

json validation_json(const ValidationReport& r);

/// Representation export: {"dim", "field_order", "generators": {label: M}}.
json rep_json(const GradedLieAlgebra& alg, const HeisenbergRep& rep,
              const GRepresentation& grep);

/// Structure-constant schema of the ambient algebra with a "fold" block
/// describing the fixed subalgebra.
json fold_json(const FoldResult& r);

json descent_json(const G2QResult& r);

/// Serializes with sorted keys and writes through a temp file + rename so
/// partial artifacts never appear.
void write_json_atomic(const std::string& path, const json& j);

} // namespace gla
