#pragma once

// JSON schemas for scalars, polynomials, variable tables, structure-constant
// tables, sparse matrices and cohomology reports; exact round-trips for the
// value types.

#include "bvw/complexes.hpp"
#include "bvw/triples.hpp"

#include <json.hpp>

namespace bvw {

using Json = nlohmann::json;

Json to_json(RadicalScalar const &a);
RadicalScalar radical_from_json(Json const &j);

Json to_json(ComplexRadical const &z);
ComplexRadical complex_from_json(Json const &j);

Json to_json(Poly const &p);
Poly poly_from_json(VarTablePtr const &tab, Json const &j);

Json to_json(VariableTable const &tab);
Json to_json(StructureConstants const &f);
Json to_json(SparseMatrix const &m);
Json to_json(CohomologyReport const &r);
Json triple_to_json(BVSpectralTriple const &t);

} // namespace bvw
