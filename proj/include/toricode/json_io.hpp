#pragma once

#include "toricode/toric_code.hpp"

#include "json.hpp"

#include <string>
#include <vector>

namespace toricode {

// Insertion order preserved so reports print in a stable, readable order.
using Json = nlohmann::ordered_json;

// Parsers used by the CLI problem reader. Every failure throws
// validation_error with a message citing the offending path, e.g.
// "$.lattice.in_u_coords[0][1]: expected an integer". Integers may arrive
// as JSON numbers or as decimal strings (matrices always leave as strings,
// so round-tripped reports stay exact beyond 2^53).
Int json_to_int(const Json& j, const std::string& path);
IntVec json_to_vector(const Json& j, const std::string& path);
IntMat json_to_matrix(const Json& j, const std::string& path);

// {"p":7,"k":1}, {"p":2,"k":4,"modulus":[1,1,0,0,1]} (constant term first),
// {"kind":"real"} or {"kind":"complex"}.
FieldSpec json_to_field(const Json& j, const std::string& path);

// {"rays":[[1,0],[0,1],[-1,2],[0,-1]]} or {"hirzebruch":2}.
ToricVariety variety_from_problem(const Json& problem);

// {"lattice":{"in_u_coords":[[3,0],[0,5]]}} for coordinates in the columns
// of phi, or {"lattice":{"in_z_coords":[[...],[...]]}} listing ambient
// generators (one vector of length r per entry).
SubgroupSpec subgroup_from_problem(const Json& problem, const ToricVariety& x);

// Emission: numbers when they fit a double-safe integer, decimal strings
// beyond that; matrices always as arrays-of-row-arrays of decimal strings.
Json int_to_json(const Int& v);
Json vector_to_json(const IntVec& v);
Json matrix_to_json(const IntMat& m);
Json factors_to_json(const std::vector<Int>& factors);

std::string field_label(const FieldSpec& f);

}  // namespace toricode
