#pragma once

// JSON literals for rings, elements, ideals and groups.

#include <string>

#include "json.hpp"
#include "pseudomod/group.hpp"

namespace pseudomod {

using json = nlohmann::json;

inline constexpr const char* kRingSchema = "pseudomod.ring/1";

/// {"schema", "char": p^k, "basis": n, "mul": n x n x n, "one": [..], "rel": [[..]] when nonzero}.
json ring_to_json(const FiniteRing& r);
/// Parses and validates a ring literal; errors name the offending field.
FiniteRing ring_from_json(const json& j, const std::string& where = "ring");

json vec_to_json(const Vec& v);
/// An element is either an integer (a multiple of one) or a coordinate list.
Vec element_from_json(const FiniteRing& r, const json& j, const std::string& where);
/// Howell rows of the ideal, with its log_p size.
json ideal_to_json(const FiniteRing& r, const RowSpan& ideal);
Mat rows_from_json(const FiniteRing& r, const json& j, const std::string& where);

/// {"kind": cyclic | dihedral | s3 | quaternion | permutation | table, ...}.
FiniteGroup group_from_json(const json& j, const std::string& where = "group");
json group_to_json(const FiniteGroup& g);

}  // namespace pseudomod
