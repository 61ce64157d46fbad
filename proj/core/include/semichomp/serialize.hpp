#pragma once

#include <string>

#include <json.hpp>

#include "semichomp/decider.hpp"
#include "semichomp/families.hpp"
#include "semichomp/semigroup.hpp"
#include "semichomp/state_codec.hpp"
#include "semichomp/torsion.hpp"

namespace semichomp {

using Json = nlohmann::json;

// Bumped whenever a field is renamed or removed; additions keep the version.
inline constexpr int kSchemaVersion = 1;

// {"schemaVersion": 1, "kind": kind, ...body}
Json envelope(const std::string& kind, Json body);

Json semigroup_json(const NumericalSemigroup& s);
Json apery_json(const AperySet& ap);
Json verdict_json(const Verdict& v);
Json classification_json(const ClassificationReport& r);
Json state_json(const StateCodec& codec, const GameState& st);
Json bound_json(const BigBound& b);
Json poset_json(const FinitePoset& poset, const ElementSet& position);

Json torsion_element_json(const TorsionSemigroup& s, const TorsionElement& x);
Json torsion_semigroup_json(const TorsionSemigroup& s);
Json torsion_apery_json(const TorsionSemigroup& s, const TorsionApery& ap);

Json error_json(const Error& e);

}  // namespace semichomp
