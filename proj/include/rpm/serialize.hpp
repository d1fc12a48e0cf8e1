#pragma once

#include <string>
#include <vector>

#include "json.hpp"
#include "rpm/asm.hpp"
#include "rpm/hexagon.hpp"
#include "rpm/orbits.hpp"
#include "rpm/polynomial.hpp"
#include "rpm/simulate.hpp"
#include "rpm/stationary.hpp"
#include "rpm/verify.hpp"

namespace rpm {

using Json = nlohmann::ordered_json;

// Big integers and rationals are written as decimal strings.
Json to_json(const HeightPath& path);
HeightPath path_from_json(const Json& j);

Json to_json(const StationaryState& state);
// Rebuilds a state written by to_json. Paths are matched to the enumerated
// family, so any order is accepted. Throws std::invalid_argument when the
// document does not cover the family exactly.
StationaryState state_from_json(const Json& j);

Json to_json(const Summary& s);
Json to_json(const DetailedStats& d, Model model, int L);
Json to_json(const Orbit& orbit, const StationaryState* state);
Json to_json(const VerificationReport& report);
Json to_json(const std::vector<RelationCheck>& checks);
Json to_json(const SimResult& result);
Json to_json(const std::vector<AsmRow>& rows);

std::string state_csv(const StationaryState& state);
std::string asm_csv(const std::vector<AsmRow>& rows);
std::string histogram_csv(const SimResult& result);
std::string checks_csv(const std::vector<RelationCheck>& checks);

// Description of every document the command line writes.
Json output_schema();

}  // namespace rpm
