#pragma once

/// @file constructions.hpp
/// @brief Builders for the shipped simulation-claim catalog. The claims are
///        written to catalog/claims/*.json and verified behaviorally; these
///        builders are the single source the files are generated from.

#include <vector>

#include "gadgets/simulation.hpp"

namespace gadgets {

/// Every shipped construction claim, in catalog order.
std::vector<SimulationClaim> all_claims();

/// Lookup by claim name; throws ValidationError when absent.
SimulationClaim claim_by_name(const std::string& name);

}  // namespace gadgets
