#pragma once

/// @file json_io.hpp
/// @brief JSON (de)serialization for gadgets, systems, puzzles, claims, and
///        solutions, plus small file helpers.

#include <json.hpp>

#include "gadgets/gadget.hpp"
#include "gadgets/simulation.hpp"
#include "gadgets/solver.hpp"
#include "gadgets/system.hpp"

namespace gadgets {

struct IOError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

nlohmann::json gadget_to_json(const Gadget& g);
Gadget gadget_from_json(const nlohmann::json& j);

/// Systems reference gadget types by catalog name; a file may carry extra
/// inline definitions under "types".
nlohmann::json system_to_json(const SystemOfGadgets& sys);
SystemOfGadgets system_from_json(const nlohmann::json& j);

nlohmann::json puzzle_to_json(const Puzzle& p);
Puzzle puzzle_from_json(const nlohmann::json& j);

nlohmann::json claim_to_json(const SimulationClaim& c);
SimulationClaim claim_from_json(const nlohmann::json& j);

nlohmann::json solution_to_json(const CompiledSystem& cs, const Solution& s);

nlohmann::json load_json_file(const std::string& path);
void save_json_file(const std::string& path, const nlohmann::json& j);

}  // namespace gadgets
