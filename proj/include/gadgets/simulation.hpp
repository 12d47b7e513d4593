#pragma once

/// @file simulation.hpp
/// @brief Externally observable behavior of a construction, equivalence
///        checking against a target gadget, and catalog verification.

#include <array>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "gadgets/system.hpp"

namespace gadgets {

/// A construction, a bijection from its externals onto target locations, the
/// target gadget, and the target state the initial configuration should match.
struct SimulationClaim {
    std::string name;
    SystemOfGadgets construction;
    Gadget target;
    std::map<std::string, std::string> location_map;  // external label -> target location
    std::string initial_state;                        // target state label
};

/// Behavior of a construction at its external locations: reachable
/// outside-configurations, their bisimulation classes, and derived traversals.
struct InducedGadget {
    std::vector<std::string> locations;  // external labels, construction order
    std::vector<PackedState> configs;    // outside configurations, discovery order
    std::vector<int> config_class;       // bisimulation class per config
    int num_classes = 0;
    int initial_config = 0;

    // (config, location, config', location') and the deduplicated quotient.
    std::vector<std::array<int, 4>> config_edges;
    std::vector<std::array<int, 4>> class_edges;

    uint64_t explored = 0;  // distinct (state vector, node) pairs visited

    int initial_class() const { return config_class[initial_config]; }
    /// The quotient as a plain gadget (classes become states "c0", "c1", ...).
    Gadget to_gadget(const std::string& name) const;
};

/// Computes the induced gadget of a construction over its declared externals.
/// Walks enter at one external and end at the first external reached.
InducedGadget induce(const SystemOfGadgets& construction, uint64_t cap = kDefaultConfigCap);

struct Counterexample {
    std::string state;      // target state label where behaviors diverge
    std::string location;   // entry location (target labels)
    std::string direction;  // "a->b"
    std::string detail;     // which side admits it / why it distinguishes
};

struct EquivalenceResult {
    bool equivalent = false;
    // target state label -> induced classes matched to it
    std::vector<std::pair<std::string, std::vector<int>>> correspondence;
    std::optional<Counterexample> counterexample;
    InducedGadget induced;
};

/// Accepts iff the induced gadget, relabeled through the claim's location map,
/// is bisimilar to the target from the claimed initial state.
EquivalenceResult check_equivalence(const SimulationClaim& claim,
                                    uint64_t cap = kDefaultConfigCap);

/// True iff the induced gadget of a hallway-free construction is deterministic
/// and reversible. Throws ValidationError when a non-deterministic gadget is
/// present.
bool composed_is_deterministic_reversible(const SystemOfGadgets& construction,
                                          uint64_t cap = kDefaultConfigCap);

struct ClaimReport {
    std::string name;
    bool pass = false;
    std::string message;
    uint64_t explored = 0;
    int outside_configs = 0;
    int classes = 0;
    double seconds = 0.0;
};

/// Loads and checks one claim file.
ClaimReport verify_claim_file(const std::string& path, uint64_t cap = kDefaultConfigCap);

/// Runs every *.json claim in a directory (sorted by filename).
std::vector<ClaimReport> verify_catalog(const std::string& claims_dir,
                                        uint64_t cap = kDefaultConfigCap);

}  // namespace gadgets
