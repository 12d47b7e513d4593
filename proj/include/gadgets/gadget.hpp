#pragma once

/// @file gadget.hpp
/// @brief Gadget state spaces: structure checks, tunnel decomposition, and the
///        hardness classification of deterministic reversible 2-state tunnel gadgets.

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace gadgets {

/// Raised when an input violates a structural precondition.
struct ValidationError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// Raised when an exploration exceeds its configuration cap.
struct ResourceLimitError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

/// One directed edge of a state space: entering at (state, location) exits
/// at (state', location'), leaving the gadget in state'.
struct Transition {
    int from_state = 0;
    int from_loc = 0;
    int to_state = 0;
    int to_loc = 0;

    auto operator<=>(const Transition&) const = default;
};

/// A gadget is its state space: a directed graph on (state, location) pairs.
/// Transitions are kept sorted and duplicate-free; self-loops are rejected.
class Gadget {
  public:
    Gadget() = default;
    Gadget(std::string name, std::vector<std::string> locations,
           std::vector<std::string> states, std::vector<Transition> transitions,
           std::vector<std::string> rotation = {});

    const std::string& name() const { return name_; }
    const std::vector<std::string>& locations() const { return locations_; }
    const std::vector<std::string>& states() const { return states_; }
    const std::vector<Transition>& transitions() const { return transitions_; }

    /// Clockwise boundary order of locations used when the gadget is drawn as
    /// a disk. Defaults to declaration order.
    const std::vector<std::string>& rotation() const { return rotation_; }

    int num_locations() const { return static_cast<int>(locations_.size()); }
    int num_states() const { return static_cast<int>(states_.size()); }

    int location_index(const std::string& label) const;  // throws ValidationError
    int state_index(const std::string& label) const;     // throws ValidationError

    bool has_transition(const Transition& t) const;

    bool operator==(const Gadget&) const = default;

  private:
    std::string name_;
    std::vector<std::string> locations_;
    std::vector<std::string> states_;
    std::vector<Transition> transitions_;
    std::vector<std::string> rotation_;
};

/// Behavior of one tunnel of a 2-state gadget.
enum class TunnelKind {
    TrivialOpen,    // passable both ways in every state, no state change
    TrivialClosed,  // never passable
    Tripwire,       // passable both ways, every pass flips the state
    Lock,           // passable both ways in exactly one state, no state change
    Toggle,         // one-way, direction flips with the state
};

std::string tunnel_kind_name(TunnelKind k);

/// Perfect matching of locations into tunnels, with per-tunnel kinds when the
/// gadget has at most two states and each tunnel matches a known pattern.
struct TunnelDecomposition {
    std::vector<std::pair<int, int>> tunnels;          // location index pairs, first < second
    std::optional<std::vector<TunnelKind>> kinds;      // parallel to tunnels
};

enum class ComplexityClass { PSpaceComplete, PolynomialTime };

std::string complexity_class_name(ComplexityClass c);

/// True iff every (state, location) vertex has out-degree at most one.
bool is_deterministic(const Gadget& g);

/// True iff the transition set is closed under edge reversal.
bool is_reversible(const Gadget& g);

/// Finds the lexicographically first perfect matching of locations such that
/// every transition stays inside a single pair. Returns nothing when no such
/// matching exists (odd location count, or a transition spans any matching).
std::optional<TunnelDecomposition> tunnel_decomposition(const Gadget& g);

/// Applies the dichotomy for deterministic reversible <=2-state tunnel gadgets:
/// PSPACE-complete iff the nontrivial tunnel kinds contain two toggles,
/// toggle+tripwire, toggle+lock, or tripwire+lock. Throws ValidationError for
/// gadgets outside the characterized class.
ComplexityClass classify_complexity(const Gadget& g);

/// Builds a 2-state gadget with the given tunnel kinds, one tunnel per entry.
/// Toggles point from the lower-numbered location in state 1; locks are open
/// in state 1. Used to synthesize classifier inputs.
Gadget make_tunnel_gadget(const std::string& name, const std::vector<TunnelKind>& kinds);

}  // namespace gadgets
