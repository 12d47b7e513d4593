#pragma once

/// @file catalog.hpp
/// @brief The standard gadget catalog: branching hallway, 1-toggle, the nine
///        2-tunnel gadgets, crossover, spinners, deterministic fork, and the
///        3-tunnel toggle-lock / wire-lock-wire gadgets.
///
/// Conventions baked into the data:
///  - 2-tunnel gadgets use locations [TL, TR, BL, BR] with clockwise boundary
///    order [TL, TR, BR, BL]. Non-crossing tunnels pair (TL,TR) and (BL,BR);
///    crossing tunnels pair (TL,BR) and (TR,BL).
///  - State "1" of ap2t has tunnel (TL,TR) traversable TL->TR and tunnel
///    (BL,BR) traversable BR->BL. Lock tunnels are open in state "1".
///  - spinnerK cycles clockwise in state "1" and counterclockwise in "2";
///    every traversal flips the state.

#include <map>
#include <string>

#include "gadgets/gadget.hpp"

namespace gadgets {

/// All fixed catalog gadgets by name (spinners included for k = 2..6).
const std::map<std::string, Gadget>& standard_catalog();

/// Looks up a catalog gadget; understands any "spinnerK" with K >= 2.
/// Throws ValidationError for unknown names.
Gadget catalog_gadget(const std::string& name);

/// k-spinner: 2 states, k locations on a cycle, one-way ring that reverses
/// direction on every traversal.
Gadget make_spinner(int k);

}  // namespace gadgets
