#pragma once

/// @file reduction.hpp
/// @brief Compiles prenex 3-CNF quantified formulas into gadget puzzles and
///        rewrites puzzles onto a single hard-gadget basis via the
///        construction catalog.

#include <map>

#include "gadgets/qbf.hpp"
#include "gadgets/solver.hpp"

namespace gadgets {

struct ReductionOutput {
    Puzzle puzzle;
    /// (variable, 1-based occurrence) -> instance id whose lock realizes it.
    std::map<std::pair<int, int>, std::string> literal_index;
    /// Gadget counts by type plus "instances", "connections", "crossings".
    std::map<std::string, int> stats;
};

/// Emits a puzzle over stacked antiparallel 2-toggle-locks, crossovers, and
/// branching hallways that is solvable iff the formula is true. When
/// `planarize` is set, crossings of the layered layout are resolved by
/// crossover insertion.
ReductionOutput reduce_3qsat(const QBFInstance& q, bool planarize = true);

/// Inserts one crossover per crossing of the one-page layout (instances on a
/// line in declaration order, connections drawn as arcs above it). Returns
/// the number of crossovers inserted.
int planarize_with_crossovers(SystemOfGadgets& sys);

/// Replaces every instance by a simulating construction from the claim
/// catalog, recursively, until only `base` gadgets and branching hallways
/// remain. Solvability is preserved. Throws ValidationError when the catalog
/// has no chain from `base` to a required gadget type.
Puzzle substitute_puzzle(const Puzzle& p, const std::string& base);
Puzzle substitute_gadgets(const ReductionOutput& out, const std::string& base);

}  // namespace gadgets
