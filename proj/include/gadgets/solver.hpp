#pragma once

/// @file solver.hpp
/// @brief Puzzle solvability: exhaustive BFS, the polynomial fast paths for
///        one-state and one-toggle systems, and automatic dispatch.

#include <string>
#include <vector>

#include "gadgets/system.hpp"

namespace gadgets {

/// A system plus start and goal externals.
struct Puzzle {
    SystemOfGadgets system;
    std::string start;
    std::string goal;
};

std::vector<std::string> validate(const Puzzle& p);

/// One witness step between nodes of the puzzle's compiled system.
struct Move {
    int from_node = -1;
    int to_node = -1;
    bool traversal = false;  // false = connection/external hop
};

struct Solution {
    bool solvable = false;
    std::vector<Move> witness;  // empty when unsolvable or start == goal
    std::string algorithm;      // "bfs", "one-state", "one-toggle"
    uint64_t explored = 0;      // configurations (bfs) or nodes (mixed graph)
};

/// Shortest solution by exhaustive configuration-space BFS.
Solution solve_bfs(const Puzzle& p, uint64_t cap = kDefaultConfigCap);

/// Reachability over the static mixed graph of a system whose gadgets all
/// have one state. Throws ValidationError if any gadget has more.
Solution solve_one_state(const Puzzle& p, uint64_t cap = kDefaultConfigCap);

/// Mixed-graph reachability treating each 1-toggle as a directed edge in its
/// initial orientation. Requires every gadget to be a 1-toggle, a branching
/// hallway, or one-state.
Solution solve_one_toggle(const Puzzle& p, uint64_t cap = kDefaultConfigCap);

/// Routes to a polynomial solver when every gadget normalizes to static edges
/// and lone toggles (trivial tunnels split off, frozen locks and tripwires
/// turned into plain edges); falls back to solve_bfs otherwise.
Solution dispatch(const Puzzle& p, uint64_t cap = kDefaultConfigCap);

/// Structural test for a 2-state 2-location toggle.
bool is_one_toggle(const Gadget& g);

/// Replays a witness move by move; true iff every step is legal and the walk
/// ends at `goal_node`.
bool replay_witness(const CompiledSystem& cs, int start_node, const std::vector<Move>& witness,
                    int goal_node);

}  // namespace gadgets
