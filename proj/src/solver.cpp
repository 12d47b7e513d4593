#include "gadgets/solver.hpp"

#include <algorithm>
#include <deque>

namespace gadgets {

std::vector<std::string> validate(const Puzzle& p) {
    std::vector<std::string> bad = validate(p.system);
    if (p.system.external_index(p.start) < 0)
        bad.push_back("start '" + p.start + "' is not a declared external");
    if (p.system.external_index(p.goal) < 0)
        bad.push_back("goal '" + p.goal + "' is not a declared external");
    return bad;
}

bool is_one_toggle(const Gadget& g) {
    if (g.num_states() != 2 || g.num_locations() != 2 || g.transitions().size() != 2)
        return false;
    const Transition& t = g.transitions().front();
    return t.from_loc != t.to_loc && t.from_state != t.to_state &&
           g.has_transition({t.to_state, t.to_loc, t.from_state, t.from_loc});
}

bool replay_witness(const CompiledSystem& cs, int start_node, const std::vector<Move>& witness,
                    int goal_node) {
    PackedState state = cs.initial_state();
    int at = start_node;
    std::vector<CompiledSystem::Step> steps;
    for (const Move& m : witness) {
        if (m.from_node != at) return false;
        cs.steps(state, at, steps);
        bool ok = false;
        for (const auto& st : steps) {
            if (st.traversal == m.traversal && st.to_node == m.to_node) {
                // Deterministic gadgets have one candidate; with a hallway any
                // matching step works since hops and hallway moves keep state.
                state = st.to_state;
                at = st.to_node;
                ok = true;
                break;
            }
        }
        if (!ok) return false;
    }
    return at == goal_node;
}

Solution solve_bfs(const Puzzle& p, uint64_t cap) {
    auto bad = validate(p);
    if (!bad.empty()) throw ValidationError("invalid puzzle: " + bad.front());
    CompiledSystem cs(p.system);
    int start = cs.node_of_external(p.start);
    int goal = cs.node_of_external(p.goal);

    Solution sol;
    sol.algorithm = "bfs";
    std::vector<Configuration> verts{{cs.initial_state(), start}};
    std::unordered_map<Configuration, int, ConfigurationHash> index{{verts[0], 0}};
    struct Parent {
        int vertex = -1;
        Move move;
    };
    std::vector<Parent> parent{{}};
    std::deque<int> work{0};
    int found = verts[0].node == goal ? 0 : -1;
    std::vector<CompiledSystem::Step> steps;
    while (!work.empty() && found < 0) {
        int vi = work.front();
        work.pop_front();
        Configuration cur = verts[vi];
        cs.steps(cur.states, cur.node, steps);
        for (const auto& st : steps) {
            Configuration nxt{st.to_state, st.to_node};
            auto [it, fresh] = index.emplace(nxt, static_cast<int>(verts.size()));
            if (!fresh) continue;
            if (verts.size() >= cap) throw ResourceLimitError("configuration cap exceeded");
            verts.push_back(nxt);
            parent.push_back({vi, {cur.node, st.to_node, st.traversal}});
            if (st.to_node == goal) {
                found = it->second;
                break;
            }
            work.push_back(it->second);
        }
    }
    sol.explored = verts.size();
    if (found < 0) return sol;
    sol.solvable = true;
    for (int v = found; parent[v].vertex >= 0; v = parent[v].vertex)
        sol.witness.push_back(parent[v].move);
    std::reverse(sol.witness.begin(), sol.witness.end());
    return sol;
}

namespace {

// Directed mixed-graph edge between nodes; traversal edges remember nothing
// else because replay recomputes legality from the real semantics.
struct MixedEdge {
    int to;
    bool traversal;
};

Solution mixed_graph_solve(const Puzzle& p, const CompiledSystem& cs,
                           const std::vector<std::vector<MixedEdge>>& adj,
                           const std::string& algorithm) {
    int start = cs.node_of_external(p.start);
    int goal = cs.node_of_external(p.goal);
    Solution sol;
    sol.algorithm = algorithm;
    std::vector<int> prev(cs.num_nodes(), -1);
    std::vector<Move> via(cs.num_nodes());
    std::vector<char> seen(cs.num_nodes(), 0);
    std::deque<int> work{start};
    seen[start] = 1;
    uint64_t visited = 1;
    while (!work.empty()) {
        int u = work.front();
        work.pop_front();
        if (u == goal) break;
        for (const MixedEdge& e : adj[u]) {
            if (seen[e.to]) continue;
            seen[e.to] = 1;
            ++visited;
            prev[e.to] = u;
            via[e.to] = {u, e.to, e.traversal};
            work.push_back(e.to);
        }
    }
    sol.explored = visited;
    if (!seen[goal]) return sol;
    sol.solvable = true;
    for (int v = goal; prev[v] >= 0; v = prev[v]) sol.witness.push_back(via[v]);
    std::reverse(sol.witness.begin(), sol.witness.end());
    return sol;
}

void add_hops(const CompiledSystem& cs, std::vector<std::vector<MixedEdge>>& adj) {
    for (int n = 0; n < cs.num_nodes(); ++n)
        if (cs.hop(n) >= 0) adj[n].push_back({cs.hop(n), false});
}

// Static edges for one instance of an "easy" gadget, or nullopt when the
// gadget does not normalize (dispatch then falls back to BFS).
std::optional<std::vector<std::pair<int, std::pair<int, int>>>> normalize_instance(
    const SystemOfGadgets::Instance& inst) {
    // result entries: (kind, (locA, locB)); kind 0 = undirected, 1 = directed A->B
    std::vector<std::pair<int, std::pair<int, int>>> out;
    const Gadget& g = inst.gadget;
    if (g.num_states() == 1) {
        for (const Transition& t : g.transitions())
            out.push_back({1, {t.from_loc, t.to_loc}});
        return out;
    }
    if (!is_deterministic(g) || !is_reversible(g) || g.num_states() != 2) return std::nullopt;
    auto d = tunnel_decomposition(g);
    if (!d || !d->kinds) return std::nullopt;
    try {
        if (classify_complexity(g) == ComplexityClass::PSpaceComplete) return std::nullopt;
    } catch (const ValidationError&) {
        return std::nullopt;
    }
    int s0 = inst.initial_state;
    for (size_t i = 0; i < d->tunnels.size(); ++i) {
        auto [a, b] = d->tunnels[i];
        switch ((*d->kinds)[i]) {
            case TunnelKind::TrivialClosed:
                break;
            case TunnelKind::TrivialOpen:
            case TunnelKind::Tripwire:
                out.push_back({0, {a, b}});
                break;
            case TunnelKind::Lock:
                // Frozen at its initial passability: no toggles or wires share
                // this gadget, so the state never changes.
                if (g.has_transition({s0, a, s0, b})) out.push_back({0, {a, b}});
                break;
            case TunnelKind::Toggle: {
                // Directed edge in the initial orientation.
                bool fwd = false, bwd = false;
                for (const Transition& t : g.transitions()) {
                    if (t.from_state == s0 && t.from_loc == a && t.to_loc == b) fwd = true;
                    if (t.from_state == s0 && t.from_loc == b && t.to_loc == a) bwd = true;
                }
                if (fwd) out.push_back({1, {a, b}});
                if (bwd) out.push_back({1, {b, a}});
                break;
            }
        }
    }
    return out;
}

}  // namespace

Solution solve_one_state(const Puzzle& p, uint64_t cap) {
    auto bad = validate(p);
    if (!bad.empty()) throw ValidationError("invalid puzzle: " + bad.front());
    for (const auto& inst : p.system.instances)
        if (inst.gadget.num_states() != 1)
            throw ValidationError("one-state solver: '" + inst.id + "' has " +
                                  std::to_string(inst.gadget.num_states()) + " states");
    (void)cap;
    CompiledSystem cs(p.system);
    std::vector<std::vector<MixedEdge>> adj(cs.num_nodes());
    add_hops(cs, adj);
    for (size_t i = 0; i < p.system.instances.size(); ++i)
        for (const Transition& t : p.system.instances[i].gadget.transitions())
            adj[cs.site_node(static_cast<int>(i), t.from_loc)].push_back(
                {cs.site_node(static_cast<int>(i), t.to_loc), true});
    return mixed_graph_solve(p, cs, adj, "one-state");
}

Solution solve_one_toggle(const Puzzle& p, uint64_t cap) {
    auto bad = validate(p);
    if (!bad.empty()) throw ValidationError("invalid puzzle: " + bad.front());
    (void)cap;
    CompiledSystem cs(p.system);
    std::vector<std::vector<MixedEdge>> adj(cs.num_nodes());
    add_hops(cs, adj);
    for (size_t i = 0; i < p.system.instances.size(); ++i) {
        const auto& inst = p.system.instances[i];
        int ii = static_cast<int>(i);
        if (inst.gadget.num_states() == 1) {
            for (const Transition& t : inst.gadget.transitions())
                adj[cs.site_node(ii, t.from_loc)].push_back({cs.site_node(ii, t.to_loc), true});
        } else if (is_one_toggle(inst.gadget)) {
            for (const Transition& t : inst.gadget.transitions())
                if (t.from_state == inst.initial_state)
                    adj[cs.site_node(ii, t.from_loc)].push_back(
                        {cs.site_node(ii, t.to_loc), true});
        } else {
            throw ValidationError("one-toggle solver: '" + inst.id +
                                  "' is neither a 1-toggle, a branching hallway, nor one-state");
        }
    }
    return mixed_graph_solve(p, cs, adj, "one-toggle");
}

Solution dispatch(const Puzzle& p, uint64_t cap) {
    auto bad = validate(p);
    if (!bad.empty()) throw ValidationError("invalid puzzle: " + bad.front());
    std::vector<std::vector<std::pair<int, std::pair<int, int>>>> normalized;
    bool easy = true;
    bool any_toggle = false;
    for (const auto& inst : p.system.instances) {
        auto n = normalize_instance(inst);
        if (!n) {
            easy = false;
            break;
        }
        for (const auto& [kind, _] : *n) any_toggle |= kind == 1 && inst.gadget.num_states() > 1;
        normalized.push_back(std::move(*n));
    }
    if (!easy) return solve_bfs(p, cap);

    CompiledSystem cs(p.system);
    std::vector<std::vector<MixedEdge>> adj(cs.num_nodes());
    add_hops(cs, adj);
    for (size_t i = 0; i < normalized.size(); ++i) {
        int ii = static_cast<int>(i);
        for (const auto& [kind, locs] : normalized[i]) {
            int na = cs.site_node(ii, locs.first);
            int nb = cs.site_node(ii, locs.second);
            adj[na].push_back({nb, true});
            if (kind == 0) adj[nb].push_back({na, true});
        }
    }
    return mixed_graph_solve(p, cs, adj, any_toggle ? "one-toggle" : "one-state");
}

}  // namespace gadgets
