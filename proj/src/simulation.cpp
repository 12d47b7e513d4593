#include "gadgets/simulation.hpp"

#include <algorithm>
#include <chrono>
#include <deque>
#include <filesystem>
#include <map>
#include <set>

#include "gadgets/json_io.hpp"

namespace gadgets {

Gadget InducedGadget::to_gadget(const std::string& name) const {
    std::vector<std::string> states;
    for (int c = 0; c < num_classes; ++c) states.push_back("c" + std::to_string(c));
    std::vector<Transition> trans;
    for (const auto& e : class_edges) trans.push_back({e[0], e[1], e[2], e[3]});
    return Gadget(name, locations, states, trans);
}

namespace {

struct WalkKey {
    PackedState state;
    int node;
    bool operator==(const WalkKey&) const = default;
};
struct WalkKeyHash {
    size_t operator()(const WalkKey& k) const {
        return PackedStateHash{}(k.state) ^ (static_cast<uint64_t>(k.node) * 0x9e3779b97f4a7c15ULL);
    }
};

// Signature-refinement bisimulation over an LTS given as labeled edges.
// Returns (class per state, class count). Labels are arbitrary ints.
std::pair<std::vector<int>, int> bisimulation(int n,
                                              const std::vector<std::array<int, 3>>& edges) {
    std::vector<int> cls(n, 0);
    int count = 1;
    for (;;) {
        // signature: sorted unique (label, class of target)
        std::vector<std::vector<std::pair<int, int>>> sig(n);
        for (const auto& e : edges) sig[e[0]].emplace_back(e[1], cls[e[2]]);
        std::map<std::pair<int, std::vector<std::pair<int, int>>>, int> renumber;
        std::vector<int> next(n);
        for (int s = 0; s < n; ++s) {
            auto& v = sig[s];
            std::sort(v.begin(), v.end());
            v.erase(std::unique(v.begin(), v.end()), v.end());
            auto key = std::make_pair(cls[s], v);
            auto [it, fresh] = renumber.emplace(key, static_cast<int>(renumber.size()));
            (void)fresh;
            next[s] = it->second;
        }
        int new_count = static_cast<int>(renumber.size());
        if (new_count == count && next == cls) break;
        cls = std::move(next);
        count = new_count;
        if (count == n) break;
    }
    // Renumber classes by first occurrence for determinism.
    std::vector<int> order(count, -1);
    int seen = 0;
    for (int s = 0; s < n; ++s)
        if (order[cls[s]] < 0) order[cls[s]] = seen++;
    for (int s = 0; s < n; ++s) cls[s] = order[cls[s]];
    return {cls, count};
}

}  // namespace

InducedGadget induce(const SystemOfGadgets& construction, uint64_t cap) {
    auto bad = validate(construction);
    if (!bad.empty()) throw ValidationError("invalid construction: " + bad.front());
    if (construction.externals.empty())
        throw ValidationError("induce needs at least one external location");

    CompiledSystem cs(construction);
    const int E = static_cast<int>(construction.externals.size());

    InducedGadget ind;
    for (const auto& [label, site] : construction.externals) ind.locations.push_back(label);

    std::unordered_map<PackedState, int, PackedStateHash> config_id;
    auto intern = [&](const PackedState& s) {
        auto [it, fresh] = config_id.emplace(s, static_cast<int>(ind.configs.size()));
        if (fresh) ind.configs.push_back(s);
        return it->second;
    };
    intern(cs.initial_state());

    std::set<std::array<int, 4>> edges;
    std::vector<CompiledSystem::Step> steps;
    for (int ci = 0; ci < static_cast<int>(ind.configs.size()); ++ci) {
        for (int e = 0; e < E; ++e) {
            PackedState c0 = ind.configs[ci];
            int seed = cs.ext_node(e);
            if (cs.hop(seed) < 0) continue;  // free-standing external
            std::unordered_map<WalkKey, char, WalkKeyHash> visited;
            std::deque<WalkKey> work;
            WalkKey k0{c0, seed};
            visited.emplace(k0, 1);
            work.push_back(k0);
            while (!work.empty()) {
                WalkKey cur = work.front();
                work.pop_front();
                bool is_seed = cur.node == seed && cur.state == c0;
                if (!cs.is_site(cur.node) && !is_seed) {
                    // Exit: reached some external with (possibly) new states.
                    int f = cs.ext_index_of_node(cur.node);
                    if (!(f == e && cur.state == c0))
                        edges.insert({ci, e, intern(cur.state), f});
                    continue;
                }
                cs.steps(cur.state, cur.node, steps);
                for (const auto& st : steps) {
                    WalkKey nxt{st.to_state, st.to_node};
                    if (visited.emplace(nxt, 1).second) {
                        if (++ind.explored > cap)
                            throw ResourceLimitError("induce cap exceeded");
                        work.push_back(nxt);
                    }
                }
            }
            ind.explored += visited.size();
        }
    }

    ind.config_edges.assign(edges.begin(), edges.end());

    // Quotient by bisimulation; labels are (entry, exit) pairs. A walk that
    // returns to its entry leaving an equivalent configuration is a null
    // traversal, not behavior, so such edges are dropped and the quotient
    // recomputed until stable.
    for (;;) {
        std::vector<std::array<int, 3>> lts;
        for (const auto& e : ind.config_edges) lts.push_back({e[0], e[1] * E + e[3], e[2]});
        auto [cls, count] = bisimulation(static_cast<int>(ind.configs.size()), lts);
        ind.config_class = std::move(cls);
        ind.num_classes = count;
        std::vector<std::array<int, 4>> kept;
        for (const auto& e : ind.config_edges)
            if (!(e[1] == e[3] && ind.config_class[e[0]] == ind.config_class[e[2]]))
                kept.push_back(e);
        if (kept.size() == ind.config_edges.size()) break;
        ind.config_edges = std::move(kept);
    }

    std::set<std::array<int, 4>> q;
    for (const auto& e : ind.config_edges)
        q.insert({ind.config_class[e[0]], e[1], ind.config_class[e[2]], e[3]});
    ind.class_edges.assign(q.begin(), q.end());
    return ind;
}

EquivalenceResult check_equivalence(const SimulationClaim& claim, uint64_t cap) {
    const Gadget& target = claim.target;
    // The location map must biject construction externals onto target locations.
    std::set<std::string> ext_labels;
    for (const auto& [l, s] : claim.construction.externals) ext_labels.insert(l);
    std::set<std::string> mapped;
    for (const auto& [from, to] : claim.location_map) {
        if (!ext_labels.count(from))
            throw ValidationError(claim.name + ": location_map key '" + from +
                                  "' is not an external");
        target.location_index(to);
        if (!mapped.insert(to).second)
            throw ValidationError(claim.name + ": location_map maps twice onto '" + to + "'");
    }
    if (claim.location_map.size() != ext_labels.size() ||
        mapped.size() != target.locations().size())
        throw ValidationError(claim.name +
                              ": location_map must biject externals onto target locations");
    int target_init = target.state_index(claim.initial_state);

    EquivalenceResult res;
    res.induced = induce(claim.construction, cap);
    const InducedGadget& ind = res.induced;
    const int E = static_cast<int>(ind.locations.size());
    const int Lt = target.num_locations();

    // External index -> target location index.
    std::vector<int> loc_map(E);
    for (int e = 0; e < E; ++e)
        loc_map[e] = target.location_index(claim.location_map.at(ind.locations[e]));

    // Union LTS: induced configs, then reachable target states.
    const int C = static_cast<int>(ind.configs.size());
    std::vector<char> treach(target.num_states(), 0);
    {
        std::deque<int> work{target_init};
        treach[target_init] = 1;
        while (!work.empty()) {
            int s = work.front();
            work.pop_front();
            for (const Transition& t : target.transitions())
                if (t.from_state == s && !treach[t.to_state]) {
                    treach[t.to_state] = 1;
                    work.push_back(t.to_state);
                }
        }
    }
    std::vector<std::array<int, 3>> lts;
    for (const auto& e : ind.config_edges)
        lts.push_back({e[0], loc_map[e[1]] * Lt + loc_map[e[3]], e[2]});
    for (const Transition& t : target.transitions())
        if (treach[t.from_state])
            lts.push_back({C + t.from_state, t.from_loc * Lt + t.to_loc, C + t.to_state});
    int n = C + target.num_states();
    auto [cls, count] = bisimulation(n, lts);
    (void)count;
    res.equivalent = cls[ind.initial_config] == cls[C + target_init];

    for (int s = 0; s < target.num_states(); ++s) {
        if (!treach[s]) continue;
        std::vector<int> classes;
        std::set<int> seen;
        for (int c = 0; c < C; ++c)
            if (cls[c] == cls[C + s] && seen.insert(ind.config_class[c]).second)
                classes.push_back(ind.config_class[c]);
        res.correspondence.emplace_back(target.states()[s], classes);
    }

    if (!res.equivalent) {
        // Find a reachable pair with differing outgoing label sets; fall back
        // to the first label whose successors already separate the pair.
        auto labels_of = [&](int u) {
            std::set<int> out;
            for (const auto& e : lts)
                if (e[0] == u) out.insert(e[1]);
            return out;
        };
        std::set<std::pair<int, int>> visited;
        std::deque<std::pair<int, int>> work{{ind.initial_config, C + target_init}};
        visited.insert(work.front());
        std::optional<Counterexample> fallback;
        while (!work.empty()) {
            auto [u, v] = work.front();
            work.pop_front();
            auto lu = labels_of(u), lv = labels_of(v);
            if (lu != lv) {
                std::vector<int> diff;
                std::set_symmetric_difference(lu.begin(), lu.end(), lv.begin(), lv.end(),
                                              std::back_inserter(diff));
                int lab = diff.front();
                res.counterexample =
                    Counterexample{target.states()[v - C],
                                   target.locations()[lab / Lt],
                                   target.locations()[lab / Lt] + "->" +
                                       target.locations()[lab % Lt],
                                   lu.count(lab) ? "construction admits it, target does not"
                                                 : "target admits it, construction does not"};
                return res;
            }
            for (int lab : lu) {
                for (const auto& eu : lts) {
                    if (eu[0] != u || eu[1] != lab) continue;
                    for (const auto& ev : lts) {
                        if (ev[0] != v || ev[1] != lab) continue;
                        if (cls[eu[2]] != cls[ev[2]]) {
                            if (!fallback)
                                fallback = Counterexample{
                                    target.states()[v - C],
                                    target.locations()[lab / Lt],
                                    target.locations()[lab / Lt] + "->" +
                                        target.locations()[lab % Lt],
                                    "traversal leads to inequivalent states"};
                            if (visited.insert({eu[2], ev[2]}).second)
                                work.push_back({eu[2], ev[2]});
                        }
                    }
                }
            }
        }
        res.counterexample = fallback ? *fallback
                                      : Counterexample{claim.initial_state, "", "",
                                                       "initial states inequivalent"};
    }
    return res;
}

bool composed_is_deterministic_reversible(const SystemOfGadgets& construction, uint64_t cap) {
    for (const auto& inst : construction.instances)
        if (!is_deterministic(inst.gadget))
            throw ValidationError("composition check: '" + inst.id +
                                  "' is non-deterministic (branching hallway?)");
    InducedGadget ind = induce(construction, cap);
    // Determinism: at most one outcome per (class, entry).
    std::map<std::pair<int, int>, std::set<std::pair<int, int>>> out;
    for (const auto& e : ind.class_edges) out[{e[0], e[1]}].insert({e[2], e[3]});
    for (const auto& [k, v] : out)
        if (v.size() > 1) return false;
    // Reversibility: the reverse of every derived edge is present.
    std::set<std::array<int, 4>> have(ind.class_edges.begin(), ind.class_edges.end());
    for (const auto& e : ind.class_edges)
        if (!have.count({e[2], e[3], e[0], e[1]})) return false;
    return true;
}

ClaimReport verify_claim_file(const std::string& path, uint64_t cap) {
    ClaimReport r;
    auto t0 = std::chrono::steady_clock::now();
    try {
        SimulationClaim claim = claim_from_json(load_json_file(path));
        r.name = claim.name;
        EquivalenceResult eq = check_equivalence(claim, cap);
        r.pass = eq.equivalent;
        r.explored = eq.induced.explored;
        r.outside_configs = static_cast<int>(eq.induced.configs.size());
        r.classes = eq.induced.num_classes;
        if (!eq.equivalent && eq.counterexample) {
            const auto& c = *eq.counterexample;
            r.message = "distinguished at state " + c.state + ", location " + c.location +
                        ", traversal " + c.direction + " (" + c.detail + ")";
        }
    } catch (const std::exception& e) {
        r.pass = false;
        if (r.name.empty()) r.name = std::filesystem::path(path).stem().string();
        r.message = e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

std::vector<ClaimReport> verify_catalog(const std::string& claims_dir, uint64_t cap) {
    std::vector<std::string> files;
    for (const auto& entry : std::filesystem::directory_iterator(claims_dir))
        if (entry.path().extension() == ".json") files.push_back(entry.path().string());
    std::sort(files.begin(), files.end());
    std::vector<ClaimReport> out;
    for (const auto& f : files) out.push_back(verify_claim_file(f, cap));
    return out;
}

}  // namespace gadgets
