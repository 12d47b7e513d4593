#pragma once

// Shared test utilities: a deterministic RNG, random system generators, and a
// witness walker.

#include <optional>
#include <string>
#include <vector>

#include "gadgets/catalog.hpp"
#include "gadgets/solver.hpp"
#include "gadgets/system.hpp"

namespace testutil {

struct Rng {
    uint64_t s;
    explicit Rng(uint64_t seed) : s(seed ? seed : 0x9e3779b97f4a7c15ULL) {}
    uint64_t next() {
        s ^= s << 13;
        s ^= s >> 7;
        s ^= s << 17;
        return s;
    }
    int below(int n) { return static_cast<int>(next() % static_cast<uint64_t>(n)); }
    bool chance(int percent) { return below(100) < percent; }
};

inline gadgets::SystemOfGadgets::Instance make_inst(const std::string& id,
                                                    const std::string& type, int state = 0) {
    gadgets::Gadget g = gadgets::catalog_gadget(type);
    return {id, std::move(g), state};
}

// Random system over the given gadget pool: a random partial matching of
// sites, everything else dangling, with two free sites exposed as externals.
inline gadgets::Puzzle random_puzzle(Rng& rng, const std::vector<std::string>& pool,
                                     int max_instances) {
    using namespace gadgets;
    for (;;) {
        SystemOfGadgets sys;
        int n = 1 + rng.below(max_instances);
        for (int i = 0; i < n; ++i) {
            Gadget g = catalog_gadget(pool[rng.below(static_cast<int>(pool.size()))]);
            int st = rng.below(g.num_states());
            sys.instances.push_back({"g" + std::to_string(i), std::move(g), st});
        }
        std::vector<Site> sites;
        for (int i = 0; i < n; ++i)
            for (int l = 0; l < sys.instances[i].gadget.num_locations(); ++l)
                sites.push_back({i, l});
        for (size_t i = sites.size(); i > 1; --i)
            std::swap(sites[i - 1], sites[rng.below(static_cast<int>(i))]);
        if (sites.size() < 2) continue;
        int pairs = rng.below(static_cast<int>(sites.size()) / 2 + 1);
        size_t used = 0;
        for (int p = 0; p < pairs && used + 3 < sites.size(); ++p, used += 2)
            sys.connections.push_back({sites[used], sites[used + 1]});
        sys.externals.emplace_back("start", sites[used]);
        sys.externals.emplace_back("goal", sites[used + 1]);
        return Puzzle{std::move(sys), "start", "goal"};
    }
}

// Random hallway-free 2-gadget composition with all free sites external.
inline gadgets::SystemOfGadgets random_composition(Rng& rng,
                                                   const std::vector<std::string>& pool) {
    using namespace gadgets;
    SystemOfGadgets sys;
    for (int i = 0; i < 2; ++i) {
        Gadget g = catalog_gadget(pool[rng.below(static_cast<int>(pool.size()))]);
        int st = rng.below(g.num_states());
        sys.instances.push_back({"g" + std::to_string(i), std::move(g), st});
    }
    std::vector<Site> a, b;
    for (int l = 0; l < sys.instances[0].gadget.num_locations(); ++l) a.push_back({0, l});
    for (int l = 0; l < sys.instances[1].gadget.num_locations(); ++l) b.push_back({1, l});
    for (size_t i = a.size(); i > 1; --i) std::swap(a[i - 1], a[rng.below(static_cast<int>(i))]);
    for (size_t i = b.size(); i > 1; --i) std::swap(b[i - 1], b[rng.below(static_cast<int>(i))]);
    size_t max_pairs = std::min(a.size(), b.size());
    size_t pairs = 1 + static_cast<size_t>(rng.below(static_cast<int>(max_pairs)));
    if (pairs >= std::min(a.size(), b.size())) pairs = std::min(a.size(), b.size()) - 1;
    if (pairs < 1) pairs = 1;
    for (size_t p = 0; p < pairs; ++p) sys.connections.push_back({a[p], b[p]});
    int label = 0;
    for (size_t i = pairs; i < a.size(); ++i)
        sys.externals.emplace_back("e" + std::to_string(label++), a[i]);
    for (size_t i = pairs; i < b.size(); ++i)
        sys.externals.emplace_back("e" + std::to_string(label++), b[i]);
    return sys;
}

// Applies witness moves from a configuration; nullopt on the first illegal move.
inline std::optional<gadgets::Configuration> walk(const gadgets::CompiledSystem& cs,
                                                  gadgets::Configuration at,
                                                  const std::vector<gadgets::Move>& moves) {
    std::vector<gadgets::CompiledSystem::Step> steps;
    for (const auto& m : moves) {
        if (m.from_node != at.node) return std::nullopt;
        cs.steps(at.states, at.node, steps);
        bool ok = false;
        for (const auto& st : steps)
            if (st.traversal == m.traversal && st.to_node == m.to_node) {
                at = {st.to_state, st.to_node};
                ok = true;
                break;
            }
        if (!ok) return std::nullopt;
    }
    return at;
}

}  // namespace testutil
