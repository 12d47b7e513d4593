#pragma once

/// @file system.hpp
/// @brief Systems of gadget instances, validation, and the configuration graph.
///
/// Positions are nodes: every (instance, location) site is a node, and every
/// external label is its own node, attached to its target site by a hop edge.
/// A move is a single gadget traversal or a single hop.

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "gadgets/gadget.hpp"

namespace gadgets {

struct Site {
    int instance = -1;
    int location = -1;
    auto operator<=>(const Site&) const = default;
};

/// Gadget instances plus a matching of location connections and named
/// external locations. Immutable once validated.
struct SystemOfGadgets {
    struct Instance {
        std::string id;
        Gadget gadget;
        int initial_state = 0;
    };

    std::vector<Instance> instances;
    std::vector<std::pair<Site, Site>> connections;
    // Ordered; an external without a site is free-standing.
    std::vector<std::pair<std::string, std::optional<Site>>> externals;
    // Per-instance clockwise location order; instances absent from the map use
    // their gadget's canonical rotation. Empty map means no rotation data.
    std::map<std::string, std::vector<std::string>> rotation;

    int instance_index(const std::string& id) const;  // -1 if unknown
    std::optional<Site> external_site(const std::string& label) const;
    int external_index(const std::string& label) const;  // -1 if unknown
    bool site_valid(const Site& s) const;
};

/// Checks all structural invariants; returns one message per violation.
std::vector<std::string> validate(const SystemOfGadgets& sys);

/// Gadget states packed into 256 bits.
struct PackedState {
    std::array<uint64_t, 4> w{};
    bool operator==(const PackedState&) const = default;
};

struct PackedStateHash {
    size_t operator()(const PackedState& s) const {
        uint64_t h = 0x9e3779b97f4a7c15ULL;
        for (uint64_t v : s.w) {
            h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
            h *= 0xc2b2ae3d27d4eb4fULL;
        }
        return static_cast<size_t>(h);
    }
};

/// Bit layout of per-instance states inside a PackedState.
struct StateLayout {
    std::vector<int> offset;  // per instance
    std::vector<int> bits;    // per instance
    int total_bits = 0;

    int get(const PackedState& s, int instance) const;
    void set(PackedState& s, int instance, int value) const;
};

/// A system resolved for exploration: node space, hop edges, transition tables.
class CompiledSystem {
  public:
    explicit CompiledSystem(const SystemOfGadgets& sys);

    const SystemOfGadgets& system() const { return *sys_; }
    int num_sites() const { return n_sites_; }
    int num_nodes() const { return n_nodes_; }
    bool is_site(int node) const { return node < n_sites_; }
    int site_node(int instance, int location) const;
    int site_instance(int node) const;
    int site_location(int node) const;
    /// Node of the k-th external.
    int ext_node(int ext_index) const { return n_sites_ + ext_index; }
    int ext_index_of_node(int node) const { return node - n_sites_; }
    /// Hop partner of a node, -1 when none.
    int hop(int node) const { return hop_[node]; }

    const StateLayout& layout() const { return layout_; }
    PackedState initial_state() const { return initial_; }

    struct Step {
        int to_node;
        PackedState to_state;
        bool traversal;  // false = hop
    };
    void steps(const PackedState& s, int node, std::vector<Step>& out) const;

    /// Human-readable node name: "id:loc" for sites, the label for externals.
    std::string node_name(int node) const;
    /// Resolves a position given as an external label.
    int node_of_external(const std::string& label) const;  // throws ValidationError

  private:
    const SystemOfGadgets* sys_;
    int n_sites_ = 0;
    int n_nodes_ = 0;
    std::vector<int> site_base_;
    std::vector<int> hop_;
    // transition targets per (instance; state * L + loc)
    std::vector<std::vector<std::vector<std::pair<int, int>>>> trans_;
    StateLayout layout_;
    PackedState initial_;
};

/// One configuration: all gadget states plus the robot's node.
struct Configuration {
    PackedState states;
    int node = -1;
    bool operator==(const Configuration&) const = default;
};

struct ConfigurationHash {
    size_t operator()(const Configuration& c) const {
        size_t h = PackedStateHash{}(c.states);
        return h ^ (static_cast<uint64_t>(c.node) * 0xc2b2ae3d27d4eb4fULL);
    }
};

struct ConfigurationGraph {
    struct Edge {
        int from = -1, to = -1;
        bool traversal = false;
    };
    std::vector<Configuration> vertices;  // vertex 0 is the start
    std::vector<Edge> edges;
    std::unordered_map<Configuration, int, ConfigurationHash> index;
};

constexpr uint64_t kDefaultConfigCap = 10'000'000;

/// Exhaustive BFS of all configurations reachable from the given start node.
/// Throws ResourceLimitError when more than `cap` vertices appear.
ConfigurationGraph build_configuration_graph(const CompiledSystem& cs, int start_node,
                                             uint64_t cap = kDefaultConfigCap);

}  // namespace gadgets
