#include "gadgets/system.hpp"

#include <algorithm>
#include <deque>
#include <set>

namespace gadgets {

int SystemOfGadgets::instance_index(const std::string& id) const {
    for (size_t i = 0; i < instances.size(); ++i)
        if (instances[i].id == id) return static_cast<int>(i);
    return -1;
}

std::optional<Site> SystemOfGadgets::external_site(const std::string& label) const {
    for (const auto& [l, s] : externals)
        if (l == label) return s;
    return std::nullopt;
}

int SystemOfGadgets::external_index(const std::string& label) const {
    for (size_t i = 0; i < externals.size(); ++i)
        if (externals[i].first == label) return static_cast<int>(i);
    return -1;
}

bool SystemOfGadgets::site_valid(const Site& s) const {
    return s.instance >= 0 && s.instance < static_cast<int>(instances.size()) &&
           s.location >= 0 && s.location < instances[s.instance].gadget.num_locations();
}

std::vector<std::string> validate(const SystemOfGadgets& sys) {
    std::vector<std::string> bad;
    std::set<std::string> ids;
    for (const auto& inst : sys.instances) {
        if (inst.id.empty()) bad.push_back("instance with empty id");
        if (!ids.insert(inst.id).second) bad.push_back("duplicate instance id '" + inst.id + "'");
        if (inst.initial_state < 0 || inst.initial_state >= inst.gadget.num_states())
            bad.push_back("instance '" + inst.id + "': initial state out of range");
    }
    auto site_name = [&sys](const Site& s) {
        if (!sys.site_valid(s)) return std::string("<invalid site>");
        return sys.instances[s.instance].id + ":" +
               sys.instances[s.instance].gadget.locations()[s.location];
    };
    std::set<Site> used;
    for (const auto& [a, b] : sys.connections) {
        for (const Site& s : {a, b})
            if (!sys.site_valid(s)) bad.push_back("connection endpoint out of range");
        if (!sys.site_valid(a) || !sys.site_valid(b)) continue;
        if (a == b) bad.push_back("connection joins " + site_name(a) + " to itself");
        if (!used.insert(a).second)
            bad.push_back("matching violated at " + site_name(a));
        if (!used.insert(b).second)
            bad.push_back("matching violated at " + site_name(b));
    }
    std::set<std::string> labels;
    std::set<Site> ext_sites;
    for (const auto& [label, site] : sys.externals) {
        if (!labels.insert(label).second)
            bad.push_back("duplicate external label '" + label + "'");
        if (!site) continue;
        if (!sys.site_valid(*site)) {
            bad.push_back("external '" + label + "' points at an invalid site");
            continue;
        }
        if (used.count(*site))
            bad.push_back("external/connection overlap at " + site_name(*site));
        if (!ext_sites.insert(*site).second)
            bad.push_back("two externals share site " + site_name(*site));
    }
    for (const auto& [id, order] : sys.rotation) {
        int idx = sys.instance_index(id);
        if (idx < 0) {
            bad.push_back("rotation for unknown instance '" + id + "'");
            continue;
        }
        const Gadget& g = sys.instances[idx].gadget;
        if (order.size() != g.locations().size()) {
            bad.push_back("rotation for '" + id + "' must list every location once");
            continue;
        }
        std::set<std::string> seen;
        for (const auto& l : order) {
            if (std::find(g.locations().begin(), g.locations().end(), l) == g.locations().end())
                bad.push_back("rotation for '" + id + "' names unknown location '" + l + "'");
            if (!seen.insert(l).second)
                bad.push_back("rotation for '" + id + "' repeats location '" + l + "'");
        }
    }
    return bad;
}

int StateLayout::get(const PackedState& s, int instance) const {
    int b = bits[instance];
    if (b == 0) return 0;
    int off = offset[instance];
    // A field never straddles a word boundary (see CompiledSystem ctor).
    uint64_t word = s.w[off / 64] >> (off % 64);
    return static_cast<int>(word & ((1ULL << b) - 1));
}

void StateLayout::set(PackedState& s, int instance, int value) const {
    int b = bits[instance];
    if (b == 0) return;
    int off = offset[instance];
    uint64_t mask = (1ULL << b) - 1;
    int w = off / 64, o = off % 64;
    s.w[w] = (s.w[w] & ~(mask << o)) | (static_cast<uint64_t>(value) << o);
}

namespace {
int bits_for(int num_states) {
    int b = 0;
    while ((1 << b) < num_states) ++b;
    return b;
}
}  // namespace

CompiledSystem::CompiledSystem(const SystemOfGadgets& sys) : sys_(&sys) {
    auto bad = validate(sys);
    if (!bad.empty()) throw ValidationError("invalid system: " + bad.front());

    const int n = static_cast<int>(sys.instances.size());
    site_base_.resize(n);
    int sites = 0;
    for (int i = 0; i < n; ++i) {
        site_base_[i] = sites;
        sites += sys.instances[i].gadget.num_locations();
    }
    n_sites_ = sites;
    n_nodes_ = sites + static_cast<int>(sys.externals.size());

    hop_.assign(n_nodes_, -1);
    for (const auto& [a, b] : sys.connections) {
        int na = site_node(a.instance, a.location);
        int nb = site_node(b.instance, b.location);
        hop_[na] = nb;
        hop_[nb] = na;
    }
    for (size_t e = 0; e < sys.externals.size(); ++e) {
        const auto& site = sys.externals[e].second;
        if (!site) continue;
        int ns = site_node(site->instance, site->location);
        int ne = ext_node(static_cast<int>(e));
        hop_[ns] = ne;
        hop_[ne] = ns;
    }

    trans_.resize(n);
    layout_.offset.resize(n);
    layout_.bits.resize(n);
    int off = 0;
    for (int i = 0; i < n; ++i) {
        const Gadget& g = sys.instances[i].gadget;
        int b = bits_for(g.num_states());
        if (b > 0 && off / 64 != (off + b - 1) / 64)  // keep fields inside one word
            off = (off / 64 + 1) * 64;
        if (off + b > 256) throw ResourceLimitError("system state exceeds 256 bits");
        layout_.offset[i] = off;
        layout_.bits[i] = b;
        off += b;

        trans_[i].assign(static_cast<size_t>(g.num_states()) * g.num_locations(), {});
        for (const Transition& t : g.transitions())
            trans_[i][static_cast<size_t>(t.from_state) * g.num_locations() + t.from_loc]
                .emplace_back(t.to_state, t.to_loc);
    }
    layout_.total_bits = off;

    for (int i = 0; i < n; ++i) layout_.set(initial_, i, sys.instances[i].initial_state);
}

int CompiledSystem::site_node(int instance, int location) const {
    return site_base_[instance] + location;
}

int CompiledSystem::site_instance(int node) const {
    int lo = 0, hi = static_cast<int>(site_base_.size()) - 1;
    while (lo < hi) {
        int mid = (lo + hi + 1) / 2;
        if (site_base_[mid] <= node)
            lo = mid;
        else
            hi = mid - 1;
    }
    return lo;
}

int CompiledSystem::site_location(int node) const {
    return node - site_base_[site_instance(node)];
}

void CompiledSystem::steps(const PackedState& s, int node, std::vector<Step>& out) const {
    out.clear();
    if (is_site(node)) {
        int inst = site_instance(node);
        int loc = node - site_base_[inst];
        int st = layout_.get(s, inst);
        const Gadget& g = sys_->instances[inst].gadget;
        const auto& outs = trans_[inst][static_cast<size_t>(st) * g.num_locations() + loc];
        for (auto [s2, l2] : outs) {
            PackedState ns = s;
            layout_.set(ns, inst, s2);
            out.push_back({site_base_[inst] + l2, ns, true});
        }
    }
    if (hop_[node] >= 0) out.push_back({hop_[node], s, false});
}

std::string CompiledSystem::node_name(int node) const {
    if (is_site(node)) {
        int inst = site_instance(node);
        int loc = node - site_base_[inst];
        return sys_->instances[inst].id + ":" + sys_->instances[inst].gadget.locations()[loc];
    }
    return sys_->externals[node - n_sites_].first;
}

int CompiledSystem::node_of_external(const std::string& label) const {
    int i = sys_->external_index(label);
    if (i < 0) throw ValidationError("unknown external '" + label + "'");
    return ext_node(i);
}

ConfigurationGraph build_configuration_graph(const CompiledSystem& cs, int start_node,
                                             uint64_t cap) {
    ConfigurationGraph g;
    Configuration start{cs.initial_state(), start_node};
    g.vertices.push_back(start);
    g.index.emplace(start, 0);
    std::deque<int> work{0};
    std::vector<CompiledSystem::Step> steps;
    while (!work.empty()) {
        int vi = work.front();
        work.pop_front();
        Configuration cur = g.vertices[vi];
        cs.steps(cur.states, cur.node, steps);
        for (const auto& st : steps) {
            Configuration nxt{st.to_state, st.to_node};
            auto [it, fresh] = g.index.emplace(nxt, static_cast<int>(g.vertices.size()));
            if (fresh) {
                if (g.vertices.size() >= cap)
                    throw ResourceLimitError("configuration cap exceeded");
                g.vertices.push_back(nxt);
                work.push_back(it->second);
            }
            g.edges.push_back({vi, it->second, st.traversal});
        }
    }
    return g;
}

}  // namespace gadgets
