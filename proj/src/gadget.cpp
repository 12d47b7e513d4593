#include "gadgets/gadget.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace gadgets {

Gadget::Gadget(std::string name, std::vector<std::string> locations,
               std::vector<std::string> states, std::vector<Transition> transitions,
               std::vector<std::string> rotation)
    : name_(std::move(name)),
      locations_(std::move(locations)),
      states_(std::move(states)),
      transitions_(std::move(transitions)),
      rotation_(std::move(rotation)) {
    if (locations_.empty()) throw ValidationError(name_ + ": gadget needs at least one location");
    if (states_.empty()) throw ValidationError(name_ + ": gadget needs at least one state");
    {
        std::set<std::string> seen(locations_.begin(), locations_.end());
        if (seen.size() != locations_.size())
            throw ValidationError(name_ + ": duplicate location label");
    }
    {
        std::set<std::string> seen(states_.begin(), states_.end());
        if (seen.size() != states_.size()) throw ValidationError(name_ + ": duplicate state label");
    }
    const int L = num_locations();
    const int S = num_states();
    for (const Transition& t : transitions_) {
        if (t.from_state < 0 || t.from_state >= S || t.to_state < 0 || t.to_state >= S ||
            t.from_loc < 0 || t.from_loc >= L || t.to_loc < 0 || t.to_loc >= L)
            throw ValidationError(name_ + ": transition index out of range");
        if (t.from_state == t.to_state && t.from_loc == t.to_loc)
            throw ValidationError(name_ + ": self-loop transition");
    }
    std::sort(transitions_.begin(), transitions_.end());
    auto dup = std::adjacent_find(transitions_.begin(), transitions_.end());
    if (dup != transitions_.end()) throw ValidationError(name_ + ": duplicate transition");

    if (rotation_.empty()) {
        rotation_ = locations_;
    } else {
        if (rotation_.size() != locations_.size())
            throw ValidationError(name_ + ": rotation must list every location once");
        for (const auto& l : rotation_) location_index(l);
        std::set<std::string> seen(rotation_.begin(), rotation_.end());
        if (seen.size() != rotation_.size())
            throw ValidationError(name_ + ": rotation must list every location once");
    }
}

int Gadget::location_index(const std::string& label) const {
    for (size_t i = 0; i < locations_.size(); ++i)
        if (locations_[i] == label) return static_cast<int>(i);
    throw ValidationError(name_ + ": unknown location '" + label + "'");
}

int Gadget::state_index(const std::string& label) const {
    for (size_t i = 0; i < states_.size(); ++i)
        if (states_[i] == label) return static_cast<int>(i);
    throw ValidationError(name_ + ": unknown state '" + label + "'");
}

bool Gadget::has_transition(const Transition& t) const {
    return std::binary_search(transitions_.begin(), transitions_.end(), t);
}

std::string tunnel_kind_name(TunnelKind k) {
    switch (k) {
        case TunnelKind::TrivialOpen: return "trivial-open";
        case TunnelKind::TrivialClosed: return "trivial-closed";
        case TunnelKind::Tripwire: return "tripwire";
        case TunnelKind::Lock: return "lock";
        case TunnelKind::Toggle: return "toggle";
    }
    return "?";
}

std::string complexity_class_name(ComplexityClass c) {
    return c == ComplexityClass::PSpaceComplete ? "PSPACE-complete" : "polynomial-time";
}

bool is_deterministic(const Gadget& g) {
    std::map<std::pair<int, int>, int> outdeg;
    for (const Transition& t : g.transitions())
        if (++outdeg[{t.from_state, t.from_loc}] > 1) return false;
    return true;
}

bool is_reversible(const Gadget& g) {
    for (const Transition& t : g.transitions())
        if (!g.has_transition({t.to_state, t.to_loc, t.from_state, t.from_loc})) return false;
    return true;
}

namespace {

// Transition stays inside pair {a, b} (loops at a or b included).
bool within_pair(const Transition& t, int a, int b) {
    return (t.from_loc == a || t.from_loc == b) && (t.to_loc == a || t.to_loc == b);
}

bool match_rec(const Gadget& g, std::vector<int>& partner, int next,
               std::vector<std::pair<int, int>>& out) {
    const int L = g.num_locations();
    while (next < L && partner[next] >= 0) ++next;
    if (next == L) return true;
    for (int cand = next + 1; cand < L; ++cand) {
        if (partner[cand] >= 0) continue;
        bool ok = true;
        for (const Transition& t : g.transitions()) {
            bool touches = t.from_loc == next || t.to_loc == next || t.from_loc == cand ||
                           t.to_loc == cand;
            if (touches && !within_pair(t, next, cand)) {
                ok = false;
                break;
            }
        }
        if (!ok) continue;
        partner[next] = cand;
        partner[cand] = next;
        out.emplace_back(next, cand);
        if (match_rec(g, partner, next + 1, out)) return true;
        out.pop_back();
        partner[next] = -1;
        partner[cand] = -1;
    }
    return false;
}

// Classifies the edge set of one tunnel of a <=2-state gadget, or nothing if
// the pattern is not one of the five kinds.
std::optional<TunnelKind> classify_tunnel(const Gadget& g, int a, int b) {
    std::set<Transition> edges;
    for (const Transition& t : g.transitions())
        if (within_pair(t, a, b)) edges.insert(t);
    // Bounces (same location, state change) fit no kind.
    for (const Transition& t : edges)
        if (t.from_loc == t.to_loc) return std::nullopt;

    if (g.num_states() == 1) {
        std::set<Transition> open = {{0, a, 0, b}, {0, b, 0, a}};
        if (edges.empty()) return TunnelKind::TrivialClosed;
        if (edges == open) return TunnelKind::TrivialOpen;
        return std::nullopt;
    }
    if (g.num_states() != 2) return std::nullopt;

    auto both_ways_no_flip = [&](int s) {
        return std::set<Transition>{{s, a, s, b}, {s, b, s, a}};
    };
    std::set<Transition> open01 = both_ways_no_flip(0);
    std::set<Transition> open1 = both_ways_no_flip(1);
    std::set<Transition> open_both = open01;
    open_both.insert(open1.begin(), open1.end());
    std::set<Transition> wire = {{0, a, 1, b}, {0, b, 1, a}, {1, a, 0, b}, {1, b, 0, a}};
    std::set<Transition> toggle_fwd = {{0, a, 1, b}, {1, b, 0, a}};
    std::set<Transition> toggle_bwd = {{0, b, 1, a}, {1, a, 0, b}};

    if (edges.empty()) return TunnelKind::TrivialClosed;
    if (edges == open_both) return TunnelKind::TrivialOpen;
    if (edges == open01 || edges == open1) return TunnelKind::Lock;
    if (edges == wire) return TunnelKind::Tripwire;
    if (edges == toggle_fwd || edges == toggle_bwd) return TunnelKind::Toggle;
    return std::nullopt;
}

}  // namespace

std::optional<TunnelDecomposition> tunnel_decomposition(const Gadget& g) {
    if (g.num_locations() % 2 != 0) return std::nullopt;
    std::vector<int> partner(g.num_locations(), -1);
    std::vector<std::pair<int, int>> pairs;
    if (!match_rec(g, partner, 0, pairs)) return std::nullopt;

    TunnelDecomposition d;
    d.tunnels = pairs;
    if (g.num_states() <= 2) {
        std::vector<TunnelKind> kinds;
        bool all_known = true;
        for (auto [a, b] : pairs) {
            auto k = classify_tunnel(g, a, b);
            if (!k) {
                all_known = false;
                break;
            }
            kinds.push_back(*k);
        }
        if (all_known) d.kinds = std::move(kinds);
    }
    return d;
}

ComplexityClass classify_complexity(const Gadget& g) {
    if (g.num_states() > 2)
        throw ValidationError(g.name() + ": classification covers gadgets with at most 2 states");
    if (!is_deterministic(g))
        throw ValidationError(g.name() + ": classification requires a deterministic gadget");
    if (!is_reversible(g))
        throw ValidationError(g.name() + ": classification requires a reversible gadget");
    auto d = tunnel_decomposition(g);
    if (!d) throw ValidationError(g.name() + ": not a tunnel gadget");
    if (!d->kinds) throw ValidationError(g.name() + ": tunnel behavior outside the known kinds");

    int toggles = 0, wires = 0, locks = 0;
    for (TunnelKind k : *d->kinds) {
        if (k == TunnelKind::Toggle) ++toggles;
        if (k == TunnelKind::Tripwire) ++wires;
        if (k == TunnelKind::Lock) ++locks;
    }
    bool hard = toggles >= 2 || (toggles >= 1 && wires >= 1) || (toggles >= 1 && locks >= 1) ||
                (wires >= 1 && locks >= 1);
    return hard ? ComplexityClass::PSpaceComplete : ComplexityClass::PolynomialTime;
}

Gadget make_tunnel_gadget(const std::string& name, const std::vector<TunnelKind>& kinds) {
    std::vector<std::string> locs;
    std::vector<Transition> edges;
    for (size_t i = 0; i < kinds.size(); ++i) {
        int a = static_cast<int>(2 * i);
        int b = a + 1;
        locs.push_back("t" + std::to_string(i) + "a");
        locs.push_back("t" + std::to_string(i) + "b");
        switch (kinds[i]) {
            case TunnelKind::TrivialClosed: break;
            case TunnelKind::TrivialOpen:
                edges.push_back({0, a, 0, b});
                edges.push_back({0, b, 0, a});
                edges.push_back({1, a, 1, b});
                edges.push_back({1, b, 1, a});
                break;
            case TunnelKind::Lock:
                edges.push_back({0, a, 0, b});
                edges.push_back({0, b, 0, a});
                break;
            case TunnelKind::Tripwire:
                edges.push_back({0, a, 1, b});
                edges.push_back({0, b, 1, a});
                edges.push_back({1, a, 0, b});
                edges.push_back({1, b, 0, a});
                break;
            case TunnelKind::Toggle:
                edges.push_back({0, a, 1, b});
                edges.push_back({1, b, 0, a});
                break;
        }
    }
    return Gadget(name, locs, {"1", "2"}, edges);
}

}  // namespace gadgets
