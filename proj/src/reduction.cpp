#include "gadgets/reduction.hpp"

#include <algorithm>
#include <set>

#include "gadgets/catalog.hpp"
#include "gadgets/constructions.hpp"
#include "gadgets/simulation.hpp"

namespace gadgets {

namespace {

using Port = std::pair<std::string, std::string>;  // (instance id, location label)

struct SysB {
    SystemOfGadgets sys;

    void add(const std::string& id, const std::string& type, const std::string& state) {
        Gadget g = catalog_gadget(type);
        int s = g.state_index(state);
        sys.instances.push_back({id, std::move(g), s});
    }
    Site site(const Port& p) const {
        int i = sys.instance_index(p.first);
        if (i < 0) throw ValidationError("reducer: unknown instance '" + p.first + "'");
        return {i, sys.instances[i].gadget.location_index(p.second)};
    }
    void connect(const Port& a, const Port& b) { sys.connections.emplace_back(site(a), site(b)); }
    void external(const std::string& label, const Port& p) {
        sys.externals.emplace_back(label, site(p));
    }
};

// One variable's occurrence bookkeeping.
struct VarInfo {
    char quantifier = 'e';
    std::vector<bool> occ_positive;       // polarity per occurrence
    std::vector<std::string> occ_ids;     // instance id per occurrence
    int chain_pos = 0;                    // universals only, 1 = innermost
    std::string guard_id;                 // universals only
};

// Lane ports of one toggle-lock instance. The forward lane is open
// left-to-right when the variable is true, the bounce lane when it is false.
Port fwd_left(const VarInfo& v, size_t k, const std::string& id) {
    return {id, v.occ_positive[k] ? "TL" : "ML"};
}
Port fwd_right(const VarInfo& v, size_t k, const std::string& id) {
    return {id, v.occ_positive[k] ? "TR" : "MR"};
}
Port bnc_left(const VarInfo& v, size_t k, const std::string& id) {
    return {id, v.occ_positive[k] ? "ML" : "TL"};
}
Port bnc_right(const VarInfo& v, size_t k, const std::string& id) {
    return {id, v.occ_positive[k] ? "MR" : "TR"};
}

}  // namespace

ReductionOutput reduce_3qsat(const QBFInstance& q, bool planarize) {
    auto bad = validate(q);
    if (!bad.empty()) throw ValidationError("invalid formula: " + bad.front());

    const int n = q.num_variables();
    std::vector<VarInfo> vars(n + 1);
    for (int v = 1; v <= n; ++v) vars[v].quantifier = q.quantifiers[v - 1];

    // Occurrence bookkeeping (ids only; instances are declared in layout order).
    ReductionOutput out;
    std::map<std::string, std::string> occ_state;  // id -> initial state
    for (size_t ci = 0; ci < q.clauses.size(); ++ci) {
        for (int lit : q.clauses[ci]) {
            int v = std::abs(lit);
            auto& info = vars[v];
            int k = static_cast<int>(info.occ_ids.size()) + 1;
            std::string id = "v" + std::to_string(v) + "_o" + std::to_string(k);
            info.occ_positive.push_back(lit > 0);
            info.occ_ids.push_back(id);
            occ_state[id] = lit > 0 ? "2" : "1";
            out.literal_index[{v, k}] = id;
        }
    }

    // Universal chain order: innermost quantifier is chain position 1. The
    // guard rides at the end of each universal's lane chain.
    std::vector<int> chain;
    for (int v = n; v >= 1; --v)
        if (vars[v].quantifier == 'a') {
            chain.push_back(v);
            vars[v].chain_pos = static_cast<int>(chain.size());
        }
    const int K = static_cast<int>(chain.size());
    for (int v : chain) {
        auto& info = vars[v];
        info.guard_id = "v" + std::to_string(v) + "_guard";
        info.occ_positive.push_back(false);  // lock open while the variable is false
        info.occ_ids.push_back(info.guard_id);
        occ_state[info.guard_id] = "1";
    }

    // Existential corridor segment: number of universals quantified inside it.
    auto segment_of = [&](int v) {
        int t = 0;
        for (int u : chain)
            if (u > v) ++t;
        return t;
    };

    // Declare instances along the drawing: the corridor runs left to right
    // with each universal's lane block beside its return junction; the clause
    // ladder sits at the far end.
    SysB b;
    b.add("start_hall", "branching_hallway", "1");
    auto declare_variable_block = [&](int v) {
        auto& info = vars[v];
        std::string p = "v" + std::to_string(v) + "_";
        if (info.quantifier == 'e') {
            b.add(p + "wf1", "branching_hallway", "1");
            b.add(p + "wf2", "branching_hallway", "1");
        } else {
            b.add(p + "entry", "branching_hallway", "1");
        }
        for (const auto& id : info.occ_ids) b.add(id, "sap2tl", occ_state[id]);
        if (info.quantifier == 'e') {
            b.add(p + "ef2", "branching_hallway", "1");
            b.add(p + "ef1", "branching_hallway", "1");
        }
    };
    for (int t = 0; t <= K; ++t) {
        if (t > 0) {
            int v = chain[t - 1];
            b.add("v" + std::to_string(v) + "_return", "branching_hallway", "1");
            declare_variable_block(v);
        }
        for (int v = 1; v <= n; ++v)
            if (vars[v].quantifier == 'e' && !vars[v].occ_ids.empty() && segment_of(v) == t)
                declare_variable_block(v);
    }
    for (size_t ci = 0; ci < q.clauses.size(); ++ci) {
        std::string p = "c" + std::to_string(ci + 1) + "_";
        size_t width = q.clauses[ci].size();
        if (width == 2) {
            b.add(p + "f", "branching_hallway", "1");
            b.add(p + "m", "branching_hallway", "1");
        } else if (width == 3) {
            b.add(p + "f1", "branching_hallway", "1");
            b.add(p + "f2", "branching_hallway", "1");
            b.add(p + "m1", "branching_hallway", "1");
            b.add(p + "m2", "branching_hallway", "1");
        }
    }

    // ---- lanes -------------------------------------------------------------
    // Fork ports pair with the farther lane entrance so the arcs nest.
    auto wire_lanes = [&](int v, const Port& fork_b, const Port& fork_c, const Port& out_b,
                          const Port& out_c, bool has_right_forks) {
        auto& info = vars[v];
        Port f0 = fwd_left(info, 0, info.occ_ids[0]);
        Port b0 = bnc_left(info, 0, info.occ_ids[0]);
        bool first_positive = info.occ_positive[0];
        // positive: fwd enters at TL (near), bounce at ML (far)
        b.connect(fork_b, first_positive ? b0 : f0);
        b.connect(fork_c, first_positive ? f0 : b0);
        for (size_t k = 0; k + 1 < info.occ_ids.size(); ++k) {
            b.connect(fwd_right(info, k, info.occ_ids[k]),
                      fwd_left(info, k + 1, info.occ_ids[k + 1]));
            b.connect(bnc_right(info, k, info.occ_ids[k]),
                      bnc_left(info, k + 1, info.occ_ids[k + 1]));
        }
        size_t last = info.occ_ids.size() - 1;
        if (has_right_forks) {
            Port fr = fwd_right(info, last, info.occ_ids[last]);
            Port br = bnc_right(info, last, info.occ_ids[last]);
            bool last_positive = info.occ_positive[last];
            // positive: fwd exits at TR (near), bounce at MR (far)
            b.connect(last_positive ? fr : br, out_c);
            b.connect(last_positive ? br : fr, out_b);
        }
    };

    // Universal blocks: entry fork, forward lane to the next block or goal,
    // bounce lane back to the return junction.
    for (int t = 1; t <= K; ++t) {
        int v = chain[t - 1];
        auto& info = vars[v];
        std::string entry = "v" + std::to_string(v) + "_entry";
        std::string ret = "v" + std::to_string(v) + "_return";
        wire_lanes(v, {entry, "b"}, {entry, "c"}, {}, {}, false);
        size_t last = info.occ_ids.size() - 1;
        b.connect(bnc_right(info, last, info.occ_ids[last]), {ret, "c"});
        if (t < K)
            b.connect(fwd_right(info, last, info.occ_ids[last]),
                      {"v" + std::to_string(chain[t]) + "_entry", "a"});
        else
            b.external("goal", fwd_right(info, last, info.occ_ids[last]));
    }

    // Existential widgets: bypass plus both lanes between the fork halls.
    for (int v = 1; v <= n; ++v) {
        auto& info = vars[v];
        if (info.quantifier != 'e' || info.occ_ids.empty()) continue;
        std::string p = "v" + std::to_string(v) + "_";
        b.connect({p + "wf1", "b"}, {p + "ef1", "b"});  // bypass
        b.connect({p + "wf1", "c"}, {p + "wf2", "a"});
        b.connect({p + "ef1", "c"}, {p + "ef2", "a"});
        wire_lanes(v, {p + "wf2", "b"}, {p + "wf2", "c"}, {p + "ef2", "b"}, {p + "ef2", "c"},
                   true);
    }

    // ---- return corridor -----------------------------------------------------
    {
        Port prev{"start_hall", "b"};
        for (int t = 0; t <= K; ++t) {
            if (t > 0) {
                int v = chain[t - 1];
                std::string ret = "v" + std::to_string(v) + "_return";
                b.connect(prev, {ret, "a"});
                // guard lock: open only while this universal is false
                b.connect({ret, "b"}, {vars[v].guard_id, "BL"});
                prev = {vars[v].guard_id, "BR"};
            }
            for (int v = 1; v <= n; ++v) {
                auto& info = vars[v];
                if (info.quantifier != 'e' || info.occ_ids.empty() || segment_of(v) != t)
                    continue;
                std::string p = "v" + std::to_string(v) + "_";
                b.connect(prev, {p + "wf1", "a"});
                prev = {p + "ef1", "a"};
            }
        }
    }

    // ---- clause ladder ---------------------------------------------------------
    {
        // instance positions for nesting decisions
        std::map<std::string, int> pos;
        for (size_t i = 0; i < b.sys.instances.size(); ++i) pos[b.sys.instances[i].id] = (int)i;
        Port prev{"start_hall", "c"};
        std::map<int, int> upto;  // occurrence numbering matches allocation order
        for (size_t ci = 0; ci < q.clauses.size(); ++ci) {
            const auto& cl = q.clauses[ci];
            std::string p = "c" + std::to_string(ci + 1) + "_";
            std::vector<std::string> occ;  // occurrence instance per literal
            for (int lit : cl) {
                int v = std::abs(lit);
                int k = ++upto[v];
                occ.push_back("v" + std::to_string(v) + "_o" + std::to_string(k));
            }
            std::sort(occ.begin(), occ.end(),
                      [&](const std::string& a, const std::string& c2) {
                          return pos.at(a) < pos.at(c2);
                      });
            if (occ.size() == 1) {
                b.connect(prev, {occ[0], "BL"});
                prev = {occ[0], "BR"};
            } else if (occ.size() == 2) {
                b.connect(prev, {p + "f", "a"});
                b.connect({p + "f", "c"}, {occ[0], "BL"});  // farther literal, later port
                b.connect({p + "f", "b"}, {occ[1], "BL"});
                b.connect({occ[0], "BR"}, {p + "m", "b"});
                b.connect({occ[1], "BR"}, {p + "m", "a"});
                prev = {p + "m", "c"};
            } else {
                b.connect(prev, {p + "f1", "a"});
                b.connect({p + "f1", "c"}, {p + "f2", "a"});
                b.connect({p + "f2", "c"}, {occ[0], "BL"});
                b.connect({p + "f2", "b"}, {occ[1], "BL"});
                b.connect({p + "f1", "b"}, {occ[2], "BL"});
                b.connect({occ[0], "BR"}, {p + "m2", "b"});
                b.connect({occ[1], "BR"}, {p + "m2", "a"});
                b.connect({occ[2], "BR"}, {p + "m1", "a"});
                b.connect({p + "m2", "c"}, {p + "m1", "b"});
                prev = {p + "m1", "c"};
            }
        }
        if (K > 0)
            b.connect(prev, {"v" + std::to_string(chain[0]) + "_entry", "a"});
        else
            b.external("goal", prev);
    }

    b.external("start", {"start_hall", "a"});

    out.puzzle.system = std::move(b.sys);
    out.puzzle.start = "start";
    out.puzzle.goal = "goal";
    out.stats["instances"] = static_cast<int>(out.puzzle.system.instances.size());
    int crossings = 0;
    if (planarize) crossings = planarize_with_crossovers(out.puzzle.system);
    out.stats["crossings"] = crossings;
    for (const auto& inst : out.puzzle.system.instances) out.stats[inst.gadget.name()]++;
    out.stats["connections"] = static_cast<int>(out.puzzle.system.connections.size());

    auto pbad = validate(out.puzzle);
    if (!pbad.empty())
        throw ValidationError("reduction produced an invalid puzzle: " + pbad.front());
    return out;
}

namespace {

// Page assignment and crossing count for one linear layout. Interleaving arcs
// on the same page cross; conflict components are two-colored exactly when
// bipartite and greedily repaired otherwise.
struct PageLayout {
    std::vector<double> lo, hi;
    std::vector<int> page;
    int crossings = 0;
};

PageLayout layout_pages(const SystemOfGadgets& sys, const std::vector<int>& order) {
    const int n = static_cast<int>(sys.instances.size());
    const int m = static_cast<int>(sys.connections.size());
    std::vector<int> base(n);
    {
        std::vector<int> by_pos(n);
        for (int i = 0; i < n; ++i) by_pos[order[i]] = i;
        int acc = 0;
        for (int p = 0; p < n; ++p) {
            base[by_pos[p]] = acc;
            acc += sys.instances[by_pos[p]].gadget.num_locations();
        }
    }
    PageLayout L;
    L.lo.resize(m);
    L.hi.resize(m);
    for (int e = 0; e < m; ++e) {
        auto [sa, sb] = sys.connections[e];
        double xa = base[sa.instance] + sa.location;
        double xb = base[sb.instance] + sb.location;
        L.lo[e] = std::min(xa, xb);
        L.hi[e] = std::max(xa, xb);
    }
    auto interleaves = [&](int e, int f) {
        return (L.lo[e] < L.lo[f] && L.lo[f] < L.hi[e] && L.hi[e] < L.hi[f]) ||
               (L.lo[f] < L.lo[e] && L.lo[e] < L.hi[f] && L.hi[f] < L.hi[e]);
    };
    std::vector<std::vector<int>> conflict(m);
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f)
            if (interleaves(e, f)) {
                conflict[e].push_back(f);
                conflict[f].push_back(e);
            }
    L.page.assign(m, -1);
    for (int root = 0; root < m; ++root) {
        if (L.page[root] >= 0 || conflict[root].empty()) continue;
        std::vector<int> comp{root};
        L.page[root] = 0;
        bool bipartite = true;
        for (size_t qi = 0; qi < comp.size(); ++qi) {
            int u = comp[qi];
            for (int v : conflict[u]) {
                if (L.page[v] < 0) {
                    L.page[v] = L.page[u] ^ 1;
                    comp.push_back(v);
                } else if (L.page[v] == L.page[u]) {
                    bipartite = false;
                }
            }
        }
        if (!bipartite) {
            bool improved = true;
            while (improved) {
                improved = false;
                for (int u : comp) {
                    int same = 0, other = 0;
                    for (int v : conflict[u]) (L.page[v] == L.page[u] ? same : other)++;
                    if (same > other) {
                        L.page[u] ^= 1;
                        improved = true;
                    }
                }
            }
        }
    }
    for (int e = 0; e < m; ++e)
        if (L.page[e] < 0) L.page[e] = 0;
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f)
            if (L.page[e] == L.page[f] && interleaves(e, f)) ++L.crossings;
    return L;
}

std::vector<int> dfs_order(const SystemOfGadgets& sys) {
    const int n = static_cast<int>(sys.instances.size());
    std::vector<std::vector<int>> adj(n);
    for (const auto& [a, b] : sys.connections) {
        adj[a.instance].push_back(b.instance);
        adj[b.instance].push_back(a.instance);
    }
    std::vector<int> order(n, -1);
    int next = 0;
    std::vector<char> seen(n, 0);
    std::vector<int> stack;
    for (int root = 0; root < n; ++root) {
        if (seen[root]) continue;
        stack.push_back(root);
        seen[root] = 1;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            order[v] = next++;
            for (auto it = adj[v].rbegin(); it != adj[v].rend(); ++it)
                if (!seen[*it]) {
                    seen[*it] = 1;
                    stack.push_back(*it);
                }
        }
    }
    return order;
}

}  // namespace

int planarize_with_crossovers(SystemOfGadgets& sys) {
    const int n = static_cast<int>(sys.instances.size());
    // Candidate layouts: declaration order (the reducer already lays gadgets
    // out along the corridor) and a depth-first order; keep the cheaper one.
    std::vector<int> decl(n);
    for (int i = 0; i < n; ++i) decl[i] = i;
    PageLayout best = layout_pages(sys, decl);
    if (best.crossings > 0) {
        PageLayout alt = layout_pages(sys, dfs_order(sys));
        if (alt.crossings < best.crossings) best = alt;
    }
    const PageLayout& L = best;

    const int m = static_cast<int>(sys.connections.size());
    if (L.crossings == 0) return 0;

    // Orient each chord from its low end; crossing position uses semicircle
    // arcs, so two interleaving arcs on one page meet exactly once.
    std::vector<Site> at_lo(m), at_hi(m);
    for (int e = 0; e < m; ++e) {
        auto [sa, sb] = sys.connections[e];
        // recompute which endpoint sits at L.lo[e]
        // (same base computation as layout_pages via position comparison)
        at_lo[e] = sa;
        at_hi[e] = sb;
    }
    {
        // recover endpoint order from the chosen layout by re-deriving bases
        std::vector<int> order(sys.instances.size());
        // identity or dfs: rebuild both and match the crossing count
        std::vector<int> decl2(sys.instances.size());
        for (size_t i = 0; i < decl2.size(); ++i) decl2[i] = static_cast<int>(i);
        PageLayout check = layout_pages(sys, decl2);
        order = decl2;
        if (check.crossings != L.crossings ||
            !std::equal(check.lo.begin(), check.lo.end(), L.lo.begin())) {
            order = dfs_order(sys);
        }
        std::vector<int> base(sys.instances.size());
        std::vector<int> by_pos(sys.instances.size());
        for (size_t i = 0; i < order.size(); ++i) by_pos[order[i]] = static_cast<int>(i);
        int acc = 0;
        for (size_t p = 0; p < by_pos.size(); ++p) {
            base[by_pos[p]] = acc;
            acc += sys.instances[by_pos[p]].gadget.num_locations();
        }
        for (int e = 0; e < m; ++e) {
            auto [sa, sb] = sys.connections[e];
            double xa = base[sa.instance] + sa.location;
            double xb = base[sb.instance] + sb.location;
            at_lo[e] = xa < xb ? sa : sb;
            at_hi[e] = xa < xb ? sb : sa;
        }
    }
    auto interleaves = [&](int e, int f) {
        return (L.lo[e] < L.lo[f] && L.lo[f] < L.hi[e] && L.hi[e] < L.hi[f]) ||
               (L.lo[f] < L.lo[e] && L.lo[e] < L.hi[f] && L.hi[f] < L.hi[e]);
    };
    auto cross_x = [&](int e, int f) {
        double me = (L.lo[e] + L.hi[e]) / 2, re = (L.hi[e] - L.lo[e]) / 2;
        double mf = (L.lo[f] + L.hi[f]) / 2, rf = (L.hi[f] - L.lo[f]) / 2;
        return (re * re - rf * rf + mf * mf - me * me) / (2 * (mf - me));
    };

    struct Crossing {
        int other;
        double x;
        int xov;  // crossover instance index
    };
    std::vector<std::vector<Crossing>> per_edge(m);
    int inserted = 0;
    for (int e = 0; e < m; ++e)
        for (int f = e + 1; f < m; ++f) {
            if (L.page[e] != L.page[f] || !interleaves(e, f)) continue;
            std::string id = "xov" + std::to_string(inserted++);
            sys.instances.push_back({id, catalog_gadget("crossover"), 0});
            int xi = static_cast<int>(sys.instances.size()) - 1;
            double x = cross_x(e, f);
            per_edge[e].push_back({f, x, xi});
            per_edge[f].push_back({e, x, xi});
        }
    if (inserted == 0) return 0;

    const Gadget& xg = sys.instances.back().gadget;  // any crossover
    int N = xg.location_index("N"), E = xg.location_index("E");
    int S = xg.location_index("S"), W = xg.location_index("W");

    std::vector<std::pair<Site, Site>> rebuilt;
    for (int e = 0; e < m; ++e) {
        auto& cr = per_edge[e];
        if (cr.empty()) {
            rebuilt.push_back(sys.connections[e]);
            continue;
        }
        std::sort(cr.begin(), cr.end(), [](const Crossing& a, const Crossing& b) {
            return a.x != b.x ? a.x < b.x : a.xov < b.xov;
        });
        // The lower-indexed edge of the pair runs W->E, the other N->S.
        Site prev = at_lo[e];
        for (const Crossing& c : cr) {
            bool we = e < c.other;
            Site in{c.xov, we ? W : N};
            Site outp{c.xov, we ? E : S};
            rebuilt.emplace_back(prev, in);
            prev = outp;
        }
        rebuilt.emplace_back(prev, at_hi[e]);
    }
    sys.connections = std::move(rebuilt);
    return inserted;
}

namespace {

struct Expansion {
    SimulationClaim claim;
    // target state label -> per-sub-instance state index
    std::map<std::string, std::vector<int>> init_for;
    // target location label -> (sub-instance index, location index) external site
    std::map<std::string, Site> port_for;
};

// Builds the expansion table reachable from `base` over the claim catalog.
std::map<std::string, Expansion> build_plans(const std::string& base) {
    (void)catalog_gadget(base);  // validate the name early
    std::map<std::string, Expansion> plans;
    std::vector<SimulationClaim> claims = all_claims();
    std::set<std::string> resolved{base, "branching_hallway"};
    bool progress = true;
    while (progress) {
        progress = false;
        for (const auto& c : claims) {
            if (resolved.count(c.target.name())) continue;
            bool usable = true;
            for (const auto& inst : c.construction.instances)
                if (!resolved.count(inst.gadget.name())) {
                    usable = false;
                    break;
                }
            if (!usable) continue;
            EquivalenceResult eq = check_equivalence(c);
            if (!eq.equivalent)
                throw ValidationError("claim '" + c.name + "' fails verification");

            Expansion ex;
            ex.claim = c;
            CompiledSystem cs(c.construction);
            for (const auto& [state_label, classes] : eq.correspondence) {
                if (classes.empty()) continue;
                // first discovered config in a matching class
                for (size_t ci = 0; ci < eq.induced.configs.size(); ++ci) {
                    if (std::find(classes.begin(), classes.end(),
                                  eq.induced.config_class[ci]) == classes.end())
                        continue;
                    std::vector<int> states;
                    for (size_t k = 0; k < c.construction.instances.size(); ++k)
                        states.push_back(
                            cs.layout().get(eq.induced.configs[ci], static_cast<int>(k)));
                    ex.init_for[state_label] = std::move(states);
                    break;
                }
            }
            for (const auto& [ext, site] : c.construction.externals)
                ex.port_for[c.location_map.at(ext)] = *site;
            plans.emplace(c.target.name(), std::move(ex));
            resolved.insert(c.target.name());
            progress = true;
        }
    }
    return plans;
}

}  // namespace

Puzzle substitute_puzzle(const Puzzle& p, const std::string& base) {
    auto plans = build_plans(base);

    Puzzle cur = p;
    cur.system.rotation.clear();
    for (;;) {
        // find first instance needing expansion
        int which = -1;
        for (size_t i = 0; i < cur.system.instances.size(); ++i) {
            const std::string& t = cur.system.instances[i].gadget.name();
            if (t == base || t == "branching_hallway") continue;
            which = static_cast<int>(i);
            break;
        }
        if (which < 0) break;
        const auto& old = cur.system.instances[which];
        auto it = plans.find(old.gadget.name());
        if (it == plans.end())
            throw ValidationError("no catalog chain from '" + base + "' to '" +
                                  old.gadget.name() + "'");
        const Expansion& ex = it->second;
        const std::string state_label = old.gadget.states()[old.initial_state];
        auto si = ex.init_for.find(state_label);
        if (si == ex.init_for.end())
            throw ValidationError("no construction configuration matches state '" + state_label +
                                  "' of '" + old.gadget.name() + "'");

        SystemOfGadgets next;
        std::vector<int> remap(cur.system.instances.size(), -1);
        int sub_base = -1;
        for (size_t i = 0; i < cur.system.instances.size(); ++i) {
            if (static_cast<int>(i) == which) {
                sub_base = static_cast<int>(next.instances.size());
                for (size_t k = 0; k < ex.claim.construction.instances.size(); ++k) {
                    const auto& sub = ex.claim.construction.instances[k];
                    next.instances.push_back(
                        {old.id + "." + sub.id, sub.gadget, si->second[k]});
                }
            } else {
                remap[i] = static_cast<int>(next.instances.size());
                next.instances.push_back(cur.system.instances[i]);
            }
        }
        auto relocate = [&](const Site& s) -> Site {
            if (s.instance != which) return {remap[s.instance], s.location};
            const std::string& loc = old.gadget.locations()[s.location];
            Site sub = ex.port_for.at(loc);
            return {sub_base + sub.instance, sub.location};
        };
        for (const auto& [a, b2] : cur.system.connections)
            next.connections.emplace_back(relocate(a), relocate(b2));
        for (const auto& [sa, sb] : ex.claim.construction.connections)
            next.connections.emplace_back(Site{sub_base + sa.instance, sa.location},
                                          Site{sub_base + sb.instance, sb.location});
        for (const auto& [label, site] : cur.system.externals)
            next.externals.emplace_back(label,
                                        site ? std::optional<Site>(relocate(*site)) : site);
        cur.system = std::move(next);
    }
    auto bad = validate(cur);
    if (!bad.empty())
        throw ValidationError("substitution produced an invalid puzzle: " + bad.front());
    return cur;
}

Puzzle substitute_gadgets(const ReductionOutput& out, const std::string& base) {
    return substitute_puzzle(out.puzzle, base);
}

}  // namespace gadgets
