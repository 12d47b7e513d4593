#include "gadgets/json_io.hpp"

#include <fstream>

#include "gadgets/catalog.hpp"

namespace gadgets {

using nlohmann::json;

namespace {

const json& need(const json& j, const char* key, const std::string& what) {
    auto it = j.find(key);
    if (it == j.end()) throw ValidationError(what + ": missing field '" + key + "'");
    return *it;
}

}  // namespace

json gadget_to_json(const Gadget& g) {
    json t = json::array();
    for (const Transition& tr : g.transitions())
        t.push_back({{"from", {g.states()[tr.from_state], g.locations()[tr.from_loc]}},
                     {"to", {g.states()[tr.to_state], g.locations()[tr.to_loc]}}});
    return json{{"name", g.name()},
                {"locations", g.locations()},
                {"states", g.states()},
                {"transitions", t},
                {"rotation", g.rotation()}};
}

Gadget gadget_from_json(const json& j) {
    std::string name = need(j, "name", "gadget").get<std::string>();
    auto locs = need(j, "locations", name).get<std::vector<std::string>>();
    auto states = need(j, "states", name).get<std::vector<std::string>>();
    auto index_of = [&name](const std::vector<std::string>& v, const std::string& s,
                            const char* kind) {
        for (size_t i = 0; i < v.size(); ++i)
            if (v[i] == s) return static_cast<int>(i);
        throw ValidationError(name + ": unknown " + kind + " '" + s + "'");
    };
    std::vector<Transition> trans;
    for (const json& e : need(j, "transitions", name)) {
        const json& f = need(e, "from", name + " transition");
        const json& t = need(e, "to", name + " transition");
        trans.push_back({index_of(states, f.at(0).get<std::string>(), "state"),
                         index_of(locs, f.at(1).get<std::string>(), "location"),
                         index_of(states, t.at(0).get<std::string>(), "state"),
                         index_of(locs, t.at(1).get<std::string>(), "location")});
    }
    std::vector<std::string> rot;
    if (j.contains("rotation")) rot = j["rotation"].get<std::vector<std::string>>();
    return Gadget(name, locs, states, trans, rot);
}

json system_to_json(const SystemOfGadgets& sys) {
    json gs = json::array();
    std::map<std::string, json> inline_types;
    for (const auto& inst : sys.instances) {
        gs.push_back({{"id", inst.id},
                      {"type", inst.gadget.name()},
                      {"state", inst.gadget.states()[inst.initial_state]}});
        bool in_catalog = false;
        try {
            in_catalog = catalog_gadget(inst.gadget.name()) == inst.gadget;
        } catch (const ValidationError&) {
        }
        if (!in_catalog) inline_types[inst.gadget.name()] = gadget_to_json(inst.gadget);
    }
    json conns = json::array();
    for (const auto& [a, b] : sys.connections) {
        const auto& ia = sys.instances[a.instance];
        const auto& ib = sys.instances[b.instance];
        conns.push_back(json::array(
            {json::array({ia.id, ia.gadget.locations()[a.location]}),
             json::array({ib.id, ib.gadget.locations()[b.location]})}));
    }
    json exts = json::object();
    for (const auto& [label, site] : sys.externals) {
        if (site) {
            const auto& inst = sys.instances[site->instance];
            exts[label] = json::array({inst.id, inst.gadget.locations()[site->location]});
        } else {
            exts[label] = nullptr;
        }
    }
    json out{{"gadgets", gs}, {"connections", conns}, {"externals", exts}};
    if (!sys.rotation.empty()) {
        json rot = json::object();
        for (const auto& [id, order] : sys.rotation) rot[id] = order;
        out["rotation"] = rot;
    }
    if (!inline_types.empty()) {
        json types = json::object();
        for (auto& [n, g] : inline_types) types[n] = g;
        out["types"] = types;
    }
    return out;
}

SystemOfGadgets system_from_json(const json& j) {
    SystemOfGadgets sys;
    std::map<std::string, Gadget> inline_types;
    if (j.contains("types"))
        for (const auto& [name, gj] : j["types"].items())
            inline_types.emplace(name, gadget_from_json(gj));
    auto resolve = [&inline_types](const std::string& type) {
        auto it = inline_types.find(type);
        if (it != inline_types.end()) return it->second;
        return catalog_gadget(type);
    };
    for (const json& gj : need(j, "gadgets", "system")) {
        std::string id = need(gj, "id", "system gadget").get<std::string>();
        Gadget g = resolve(need(gj, "type", id).get<std::string>());
        int st = gj.contains("state") ? g.state_index(gj["state"].get<std::string>()) : 0;
        sys.instances.push_back({id, std::move(g), st});
    }
    auto site_of = [&sys](const json& s, const std::string& what) {
        std::string id = s.at(0).get<std::string>();
        int idx = sys.instance_index(id);
        if (idx < 0) throw ValidationError(what + ": unknown instance '" + id + "'");
        int loc = sys.instances[idx].gadget.location_index(s.at(1).get<std::string>());
        return Site{idx, loc};
    };
    if (j.contains("connections"))
        for (const json& c : j["connections"])
            sys.connections.emplace_back(site_of(c.at(0), "connection"),
                                         site_of(c.at(1), "connection"));
    if (j.contains("externals"))
        for (const auto& [label, s] : j["externals"].items()) {
            if (s.is_null())
                sys.externals.emplace_back(label, std::nullopt);
            else
                sys.externals.emplace_back(label, site_of(s, "external '" + label + "'"));
        }
    if (j.contains("rotation"))
        for (const auto& [id, order] : j["rotation"].items())
            sys.rotation[id] = order.get<std::vector<std::string>>();
    return sys;
}

json puzzle_to_json(const Puzzle& p) {
    json j = system_to_json(p.system);
    j["start"] = p.start;
    j["goal"] = p.goal;
    return j;
}

Puzzle puzzle_from_json(const json& j) {
    Puzzle p;
    p.system = system_from_json(j);
    p.start = need(j, "start", "puzzle").get<std::string>();
    p.goal = need(j, "goal", "puzzle").get<std::string>();
    return p;
}

json claim_to_json(const SimulationClaim& c) {
    json lm = json::object();
    for (const auto& [k, v] : c.location_map) lm[k] = v;
    json target;
    bool catalog_target = false;
    try {
        catalog_target = catalog_gadget(c.target.name()) == c.target;
    } catch (const ValidationError&) {
    }
    if (catalog_target)
        target = c.target.name();
    else
        target = gadget_to_json(c.target);
    return json{{"name", c.name},
                {"construction", system_to_json(c.construction)},
                {"target", target},
                {"location_map", lm},
                {"initial_state", c.initial_state}};
}

SimulationClaim claim_from_json(const json& j) {
    SimulationClaim c;
    c.name = j.value("name", "claim");
    c.construction = system_from_json(need(j, "construction", c.name));
    const json& t = need(j, "target", c.name);
    c.target = t.is_string() ? catalog_gadget(t.get<std::string>()) : gadget_from_json(t);
    for (const auto& [k, v] : need(j, "location_map", c.name).items())
        c.location_map[k] = v.get<std::string>();
    c.initial_state = need(j, "initial_state", c.name).get<std::string>();
    return c;
}

json solution_to_json(const CompiledSystem& cs, const Solution& s) {
    json moves = json::array();
    for (const Move& m : s.witness)
        moves.push_back({{"kind", m.traversal ? "traverse" : "hop"},
                         {"from", cs.node_name(m.from_node)},
                         {"to", cs.node_name(m.to_node)}});
    return json{{"format", 1},
                {"solvable", s.solvable},
                {"algorithm", s.algorithm},
                {"explored", s.explored},
                {"witness", moves}};
}

json load_json_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw IOError("cannot open " + path);
    json j;
    try {
        in >> j;
    } catch (const json::parse_error& e) {
        throw IOError(path + ": " + e.what());
    }
    return j;
}

void save_json_file(const std::string& path, const json& j) {
    std::ofstream out(path);
    if (!out) throw IOError("cannot write " + path);
    out << j.dump(2) << "\n";
}

}  // namespace gadgets
