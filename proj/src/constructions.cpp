#include "gadgets/constructions.hpp"

#include <algorithm>

#include "gadgets/catalog.hpp"

namespace gadgets {

namespace {

// Small fluent helper for wiring construction systems.
struct Builder {
    SystemOfGadgets sys;

    Builder& add(const std::string& id, const std::string& type, const std::string& state = "1") {
        Gadget g = catalog_gadget(type);
        int s = g.state_index(state);
        sys.instances.push_back({id, std::move(g), s});
        return *this;
    }
    Site site(const std::string& id, const std::string& loc) const {
        int i = sys.instance_index(id);
        if (i < 0) throw ValidationError("builder: unknown instance '" + id + "'");
        return {i, sys.instances[i].gadget.location_index(loc)};
    }
    Builder& connect(const std::string& ida, const std::string& la, const std::string& idb,
                     const std::string& lb) {
        sys.connections.emplace_back(site(ida, la), site(idb, lb));
        return *this;
    }
    Builder& external(const std::string& label, const std::string& id, const std::string& loc) {
        sys.externals.emplace_back(label, site(id, loc));
        return *this;
    }
    // Clockwise rotation override; by default instances get their gadget's
    // canonical order, reversed ones model reflected placements.
    Builder& reflect(const std::string& id) {
        int i = sys.instance_index(id);
        auto order = sys.instances[i].gadget.rotation();
        std::reverse(order.begin(), order.end());
        sys.rotation[id] = order;
        return *this;
    }
    SystemOfGadgets finish() {
        for (const auto& inst : sys.instances)
            if (!sys.rotation.count(inst.id)) sys.rotation[inst.id] = inst.gadget.rotation();
        return sys;
    }
};

SimulationClaim make_claim(const std::string& name, SystemOfGadgets sys,
                           const std::string& target,
                           std::map<std::string, std::string> location_map,
                           const std::string& initial_state) {
    SimulationClaim c;
    c.name = name;
    c.construction = std::move(sys);
    c.target = catalog_gadget(target);
    c.location_map = std::move(location_map);
    c.initial_state = initial_state;
    return c;
}

SimulationClaim ap2t_to_c2t() {
    Builder b;
    b.add("A", "ap2t").add("B", "ap2t");
    b.connect("A", "TR", "B", "BR");
    b.connect("B", "TR", "A", "BR");
    b.external("TL", "A", "TL").external("TR", "B", "TL");
    b.external("BL", "A", "BL").external("BR", "B", "BL");
    return make_claim("ap2t_to_c2t", b.finish(), "c2t",
                      {{"TL", "TL"}, {"TR", "TR"}, {"BL", "BL"}, {"BR", "BR"}}, "1");
}

SimulationClaim c2t_to_p2t() {
    Builder b;
    b.add("A", "c2t").add("B", "c2t");
    b.connect("A", "BR", "B", "TL");
    b.connect("A", "BL", "B", "TR");
    b.external("TL", "A", "TL").external("TR", "B", "BR");
    b.external("BL", "A", "TR").external("BR", "B", "BL");
    return make_claim("c2t_to_p2t", b.finish(), "p2t",
                      {{"TL", "TL"}, {"TR", "TR"}, {"BL", "BL"}, {"BR", "BR"}}, "1");
}

// Six 2-toggles around a central chamber; the bottom pair carries the target
// toggle tunnel, the outer/middle pairs realize the lock tunnel.
SimulationClaim two_toggles_to_ntl() {
    Builder b;
    b.add("g1", "p2t").add("g2", "p2t");
    b.add("g3", "c2t", "2").add("g4", "c2t");
    b.add("g5", "p2t").add("g6", "ap2t");
    b.add("hIL", "branching_hallway").add("hIR", "branching_hallway");
    b.add("hC1", "branching_hallway").add("hC2", "branching_hallway");
    b.add("hT1", "branching_hallway").add("hT2", "branching_hallway");
    // outer tops around the roof
    b.connect("g1", "TL", "g2", "TL");
    // middle row meeting point
    b.connect("g3", "TR", "g4", "TR");
    // bottom tunnel meeting point
    b.connect("g5", "BR", "g6", "BR");
    // inner-left junction
    b.connect("hIL", "a", "g1", "BR");
    b.connect("hIL", "b", "g3", "BL");
    b.connect("hIL", "c", "g5", "TL");
    // inner-right junction
    b.connect("hIR", "a", "g2", "BR");
    b.connect("hIR", "b", "g4", "BL");
    b.connect("hIR", "c", "g6", "TL");
    // central chamber joining the bottom toggles' upper tunnels to the verticals
    b.connect("hC1", "a", "g5", "TR");
    b.connect("hC1", "b", "g3", "TL");
    b.connect("hC1", "c", "hC2", "a");
    b.connect("hC2", "b", "g4", "TL");
    b.connect("hC2", "c", "g6", "TR");
    // top chamber
    b.connect("hT1", "a", "g1", "TR");
    b.connect("hT1", "b", "g3", "BR");
    b.connect("hT1", "c", "hT2", "a");
    b.connect("hT2", "b", "g4", "BR");
    b.connect("hT2", "c", "g2", "TR");
    b.external("lockL", "g1", "BL").external("lockR", "g2", "BL");
    b.external("togL", "g5", "BL").external("togR", "g6", "BL");
    for (const char* id : {"g1", "g4", "g5", "hIL", "hC1", "hC2"}) b.reflect(id);
    return make_claim("two_toggles_to_ntl", b.finish(), "ntl",
                      {{"togL", "TL"}, {"togR", "TR"}, {"lockL", "BL"}, {"lockR", "BR"}}, "1");
}

// Shared shape of the round 2-toggle-lock constructions: two crossing
// 2-toggles gate a toggle-lock's toggle tunnel from both sides.
SimulationClaim round_2tl(const std::string& name, const std::string& target, bool antiparallel) {
    Builder b;
    b.add("X", "c2t").add("D", "c2t").add("N", "ntl");
    b.add("hP", "branching_hallway").add("hQ", "branching_hallway");
    b.connect("hP", "a", "X", "BR");
    b.connect("hP", "b", "D", "BR");
    b.connect("hP", "c", "N", "TL");
    b.connect("hQ", "a", "N", "TR");
    b.connect("hQ", "b", "X", "BL");
    b.connect("hQ", "c", "D", "BL");
    b.external("A1", "X", "TL").external("A2", "X", "TR");
    if (antiparallel)
        b.external("B1", "D", "TL").external("B2", "D", "TR");
    else
        b.external("B1", "D", "TR").external("B2", "D", "TL");
    b.external("C1", "N", "BL").external("C2", "N", "BR");
    b.reflect("hP");
    return make_claim(name, b.finish(), target,
                      {{"A1", "A1"}, {"A2", "A2"}, {"B1", "B1"}, {"B2", "B2"},
                       {"C1", "C1"}, {"C2", "C2"}},
                      "1");
}

SimulationClaim to_sap2tl() {
    Builder b;
    b.add("C1g", "c2t").add("R", "rp2tl").add("C2g", "c2t");
    // both toggle routes enter on the C1g side and leave on the C2g side, so
    // each crossing 2-toggle meets adjacent spots on the round boundary
    b.connect("C1g", "BR", "R", "A1");
    b.connect("R", "A2", "C2g", "TL");
    b.connect("C1g", "BL", "R", "B2");
    b.connect("R", "B1", "C2g", "TR");
    b.external("T1a", "C1g", "TL").external("T1b", "C2g", "BR");
    b.external("T2b", "C1g", "TR").external("T2a", "C2g", "BL");
    b.external("L1", "R", "C1").external("L2", "R", "C2");
    return make_claim("rp2tl_to_sap2tl", b.finish(), "sap2tl",
                      {{"T1a", "TL"}, {"T1b", "TR"}, {"T2b", "MR"}, {"T2a", "ML"},
                       {"L1", "BL"}, {"L2", "BR"}},
                      "1");
}

SimulationClaim sap2tl_to_nwl() {
    Builder b;
    b.add("S", "sap2tl");
    b.add("hL", "branching_hallway").add("hR", "branching_hallway");
    b.connect("hL", "b", "S", "TL");
    b.connect("hL", "c", "S", "ML");
    b.connect("hR", "b", "S", "TR");
    b.connect("hR", "c", "S", "MR");
    b.external("WL", "hL", "a").external("WR", "hR", "a");
    b.external("lockL", "S", "BL").external("lockR", "S", "BR");
    return make_claim("sap2tl_to_nwl", b.finish(), "nwl",
                      {{"WL", "TL"}, {"WR", "TR"}, {"lockL", "BL"}, {"lockR", "BR"}}, "1");
}

SimulationClaim nwl_to_swlw() {
    Builder b;
    b.add("Wtl", "nwl").add("Wtr", "nwl", "2").add("Wbl", "nwl", "2").add("Wbr", "nwl");
    b.add("hJ1", "branching_hallway").add("hJ2a", "branching_hallway");
    b.add("hJ2b", "branching_hallway").add("hJ3", "branching_hallway");
    // the two tripwire chains
    b.connect("Wtl", "TR", "Wtr", "TL");
    b.connect("Wbl", "TR", "Wbr", "TL");
    // lock ladder: left pair in parallel, then right pair in parallel
    b.connect("hJ1", "b", "Wtl", "BL");
    b.connect("hJ1", "c", "Wbl", "BL");
    b.connect("hJ2a", "a", "Wtl", "BR");
    b.connect("hJ2a", "b", "Wbl", "BR");
    b.connect("hJ2a", "c", "hJ2b", "a");
    b.connect("hJ2b", "b", "Wtr", "BL");
    b.connect("hJ2b", "c", "Wbr", "BL");
    b.connect("hJ3", "a", "Wtr", "BR");
    b.connect("hJ3", "b", "Wbr", "BR");
    b.external("WT1", "Wtl", "TL").external("WT2", "Wtr", "TR");
    b.external("ML", "hJ1", "a").external("MR", "hJ3", "c");
    b.external("WB1", "Wbl", "TL").external("WB2", "Wbr", "TR");
    for (const char* id : {"Wbl", "Wbr", "hJ2a"}) b.reflect(id);
    return make_claim("nwl_to_swlw", b.finish(), "swlw",
                      {{"WT1", "TL"}, {"WT2", "TR"}, {"ML", "ML"}, {"MR", "MR"},
                       {"WB1", "BL"}, {"WB2", "BR"}},
                      "1");
}

SimulationClaim swlw_to_crossover() {
    Builder b;
    b.add("Sn", "swlw").add("Se", "swlw").add("Ss", "swlw").add("Sw", "swlw");
    b.add("hc1", "branching_hallway").add("hc2", "branching_hallway");
    // north arm: own lock, then the bottom tripwires of west and east
    b.connect("Sn", "MR", "Sw", "BL");
    b.connect("Sw", "BR", "Se", "BL");
    b.connect("Se", "BR", "hc1", "a");
    // south arm: own lock, then the top tripwires of west and east
    b.connect("Ss", "MR", "Sw", "TL");
    b.connect("Sw", "TR", "Se", "TL");
    b.connect("Se", "TR", "hc2", "b");
    // west arm: bottom tripwires of north and south, then its own lock
    b.connect("Sn", "BR", "Ss", "BL");
    b.connect("Ss", "BR", "Sw", "ML");
    b.connect("Sw", "MR", "hc1", "b");
    // east arm: top tripwires of north and south, then its own lock
    b.connect("Sn", "TR", "Ss", "TL");
    b.connect("Ss", "TR", "Se", "ML");
    b.connect("Se", "MR", "hc2", "c");
    b.connect("hc1", "c", "hc2", "a");
    b.external("N", "Sn", "ML").external("S", "Ss", "ML");
    b.external("W", "Sn", "BL").external("E", "Sn", "TL");
    b.reflect("Sn").reflect("Se");
    return make_claim("swlw_to_crossover", b.finish(), "crossover",
                      {{"N", "N"}, {"E", "E"}, {"S", "S"}, {"W", "W"}}, "1");
}

SimulationClaim nwl_to_nwt() {
    Builder b;
    b.add("T", "1toggle");
    b.add("L1", "nwl").add("L2", "nwl").add("L3", "nwl", "2").add("L4", "nwl", "2");
    b.add("X1", "crossover").add("X2", "crossover");
    b.add("hL", "branching_hallway").add("hR", "branching_hallway");
    b.add("hTl", "branching_hallway").add("hTr", "branching_hallway");
    // straight route through L1, the toggle, L2
    b.connect("hL", "b", "L1", "BL");
    b.connect("L1", "BR", "X1", "W");
    b.connect("X1", "E", "hTl", "a");
    b.connect("hTl", "b", "T", "a");
    b.connect("T", "b", "hTr", "a");
    b.connect("hTr", "b", "L2", "BL");
    b.connect("L2", "BR", "hR", "b");
    // crossed route to the toggle's far port; X2 carries its legs across
    b.connect("hL", "c", "L3", "BL");
    b.connect("L3", "BR", "X2", "W");
    b.connect("X2", "E", "hTr", "c");
    b.connect("hTl", "c", "X2", "N");
    b.connect("X2", "S", "L4", "BL");
    b.connect("L4", "BR", "hR", "c");
    // tripwire chain synchronizing all four locks; it ducks through X1
    b.connect("L1", "TR", "X1", "N");
    b.connect("X1", "S", "L3", "TL");
    b.connect("L3", "TR", "L4", "TL");
    b.connect("L4", "TR", "L2", "TR");
    b.external("togL", "hL", "a").external("togR", "hR", "a");
    b.external("W1", "L1", "TL").external("W2", "L2", "TL");
    for (const char* id : {"L1", "L3", "L4", "X1"}) b.reflect(id);
    return make_claim("nwl_to_nwt", b.finish(), "nwt",
                      {{"W1", "TL"}, {"W2", "TR"}, {"togL", "BL"}, {"togR", "BR"}}, "1");
}

SimulationClaim p2t_to_ap2t() {
    Builder b;
    b.add("R", "p2t").add("L", "p2t");
    b.add("UR", "p2t").add("UL", "p2t").add("LL", "p2t").add("LR", "p2t");
    b.add("hn2", "branching_hallway").add("hm1", "branching_hallway");
    b.add("hm5", "branching_hallway").add("hb1", "branching_hallway");
    b.connect("R", "TR", "UR", "TL");
    b.connect("UL", "TR", "L", "TR");
    b.connect("UR", "BL", "LR", "TR");
    b.connect("UL", "BR", "LL", "TL");
    b.connect("L", "BR", "LL", "BL");
    b.connect("LR", "BR", "R", "BR");
    b.connect("UR", "TR", "hn2", "a");
    b.connect("UL", "TL", "hn2", "b");
    b.connect("hn2", "c", "hm1", "c");
    b.connect("UR", "BR", "hm1", "a");
    b.connect("UL", "BL", "hm1", "b");
    b.connect("LL", "TR", "hm5", "a");
    b.connect("LR", "TL", "hm5", "b");
    b.connect("hm5", "c", "hb1", "c");
    b.connect("LL", "BR", "hb1", "a");
    b.connect("LR", "BL", "hb1", "b");
    b.external("cTR", "R", "TL").external("cBR", "R", "BL");
    b.external("cTL", "L", "TL").external("cBL", "L", "BL");
    for (const char* id : {"LL", "LR", "hm1", "hm5"}) b.reflect(id);
    return make_claim("p2t_to_ap2t", b.finish(), "ap2t",
                      {{"cTR", "TL"}, {"cBR", "TR"}, {"cBL", "BR"}, {"cTL", "BL"}}, "1");
}

SimulationClaim ntl_to_ap2t() {
    Builder b;
    b.add("Ntr", "ntl").add("Ntl", "ntl", "2").add("Nbl", "ntl").add("Nbr", "ntl", "2");
    b.add("U", "ntl").add("D", "ntl");
    b.add("hJt", "branching_hallway").add("hJb", "branching_hallway");
    b.add("hUi", "branching_hallway").add("hDi", "branching_hallway");
    // corner locks meet the entry junctions
    b.connect("hJt", "a", "Ntr", "BL");
    b.connect("hJt", "b", "Ntl", "BL");
    b.connect("hJt", "c", "U", "TL");
    b.connect("hJb", "a", "Nbl", "BL");
    b.connect("hJb", "b", "Nbr", "BL");
    b.connect("hJb", "c", "D", "TL");
    // spoke toggles into the loop
    b.connect("hUi", "a", "U", "TR");
    b.connect("hUi", "b", "Ntr", "TR");
    b.connect("hUi", "c", "Ntl", "TR");
    b.connect("hDi", "a", "D", "TR");
    b.connect("hDi", "b", "Nbl", "TR");
    b.connect("hDi", "c", "Nbr", "TR");
    // the one-way loop
    b.connect("Ntl", "TL", "Nbl", "TL");
    b.connect("Ntr", "TL", "Nbr", "TL");
    b.external("cTR", "Ntr", "BR").external("cTL", "Ntl", "BR");
    b.external("cBL", "Nbl", "BR").external("cBR", "Nbr", "BR");
    for (const char* id : {"Ntl", "Nbr", "hJt", "hJb"}) b.reflect(id);
    return make_claim("ntl_to_ap2t", b.finish(), "ap2t",
                      {{"cTR", "TL"}, {"cTL", "TR"}, {"cBR", "BL"}, {"cBL", "BR"}}, "1");
}

SimulationClaim nwt_to_ap2t() {
    Builder b;
    b.add("N1", "nwt").add("N2", "nwt");
    b.connect("N1", "BR", "N2", "TL");
    b.connect("N2", "BR", "N1", "TL");
    b.external("cTL", "N1", "BL").external("cTR", "N2", "TR");
    b.external("cBL", "N1", "TR").external("cBR", "N2", "BL");
    return make_claim("nwt_to_ap2t", b.finish(), "ap2t",
                      {{"cTL", "TL"}, {"cTR", "TR"}, {"cBL", "BL"}, {"cBR", "BR"}}, "1");
}

SimulationClaim nwl_to_ap2t() {
    Builder b;
    b.add("Wtr", "nwl").add("Wtl", "nwl", "2").add("Wbl", "nwl").add("Wbr", "nwl", "2");
    b.add("U", "nwl", "2").add("D", "nwl", "2");
    b.add("hJt", "branching_hallway").add("hJb", "branching_hallway");
    b.add("hUi", "branching_hallway").add("hDi", "branching_hallway");
    b.connect("hJt", "a", "Wtr", "BL");
    b.connect("hJt", "b", "Wtl", "BL");
    b.connect("hJt", "c", "U", "TL");
    b.connect("hJb", "a", "Wbl", "BL");
    b.connect("hJb", "b", "Wbr", "BL");
    b.connect("hJb", "c", "D", "TL");
    // the spokes are 1-toggles folded out of one gadget: wire into own lock
    b.connect("U", "TR", "U", "BR");
    b.connect("U", "BL", "hUi", "a");
    b.connect("D", "TR", "D", "BR");
    b.connect("D", "BL", "hDi", "a");
    // tripwire loop
    b.connect("hUi", "b", "Wtr", "TL");
    b.connect("hUi", "c", "Wtl", "TL");
    b.connect("hDi", "b", "Wbl", "TL");
    b.connect("hDi", "c", "Wbr", "TL");
    b.connect("Wtr", "TR", "Wbr", "TR");
    b.connect("Wbl", "TR", "Wtl", "TR");
    b.external("cTR", "Wtr", "BR").external("cTL", "Wtl", "BR");
    b.external("cBL", "Wbl", "BR").external("cBR", "Wbr", "BR");
    for (const char* id : {"Wtr", "Wbl", "hJt", "hJb"}) b.reflect(id);
    return make_claim("nwl_to_ap2t", b.finish(), "ap2t",
                      {{"cTR", "TL"}, {"cTL", "TR"}, {"cBR", "BL"}, {"cBL", "BR"}}, "1");
}

// Two crossing gadgets chained through both tunnels uncross into the
// non-crossing variant.
SimulationClaim uncross(const std::string& name, const std::string& crossing,
                        const std::string& noncrossing) {
    Builder b;
    b.add("A", crossing).add("B", crossing);
    b.connect("A", "BR", "B", "TL");
    b.connect("A", "BL", "B", "TR");
    b.external("T1a", "A", "TL").external("T1b", "B", "BR");
    b.external("T2a", "A", "TR").external("T2b", "B", "BL");
    return make_claim(name, b.finish(), noncrossing,
                      {{"T1a", "TL"}, {"T1b", "TR"}, {"T2a", "BL"}, {"T2b", "BR"}}, "1");
}

SimulationClaim spinner4_to_fork() {
    Builder b;
    b.add("S", "spinner4");
    b.external("L", "S", "p0").external("C", "S", "p1").external("R", "S", "p2");
    return make_claim("spinner4_to_fork", b.finish(), "fork",
                      {{"L", "L"}, {"C", "C"}, {"R", "R"}}, "1");
}

SimulationClaim forks_to_c2t() {
    Builder b;
    b.add("F1", "fork").add("F2", "fork");
    b.connect("F1", "C", "F2", "C");
    b.external("cTL", "F1", "L").external("cBR", "F2", "R");
    b.external("cTR", "F2", "L").external("cBL", "F1", "R");
    return make_claim("forks_to_c2t", b.finish(), "c2t",
                      {{"cTL", "TL"}, {"cTR", "TR"}, {"cBL", "BL"}, {"cBR", "BR"}}, "1");
}

SimulationClaim ap2t_to_1toggle() {
    Builder b;
    b.add("A", "ap2t");
    b.external("a", "A", "TL").external("b", "A", "TR");
    return make_claim("ap2t_to_1toggle", b.finish(), "1toggle", {{"a", "a"}, {"b", "b"}}, "1");
}

}  // namespace

std::vector<SimulationClaim> all_claims() {
    std::vector<SimulationClaim> v;
    v.push_back(ap2t_to_c2t());
    v.push_back(c2t_to_p2t());
    v.push_back(two_toggles_to_ntl());
    v.push_back(round_2tl("two_toggles_ntl_to_rap2tl", "rap2tl", true));
    v.push_back(round_2tl("two_toggles_ntl_to_rp2tl", "rp2tl", false));
    v.push_back(to_sap2tl());
    v.push_back(sap2tl_to_nwl());
    v.push_back(nwl_to_swlw());
    v.push_back(swlw_to_crossover());
    v.push_back(nwl_to_nwt());
    v.push_back(p2t_to_ap2t());
    v.push_back(ntl_to_ap2t());
    v.push_back(nwt_to_ap2t());
    v.push_back(nwl_to_ap2t());
    v.push_back(uncross("cwt_to_nwt", "cwt", "nwt"));
    v.push_back(uncross("cwl_to_nwl", "cwl", "nwl"));
    v.push_back(uncross("ctl_to_ntl", "ctl", "ntl"));
    v.push_back(spinner4_to_fork());
    v.push_back(forks_to_c2t());
    v.push_back(ap2t_to_1toggle());
    return v;
}

SimulationClaim claim_by_name(const std::string& name) {
    for (auto& c : all_claims())
        if (c.name == name) return c;
    throw ValidationError("unknown claim '" + name + "'");
}

}  // namespace gadgets
