#include "gadgets/catalog.hpp"

namespace gadgets {

namespace {

const std::vector<std::string> kBoxLocs = {"TL", "TR", "BL", "BR"};
const std::vector<std::string> kBoxRot = {"TL", "TR", "BR", "BL"};
const std::vector<std::string> kTwo = {"1", "2"};

// Indices into kBoxLocs.
constexpr int TL = 0, TR = 1, BL = 2, BR = 3;

void add_pair(std::vector<Transition>& v, int s, int a, int s2, int b) {
    v.push_back({s, a, s2, b});
    v.push_back({s2, b, s, a});
}

// Tripwire on (a,b): both directions in both states, always flipping.
void add_wire(std::vector<Transition>& v, int a, int b) {
    add_pair(v, 0, a, 1, b);
    add_pair(v, 1, a, 0, b);
}

// Lock on (a,b), open in state s.
void add_lock(std::vector<Transition>& v, int s, int a, int b) {
    add_pair(v, s, a, s, b);
}

Gadget branching_hallway() {
    std::vector<Transition> t;
    for (int a = 0; a < 3; ++a)
        for (int b = 0; b < 3; ++b)
            if (a != b) t.push_back({0, a, 0, b});
    return Gadget("branching_hallway", {"a", "b", "c"}, {"1"}, t);
}

Gadget one_toggle() {
    std::vector<Transition> t;
    add_pair(t, 0, 0, 1, 1);
    return Gadget("1toggle", {"a", "b"}, kTwo, t);
}

Gadget ap2t() {
    std::vector<Transition> t;
    add_pair(t, 0, TL, 1, TR);
    add_pair(t, 0, BR, 1, BL);
    return Gadget("ap2t", kBoxLocs, kTwo, t, kBoxRot);
}

Gadget p2t() {
    std::vector<Transition> t;
    add_pair(t, 0, TL, 1, TR);
    add_pair(t, 0, BL, 1, BR);
    return Gadget("p2t", kBoxLocs, kTwo, t, kBoxRot);
}

Gadget c2t() {
    std::vector<Transition> t;
    add_pair(t, 0, TL, 1, BR);
    add_pair(t, 0, TR, 1, BL);
    return Gadget("c2t", kBoxLocs, kTwo, t, kBoxRot);
}

Gadget nwl() {
    std::vector<Transition> t;
    add_wire(t, TL, TR);
    add_lock(t, 0, BL, BR);
    return Gadget("nwl", kBoxLocs, kTwo, t, kBoxRot);
}

Gadget cwl() {
    std::vector<Transition> t;
    add_wire(t, TL, BR);
    add_lock(t, 0, TR, BL);
    return Gadget("cwl", kBoxLocs, kTwo, t, kBoxRot);
}

Gadget ntl() {
    std::vector<Transition> t;
    add_pair(t, 0, TL, 1, TR);  // toggle, TL->TR when unlocked
    add_lock(t, 0, BL, BR);
    return Gadget("ntl", kBoxLocs, kTwo, t, kBoxRot);
}

Gadget ctl() {
    std::vector<Transition> t;
    add_pair(t, 0, TL, 1, BR);
    add_lock(t, 0, TR, BL);
    return Gadget("ctl", kBoxLocs, kTwo, t, kBoxRot);
}

Gadget nwt() {
    std::vector<Transition> t;
    add_wire(t, TL, TR);
    add_pair(t, 0, BL, 1, BR);  // toggle, BL->BR in state 1
    return Gadget("nwt", kBoxLocs, kTwo, t, kBoxRot);
}

Gadget cwt() {
    std::vector<Transition> t;
    add_wire(t, TL, BR);
    add_pair(t, 0, TR, 1, BL);
    return Gadget("cwt", kBoxLocs, kTwo, t, kBoxRot);
}

Gadget crossover() {
    std::vector<Transition> t;
    add_pair(t, 0, 0, 0, 2);  // N <-> S
    add_pair(t, 0, 3, 0, 1);  // W <-> E
    return Gadget("crossover", {"N", "E", "S", "W"}, {"1"}, t);
}

Gadget fork() {
    std::vector<Transition> t;
    add_pair(t, 0, 0, 1, 1);  // L -> C in state 1
    add_pair(t, 0, 1, 1, 2);  // C -> R in state 1
    return Gadget("fork", {"L", "C", "R"}, kTwo, t);
}

Gadget rap2tl() {
    std::vector<Transition> t;
    add_pair(t, 0, 0, 1, 1);  // A1 -> A2
    add_pair(t, 0, 2, 1, 3);  // B1 -> B2
    add_lock(t, 0, 4, 5);
    return Gadget("rap2tl", {"A1", "A2", "B1", "B2", "C1", "C2"}, kTwo, t);
}

Gadget rp2tl() {
    std::vector<Transition> t;
    add_pair(t, 0, 0, 1, 1);  // A1 -> A2
    add_pair(t, 0, 3, 1, 2);  // B2 -> B1
    add_lock(t, 0, 4, 5);
    return Gadget("rp2tl", {"A1", "A2", "B1", "B2", "C1", "C2"}, kTwo, t);
}

const std::vector<std::string> kStackLocs = {"TL", "TR", "ML", "MR", "BL", "BR"};
const std::vector<std::string> kStackRot = {"TL", "TR", "MR", "BR", "BL", "ML"};
constexpr int sTL = 0, sTR = 1, sML = 2, sMR = 3, sBL = 4, sBR = 5;

Gadget sap2tl() {
    std::vector<Transition> t;
    add_pair(t, 0, sTL, 1, sTR);  // top toggle TL->TR in state 1
    add_pair(t, 0, sMR, 1, sML);  // middle toggle MR->ML in state 1
    add_lock(t, 0, sBL, sBR);
    return Gadget("sap2tl", kStackLocs, kTwo, t, kStackRot);
}

Gadget swlw() {
    std::vector<Transition> t;
    add_wire(t, sTL, sTR);
    add_lock(t, 0, sML, sMR);
    add_wire(t, sBL, sBR);
    return Gadget("swlw", kStackLocs, kTwo, t, kStackRot);
}

}  // namespace

Gadget make_spinner(int k) {
    if (k < 2) throw ValidationError("spinner needs k >= 2");
    std::vector<std::string> locs;
    for (int i = 0; i < k; ++i) locs.push_back("p" + std::to_string(i));
    std::vector<Transition> t;
    for (int i = 0; i < k; ++i) add_pair(t, 0, i, 1, (i + 1) % k);
    return Gadget("spinner" + std::to_string(k), locs, kTwo, t);
}

const std::map<std::string, Gadget>& standard_catalog() {
    static const std::map<std::string, Gadget> cat = [] {
        std::map<std::string, Gadget> m;
        auto put = [&m](Gadget g) { m.emplace(g.name(), std::move(g)); };
        put(branching_hallway());
        put(one_toggle());
        put(ap2t());
        put(p2t());
        put(c2t());
        put(nwl());
        put(cwl());
        put(ntl());
        put(ctl());
        put(nwt());
        put(cwt());
        put(crossover());
        put(fork());
        put(rap2tl());
        put(rp2tl());
        put(sap2tl());
        put(swlw());
        for (int k = 2; k <= 6; ++k) put(make_spinner(k));
        return m;
    }();
    return cat;
}

Gadget catalog_gadget(const std::string& name) {
    const auto& cat = standard_catalog();
    auto it = cat.find(name);
    if (it != cat.end()) return it->second;
    if (name.rfind("spinner", 0) == 0) {
        try {
            int k = std::stoi(name.substr(7));
            if (k >= 2) return make_spinner(k);
        } catch (const std::exception&) {
        }
    }
    throw ValidationError("unknown catalog gadget '" + name + "'");
}

}  // namespace gadgets
