#include <doctest.h>

#include "gadgets/catalog.hpp"
#include "gadgets/constructions.hpp"
#include "gadgets/planarity.hpp"

using namespace gadgets;

namespace {

SystemOfGadgets::Instance inst(const std::string& id, const std::string& type) {
    Gadget g = catalog_gadget(type);
    return {id, std::move(g), 0};
}

void default_rotations(SystemOfGadgets& sys) {
    for (const auto& i : sys.instances) sys.rotation[i.id] = i.gadget.rotation();
}

}  // namespace

TEST_CASE("a tree of hallways is planar") {
    SystemOfGadgets sys;
    sys.instances.push_back(inst("h1", "branching_hallway"));
    sys.instances.push_back(inst("h2", "branching_hallway"));
    sys.connections.push_back({{0, 0}, {1, 0}});
    default_rotations(sys);
    CHECK(check_planarity(sys));
}

TEST_CASE("missing rotation data is an error") {
    SystemOfGadgets sys;
    sys.instances.push_back(inst("h1", "branching_hallway"));
    CHECK_THROWS_AS(check_planarity(sys), ValidationError);
}

TEST_CASE("K5 wiring is rejected by the Euler check") {
    // five 4-location gadgets, all pairs connected
    SystemOfGadgets sys;
    for (int i = 0; i < 5; ++i) sys.instances.push_back(inst("x" + std::to_string(i), "crossover"));
    std::vector<int> used(5, 0);
    for (int i = 0; i < 5; ++i)
        for (int j = i + 1; j < 5; ++j) {
            sys.connections.push_back({{i, used[i]++}, {j, used[j]++}});
        }
    default_rotations(sys);
    CHECK_FALSE(check_planarity(sys));
}

TEST_CASE("two nested parallel connections are planar, crossed rotations are not") {
    // Two gadgets joined by three connections: planar iff the rotations nest.
    SystemOfGadgets sys;
    sys.instances.push_back(inst("a", "swlw"));
    sys.instances.push_back(inst("b", "swlw"));
    // connect a:TR-b:TL, a:MR-b:ML, a:BR-b:BL (a "ladder": planar with
    // canonical rotations)
    Gadget g = catalog_gadget("swlw");
    auto L = [&](const std::string& l) { return g.location_index(l); };
    sys.connections.push_back({{0, L("TR")}, {1, L("TL")}});
    sys.connections.push_back({{0, L("MR")}, {1, L("ML")}});
    sys.connections.push_back({{0, L("BR")}, {1, L("BL")}});
    default_rotations(sys);
    CHECK(check_planarity(sys));

    // swap two entries in b's rotation so the strands must cross
    auto rot = sys.rotation["b"];
    std::swap(rot[0], rot[5]);  // TL <-> ML in [TL,TR,MR,BR,BL,ML]
    sys.rotation["b"] = rot;
    CHECK_FALSE(check_planarity(sys));
}

TEST_CASE("K3,3 wiring is rejected by the Euler check") {
    SystemOfGadgets sys;
    for (int i = 0; i < 6; ++i)
        sys.instances.push_back(inst("h" + std::to_string(i), "branching_hallway"));
    std::vector<int> used(6, 0);
    for (int i = 0; i < 3; ++i)
        for (int j = 3; j < 6; ++j) sys.connections.push_back({{i, used[i]++}, {j, used[j]++}});
    default_rotations(sys);
    CHECK_FALSE(check_planarity(sys));
}

TEST_CASE("the ap2t-to-c2t construction ships with a planar rotation system") {
    CHECK(check_planarity(claim_by_name("ap2t_to_c2t").construction));
}

TEST_CASE("isolated instances and self-connections are handled") {
    SystemOfGadgets sys;
    sys.instances.push_back(inst("lonely", "crossover"));
    sys.instances.push_back(inst("self", "nwl"));
    Gadget g = catalog_gadget("nwl");
    sys.connections.push_back(
        {{1, g.location_index("TR")}, {1, g.location_index("BL")}});
    default_rotations(sys);
    CHECK(check_planarity(sys));
}
