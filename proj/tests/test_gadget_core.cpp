#include <doctest.h>

#include <set>

#include "gadgets/catalog.hpp"
#include "gadgets/gadget.hpp"
#include "gadgets/json_io.hpp"
#include "gadgets/solver.hpp"

using namespace gadgets;

TEST_CASE("gadget construction rejects bad structure") {
    CHECK_THROWS_AS(Gadget("g", {}, {"1"}, {}), ValidationError);
    CHECK_THROWS_AS(Gadget("g", {"a"}, {}, {}), ValidationError);
    // self-loop
    CHECK_THROWS_AS(Gadget("g", {"a"}, {"1"}, {{0, 0, 0, 0}}), ValidationError);
    // out of range
    CHECK_THROWS_AS(Gadget("g", {"a", "b"}, {"1"}, {{0, 0, 0, 2}}), ValidationError);
    // duplicate transition
    CHECK_THROWS_AS(Gadget("g", {"a", "b"}, {"1"}, {{0, 0, 0, 1}, {0, 0, 0, 1}}),
                    ValidationError);
}

TEST_CASE("determinism checks") {
    CHECK(is_deterministic(catalog_gadget("1toggle")));
    CHECK_FALSE(is_deterministic(catalog_gadget("branching_hallway")));
    // every state-space vertex of ap2t has out-degree at most 1
    const Gadget ap2t = catalog_gadget("ap2t");
    CHECK(is_deterministic(ap2t));
    for (int s = 0; s < ap2t.num_states(); ++s)
        for (int l = 0; l < ap2t.num_locations(); ++l) {
            int deg = 0;
            for (const Transition& t : ap2t.transitions())
                if (t.from_state == s && t.from_loc == l) ++deg;
            CHECK(deg <= 1);
        }
}

TEST_CASE("reversibility checks") {
    CHECK(is_reversible(catalog_gadget("branching_hallway")));
    CHECK(is_reversible(catalog_gadget("ap2t")));
    Gadget one_way("one_way_door", {"a", "b"}, {"1"}, {{0, 0, 0, 1}});
    CHECK_FALSE(is_reversible(one_way));
}

TEST_CASE("catalog gadgets are deterministic and reversible except the hallway") {
    for (const auto& [name, g] : standard_catalog()) {
        CAPTURE(name);
        CHECK(is_reversible(g));
        if (name == "branching_hallway")
            CHECK_FALSE(is_deterministic(g));
        else
            CHECK(is_deterministic(g));
    }
}

TEST_CASE("deterministic reversible catalog gadgets are bidirectional matchings") {
    for (const auto& [name, g] : standard_catalog()) {
        if (name == "branching_hallway") continue;
        CAPTURE(name);
        // pair up transitions with their reverses; endpoints must be disjoint
        std::set<std::pair<int, int>> used;
        for (const Transition& t : g.transitions()) {
            CHECK(g.has_transition({t.to_state, t.to_loc, t.from_state, t.from_loc}));
            auto v = std::make_pair(t.from_state, t.from_loc);
            CHECK(used.insert(v).second);  // out-degree 1 => each vertex appears once
        }
    }
}

TEST_CASE("tunnel decomposition of the 2-tunnel catalog") {
    auto kinds_of = [](const std::string& name) {
        auto d = tunnel_decomposition(catalog_gadget(name));
        REQUIRE(d);
        REQUIRE(d->kinds);
        std::vector<std::string> v;
        for (TunnelKind k : *d->kinds) v.push_back(tunnel_kind_name(k));
        return v;
    };
    CHECK(kinds_of("ap2t") == std::vector<std::string>{"toggle", "toggle"});
    CHECK(kinds_of("p2t") == std::vector<std::string>{"toggle", "toggle"});
    CHECK(kinds_of("c2t") == std::vector<std::string>{"toggle", "toggle"});
    CHECK(kinds_of("nwl") == std::vector<std::string>{"tripwire", "lock"});
    CHECK(kinds_of("cwl") == std::vector<std::string>{"tripwire", "lock"});
    CHECK(kinds_of("ntl") == std::vector<std::string>{"toggle", "lock"});
    CHECK(kinds_of("ctl") == std::vector<std::string>{"toggle", "lock"});
    CHECK(kinds_of("nwt") == std::vector<std::string>{"tripwire", "toggle"});
    CHECK(kinds_of("cwt") == std::vector<std::string>{"tripwire", "toggle"});
    CHECK(kinds_of("crossover") ==
          std::vector<std::string>{"trivial-open", "trivial-open"});

    // ap2t pairs (TL,TR) and (BL,BR)
    auto d = tunnel_decomposition(catalog_gadget("ap2t"));
    CHECK(d->tunnels == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});

    // odd location count admits no perfect matching
    CHECK_FALSE(tunnel_decomposition(catalog_gadget("branching_hallway")));
    // spinners are not tunnel gadgets
    CHECK_FALSE(tunnel_decomposition(catalog_gadget("spinner4")));
}

TEST_CASE("lexicographic tie-break on free locations") {
    // no transitions at all: matching is (0,1),(2,3)
    Gadget g("idle", {"w", "x", "y", "z"}, {"1"}, {});
    auto d = tunnel_decomposition(g);
    REQUIRE(d);
    CHECK(d->tunnels == std::vector<std::pair<int, int>>{{0, 1}, {2, 3}});
}

TEST_CASE("classify_complexity on catalog and synthesized gadgets") {
    CHECK(classify_complexity(catalog_gadget("ap2t")) == ComplexityClass::PSpaceComplete);
    CHECK(classify_complexity(catalog_gadget("1toggle")) == ComplexityClass::PolynomialTime);
    CHECK(classify_complexity(catalog_gadget("crossover")) == ComplexityClass::PolynomialTime);

    Gadget ww = make_tunnel_gadget("wire_wire", {TunnelKind::Tripwire, TunnelKind::Tripwire});
    CHECK(classify_complexity(ww) == ComplexityClass::PolynomialTime);
    Gadget ll = make_tunnel_gadget("lock_lock", {TunnelKind::Lock, TunnelKind::Lock});
    CHECK(classify_complexity(ll) == ComplexityClass::PolynomialTime);

    CHECK_THROWS_AS(classify_complexity(catalog_gadget("branching_hallway")), ValidationError);
    CHECK_THROWS_AS(classify_complexity(catalog_gadget("spinner4")), ValidationError);
}

TEST_CASE("classifier agrees with the hand truth table on all kind pairs") {
    const TunnelKind all[] = {TunnelKind::TrivialOpen, TunnelKind::TrivialClosed,
                              TunnelKind::Tripwire, TunnelKind::Lock, TunnelKind::Toggle};
    auto hard_table = [](std::vector<TunnelKind> ks) {
        int t = 0, w = 0, l = 0;
        for (TunnelKind k : ks) {
            t += k == TunnelKind::Toggle;
            w += k == TunnelKind::Tripwire;
            l += k == TunnelKind::Lock;
        }
        return t >= 2 || (t && w) || (t && l) || (w && l);
    };
    for (TunnelKind a : all)
        for (TunnelKind b : all) {
            Gadget g = make_tunnel_gadget("pair", {a, b});
            bool expect = hard_table({a, b});
            CAPTURE(tunnel_kind_name(a));
            CAPTURE(tunnel_kind_name(b));
            CHECK((classify_complexity(g) == ComplexityClass::PSpaceComplete) == expect);
        }
}

TEST_CASE("catalog shapes match their definitions") {
    const Gadget cross = catalog_gadget("crossover");
    CHECK(cross.num_states() == 1);
    CHECK(cross.num_locations() == 4);
    CHECK(cross.transitions().size() == 4);

    const Gadget sp = catalog_gadget("spinner4");
    CHECK(sp.num_states() == 2);
    CHECK(sp.num_locations() == 4);
    CHECK(sp.transitions().size() == 8);

    const Gadget fork = catalog_gadget("fork");
    CHECK(fork.num_states() == 2);
    CHECK(fork.num_locations() == 3);
    CHECK(fork.transitions().size() == 4);

    const Gadget t1 = catalog_gadget("1toggle");
    CHECK(t1.transitions().size() == 2);
    CHECK(is_one_toggle(t1));

    CHECK_THROWS_AS(catalog_gadget("no_such_gadget"), ValidationError);
    CHECK(catalog_gadget("spinner7").num_locations() == 7);
}

TEST_CASE("gadget json round trip") {
    for (const auto& [name, g] : standard_catalog()) {
        CAPTURE(name);
        Gadget back = gadget_from_json(gadget_to_json(g));
        CHECK(back == g);
    }
}
