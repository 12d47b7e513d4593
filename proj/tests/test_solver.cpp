#include <doctest.h>

#include <algorithm>

#include "gadgets/solver.hpp"
#include "helpers.hpp"

using namespace gadgets;
using testutil::make_inst;

namespace {

int traversal_count(const Solution& s) {
    return static_cast<int>(
        std::count_if(s.witness.begin(), s.witness.end(), [](const Move& m) { return m.traversal; }));
}

Puzzle one_toggle_puzzle(bool toward_goal) {
    Puzzle p;
    p.system.instances.push_back(make_inst("t", "1toggle"));
    p.system.externals.emplace_back("s", Site{0, toward_goal ? 0 : 1});
    p.system.externals.emplace_back("g", Site{0, toward_goal ? 1 : 0});
    p.start = "s";
    p.goal = "g";
    return p;
}

}  // namespace

TEST_CASE("degenerate puzzle: start equals goal") {
    Puzzle p;
    p.system.externals.emplace_back("x", std::nullopt);
    p.start = p.goal = "x";
    Solution s = solve_bfs(p);
    CHECK(s.solvable);
    CHECK(s.witness.empty());
}

TEST_CASE("single 1-toggle solves only along its orientation") {
    Solution fwd = solve_bfs(one_toggle_puzzle(true));
    CHECK(fwd.solvable);
    CHECK(traversal_count(fwd) == 1);

    Solution bwd = solve_bfs(one_toggle_puzzle(false));
    CHECK_FALSE(bwd.solvable);
}

TEST_CASE("ap2t tunnels do not leak into each other") {
    Puzzle p;
    p.system.instances.push_back(make_inst("a", "ap2t"));
    p.system.externals.emplace_back("s", Site{0, 0});  // TL, tunnel A entrance
    p.system.externals.emplace_back("g", Site{0, 2});  // BL, tunnel B end
    p.start = "s";
    p.goal = "g";
    CHECK_FALSE(solve_bfs(p).solvable);
}

TEST_CASE("witness replays through the system semantics") {
    Puzzle p;
    p.system.instances.push_back(make_inst("t1", "1toggle"));
    p.system.instances.push_back(make_inst("t2", "1toggle"));
    p.system.connections.push_back({{0, 1}, {1, 0}});
    p.system.externals.emplace_back("s", Site{0, 0});
    p.system.externals.emplace_back("g", Site{1, 1});
    p.start = "s";
    p.goal = "g";
    Solution s = solve_bfs(p);
    REQUIRE(s.solvable);
    CompiledSystem cs(p.system);
    CHECK(replay_witness(cs, cs.node_of_external("s"), s.witness, cs.node_of_external("g")));
}

TEST_CASE("one-state solver: chain of crossovers") {
    Puzzle p;
    for (int i = 0; i < 3; ++i)
        p.system.instances.push_back(make_inst("x" + std::to_string(i), "crossover"));
    // N->S chained: x0:S - x1:N, x1:S - x2:N
    p.system.connections.push_back({{0, 2}, {1, 0}});
    p.system.connections.push_back({{1, 2}, {2, 0}});
    p.system.externals.emplace_back("s", Site{0, 0});
    p.system.externals.emplace_back("g", Site{2, 2});
    p.start = "s";
    p.goal = "g";
    Solution fast = solve_one_state(p);
    Solution slow = solve_bfs(p);
    CHECK(fast.solvable);
    CHECK(fast.solvable == slow.solvable);

    // precondition violation: a 2-state gadget
    Puzzle bad = p;
    bad.system.instances.push_back(make_inst("t", "1toggle"));
    CHECK_THROWS_AS(solve_one_state(bad), ValidationError);
}

TEST_CASE("one-state solver: one-way tunnel pointing away") {
    Gadget oneway("oneway", {"a", "b"}, {"1"}, {{0, 0, 0, 1}});
    Puzzle p;
    p.system.instances.push_back({"w", oneway, 0});
    p.system.externals.emplace_back("s", Site{0, 1});
    p.system.externals.emplace_back("g", Site{0, 0});
    p.start = "s";
    p.goal = "g";
    CHECK_FALSE(solve_one_state(p).solvable);
    CHECK_FALSE(solve_bfs(p).solvable);
}

TEST_CASE("one-state solver: hallway tree connects all leaves") {
    Puzzle p;
    p.system.instances.push_back(make_inst("h0", "branching_hallway"));
    p.system.instances.push_back(make_inst("h1", "branching_hallway"));
    p.system.connections.push_back({{0, 2}, {1, 0}});
    p.system.externals.emplace_back("s", Site{0, 0});
    p.system.externals.emplace_back("g", Site{1, 2});
    p.start = "s";
    p.goal = "g";
    CHECK(solve_one_state(p).solvable);
}

TEST_CASE("one-toggle solver matches bfs on series toggles") {
    Puzzle p;
    p.system.instances.push_back(make_inst("t1", "1toggle"));
    // second toggle points from the goal side toward the middle: dead end
    p.system.instances.push_back(make_inst("t2", "1toggle"));
    p.system.connections.push_back({{0, 1}, {1, 1}});
    p.system.externals.emplace_back("s", Site{0, 0});
    p.system.externals.emplace_back("g", Site{1, 0});
    p.start = "s";
    p.goal = "g";
    CHECK_FALSE(solve_one_toggle(p).solvable);
    CHECK_FALSE(solve_bfs(p).solvable);
}

TEST_CASE("one-state solver agrees with bfs on random static systems") {
    testutil::Rng rng(17);
    const std::vector<std::string> pool = {"crossover", "branching_hallway"};
    for (int trial = 0; trial < 60; ++trial) {
        Puzzle p = testutil::random_puzzle(rng, pool, 5);
        CAPTURE(trial);
        CHECK(solve_one_state(p).solvable == solve_bfs(p).solvable);
    }
}

TEST_CASE("one-toggle solver agrees with bfs on random toggle systems") {
    testutil::Rng rng(42);
    const std::vector<std::string> pool = {"1toggle", "branching_hallway", "crossover"};
    for (int trial = 0; trial < 100; ++trial) {
        Puzzle p = testutil::random_puzzle(rng, pool, 5);
        Solution fast = solve_one_toggle(p);
        Solution slow = solve_bfs(p);
        CAPTURE(trial);
        CHECK(fast.solvable == slow.solvable);
        if (fast.solvable) {
            CompiledSystem cs(p.system);
            CHECK(replay_witness(cs, cs.node_of_external(p.start), fast.witness,
                                 cs.node_of_external(p.goal)));
        }
    }
}

TEST_CASE("dispatch routes easy systems to the fast paths") {
    // all-tripwire system
    Puzzle p;
    p.system.instances.push_back(make_inst("w", "nwt"));
    // use only the tripwire tunnel; toggle tunnel dangles
    p.system.externals.emplace_back("s", Site{0, 0});
    p.system.externals.emplace_back("g", Site{0, 1});
    p.start = "s";
    p.goal = "g";
    // nwt has a toggle, so it is hard: dispatch must fall back to bfs
    Solution s = dispatch(p);
    CHECK(s.algorithm == "bfs");
    CHECK(s.solvable == solve_bfs(p).solvable);

    Gadget ww = make_tunnel_gadget("wire_wire", {TunnelKind::Tripwire, TunnelKind::Tripwire});
    Puzzle pw;
    pw.system.instances.push_back({"w", ww, 0});
    pw.system.externals.emplace_back("s", Site{0, 0});
    pw.system.externals.emplace_back("g", Site{0, 1});
    pw.start = "s";
    pw.goal = "g";
    Solution sw = dispatch(pw);
    CHECK(sw.algorithm == "one-state");
    CHECK(sw.solvable);

    // lock-only gadget: frozen in its initial state
    Gadget ll = make_tunnel_gadget("lock_lock", {TunnelKind::Lock, TunnelKind::Lock});
    Puzzle pl;
    pl.system.instances.push_back({"l", ll, 1});  // state 2: both locked
    pl.system.externals.emplace_back("s", Site{0, 0});
    pl.system.externals.emplace_back("g", Site{0, 1});
    pl.start = "s";
    pl.goal = "g";
    Solution sl = dispatch(pl);
    CHECK(sl.algorithm == "one-state");
    CHECK_FALSE(sl.solvable);
    CHECK_FALSE(solve_bfs(pl).solvable);

    // single toggle plus trivial tunnels is polynomial
    Gadget tt = make_tunnel_gadget("toggle_open", {TunnelKind::Toggle, TunnelKind::TrivialOpen});
    Puzzle pt;
    pt.system.instances.push_back({"t", tt, 0});
    pt.system.externals.emplace_back("s", Site{0, 0});
    pt.system.externals.emplace_back("g", Site{0, 1});
    pt.start = "s";
    pt.goal = "g";
    Solution st = dispatch(pt);
    CHECK(st.algorithm == "one-toggle");
    CHECK(st.solvable == solve_bfs(pt).solvable);
}

TEST_CASE("reversible systems: witness plus reversed witness returns home") {
    Puzzle p;
    p.system.instances.push_back(make_inst("a", "ap2t"));
    p.system.instances.push_back(make_inst("b", "ap2t"));
    p.system.connections.push_back({{0, 1}, {1, 3}});  // a:TR - b:BR
    p.system.externals.emplace_back("s", Site{0, 0});
    p.system.externals.emplace_back("g", Site{1, 2});
    p.start = "s";
    p.goal = "g";
    Solution s = solve_bfs(p);
    REQUIRE(s.solvable);
    CompiledSystem cs(p.system);
    Configuration init{cs.initial_state(), cs.node_of_external("s")};
    auto mid = testutil::walk(cs, init, s.witness);
    REQUIRE(mid);
    std::vector<Move> back;
    for (auto it = s.witness.rbegin(); it != s.witness.rend(); ++it)
        back.push_back({it->to_node, it->from_node, it->traversal});
    auto home = testutil::walk(cs, *mid, back);
    REQUIRE(home);
    CHECK(*home == init);
}
