#include <doctest.h>

#include "gadgets/catalog.hpp"
#include "gadgets/json_io.hpp"
#include "gadgets/qbf.hpp"
#include "gadgets/reduction.hpp"
#include "gadgets/solver.hpp"

using namespace gadgets;

namespace {

QBFInstance qbf(const std::string& text) { return qbf_from_text(text); }

}  // namespace

TEST_CASE("oracle basics") {
    CHECK(qbf_oracle(qbf("q e 1\n1 0\n")));
    CHECK_FALSE(qbf_oracle(qbf("q a 1\n1 0\n")));
    CHECK(qbf_oracle(qbf("q e 1 a 2\n1 2 0\n1 -2 0\n")));
    CHECK_FALSE(qbf_oracle(qbf("q a 1 e 2\n1 0\n")));
    CHECK(qbf_oracle(qbf("q a 1 e 2\n1 2 0\n")));
    CHECK(qbf_oracle(qbf("q a 1\n1 -1 0\n")));
}

TEST_CASE("qbf text and json round trips") {
    QBFInstance q = qbf("q e 1 a 2 e 3\n1 -2 3 0\n-1 0\n");
    QBFInstance q2 = qbf_from_text(qbf_to_text(q));
    CHECK(q2.quantifiers == q.quantifiers);
    CHECK(q2.clauses == q.clauses);
    QBFInstance q3 = qbf_from_json(qbf_to_json(q));
    CHECK(q3.quantifiers == q.quantifiers);
    CHECK(q3.clauses == q.clauses);
    CHECK_THROWS_AS(qbf("q e 1\n1 2 0\n"), ValidationError);
    CHECK_THROWS_AS(qbf("q e 1\n0\n"), ValidationError);
}

TEST_CASE("reduction matches the oracle on tiny instances") {
    for (const char* text : {
             "q e 1\n1 0\n",
             "q e 1\n-1 0\n",
             "q a 1\n1 0\n",
             "q a 1\n1 -1 0\n",
             "q e 1 a 2\n1 2 0\n1 -2 0\n",
             "q a 1 e 2\n1 2 0\n-1 -2 0\n",
             "q a 1 a 2\n1 2 0\n",
             "q a 1 a 2\n1 2 0\n1 -2 0\n-1 2 0\n-1 -2 0\n",
         }) {
        QBFInstance q = qbf(text);
        ReductionOutput out = reduce_3qsat(q);
        CAPTURE(text);
        CHECK(solve_bfs(out.puzzle).solvable == qbf_oracle(q));
    }
}

TEST_CASE("reduction output carries a literal index and stats") {
    QBFInstance q = qbf("q e 1 a 2\n1 2 0\n1 -2 0\n");
    ReductionOutput out = reduce_3qsat(q);
    CHECK(out.literal_index.size() == 4);
    for (const auto& [key, id] : out.literal_index)
        CHECK(out.puzzle.system.instance_index(id) >= 0);
    CHECK(out.stats.at("instances") > 0);
    CHECK(out.stats.count("crossings"));
    // linear gadget count before crossover insertion
    int occurrences = 4, n = 2;
    CHECK(out.stats.at("instances") <= 10 * (n + occurrences) + 2);
}

TEST_CASE("planarization inserts crossovers pairwise and keeps verdicts") {
    QBFInstance q = qbf("q a 1 e 2\n1 2 0\n-1 -2 0\n");
    ReductionOutput flat = reduce_3qsat(q, false);
    ReductionOutput planar = reduce_3qsat(q, true);
    CHECK(solve_bfs(flat.puzzle).solvable == solve_bfs(planar.puzzle).solvable);
    // the planar variant replays fine too
    Solution s = solve_bfs(planar.puzzle);
    if (s.solvable) {
        CompiledSystem cs(planar.puzzle.system);
        CHECK(replay_witness(cs, cs.node_of_external("start"), s.witness,
                             cs.node_of_external("goal")));
    }
}

TEST_CASE("substitution to the ap2t basis preserves verdicts") {
    for (const char* text : {"q e 1\n1 0\n", "q a 1\n1 0\n"}) {
        QBFInstance q = qbf(text);
        ReductionOutput out = reduce_3qsat(q);
        Puzzle rewritten = substitute_gadgets(out, "ap2t");
        for (const auto& inst : rewritten.system.instances) {
            bool ok = inst.gadget.name() == "ap2t" || inst.gadget.name() == "branching_hallway";
            CHECK(ok);
        }
        CAPTURE(text);
        CHECK(solve_bfs(rewritten).solvable == solve_bfs(out.puzzle).solvable);
    }
}

TEST_CASE("substituting a wrapped gadget preserves its induced behavior") {
    // One nwl instance, all four locations external; rewrite to the ap2t basis
    // and check the result still behaves exactly like an nwl.
    Puzzle p;
    p.system.instances.push_back({"w", catalog_gadget("nwl"), 0});
    for (int l = 0; l < 4; ++l)
        p.system.externals.emplace_back(catalog_gadget("nwl").locations()[l], Site{0, l});
    p.start = "TL";
    p.goal = "TR";
    Puzzle sub = substitute_puzzle(p, "ap2t");
    for (const auto& inst : sub.system.instances) {
        bool ok = inst.gadget.name() == "ap2t" || inst.gadget.name() == "branching_hallway";
        CHECK(ok);
    }
    SimulationClaim claim;
    claim.name = "substituted_nwl";
    claim.construction = sub.system;
    claim.target = catalog_gadget("nwl");
    for (const auto& l : claim.target.locations()) claim.location_map[l] = l;
    claim.initial_state = "1";
    EquivalenceResult r = check_equivalence(claim, 2'000'000);
    CHECK(r.equivalent);

    // wire still passable, closed lock still closed
    CHECK(solve_bfs(sub, 2'000'000).solvable);
    Puzzle locked = sub;
    locked.start = "BL";
    locked.goal = "BR";
    // lock starts open in state 1, so flip expectations via the wire first:
    // from BL the lock is open initially
    CHECK(solve_bfs(locked, 2'000'000).solvable);
}
