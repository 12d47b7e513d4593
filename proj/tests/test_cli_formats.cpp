#include <doctest.h>

#include "gadgets/catalog.hpp"
#include "gadgets/json_io.hpp"
#include "gadgets/solver.hpp"

using namespace gadgets;

TEST_CASE("puzzle json round trip") {
    Puzzle p;
    p.system.instances.push_back({"t", catalog_gadget("1toggle"), 0});
    p.system.externals.emplace_back("s", Site{0, 0});
    p.system.externals.emplace_back("g", Site{0, 1});
    p.start = "s";
    p.goal = "g";
    Puzzle back = puzzle_from_json(puzzle_to_json(p));
    CHECK(back.start == "s");
    CHECK(back.goal == "g");
    std::map<std::string, std::optional<Site>> e1(p.system.externals.begin(),
                                                  p.system.externals.end());
    std::map<std::string, std::optional<Site>> e2(back.system.externals.begin(),
                                                  back.system.externals.end());
    CHECK(e1 == e2);
}

TEST_CASE("solution json carries the format tag and readable moves") {
    Puzzle p;
    p.system.instances.push_back({"t", catalog_gadget("1toggle"), 0});
    p.system.externals.emplace_back("s", Site{0, 0});
    p.system.externals.emplace_back("g", Site{0, 1});
    p.start = "s";
    p.goal = "g";
    Solution s = solve_bfs(p);
    CompiledSystem cs(p.system);
    nlohmann::json j = solution_to_json(cs, s);
    CHECK(j.at("format") == 1);
    CHECK(j.at("solvable") == true);
    REQUIRE(j.at("witness").size() == 3);  // hop in, traverse, hop out
    CHECK(j["witness"][0]["kind"] == "hop");
    CHECK(j["witness"][1]["kind"] == "traverse");
}
