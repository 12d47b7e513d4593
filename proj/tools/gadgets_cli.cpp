// gadgets: command-line front end for solving puzzles, verifying simulation
// claims, compiling quantified formulas into puzzles, and classifying gadgets.
// Exit codes: 0 = success/true, 1 = false/unsolvable/not-equivalent, 2 = error.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <filesystem>
#include <iostream>

#include "gadgets/catalog.hpp"
#include "gadgets/constructions.hpp"
#include "gadgets/json_io.hpp"
#include "gadgets/planarity.hpp"
#include "gadgets/qbf.hpp"
#include "gadgets/reduction.hpp"
#include "gadgets/simulation.hpp"
#include "gadgets/solver.hpp"

using namespace gadgets;
using nlohmann::json;

namespace {

uint64_t effective_cap(uint64_t flag_cap) {
    if (flag_cap != 0) return flag_cap;
    if (const char* env = std::getenv("GADGET_CAP")) {
        char* end = nullptr;
        unsigned long long v = std::strtoull(env, &end, 10);
        if (end && *end == '\0' && v > 0) return v;
    }
    return kDefaultConfigCap;
}

int run_solve(const std::string& file, const std::string& algorithm, uint64_t cap,
              const std::string& witness_out, bool as_json) {
    Puzzle p = puzzle_from_json(load_json_file(file));
    Solution s = algorithm == "bfs" ? solve_bfs(p, cap) : dispatch(p, cap);
    CompiledSystem cs(p.system);
    json j = solution_to_json(cs, s);
    if (!witness_out.empty()) save_json_file(witness_out, j);
    if (as_json)
        std::cout << j.dump(2) << "\n";
    else
        std::cout << (s.solvable ? "solvable" : "unsolvable") << " (" << s.algorithm << ", "
                  << s.explored << " configurations, " << s.witness.size() << " moves)\n";
    return s.solvable ? 0 : 1;
}

int run_verify_file(const std::string& file, bool as_json) {
    ClaimReport r = verify_claim_file(file);
    if (as_json) {
        json j{{"format", 1},
               {"name", r.name},
               {"equivalent", r.pass},
               {"message", r.message},
               {"explored", r.explored},
               {"outside_configs", r.outside_configs},
               {"classes", r.classes}};
        std::cout << j.dump(2) << "\n";
    } else {
        std::cout << r.name << ": " << (r.pass ? "equivalent" : "NOT equivalent");
        if (!r.message.empty()) std::cout << " (" << r.message << ")";
        std::cout << "\n";
    }
    return r.pass ? 0 : 1;
}

int run_verify_catalog(const std::string& dir, bool as_json) {
    auto reports = verify_catalog(dir);
    bool all = !reports.empty();
    json items = json::array();
    for (const auto& r : reports) {
        all = all && r.pass;
        if (as_json) {
            items.push_back({{"name", r.name},
                             {"equivalent", r.pass},
                             {"message", r.message},
                             {"classes", r.classes},
                             {"outside_configs", r.outside_configs}});
        } else {
            std::printf("%-28s %s  (%d configs, %d classes, %.3fs)\n", r.name.c_str(),
                        r.pass ? "ok" : "FAIL", r.outside_configs, r.classes, r.seconds);
            if (!r.pass && !r.message.empty()) std::printf("    %s\n", r.message.c_str());
        }
    }
    if (as_json)
        std::cout << json{{"format", 1}, {"all_equivalent", all}, {"claims", items}}.dump(2)
                  << "\n";
    else
        std::printf("%zu claims, %s\n", reports.size(), all ? "all equivalent" : "FAILURES");
    return all ? 0 : 1;
}

int run_classify(const std::string& file, bool as_json) {
    Gadget g = gadget_from_json(load_json_file(file));
    ComplexityClass c = classify_complexity(g);
    std::string kinds;
    if (auto d = tunnel_decomposition(g); d && d->kinds) {
        for (size_t i = 0; i < d->kinds->size(); ++i)
            kinds += (i ? "+" : "") + tunnel_kind_name((*d->kinds)[i]);
    }
    if (as_json)
        std::cout << json{{"format", 1},
                          {"name", g.name()},
                          {"class", complexity_class_name(c)},
                          {"tunnels", kinds}}
                         .dump(2)
                  << "\n";
    else
        std::cout << g.name() << ": " << complexity_class_name(c) << " (" << kinds << ")\n";
    return 0;
}

int run_catalog(bool list, const std::string& emit, const std::string& out,
                const std::string& write_dir, bool as_json) {
    if (!write_dir.empty()) {
        namespace fs = std::filesystem;
        fs::create_directories(write_dir);
        fs::create_directories(write_dir + "/claims");
        for (const auto& [name, g] : standard_catalog())
            save_json_file(write_dir + "/" + name + ".json", gadget_to_json(g));
        for (const auto& c : all_claims())
            save_json_file(write_dir + "/claims/" + c.name + ".json", claim_to_json(c));
        std::cout << "wrote catalog to " << write_dir << "\n";
        return 0;
    }
    if (!emit.empty()) {
        json j = gadget_to_json(catalog_gadget(emit));
        if (out.empty())
            std::cout << j.dump(2) << "\n";
        else
            save_json_file(out, j);
        return 0;
    }
    (void)list;
    if (as_json) {
        json names = json::array();
        for (const auto& [name, g] : standard_catalog()) names.push_back(name);
        std::cout << json{{"format", 1}, {"gadgets", names}}.dump(2) << "\n";
    } else {
        for (const auto& [name, g] : standard_catalog())
            std::printf("%-20s %d states, %d locations, %zu transitions\n", name.c_str(),
                        g.num_states(), g.num_locations(), g.transitions().size());
    }
    return 0;
}

int run_reduce(const std::string& file, const std::string& basis, const std::string& out,
               bool stats, bool no_planarize, bool as_json) {
    QBFInstance q;
    if (file.size() > 5 && file.substr(file.size() - 5) == ".json") {
        q = qbf_from_json(load_json_file(file));
    } else {
        std::ifstream in(file);
        if (!in) throw IOError("cannot open " + file);
        std::string text((std::istreambuf_iterator<char>(in)),
                         std::istreambuf_iterator<char>());
        q = qbf_from_text(text);
    }
    ReductionOutput r = reduce_3qsat(q, !no_planarize);
    Puzzle result = r.puzzle;
    if (basis != "2tl-crossover") result = substitute_puzzle(r.puzzle, basis);
    if (!out.empty()) save_json_file(out, puzzle_to_json(result));
    json stats_json(r.stats);
    stats_json["final_instances"] = result.system.instances.size();
    if (as_json)
        std::cout << json{{"format", 1}, {"basis", basis}, {"stats", stats_json}}.dump(2)
                  << "\n";
    else if (stats)
        std::cout << "stats: " << stats_json.dump() << "\n";
    return 0;
}

int run_bench(const std::string& suite) {
    using clock = std::chrono::steady_clock;
    if (suite == "catalog") {
        for (const auto& c : all_claims()) {
            auto t0 = clock::now();
            EquivalenceResult r = check_equivalence(c);
            std::printf("%-28s %8.3fms  %s\n", c.name.c_str(),
                        std::chrono::duration<double, std::milli>(clock::now() - t0).count(),
                        r.equivalent ? "ok" : "FAIL");
        }
        return 0;
    }
    if (suite == "reduce") {
        for (const char* text : {"q e 1\n1 0\n", "q a 1 e 2\n1 2 0\n-1 -2 0\n",
                                 "q e 1 a 2 e 3\n1 2 3 0\n-1 -2 -3 0\n"}) {
            QBFInstance q = qbf_from_text(text);
            auto t0 = clock::now();
            ReductionOutput r = reduce_3qsat(q);
            bool verdict = solve_bfs(r.puzzle).solvable;
            std::printf("%-28s %8.3fms  %s (%d gadgets)\n", "reduce+solve",
                        std::chrono::duration<double, std::milli>(clock::now() - t0).count(),
                        verdict ? "solvable" : "unsolvable", r.stats.at("instances"));
        }
        return 0;
    }
    throw ValidationError("unknown bench suite '" + suite + "' (try catalog|reduce)");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"gadget motion-planning toolkit"};
    app.require_subcommand(1);
    app.fallthrough();
    bool as_json = false;
    app.add_flag("--json", as_json, "structured JSON output");

    auto* solve = app.add_subcommand("solve", "decide puzzle solvability");
    std::string solve_file, algorithm = "auto", witness_out;
    uint64_t cap = 0;
    solve->add_option("puzzle", solve_file, "puzzle JSON file")->required();
    solve->add_option("--algorithm", algorithm, "bfs|auto")
        ->check(CLI::IsMember({"bfs", "auto"}));
    solve->add_option("--cap", cap, "configuration cap");
    solve->add_option("--witness", witness_out, "write the solution JSON here");

    auto* verify = app.add_subcommand("verify", "check simulation claims");
    std::string verify_file;
    bool whole_catalog = false;
    std::string claims_dir = "catalog/claims";
    verify->add_option("claim", verify_file, "claim JSON file");
    verify->add_flag("--catalog", whole_catalog, "verify every shipped claim");
    verify->add_option("--claims-dir", claims_dir, "claims directory");

    auto* reduce = app.add_subcommand("reduce", "compile a 3QSAT instance to a puzzle");
    std::string reduce_file, basis = "2tl-crossover", reduce_out;
    bool stats = false, no_planarize = false;
    reduce->add_option("formula", reduce_file, "QBF file (text or .json)")->required();
    reduce->add_option("--basis", basis,
                       "2tl-crossover or a hard gadget name (ap2t, ntl, ...)");
    reduce->add_option("-o,--output", reduce_out, "write the puzzle here");
    reduce->add_flag("--stats", stats, "print gadget counts");
    reduce->add_flag("--no-planarize", no_planarize, "skip crossover insertion");

    auto* classify = app.add_subcommand("classify", "classify a gadget");
    std::string classify_file;
    classify->add_option("gadget", classify_file, "gadget JSON file")->required();

    auto* catalog = app.add_subcommand("catalog", "list or emit catalog gadgets");
    bool list = false;
    std::string emit, emit_out, write_dir;
    catalog->add_flag("--list", list, "list gadget names");
    catalog->add_option("--emit", emit, "emit one gadget as JSON");
    catalog->add_option("-o,--output", emit_out, "emit target file");
    catalog->add_option("--write", write_dir, "write all gadget and claim files to a directory");

    auto* bench = app.add_subcommand("bench", "timing suites");
    std::string suite;
    bench->add_option("suite", suite, "catalog|reduce")->required();

    try {
        app.parse(argc, argv);
        if (solve->parsed())
            return run_solve(solve_file, algorithm, effective_cap(cap), witness_out, as_json);
        if (verify->parsed()) {
            if (whole_catalog) return run_verify_catalog(claims_dir, as_json);
            if (verify_file.empty()) throw ValidationError("verify needs a claim or --catalog");
            return run_verify_file(verify_file, as_json);
        }
        if (reduce->parsed())
            return run_reduce(reduce_file, basis, reduce_out, stats, no_planarize, as_json);
        if (classify->parsed()) return run_classify(classify_file, as_json);
        if (catalog->parsed()) return run_catalog(list, emit, emit_out, write_dir, as_json);
        if (bench->parsed()) return run_bench(suite);
    } catch (const CLI::ParseError& e) {
        return app.exit(e) ? 2 : 0;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
