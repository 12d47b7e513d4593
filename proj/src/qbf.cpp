#include "gadgets/qbf.hpp"

#include <cstdlib>
#include <map>
#include <sstream>

namespace gadgets {

std::vector<std::string> validate(const QBFInstance& q) {
    std::vector<std::string> bad;
    for (char c : q.quantifiers)
        if (c != 'e' && c != 'a') bad.push_back("quantifier must be 'e' or 'a'");
    for (size_t i = 0; i < q.clauses.size(); ++i) {
        const auto& cl = q.clauses[i];
        std::string where = "clause " + std::to_string(i + 1);
        if (cl.empty()) bad.push_back(where + " is empty");
        if (cl.size() > 3) bad.push_back(where + " has more than three literals");
        for (int lit : cl)
            if (lit == 0 || std::abs(lit) > q.num_variables())
                bad.push_back(where + " references an unquantified variable");
    }
    return bad;
}

namespace {

bool eval_rec(const QBFInstance& q, size_t depth, std::vector<bool>& assign) {
    if (depth == q.quantifiers.size()) {
        for (const auto& cl : q.clauses) {
            bool sat = false;
            for (int lit : cl)
                if (assign[std::abs(lit) - 1] == (lit > 0)) {
                    sat = true;
                    break;
                }
            if (!sat) return false;
        }
        return true;
    }
    for (bool v : {false, true}) {
        assign[depth] = v;
        bool sub = eval_rec(q, depth + 1, assign);
        if (q.quantifiers[depth] == 'e' && sub) return true;
        if (q.quantifiers[depth] == 'a' && !sub) return false;
    }
    return q.quantifiers[depth] == 'a';
}

}  // namespace

bool qbf_oracle(const QBFInstance& q) {
    auto bad = validate(q);
    if (!bad.empty()) throw ValidationError("invalid formula: " + bad.front());
    if (q.num_variables() > 20)
        throw ResourceLimitError("oracle limited to 20 variables");
    std::vector<bool> assign(q.quantifiers.size(), false);
    return eval_rec(q, 0, assign);
}

QBFInstance qbf_from_text(const std::string& text) {
    QBFInstance q;
    std::istringstream in(text);
    std::string line;
    bool have_prefix = false;
    while (std::getline(in, line)) {
        std::istringstream ls(line);
        std::string tok;
        if (!(ls >> tok) || tok == "c") continue;
        if (tok == "q") {
            if (have_prefix) throw ValidationError("qbf: duplicate prefix line");
            have_prefix = true;
            std::string kind;
            int var;
            std::map<int, char> byvar;
            while (ls >> kind >> var) {
                if (kind != "e" && kind != "a")
                    throw ValidationError("qbf: quantifier must be 'e' or 'a'");
                if (var != static_cast<int>(byvar.size()) + 1)
                    throw ValidationError("qbf: prefix must list variables 1..n in order");
                byvar[var] = kind[0];
            }
            for (auto& [v, k] : byvar) q.quantifiers.push_back(k);
            continue;
        }
        // Clause line: integers terminated by 0.
        std::vector<int> clause;
        int lit = std::stoi(tok);
        while (lit != 0) {
            clause.push_back(lit);
            if (!(ls >> lit)) throw ValidationError("qbf: clause line missing terminating 0");
        }
        q.clauses.push_back(std::move(clause));
    }
    if (!have_prefix) throw ValidationError("qbf: missing 'q' prefix line");
    auto bad = validate(q);
    if (!bad.empty()) throw ValidationError("qbf: " + bad.front());
    return q;
}

std::string qbf_to_text(const QBFInstance& q) {
    std::ostringstream out;
    out << "q";
    for (int i = 0; i < q.num_variables(); ++i)
        out << ' ' << q.quantifiers[i] << ' ' << (i + 1);
    out << '\n';
    for (const auto& cl : q.clauses) {
        for (int lit : cl) out << lit << ' ';
        out << "0\n";
    }
    return out.str();
}

QBFInstance qbf_from_json(const nlohmann::json& j) {
    QBFInstance q;
    for (const auto& s : j.at("quantifiers")) {
        std::string v = s.get<std::string>();
        if (v.empty()) throw ValidationError("qbf: empty quantifier");
        q.quantifiers.push_back(v[0]);
    }
    for (const auto& cl : j.at("clauses")) q.clauses.push_back(cl.get<std::vector<int>>());
    auto bad = validate(q);
    if (!bad.empty()) throw ValidationError("qbf: " + bad.front());
    return q;
}

nlohmann::json qbf_to_json(const QBFInstance& q) {
    nlohmann::json quants = nlohmann::json::array();
    for (char c : q.quantifiers) quants.push_back(std::string(1, c));
    return nlohmann::json{{"quantifiers", quants}, {"clauses", q.clauses}};
}

}  // namespace gadgets
