#pragma once

/// @file qbf.hpp
/// @brief Prenex 3-CNF quantified boolean formulas and a brute-force oracle.

#include <json.hpp>
#include <string>
#include <vector>

#include "gadgets/gadget.hpp"

namespace gadgets {

/// Variables are 1-based; quantifiers[i] quantifies variable i+1 and is 'e'
/// or 'a', outermost first. Clause literals are signed variable indices.
struct QBFInstance {
    std::vector<char> quantifiers;
    std::vector<std::vector<int>> clauses;

    int num_variables() const { return static_cast<int>(quantifiers.size()); }
};

std::vector<std::string> validate(const QBFInstance& q);

/// Game-tree evaluation of the quantified formula. Guarded to 20 variables.
bool qbf_oracle(const QBFInstance& q);

/// Text format: a prefix line "q e 1 a 2 ..." followed by DIMACS-style clause
/// lines terminated by 0. Lines starting with 'c' are comments.
QBFInstance qbf_from_text(const std::string& text);
std::string qbf_to_text(const QBFInstance& q);

QBFInstance qbf_from_json(const nlohmann::json& j);
nlohmann::json qbf_to_json(const QBFInstance& q);

}  // namespace gadgets
