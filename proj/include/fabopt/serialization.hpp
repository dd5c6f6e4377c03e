#pragma once

// JSON mappings shared by the CLI, the HTTP service and the file formats.

#include <string>
#include <string_view>

#include <json.hpp>

#include "fabopt/model.hpp"
#include "fabopt/reduction.hpp"
#include "fabopt/solvers.hpp"
#include "fabopt/sweep.hpp"

namespace fabopt {

using Json = nlohmann::ordered_json;

Json to_json(const Card& card);
Json to_json(const Lambda& lambda);  // {"num":p,"den":q}
Json to_json(const Rational& value);
Json to_json(const Totals& totals);
Json to_json(const Assignment& assignment);  // ["Attack", "Pitch", ...]
Json to_json(const Instance& instance);
/// {"assignment", "objective", "totals", "solver"}
Json to_json(const Solution& solution);
Json to_json(const SolverReport& report);
Json to_json(const KnapsackInstance& kp);
/// {"points":[{"lambda", "objective", "totals", "assignment", "solver"}, ...]}
Json to_json(const SweepResult& sweep);

// Decoders report problems as ValidationError with a field path rooted at
// `path` (e.g. "instance.cards[1].attack").
Card card_from_json(const Json& j, const std::string& path = "card");
/// Accepts {"num":p,"den":q} or the text "p/q".
Lambda lambda_from_json(const Json& j, const std::string& path = "lambda");
Instance instance_from_json(const Json& j, const std::string& path = "");
Assignment assignment_from_json(const Json& j, const std::string& path = "assignment");
KnapsackInstance knapsack_from_json(const Json& j, const std::string& path = "");

/// nlohmann parse wrapper: ParseError carrying the 1-based line number.
Json parse_json_text(std::string_view text);

KnapsackInstance knapsack_from_json_text(std::string_view text);
std::string knapsack_to_json_text(const KnapsackInstance& kp);

}  // namespace fabopt
