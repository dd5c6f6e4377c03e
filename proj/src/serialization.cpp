#include "fabopt/serialization.hpp"

#include <algorithm>
#include <limits>

#include "fabopt/errors.hpp"

namespace fabopt {
namespace {

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

const Json& require(const Json& obj, const std::string& key, const std::string& path) {
  const auto it = obj.find(key);
  if (it == obj.end()) throw ValidationError(join(path, key), "missing field");
  return *it;
}

void require_object(const Json& j, const std::string& path) {
  if (!j.is_object()) throw ValidationError(path, "expected a JSON object");
}

std::int64_t get_int(const Json& j, const std::string& path) {
  if (j.is_number_unsigned()) {
    if (j.get<std::uint64_t>() > static_cast<std::uint64_t>(std::numeric_limits<std::int64_t>::max())) {
      throw ValidationError(path, "integer out of range");
    }
    return static_cast<std::int64_t>(j.get<std::uint64_t>());
  }
  if (!j.is_number_integer()) throw ValidationError(path, "expected an integer");
  return j.get<std::int64_t>();
}

std::int64_t get_non_negative(const Json& j, const std::string& path) {
  const std::int64_t v = get_int(j, path);
  if (v < 0) throw ValidationError(path, "must be non-negative (got " + std::to_string(v) + ")");
  return v;
}

}  // namespace

Json to_json(const Card& card) {
  return Json{{"name", card.name},
              {"attack", card.attack},
              {"pitch_cost", card.pitch_cost},
              {"pitch_resource", card.pitch_resource},
              {"defense", card.defense}};
}

Json to_json(const Lambda& lambda) { return Json{{"num", lambda.num()}, {"den", lambda.den()}}; }

Json to_json(const Rational& value) { return Json{{"num", value.num()}, {"den", value.den()}}; }

Json to_json(const Totals& t) {
  return Json{{"attack_total", t.attack_total},
              {"pitch_cost_total", t.pitch_cost_total},
              {"resources_generated", t.resources_generated},
              {"defense_retained", t.defense_retained},
              {"defense_lost", t.defense_lost}};
}

Json to_json(const Assignment& assignment) {
  Json out = Json::array();
  for (Role r : assignment.roles()) out.push_back(std::string(to_string(r)));
  return out;
}

Json to_json(const Instance& instance) {
  Json cards = Json::array();
  for (const Card& c : instance.cards()) cards.push_back(to_json(c));
  return Json{{"cards", std::move(cards)},
              {"lambda", to_json(instance.lambda())},
              {"initial_resources", instance.initial_resources()}};
}

Json to_json(const Solution& s) {
  return Json{{"assignment", to_json(s.assignment)},
              {"objective", to_json(s.objective)},
              {"totals", to_json(s.totals)},
              {"solver", s.solver_name}};
}

Json to_json(const SolverReport& report) {
  Json j = to_json(report.solution);
  j["nodes_or_states_explored"] = report.nodes_or_states_explored;
  j["wall_time_us"] = std::chrono::duration_cast<std::chrono::microseconds>(report.wall_time).count();
  return j;
}

Json to_json(const KnapsackInstance& kp) {
  Json items = Json::array();
  for (const auto& item : kp.items) items.push_back(Json{{"value", item.value}, {"weight", item.weight}});
  return Json{{"items", std::move(items)}, {"capacity", kp.capacity}};
}

Json to_json(const SweepResult& sweep) {
  Json points = Json::array();
  for (const SweepPoint& pt : sweep.points) {
    points.push_back(Json{{"lambda", to_json(pt.lambda)},
                          {"objective", to_json(pt.solution.objective)},
                          {"totals", to_json(pt.solution.totals)},
                          {"assignment", to_json(pt.solution.assignment)},
                          {"solver", pt.solution.solver_name}});
  }
  return Json{{"points", std::move(points)}};
}

Card card_from_json(const Json& j, const std::string& path) {
  require_object(j, path);
  Card c;
  const Json& name = require(j, "name", path);
  if (!name.is_string()) throw ValidationError(join(path, "name"), "expected a string");
  c.name = name.get<std::string>();
  c.attack = get_non_negative(require(j, "attack", path), join(path, "attack"));
  c.pitch_cost = get_non_negative(require(j, "pitch_cost", path), join(path, "pitch_cost"));
  c.pitch_resource = get_non_negative(require(j, "pitch_resource", path), join(path, "pitch_resource"));
  c.defense = get_non_negative(require(j, "defense", path), join(path, "defense"));
  validate_card(c, path);
  return c;
}

Lambda lambda_from_json(const Json& j, const std::string& path) {
  if (j.is_string()) {
    try {
      return Lambda::parse(j.get<std::string>());
    } catch (const ValidationError& e) {
      throw ValidationError(path, e.what());
    } catch (const ParseError& e) {
      throw ValidationError(path, e.what());
    }
  }
  if (j.is_number_integer()) return Lambda(get_non_negative(j, path), 1);
  require_object(j, path);
  const std::int64_t num = get_int(require(j, "num", path), join(path, "num"));
  const std::int64_t den = get_int(require(j, "den", path), join(path, "den"));
  if (den <= 0) throw ValidationError(join(path, "den"), "denominator must be positive");
  if (num < 0) throw ValidationError(join(path, "num"), "penalty factor must be non-negative");
  return Lambda(num, den);
}

Instance instance_from_json(const Json& j, const std::string& path) {
  require_object(j, path.empty() ? "instance" : path);
  const Json& cards_json = require(j, "cards", path);
  const std::string cards_path = join(path, "cards");
  if (!cards_json.is_array()) throw ValidationError(cards_path, "expected an array");
  std::vector<Card> cards;
  cards.reserve(cards_json.size());
  for (std::size_t i = 0; i < cards_json.size(); ++i) {
    cards.push_back(card_from_json(cards_json[i], cards_path + "[" + std::to_string(i) + "]"));
  }
  Lambda lambda;
  if (const auto it = j.find("lambda"); it != j.end()) lambda = lambda_from_json(*it, join(path, "lambda"));
  std::int64_t rho0 = 0;
  if (const auto it = j.find("initial_resources"); it != j.end()) {
    rho0 = get_non_negative(*it, join(path, "initial_resources"));
  }
  return Instance(std::move(cards), lambda, rho0);
}

Assignment assignment_from_json(const Json& j, const std::string& path) {
  if (!j.is_array()) throw ValidationError(path, "expected an array of roles");
  std::vector<Role> roles;
  for (std::size_t i = 0; i < j.size(); ++i) {
    const std::string p = path + "[" + std::to_string(i) + "]";
    if (!j[i].is_string()) throw ValidationError(p, "expected a role string");
    try {
      roles.push_back(parse_role(j[i].get<std::string>()));
    } catch (const ParseError& e) {
      throw ValidationError(p, e.what());
    }
  }
  return Assignment(std::move(roles));
}

KnapsackInstance knapsack_from_json(const Json& j, const std::string& path) {
  require_object(j, path.empty() ? "knapsack" : path);
  KnapsackInstance kp;
  const Json& items = require(j, "items", path);
  const std::string items_path = join(path, "items");
  if (!items.is_array()) throw ValidationError(items_path, "expected an array");
  for (std::size_t i = 0; i < items.size(); ++i) {
    const std::string p = items_path + "[" + std::to_string(i) + "]";
    require_object(items[i], p);
    KnapsackItem item;
    item.value = get_non_negative(require(items[i], "value", p), p + ".value");
    item.weight = get_non_negative(require(items[i], "weight", p), p + ".weight");
    kp.items.push_back(item);
  }
  kp.capacity = get_non_negative(require(j, "capacity", path), join(path, "capacity"));
  return kp;
}

Json parse_json_text(std::string_view text) {
  try {
    return Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    const std::size_t upto = std::min<std::size_t>(e.byte, text.size());
    const auto line = static_cast<std::size_t>(std::count(text.begin(), text.begin() + upto, '\n')) + 1;
    throw ParseError(std::string("malformed JSON: ") + e.what(), line);
  }
}

KnapsackInstance knapsack_from_json_text(std::string_view text) { return knapsack_from_json(parse_json_text(text)); }

std::string knapsack_to_json_text(const KnapsackInstance& kp) { return to_json(kp).dump(2) + "\n"; }

}  // namespace fabopt
