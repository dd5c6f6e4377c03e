#include "fabopt/model.hpp"

#include <algorithm>
#include <cctype>
#include <string>

#include "fabopt/errors.hpp"

namespace fabopt {
namespace {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) throw Error("integer overflow while summing card attributes");
  return out;
}

void require_same_length(const Instance& instance, const Assignment& assignment) {
  if (instance.size() != assignment.size()) {
    throw ContractViolation("assignment length " + std::to_string(assignment.size()) +
                            " does not match instance card count " + std::to_string(instance.size()));
  }
}

bool is_blank(std::string_view s) {
  return std::all_of(s.begin(), s.end(), [](unsigned char c) { return std::isspace(c) != 0; });
}

}  // namespace

void validate_card(const Card& card, std::string_view path) {
  const std::string prefix(path);
  if (is_blank(card.name)) throw ValidationError(prefix + ".name", "card name must be non-empty");
  const auto check = [&](std::int64_t v, const char* field) {
    if (v < 0) {
      throw ValidationError(prefix + "." + field,
                            "card '" + card.name + "' has negative " + field + " (" + std::to_string(v) + ")");
    }
  };
  check(card.attack, "attack");
  check(card.pitch_cost, "pitch_cost");
  check(card.pitch_resource, "pitch_resource");
  check(card.defense, "defense");
}

Lambda::Lambda(std::int64_t numerator, std::int64_t denominator) {
  if (denominator <= 0) throw ValidationError("lambda.den", "denominator must be positive");
  if (numerator < 0) throw ValidationError("lambda.num", "penalty factor must be non-negative");
  value_ = Rational(numerator, denominator);
}

Lambda::Lambda(const Rational& value) : Lambda(value.num(), value.den()) {}

Lambda Lambda::parse(std::string_view text) {
  const auto slash = text.find('/');
  if (slash != std::string_view::npos) {
    // Reject "1/0" and "1/-2" as validation errors rather than letting the
    // rational parser normalise the sign.
    const Rational d = Rational::parse(text.substr(slash + 1));
    if (d.num() <= 0) throw ValidationError("lambda.den", "denominator must be positive");
  }
  return Lambda(Rational::parse(text));
}

std::string_view to_string(Role role) noexcept {
  switch (role) {
    case Role::Attack: return "Attack";
    case Role::Pitch: return "Pitch";
    case Role::Defend: return "Defend";
  }
  return "?";
}

Role parse_role(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(), [](unsigned char c) { return std::tolower(c); });
  if (lower == "attack") return Role::Attack;
  if (lower == "pitch") return Role::Pitch;
  if (lower == "defend") return Role::Defend;
  throw ParseError("unknown role '" + std::string(text) + "'");
}

Instance::Instance(std::vector<Card> cards, Lambda lambda, std::int64_t initial_resources)
    : cards_(std::move(cards)), lambda_(lambda), initial_resources_(initial_resources) {
  for (std::size_t i = 0; i < cards_.size(); ++i) validate_card(cards_[i], "cards[" + std::to_string(i) + "]");
  if (initial_resources_ < 0) throw ValidationError("initial_resources", "must be non-negative");
}

Instance Instance::with_lambda(Lambda lambda) const {
  Instance copy = *this;
  copy.lambda_ = lambda;
  return copy;
}

std::vector<std::size_t> Assignment::indices_of(Role role) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < roles_.size(); ++i) {
    if (roles_[i] == role) out.push_back(i);
  }
  return out;
}

Totals compute_totals(const Instance& instance, const Assignment& assignment) {
  require_same_length(instance, assignment);
  Totals t;
  for (std::size_t i = 0; i < instance.size(); ++i) {
    const Card& c = instance.cards()[i];
    switch (assignment[i]) {
      case Role::Attack:
        t.attack_total = checked_add(t.attack_total, c.attack);
        t.pitch_cost_total = checked_add(t.pitch_cost_total, c.pitch_cost);
        t.defense_lost = checked_add(t.defense_lost, c.defense);
        break;
      case Role::Pitch:
        t.resources_generated = checked_add(t.resources_generated, c.pitch_resource);
        t.defense_lost = checked_add(t.defense_lost, c.defense);
        break;
      case Role::Defend:
        t.defense_retained = checked_add(t.defense_retained, c.defense);
        break;
    }
  }
  return t;
}

bool is_feasible(const Instance& instance, const Assignment& assignment) {
  const Totals t = compute_totals(instance, assignment);
  return static_cast<__int128>(t.pitch_cost_total) <=
         static_cast<__int128>(instance.initial_resources()) + t.resources_generated;
}

ObjectiveValue evaluate(const Instance& instance, const Assignment& assignment) {
  const Totals t = compute_totals(instance, assignment);
  const Lambda& lambda = instance.lambda();
  // Z = A - (p/q) L  =  (q A - p L) / q
  const __int128 scaled = static_cast<__int128>(lambda.den()) * t.attack_total -
                          static_cast<__int128>(lambda.num()) * t.defense_lost;
  return Rational::from_wide(scaled, lambda.den());
}

Solution make_solution(const Instance& instance, Assignment assignment, std::string solver_name) {
  if (!is_feasible(instance, assignment)) throw ContractViolation("solution assignment is infeasible");
  Solution s;
  s.objective = evaluate(instance, assignment);
  s.totals = compute_totals(instance, assignment);
  s.assignment = std::move(assignment);
  s.solver_name = std::move(solver_name);
  return s;
}

}  // namespace fabopt
