#pragma once

// Domain types for the single-turn card-role problem: a hand of cards is split
// into cards played as attacks, cards pitched for resources, and cards kept
// for defense. The objective is
//
//   Z = sum_{i attacked} a_i  -  lambda * sum_{i attacked or pitched} d_i
//
// subject to  sum_{i attacked} t_i  <=  rho0 + sum_{i pitched} r_i.

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "fabopt/rational.hpp"

namespace fabopt {

struct Card {
  std::string name;
  std::int64_t attack = 0;          // a_i
  std::int64_t pitch_cost = 0;      // t_i
  std::int64_t pitch_resource = 0;  // r_i
  std::int64_t defense = 0;         // d_i

  friend bool operator==(const Card&, const Card&) = default;
};

/// Throws ValidationError (field path prefixed with `path`) when a card has a
/// negative attribute or a blank name.
void validate_card(const Card& card, std::string_view path = "card");

/// Non-negative exact penalty factor, stored in lowest terms.
class Lambda {
 public:
  Lambda() = default;
  Lambda(std::int64_t numerator, std::int64_t denominator = 1);  // NOLINT(google-explicit-constructor)
  explicit Lambda(const Rational& value);

  /// "p" or "p/q"; throws ParseError / ValidationError.
  static Lambda parse(std::string_view text);

  static Lambda aggro() { return Lambda(0); }
  static Lambda midrange() { return Lambda(1); }

  std::int64_t num() const noexcept { return value_.num(); }
  std::int64_t den() const noexcept { return value_.den(); }
  const Rational& value() const noexcept { return value_; }
  std::string to_string() const { return value_.to_string(); }

  friend bool operator==(const Lambda&, const Lambda&) = default;
  friend auto operator<=>(const Lambda& a, const Lambda& b) noexcept { return a.value_ <=> b.value_; }

 private:
  Rational value_;
};

enum class Role : std::uint8_t { Attack = 0, Pitch = 1, Defend = 2 };

std::string_view to_string(Role role) noexcept;
/// Case-insensitive "attack" / "pitch" / "defend".
Role parse_role(std::string_view text);

/// Immutable hand plus penalty factor and exogenous resource pool.
class Instance {
 public:
  Instance() = default;
  /// Validates every card and the pool; throws ValidationError.
  Instance(std::vector<Card> cards, Lambda lambda = {}, std::int64_t initial_resources = 0);

  std::span<const Card> cards() const noexcept { return cards_; }
  const Card& card(std::size_t i) const { return cards_.at(i); }
  std::size_t size() const noexcept { return cards_.size(); }
  bool empty() const noexcept { return cards_.empty(); }
  const Lambda& lambda() const noexcept { return lambda_; }
  std::int64_t initial_resources() const noexcept { return initial_resources_; }

  /// Same hand and pool under a different penalty factor.
  Instance with_lambda(Lambda lambda) const;

  friend bool operator==(const Instance&, const Instance&) = default;

 private:
  std::vector<Card> cards_;
  Lambda lambda_;
  std::int64_t initial_resources_ = 0;
};

/// One role per card. Exclusivity of the three roles is structural.
class Assignment {
 public:
  Assignment() = default;
  explicit Assignment(std::vector<Role> roles) : roles_(std::move(roles)) {}

  static Assignment all(std::size_t n, Role role) { return Assignment(std::vector<Role>(n, role)); }

  std::span<const Role> roles() const noexcept { return roles_; }
  Role operator[](std::size_t i) const { return roles_.at(i); }
  std::size_t size() const noexcept { return roles_.size(); }

  std::vector<std::size_t> indices_of(Role role) const;

  friend bool operator==(const Assignment&, const Assignment&) = default;
  /// Lexicographic over roles with Attack < Pitch < Defend.
  friend auto operator<=>(const Assignment& a, const Assignment& b) noexcept { return a.roles_ <=> b.roles_; }

 private:
  std::vector<Role> roles_;
};

struct Totals {
  std::int64_t attack_total = 0;         // A
  std::int64_t pitch_cost_total = 0;     // T, cost of attacked cards
  std::int64_t resources_generated = 0;  // R, excluding the initial pool
  std::int64_t defense_retained = 0;
  std::int64_t defense_lost = 0;

  friend bool operator==(const Totals&, const Totals&) = default;
};

struct Solution {
  Assignment assignment;
  ObjectiveValue objective;
  Totals totals;
  std::string solver_name;
};

Totals compute_totals(const Instance& instance, const Assignment& assignment);
bool is_feasible(const Instance& instance, const Assignment& assignment);
/// Defined for infeasible assignments too.
ObjectiveValue evaluate(const Instance& instance, const Assignment& assignment);

/// Assembles a Solution, recomputing objective and totals from scratch.
/// Throws ContractViolation if the assignment is infeasible.
Solution make_solution(const Instance& instance, Assignment assignment, std::string solver_name);

}  // namespace fabopt
