#include <string>

#include "fabopt/errors.hpp"
#include "fabopt/solvers.hpp"
#include "scaled.hpp"

namespace fabopt {
namespace {

struct Enumerator {
  const detail::ScaledInstance& inst;
  const std::vector<std::int64_t>& defense;
  TieBreak tie_break;

  std::vector<Role> current;
  std::vector<Role> best;
  bool have_best = false;
  __int128 best_value = 0;
  __int128 best_lost = 0;
  std::uint64_t leaves = 0;

  // Depth-first in Attack, Pitch, Defend order, so leaves are visited in
  // lexicographic order and the first optimum seen is the canonical one.
  void visit(std::size_t pos, __int128 value, __int128 cost, __int128 resources, __int128 lost) {
    if (pos == inst.cards.size()) {
      ++leaves;
      if (cost > inst.initial_resources + resources) return;
      bool better = !have_best || value > best_value;
      if (!better && tie_break == TieBreak::MinDefenseLost) better = value == best_value && lost < best_lost;
      if (better) {
        have_best = true;
        best_value = value;
        best_lost = lost;
        best = current;
      }
      return;
    }
    const detail::ScaledCard& c = inst.cards[pos];
    current[pos] = Role::Attack;
    visit(pos + 1, value + c.attack_gain, cost + c.cost, resources, lost + defense[pos]);
    current[pos] = Role::Pitch;
    visit(pos + 1, value + c.pitch_gain, cost, resources + c.resource, lost + defense[pos]);
    current[pos] = Role::Defend;
    visit(pos + 1, value, cost, resources, lost);
  }
};

}  // namespace

SolverReport solve_brute_force(const Instance& instance, const BruteForceOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  if (instance.size() > options.max_cards) {
    std::uint64_t required = instance.size();
    throw RefusalError("brute force refuses " + std::to_string(instance.size()) + " cards; enumeration cap is " +
                           std::to_string(options.max_cards) + " cards (3^n assignments)",
                       options.max_cards, required);
  }
  const detail::ScaledInstance scaled = detail::scale_instance(instance);
  std::vector<std::int64_t> defense;
  defense.reserve(instance.size());
  for (const Card& c : instance.cards()) defense.push_back(c.defense);

  Enumerator e{scaled, defense, options.tie_break, std::vector<Role>(instance.size()), {}};
  e.visit(0, 0, 0, 0, 0);
  if (!e.have_best) throw Error("internal error: brute force found no feasible assignment");

  SolverReport report;
  report.solution = make_solution(instance, Assignment(std::move(e.best)), "brute");
  report.nodes_or_states_explored = e.leaves;
  report.wall_time = std::chrono::steady_clock::now() - start;
  return report;
}

}  // namespace fabopt
